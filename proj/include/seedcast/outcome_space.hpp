#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "seedcast/backend.hpp"
#include "seedcast/errors.hpp"
#include "seedcast/event.hpp"
#include "seedcast/info_structure.hpp"

namespace seedcast {

inline constexpr int kDefaultLinkCap = 24;

// One world state: the fundamental plus, per agent, the set of sources she
// heard from (bit 0 = planner, bit j = agent j). In a tree an informed agent
// has exactly one source, so the mask reduces to the paper's y/n signal.
struct WorldState {
    bool good = false;
    std::vector<uint32_t> sources;

    bool informed(AgentId i) const { return sources[static_cast<size_t>(i - 1)] != 0; }
    uint32_t signal(AgentId i) const { return sources[static_cast<size_t>(i - 1)]; }
};

std::string signal_label(uint32_t mask);  // "n", "y:0", "y:2,4", ...

// Finite probability space over world states. Weights are kept over a shared
// positive denominator; they sum to it exactly in the rational backend.
template <class B>
struct OutcomeSpace {
    using Weight = typename B::Weight;
    using Prob = typename B::Prob;

    int agent_count = 0;
    std::vector<WorldState> states;  // canonical order: the b state first, then by source profile
    std::vector<Weight> weights;
    Weight denom = B::one();

    size_t size() const { return states.size(); }
    Prob prob(size_t idx) const { return B::to_prob(weights[idx], denom); }

    Weight mass(const Event& e) const {
        Weight m = B::zero();
        for (size_t i = 0; i < states.size(); ++i) {
            if (e.test(i)) m += weights[i];
        }
        return m;
    }
};

// ---- Named events --------------------------------------------------------

template <class B>
Event event_good(const OutcomeSpace<B>& s) {
    Event e(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        if (s.states[i].good) e.set(i);
    }
    return e;
}

template <class B>
Event event_informed(const OutcomeSpace<B>& s, AgentId i) {
    Event e(s.size());
    for (size_t k = 0; k < s.size(); ++k) {
        if (s.states[k].informed(i)) e.set(k);
    }
    return e;
}

template <class B>
Event event_uninformed(const OutcomeSpace<B>& s, AgentId i) {
    return ~event_informed(s, i);
}

template <class B>
Event event_all_informed(const OutcomeSpace<B>& s) {
    Event e(s.size());
    for (size_t k = 0; k < s.size(); ++k) {
        bool all = true;
        for (AgentId i = 1; i <= s.agent_count && all; ++i) all = s.states[k].informed(i);
        if (all) e.set(k);
    }
    return e;
}

// States in which agent i heard from source src (possibly among others).
template <class B>
Event event_heard_from(const OutcomeSpace<B>& s, AgentId i, AgentId src) {
    Event e(s.size());
    for (size_t k = 0; k < s.size(); ++k) {
        if (s.states[k].signal(i) & (uint32_t{1} << src)) e.set(k);
    }
    return e;
}

// States in which agent i's source set is exactly `mask`.
template <class B>
Event event_sources_exact(const OutcomeSpace<B>& s, AgentId i, uint32_t mask) {
    Event e(s.size());
    for (size_t k = 0; k < s.size(); ++k) {
        if (s.states[k].signal(i) == mask) e.set(k);
    }
    return e;
}

// ---- Probability queries --------------------------------------------------

template <class B>
typename B::Prob probability(const OutcomeSpace<B>& s, const Event& event) {
    return B::to_prob(s.mass(event), s.denom);
}

template <class B>
typename B::Prob probability(const OutcomeSpace<B>& s, const Event& event, const Event& given) {
    typename B::Weight den = s.mass(given);
    if (!(den > typename B::Weight(0))) throw ConditionOnNull("conditioning event has probability zero");
    return B::to_prob(s.mass(event & given), den);
}

// ---- Construction ---------------------------------------------------------

namespace detail {

// Delivered-source propagation for one link-outcome profile. A link u->v
// carries a message only when u heard from somebody other than v (the planner
// always counts); this is the no-send-back rule and reduces to "u informed"
// on tree orientations.
inline void propagate_sources(const std::vector<std::pair<AgentId, AgentId>>& links, uint32_t profile,
                              std::vector<uint32_t>& sources) {
    for (auto& s : sources) s = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t l = 0; l < links.size(); ++l) {
            if (!((profile >> l) & 1u)) continue;
            auto [u, v] = links[l];
            uint32_t bit = uint32_t{1} << u;
            uint32_t& dst = sources[static_cast<size_t>(v - 1)];
            if (dst & bit) continue;
            bool active = u == kPlanner;
            if (!active) {
                uint32_t from_others = sources[static_cast<size_t>(u - 1)] & ~(uint32_t{1} << v);
                active = from_others != 0;
            }
            if (active) {
                dst |= bit;
                changed = true;
            }
        }
    }
}

template <class B>
using StateMap = std::map<std::pair<bool, std::vector<uint32_t>>, typename B::Weight>;

template <class B>
OutcomeSpace<B> space_from_map(int agent_count, StateMap<B>&& acc, typename B::Weight denom) {
    OutcomeSpace<B> space;
    space.agent_count = agent_count;
    space.denom = std::move(denom);
    space.states.reserve(acc.size());
    space.weights.reserve(acc.size());
    for (auto& [key, w] : acc) {
        space.states.push_back(WorldState{key.first, key.second});
        space.weights.push_back(std::move(w));
    }
    return space;
}

}  // namespace detail

// Exact distribution over world states induced by the structure: the theta=b
// state with the residual prior mass plus, for theta=g, one merged state per
// realizable source profile summed over all 2^L link-outcome profiles.
template <class B>
OutcomeSpace<B> enumerate_outcomes(const InformationStructure& info, const ModelParams<typename B::Prob>& params,
                                   int link_cap = kDefaultLinkCap) {
    params.validate();
    const auto& links = info.links();
    const int L = static_cast<int>(links.size());
    if (L > link_cap || L > 30) {
        throw CapExceeded("structure has " + std::to_string(L) + " links, cap is " + std::to_string(link_cap));
    }

    typename B::Weight deliver, lose, link_den;
    B::link_weights(params.epsilon, deliver, lose, link_den);
    typename B::Weight good_w, bad_w, prior_den;
    B::prior_weights(params.rho, good_w, bad_w, prior_den);

    detail::StateMap<B> acc;
    std::vector<uint32_t> sources(static_cast<size_t>(info.agent_count()), 0);

    // theta = b: no messages at all.
    acc[{false, sources}] = bad_w * B::wpow(link_den, static_cast<unsigned>(L));

    for (uint32_t profile = 0; profile < (uint32_t{1} << L); ++profile) {
        typename B::Weight w = good_w;
        for (int l = 0; l < L; ++l) {
            w *= ((profile >> l) & 1u) ? deliver : lose;
        }
        detail::propagate_sources(links, profile, sources);
        auto [it, inserted] = acc.try_emplace({true, sources}, w);
        if (!inserted) it->second += w;
    }

    return detail::space_from_map<B>(info.agent_count(),
                                     std::move(acc),
                                     prior_den * B::wpow(link_den, static_cast<unsigned>(L)));
}

}  // namespace seedcast
