#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "seedcast/info_structure.hpp"
#include "seedcast/outcome_space.hpp"

namespace seedcast {

enum class Relation { kFasterEq, kSlowerEq, kEqual, kIncomparable };

std::string to_string(Relation r);

// Witness permutation maps each agent of the superior structure to an agent
// of the other one rank by rank; empty for incomparable pairs.
struct OrderingResult {
    Relation relation = Relation::kIncomparable;
    std::vector<AgentId> witness;
};

// Binary-state binary-signal experiments with a common prior are Blackwell
// ranked exactly when one posterior pair spreads the other.
template <class P>
bool mps_superior(const P& lo_a, const P& hi_a, const P& lo_b, const P& hi_b) {
    return lo_a <= lo_b && hi_a >= hi_b;
}

namespace detail {

// Decides the existential-permutation ordering by sorted matching: each
// agent's experiment is summarized by its posterior pair, agents are ranked
// by spread, and dominance is checked rank by rank.
template <class P>
OrderingResult compare_experiments(std::vector<std::pair<P, P>> a, std::vector<std::pair<P, P>> b) {
    if (a.size() != b.size()) throw SizeMismatch("structures have different agent counts");
    const size_t n = a.size();

    std::vector<size_t> ia(n), ib(n);
    std::iota(ia.begin(), ia.end(), 0);
    std::iota(ib.begin(), ib.end(), 0);
    // Most informative first: low posterior floor, then high ceiling.
    auto rank = [](const std::vector<std::pair<P, P>>& v) {
        return [&v](size_t x, size_t y) {
            if (v[x].first != v[y].first) return v[x].first < v[y].first;
            if (v[x].second != v[y].second) return v[x].second > v[y].second;
            return x < y;
        };
    };
    std::sort(ia.begin(), ia.end(), rank(a));
    std::sort(ib.begin(), ib.end(), rank(b));

    bool a_superior = true, b_superior = true;
    for (size_t r = 0; r < n; ++r) {
        const auto& ea = a[ia[r]];
        const auto& eb = b[ib[r]];
        if (!mps_superior(ea.first, ea.second, eb.first, eb.second)) a_superior = false;
        if (!mps_superior(eb.first, eb.second, ea.first, ea.second)) b_superior = false;
    }

    OrderingResult out;
    auto build_witness = [&](const std::vector<size_t>& from, const std::vector<size_t>& to) {
        std::vector<AgentId> w(n);
        for (size_t r = 0; r < n; ++r) w[from[r]] = static_cast<AgentId>(to[r] + 1);
        return w;
    };
    if (a_superior && b_superior) {
        out.relation = Relation::kEqual;
        out.witness = build_witness(ia, ib);
    } else if (a_superior) {
        out.relation = Relation::kFasterEq;
        out.witness = build_witness(ia, ib);
    } else if (b_superior) {
        out.relation = Relation::kSlowerEq;
        out.witness = build_witness(ib, ia);
    } else {
        out.relation = Relation::kIncomparable;
    }
    return out;
}

}  // namespace detail

inline std::vector<int> depth_vector(const InformationStructure& info) {
    std::vector<int> d(static_cast<size_t>(info.agent_count()));
    for (AgentId i = 1; i <= info.agent_count(); ++i) d[static_cast<size_t>(i - 1)] = depth(info, i);
    return d;
}

// Depth-vector dominance under renaming of agents.
OrderingResult diffusion_compare(const InformationStructure& a, const InformationStructure& b);

// Per-agent posterior pair (P[E | signal-off], P[E | signal-on]) about the
// fundamental (first order) or about everyone-informed (second order).
template <class B>
std::vector<std::pair<typename B::Prob, typename B::Prob>> fundamental_experiments(const OutcomeSpace<B>& space) {
    std::vector<std::pair<typename B::Prob, typename B::Prob>> out;
    Event good = event_good(space);
    for (AgentId i = 1; i <= space.agent_count; ++i) {
        Event yi = event_informed(space, i);
        out.emplace_back(probability(space, good, ~yi), probability(space, good, yi));
    }
    return out;
}

template <class B>
std::vector<std::pair<typename B::Prob, typename B::Prob>> coverage_experiments(const OutcomeSpace<B>& space) {
    std::vector<std::pair<typename B::Prob, typename B::Prob>> out;
    Event all = event_all_informed(space);
    for (AgentId i = 1; i <= space.agent_count; ++i) {
        Event yi = event_informed(space, i);
        out.emplace_back(probability(space, all, ~yi), probability(space, all, yi));
    }
    return out;
}

// First-order Blackwell ordering of the agents' information about the
// fundamental; agrees with diffusion_compare.
template <class B>
OrderingResult first_order_compare(const OutcomeSpace<B>& a, const OutcomeSpace<B>& b) {
    if (a.agent_count != b.agent_count) throw SizeMismatch("structures have different agent counts");
    if (!B::prob_close(probability(a, event_good(a)), probability(b, event_good(b)))) {
        throw PreconditionFailed("first-order comparison needs a common prior over the fundamental");
    }
    return detail::compare_experiments(fundamental_experiments(a), fundamental_experiments(b));
}

// Second-order ordering: information about the everyone-informed event. The
// prior over that event is structure independent for equal parameters, which
// is asserted before comparing.
template <class B>
OrderingResult second_order_compare(const OutcomeSpace<B>& a, const OutcomeSpace<B>& b) {
    if (a.agent_count != b.agent_count) throw SizeMismatch("structures have different agent counts");
    if (!B::prob_close(probability(a, event_all_informed(a)), probability(b, event_all_informed(b)))) {
        throw PreconditionFailed("second-order comparison needs a common prior over the coverage event");
    }
    return detail::compare_experiments(coverage_experiments(a), coverage_experiments(b));
}

}  // namespace seedcast
