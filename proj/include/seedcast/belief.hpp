#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "seedcast/outcome_space.hpp"
#include "seedcast/probability.hpp"

namespace seedcast {

// Per-space index: for every agent, her signal classes (one per distinct
// source mask) with their total masses. Belief operators then reduce to two
// array passes per agent.
template <class B>
class BeliefContext {
public:
    using Weight = typename B::Weight;
    using Prob = typename B::Prob;

    explicit BeliefContext(const OutcomeSpace<B>& space) : space_(&space) {
        const int I = space.agent_count;
        class_of_.assign(static_cast<size_t>(I), std::vector<int>(space.size()));
        class_mass_.assign(static_cast<size_t>(I), {});
        class_signal_.assign(static_cast<size_t>(I), {});
        for (int a = 0; a < I; ++a) {
            std::map<uint32_t, int> ids;
            for (size_t k = 0; k < space.size(); ++k) {
                uint32_t sig = space.states[k].sources[static_cast<size_t>(a)];
                auto [it, inserted] = ids.try_emplace(sig, static_cast<int>(ids.size()));
                if (inserted) {
                    class_mass_[static_cast<size_t>(a)].push_back(B::zero());
                    class_signal_[static_cast<size_t>(a)].push_back(sig);
                }
                class_of_[static_cast<size_t>(a)][k] = it->second;
                class_mass_[static_cast<size_t>(a)][static_cast<size_t>(it->second)] += space.weights[k];
            }
        }
    }

    const OutcomeSpace<B>& space() const { return *space_; }
    int agent_count() const { return space_->agent_count; }

    // B_i^p(E): states whose signal class gives E conditional mass >= p.
    Event p_belief(AgentId agent, const Prob& p, const Event& event) const {
        const auto& cls = class_of_[static_cast<size_t>(agent - 1)];
        const auto& mass = class_mass_[static_cast<size_t>(agent - 1)];
        std::vector<Weight> in_event(mass.size(), B::zero());
        for (size_t k = 0; k < space_->size(); ++k) {
            if (event.test(k)) in_event[static_cast<size_t>(cls[k])] += space_->weights[k];
        }
        std::vector<char> believes(mass.size());
        for (size_t c = 0; c < mass.size(); ++c) {
            believes[c] = B::ratio_ge(in_event[c], mass[c], p);
        }
        Event out(space_->size());
        for (size_t k = 0; k < space_->size(); ++k) {
            if (believes[static_cast<size_t>(cls[k])]) out.set(k);
        }
        return out;
    }

    // P[E | X_i = signal of class c]; exposed for the game solver.
    Prob conditional(AgentId agent, int class_id, const Event& event) const {
        const auto& cls = class_of_[static_cast<size_t>(agent - 1)];
        Weight num = B::zero();
        for (size_t k = 0; k < space_->size(); ++k) {
            if (event.test(k) && cls[k] == class_id) num += space_->weights[k];
        }
        return B::to_prob(num, class_mass_[static_cast<size_t>(agent - 1)][static_cast<size_t>(class_id)]);
    }

    const std::vector<uint32_t>& signals_of(AgentId agent) const {
        return class_signal_[static_cast<size_t>(agent - 1)];
    }
    const std::vector<Weight>& class_masses(AgentId agent) const {
        return class_mass_[static_cast<size_t>(agent - 1)];
    }
    int class_id(AgentId agent, size_t state) const { return class_of_[static_cast<size_t>(agent - 1)][state]; }

private:
    const OutcomeSpace<B>* space_;
    std::vector<std::vector<int>> class_of_;       // [agent][state] -> class id
    std::vector<std::vector<Weight>> class_mass_;  // [agent][class]
    std::vector<std::vector<uint32_t>> class_signal_;
};

// B^p(E): intersection over all agents.
template <class B>
Event mutual_p_belief(const BeliefContext<B>& ctx, const typename B::Prob& p, const Event& event) {
    Event out = Event::all(ctx.space().size());
    for (AgentId i = 1; i <= ctx.agent_count(); ++i) {
        out &= ctx.p_belief(i, p, event);
    }
    return out;
}

struct CommonBeliefTrace {
    int iterations = 0;  // applications of the mutual operator until fixed
};

// C^p(E): intersection of all iterates of the mutual operator. The sequence
// must reach a fixed point; a revisited non-fixed iterate raises
// NonStabilizing instead of silently truncating.
template <class B>
Event common_p_belief(const BeliefContext<B>& ctx, const typename B::Prob& p, const Event& event,
                      CommonBeliefTrace* trace = nullptr) {
    std::vector<Event> seen;
    Event current = event;
    Event intersection = Event::all(ctx.space().size());
    while (true) {
        Event next = mutual_p_belief(ctx, p, current);
        if (next == current) {
            intersection &= next;
            if (trace) trace->iterations = static_cast<int>(seen.size()) + 1;
            return intersection;
        }
        if (std::find(seen.begin(), seen.end(), next) != seen.end()) {
            throw NonStabilizing("belief iteration revisited an earlier event without stabilizing");
        }
        seen.push_back(next);
        intersection &= next;
        current = std::move(next);
    }
}

enum class CommonBeliefLabel { kWholeSpace, kAllInformed, kEmpty, kOther };

std::string to_string(CommonBeliefLabel label);

// Classifies C^p(E) against the canonical candidates of this model.
template <class B>
CommonBeliefLabel label_event(const OutcomeSpace<B>& space, const Event& e) {
    if (e == Event::all(space.size())) return CommonBeliefLabel::kWholeSpace;
    if (e == event_all_informed(space)) return CommonBeliefLabel::kAllInformed;
    if (!e.any()) return CommonBeliefLabel::kEmpty;
    return CommonBeliefLabel::kOther;
}

// Closed-form trichotomy/dichotomy for C^p(G) as a function of p. Breakpoints
// are P[G|N_1] and P[Y*|Y_1]; the middle region exists exactly when the loss
// rate is below the crossing point (t1 < t2).
template <class P>
struct CommonBeliefClassification {
    struct Region {
        CommonBeliefLabel label;
        P lo, hi;          // label applies for p in (lo, hi]
        P prob;            // P[C^p(G)]
        P prob_given_good; // P[C^p(G) | G]
    };
    P t1;  // P[G | N_1]
    P t2;  // P[Y* | Y_1]
    bool has_middle_region = false;
    std::vector<Region> regions;

    // For p in [0,1]; the first region also covers p = 0.
    const Region& region_at(const P& p) const {
        for (const auto& r : regions) {
            if (p <= r.hi) return r;
        }
        return regions.back();
    }
    CommonBeliefLabel label_at(const P& p) const { return region_at(p).label; }
};

template <class P>
CommonBeliefClassification<P> classify_common_belief_good(const ModelParams<P>& params, int agent_count) {
    params.validate();
    CommonBeliefClassification<P> out;
    out.t1 = closed_form(ClosedForm::kGoodGivenUninformedAtK, 1, params, agent_count);
    out.t2 = closed_form(ClosedForm::kAllInformedGivenSeedInformed, 1, params, agent_count);
    const P one = 1;
    P keep_pow = closed_form(ClosedForm::kAllInformedGivenGood, 1, params, agent_count);
    P ystar = params.rho * keep_pow;
    out.has_middle_region = out.t1 < out.t2;
    if (out.has_middle_region) {
        out.regions.push_back({CommonBeliefLabel::kWholeSpace, 0, out.t1, one, one});
        out.regions.push_back({CommonBeliefLabel::kAllInformed, out.t1, out.t2, ystar, keep_pow});
        out.regions.push_back({CommonBeliefLabel::kEmpty, out.t2, one, 0, 0});
    } else {
        out.regions.push_back({CommonBeliefLabel::kWholeSpace, 0, out.t1, one, one});
        out.regions.push_back({CommonBeliefLabel::kEmpty, out.t1, one, 0, 0});
    }
    return out;
}

}  // namespace seedcast
