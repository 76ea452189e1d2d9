#pragma once

#include <map>
#include <string>
#include <vector>

#include "seedcast/belief.hpp"
#include "seedcast/outcome_space.hpp"

namespace seedcast {

template <class P>
struct AdoptionParams {
    P cost;
    void validate() const {
        if (!(cost > 0 && cost < 1)) throw BadParams("adoption cost must lie strictly inside (0,1)");
    }
};

template <class P>
struct ProtestParams {
    P reward;     // R
    P cost;       // private cost c
    P damage;     // per-protester damage d
    void validate() const {
        if (!(reward > 0 && cost > 0 && damage > 0)) throw BadParams("protest parameters must be positive");
        if (!(reward > cost + damage)) throw BadParams("protest reward must exceed cost plus damage");
    }
};

template <class P>
struct PotentialParams {
    P summit;  // w, the potential when everyone plays 1
    P drag;    // gamma, per-adopter potential loss otherwise
};

// Adoption probability per agent per signal class (mask 0 = uninformed).
template <class P>
struct StrategyProfile {
    std::vector<std::map<uint32_t, P>> by_agent;  // index agent-1

    const P& at(AgentId agent, uint32_t signal) const {
        return by_agent[static_cast<size_t>(agent - 1)].at(signal);
    }
    P& at(AgentId agent, uint32_t signal) { return by_agent[static_cast<size_t>(agent - 1)][signal]; }
};

// Profile assigning `informed` to every nonzero signal and `uninformed` to
// the empty one, limited to signals realizable in the space.
template <class B, class P>
StrategyProfile<P> uniform_profile(const BeliefContext<B>& ctx, const P& informed, const P& uninformed) {
    StrategyProfile<P> profile;
    profile.by_agent.resize(static_cast<size_t>(ctx.agent_count()));
    for (AgentId i = 1; i <= ctx.agent_count(); ++i) {
        for (uint32_t sig : ctx.signals_of(i)) {
            profile.at(i, sig) = sig == 0 ? uninformed : informed;
        }
    }
    return profile;
}

// ---- Payoff families -------------------------------------------------------
//
// value(good, own_action, others_adopting, I) is the realized payoff; all the
// games here depend on the action vector only through the adopter count.

template <class P>
struct AdoptionPayoff {
    P cost;
    P value(bool good, int own, int others, int agent_count) const {
        P v = 0;
        if (own == 1) {
            if (good && others == agent_count - 1) v += 1;
            v -= cost;
        }
        return v;
    }
};

template <class P>
struct ProtestPayoff {
    P reward, cost, damage;
    P value(bool good, int own, int others, int agent_count) const {
        const int total = own + others;
        if (own == 1) {
            if (good && total == agent_count) return reward - cost - damage * agent_count;
            return -cost - damage * total;
        }
        return -damage * others;
    }
};

// Common-interest game given by the potential itself.
template <class P>
struct PotentialPayoff {
    P summit, drag;
    P value(bool good, int own, int others, int agent_count) const {
        const int total = own + others;
        if (good && total == agent_count) return summit;
        return -drag * total;
    }
};

// ---- Expected payoffs and best responses -----------------------------------

namespace detail {

// Distribution of the number of adopters among agents != agent in state k.
template <class B, class P>
std::vector<P> other_adopter_counts(const BeliefContext<B>& ctx, const StrategyProfile<P>& profile,
                                    AgentId agent, size_t state) {
    const auto& st = ctx.space().states[state];
    std::vector<P> dist{P(1)};
    for (AgentId j = 1; j <= ctx.agent_count(); ++j) {
        if (j == agent) continue;
        const P& adopt = profile.at(j, st.signal(j));
        std::vector<P> next(dist.size() + 1, P(0));
        for (size_t k = 0; k < dist.size(); ++k) {
            if (adopt > 0) next[k + 1] += dist[k] * adopt;
            next[k] += dist[k] * (P(1) - adopt);
        }
        dist = std::move(next);
    }
    return dist;
}

}  // namespace detail

// E[u(action) | agent's signal class] * P[class] (unnormalized; ratios and
// sign checks never need the division).
template <class B, class P, class Payoff>
P expected_value_weighted(const BeliefContext<B>& ctx, const StrategyProfile<P>& profile, AgentId agent,
                          int class_id, int action, const Payoff& payoff) {
    const auto& space = ctx.space();
    P acc = 0;
    for (size_t k = 0; k < space.size(); ++k) {
        if (ctx.class_id(agent, k) != class_id) continue;
        P w = B::to_prob(space.weights[k], space.denom);
        auto dist = detail::other_adopter_counts(ctx, profile, agent, k);
        P v = 0;
        for (size_t n = 0; n < dist.size(); ++n) {
            if (dist[n] > 0) {
                v += dist[n] * payoff.value(space.states[k].good, action, static_cast<int>(n), ctx.agent_count());
            }
        }
        acc += w * v;
    }
    return acc;
}

// Ex ante expected payoff of `agent` under the profile.
template <class B, class P, class Payoff>
P expected_payoff(const BeliefContext<B>& ctx, const StrategyProfile<P>& profile, AgentId agent,
                  const Payoff& payoff) {
    P acc = 0;
    const auto& classes = ctx.signals_of(agent);
    for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
        const P& adopt = profile.at(agent, classes[static_cast<size_t>(c)]);
        acc += adopt * expected_value_weighted(ctx, profile, agent, c, 1, payoff);
        acc += (P(1) - adopt) * expected_value_weighted(ctx, profile, agent, c, 0, payoff);
    }
    return acc;
}

template <class P>
struct Deviation {
    AgentId agent;
    uint32_t signal;
    P gain;  // weighted payoff improvement of the best deviation
};

// Checks the one-shot deviation property class by class. tol > 0 admits
// floating point slack; pass 0 for exact mode.
template <class B, class P, class Payoff>
std::vector<Deviation<P>> best_response_violations(const BeliefContext<B>& ctx, const StrategyProfile<P>& profile,
                                                   const Payoff& payoff, const P& tol) {
    std::vector<Deviation<P>> out;
    for (AgentId i = 1; i <= ctx.agent_count(); ++i) {
        const auto& signals = ctx.signals_of(i);
        for (int c = 0; c < static_cast<int>(signals.size()); ++c) {
            const P& sigma = profile.at(i, signals[static_cast<size_t>(c)]);
            P gain = expected_value_weighted(ctx, profile, i, c, 1, payoff) -
                     expected_value_weighted(ctx, profile, i, c, 0, payoff);
            bool violated = false;
            if (sigma == 0) {
                violated = gain > tol;
            } else if (sigma == 1) {
                violated = gain < -tol;
            } else {
                violated = gain > tol || gain < -tol;
            }
            if (violated) out.push_back({i, signals[static_cast<size_t>(c)], gain});
        }
    }
    return out;
}

// ---- Adoption game solver ---------------------------------------------------

enum class AdoptionCase { kAlwaysAdopt, kAdoptIfInformed, kNeverAdopt };

std::string to_string(AdoptionCase c);

template <class P>
struct Elimination {
    AgentId agent;
    uint32_t signal;
    P bound;  // upper bound on the gross gain that rules out adopting
};

template <class P>
struct EquilibriumReport {
    AdoptionCase case_label = AdoptionCase::kNeverAdopt;
    StrategyProfile<P> profile;
    P threshold_uninformed_seed;  // P[G | N_1], from the enumerated space
    P threshold_informed_seed;    // P[Y* | Y_1]
    P max_all_adopt_prob;
    P max_all_adopt_prob_given_good;
    std::vector<Elimination<P>> dominance_trace;
    bool best_response_verified = false;
};

template <class B>
struct AdoptionThresholds {
    typename B::Prob uninformed_seed;  // P[G | N_s], equal for every seed s
    typename B::Prob informed_seed;    // P[Y* | Y_s]
};

template <class B>
AdoptionThresholds<B> adoption_thresholds(const InformationStructure& info, const OutcomeSpace<B>& space) {
    Event good = event_good(space);
    Event all = event_all_informed(space);
    AdoptionThresholds<B> th{};
    bool first = true;
    for (AgentId s : info.seeds()) {
        Event ys = event_informed(space, s);
        typename B::Prob t1 = probability(space, good, ~ys);
        typename B::Prob t2 = probability(space, all, ys);
        if (first) {
            th.uninformed_seed = t1;
            th.informed_seed = t2;
            first = false;
        } else if (!(t1 == th.uninformed_seed) || !(t2 == th.informed_seed)) {
            throw PreconditionFailed("seed thresholds disagree; structure is not a seeded forest");
        }
    }
    return th;
}

// Iterated elimination of adopt-when-uninformed along every planner-to-leaf
// path: the seed falls to P[G|N_s] < c, each successor k to P[Y_parent|N_k].
// Requires c > P[G|N_1].
template <class B>
std::vector<Elimination<typename B::Prob>> iterated_dominance_uninformed(
    const InformationStructure& info, const OutcomeSpace<B>& space, const typename B::Prob& cost) {
    using P = typename B::Prob;
    if (!info.is_tree()) throw NotATree("iterated dominance runs on tree structures");
    auto th = adoption_thresholds(info, space);
    if (!(cost > th.uninformed_seed)) {
        throw PreconditionFailed("requires cost above P[G | N_1]");
    }

    Event good = event_good(space);
    std::vector<Elimination<P>> trace;
    std::vector<std::vector<AgentId>> children(static_cast<size_t>(info.agent_count()) + 1);
    for (auto [u, v] : info.links()) children[static_cast<size_t>(u)].push_back(v);

    std::vector<AgentId> frontier = children[0];  // seeds in ascending order
    for (AgentId s : frontier) {
        P bound = probability(space, good, ~event_informed(space, s));
        trace.push_back({s, 0, bound});
    }
    size_t head = 0;
    while (head < frontier.size()) {
        AgentId u = frontier[head++];
        for (AgentId v : children[static_cast<size_t>(u)]) {
            P bound = probability(space, event_informed(space, u), ~event_informed(space, v));
            if (!(bound < cost)) {
                throw PreconditionFailed("elimination bound not below cost; dominance chain broke");
            }
            trace.push_back({v, 0, bound});
            frontier.push_back(v);
        }
    }
    return trace;
}

// Case analysis for any game whose best-response cutoff is a threshold on
// P[fundamental good and all others adopt | signal]: instantiates the
// candidate profile for the threshold region and certifies it against the
// game's actual payoffs (ties go to the higher-adoption case).
template <class B, class Payoff>
EquilibriumReport<typename B::Prob> solve_threshold_game(const InformationStructure& info,
                                                         const OutcomeSpace<B>& space,
                                                         const typename B::Prob& threshold,
                                                         const Payoff& payoff,
                                                         const typename B::Prob& tol = 0) {
    using P = typename B::Prob;
    if (!(threshold > 0 && threshold < 1)) throw BadParams("threshold must lie strictly inside (0,1)");
    if (!info.is_tree()) throw NotATree("the case analysis runs on seeded forests; use the general solvers otherwise");

    BeliefContext<B> ctx(space);
    auto th = adoption_thresholds(info, space);

    EquilibriumReport<P> report;
    report.threshold_uninformed_seed = th.uninformed_seed;
    report.threshold_informed_seed = th.informed_seed;

    Event all = event_all_informed(space);
    Event good = event_good(space);

    if (threshold <= th.uninformed_seed) {
        report.case_label = AdoptionCase::kAlwaysAdopt;
        report.profile = uniform_profile(ctx, P(1), P(1));
        report.max_all_adopt_prob = 1;
        report.max_all_adopt_prob_given_good = 1;
    } else if (threshold <= th.informed_seed) {
        report.case_label = AdoptionCase::kAdoptIfInformed;
        report.profile = uniform_profile(ctx, P(1), P(0));
        report.max_all_adopt_prob = probability(space, all);
        report.max_all_adopt_prob_given_good = probability(space, all, good);
        report.dominance_trace = iterated_dominance_uninformed(info, space, threshold);
    } else {
        report.case_label = AdoptionCase::kNeverAdopt;
        report.profile = uniform_profile(ctx, P(0), P(0));
        report.max_all_adopt_prob = 0;
        report.max_all_adopt_prob_given_good = 0;
        report.dominance_trace = iterated_dominance_uninformed(info, space, threshold);
    }

    report.best_response_verified = best_response_violations(ctx, report.profile, payoff, tol).empty();
    return report;
}

// The technology adoption game itself: the threshold is the cost.
template <class B>
EquilibriumReport<typename B::Prob> solve_adoption(const InformationStructure& info,
                                                   const OutcomeSpace<B>& space,
                                                   const typename B::Prob& cost,
                                                   const typename B::Prob& tol = 0) {
    using P = typename B::Prob;
    AdoptionParams<P>{cost}.validate();
    return solve_threshold_game(info, space, cost, AdoptionPayoff<P>{cost}, tol);
}

// ---- Pareto comparison ------------------------------------------------------

template <class P>
struct ParetoComparison {
    std::vector<P> payoff_a, payoff_b;  // per agent
    bool a_weakly_dominates = false;    // every agent at least as well off under a
    bool a_strictly_better_somewhere = false;
};

template <class B, class P>
ParetoComparison<P> pareto_compare(const BeliefContext<B>& ctx, const StrategyProfile<P>& a,
                                   const StrategyProfile<P>& b, const P& cost) {
    AdoptionPayoff<P> payoff{cost};
    ParetoComparison<P> out;
    out.a_weakly_dominates = true;
    for (AgentId i = 1; i <= ctx.agent_count(); ++i) {
        P ua = expected_payoff(ctx, a, i, payoff);
        P ub = expected_payoff(ctx, b, i, payoff);
        if (ua < ub) out.a_weakly_dominates = false;
        if (ua > ub) out.a_strictly_better_somewhere = true;
        out.payoff_a.push_back(ua);
        out.payoff_b.push_back(ub);
    }
    return out;
}

// ---- Game reductions --------------------------------------------------------

// Protesting maps onto adopting with cost (c+d)/R.
template <class P>
AdoptionParams<P> reduce_protest(const ProtestParams<P>& params) {
    params.validate();
    return AdoptionParams<P>{(params.cost + params.damage) / params.reward};
}

// Threshold probability for the potential class: gamma / (w + gamma * I).
template <class P>
P reduce_potential(const PotentialParams<P>& params, int agent_count) {
    if (!(params.drag > 0)) throw BadParams("drag must be positive");
    if (!(params.summit > -(P(agent_count - 1)) * params.drag)) {
        throw BadParams("summit must exceed -(I-1) * drag");
    }
    return params.drag / (params.summit + params.drag * P(agent_count));
}

// The adoption game's own potential parameters: gamma = c, w = 1 - I*c.
template <class P>
PotentialParams<P> adoption_potential_params(const P& cost, int agent_count) {
    return PotentialParams<P>{P(1) - P(agent_count) * cost, cost};
}

// Potential-game identity: payoff differences equal potential differences for
// every unilateral action change, checked over all pure action vectors.
template <class P, class PayoffU, class PayoffV>
bool potential_difference_matches(const PayoffU& u, const PayoffV& v, int agent_count) {
    for (int theta = 0; theta < 2; ++theta) {
        const bool good = theta == 1;
        for (uint32_t others = 0; others < (uint32_t{1} << (agent_count - 1)); ++others) {
            const int k = __builtin_popcount(others);
            P du = u.value(good, 1, k, agent_count) - u.value(good, 0, k, agent_count);
            P dv = v.value(good, 1, k, agent_count) - v.value(good, 0, k, agent_count);
            if (!(du == dv)) return false;
        }
    }
    return true;
}

}  // namespace seedcast
