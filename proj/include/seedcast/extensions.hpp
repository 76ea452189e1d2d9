#pragma once

#include <utility>
#include <vector>

#include "seedcast/game.hpp"
#include "seedcast/info_structure.hpp"
#include "seedcast/outcome_space.hpp"

namespace seedcast {

// A distribution over information structures: deterministic structures are a
// one-point mixture, random seedings put weight on several. Agents observe
// only their received-source set, never the draw itself.
template <class P>
struct GeneralScenario {
    int agent_count = 0;
    std::vector<std::pair<InformationStructure, P>> components;

    void validate() const {
        if (components.empty()) throw BadParams("scenario needs at least one component");
        P total = 0;
        for (const auto& [info, q] : components) {
            if (info.agent_count() != agent_count) throw BadParams("component agent counts differ");
            if (!(q > 0)) throw BadParams("component weights must be positive");
            total += q;
        }
        if (!(total == 1)) throw BadParams("component weights must sum to one");
    }
};

template <class P>
GeneralScenario<P> single_structure_scenario(InformationStructure info) {
    GeneralScenario<P> s;
    s.agent_count = info.agent_count();
    s.components.emplace_back(std::move(info), P(1));
    return s;
}

// Distribution over source-profile world states for a scenario: each
// component is enumerated with the shared link-outcome engine and the results
// are mixed; states with identical source profiles merge across components.
template <class B>
OutcomeSpace<B> general_outcomes(const GeneralScenario<typename B::Prob>& scenario,
                                 const ModelParams<typename B::Prob>& params, int link_cap = kDefaultLinkCap) {
    using W = typename B::Weight;
    scenario.validate();

    std::vector<OutcomeSpace<B>> parts;
    parts.reserve(scenario.components.size());
    for (const auto& [info, q] : scenario.components) {
        parts.push_back(enumerate_outcomes<B>(info, params, link_cap));
    }

    W denom_lcm = B::one();
    W q_lcm = B::one();
    for (size_t k = 0; k < parts.size(); ++k) {
        denom_lcm = B::weight_lcm(denom_lcm, parts[k].denom);
        q_lcm = B::weight_lcm(q_lcm, B::prob_den_as_weight(scenario.components[k].second));
    }

    detail::StateMap<B> acc;
    for (size_t k = 0; k < parts.size(); ++k) {
        const auto& q = scenario.components[k].second;
        W scale = B::weight_div(denom_lcm, parts[k].denom) * B::prob_num_as_weight(q) *
                  B::weight_div(q_lcm, B::prob_den_as_weight(q));
        for (size_t i = 0; i < parts[k].size(); ++i) {
            const auto& st = parts[k].states[i];
            auto [it, inserted] = acc.try_emplace({st.good, st.sources}, B::zero());
            it->second += parts[k].weights[i] * scale;
        }
    }
    return detail::space_from_map<B>(scenario.agent_count, std::move(acc), denom_lcm * q_lcm);
}

// ---- Canonical structures from the counterexamples -------------------------

// Four agents on a cycle seeded at 1: the message travels both ways and agent
// 3 can hear from 2, from 4, or from both.
InformationStructure cycle_structure();

// Two connected agents, both seeded; each relays the planner's message to the
// other (never back to its sender).
InformationStructure two_seed_structure();

// Two connected agents, planner seeds agent `seed`.
InformationStructure pair_structure(AgentId seed);

// Uniform random choice between seeding 1 and seeding 2.
template <class P>
GeneralScenario<P> random_seed_scenario() {
    GeneralScenario<P> s;
    s.agent_count = 2;
    P half = P(1) / P(2);
    s.components.emplace_back(pair_structure(1), half);
    s.components.emplace_back(pair_structure(2), half);
    return s;
}

// ---- Cycle counterexample ---------------------------------------------------

template <class P>
struct CycleReport {
    P good_given_uninformed_seed;     // P[G | N_1]
    P single_source_bound;            // P[Y_4 | 3 heard exactly from 2]
    P informed_seed_upper;            // P[everyone else adopts | Y_1]
    P all_adopt_prob;                 // under the certified profile
    P all_adopt_prob_given_good;
    std::vector<Elimination<P>> dominance_trace;
    bool best_response_verified = false;
};

// Certifies the cycle equilibrium: 1, 2, 4 adopt iff informed; 3 adopts iff
// she heard from both neighbors. Requires P[G|N_1] < c and
// P[Y_4 | Y_3^2] < c < P[others adopt | Y_1].
template <class B>
CycleReport<typename B::Prob> solve_cycle(const ModelParams<typename B::Prob>& params,
                                          const typename B::Prob& cost,
                                          const typename B::Prob& tol = 0) {
    using P = typename B::Prob;
    AdoptionParams<P>{cost}.validate();
    InformationStructure info = cycle_structure();
    OutcomeSpace<B> space = enumerate_outcomes<B>(info, params);
    BeliefContext<B> ctx(space);

    const uint32_t from2 = uint32_t{1} << 2;
    const uint32_t from4 = uint32_t{1} << 4;

    Event good = event_good(space);
    Event y1 = event_informed(space, 1);
    Event y2 = event_informed(space, 2);
    Event y4 = event_informed(space, 4);
    Event both3 = event_sources_exact(space, 3, from2 | from4);

    CycleReport<P> report;
    report.good_given_uninformed_seed = probability(space, good, ~y1);
    report.single_source_bound = probability(space, y4, event_sources_exact(space, 3, from2));
    report.informed_seed_upper = probability(space, y2 & y4 & both3, y1);

    if (!(cost > report.good_given_uninformed_seed)) {
        throw OutOfRange("cost must exceed P[G | N_1] for the cycle claim");
    }
    if (!(report.single_source_bound < cost)) {
        throw OutOfRange("cost must exceed the single-source bound P[Y_4 | Y_3^2]");
    }
    if (!(cost < report.informed_seed_upper)) {
        throw OutOfRange("cost must stay below the informed-seed payoff bound");
    }

    // Iterated eliminations in paper order; every bound must fall below cost.
    auto push = [&](AgentId agent, uint32_t signal, const P& bound) {
        if (!(bound < cost)) throw OutOfRange("elimination bound not below cost");
        report.dominance_trace.push_back({agent, signal, bound});
    };
    push(1, 0, report.good_given_uninformed_seed);
    push(2, 0, probability(space, y1, ~y2));
    push(4, 0, probability(space, y1, ~y4));
    push(3, 0, probability(space, y1 & y2 & y4, ~event_informed(space, 3)));
    push(3, from2, report.single_source_bound);
    push(3, from4, probability(space, y2, event_sources_exact(space, 3, from4)));

    StrategyProfile<P> profile = uniform_profile(ctx, P(1), P(0));
    for (uint32_t sig : ctx.signals_of(3)) {
        profile.at(3, sig) = sig == (from2 | from4) ? P(1) : P(0);
    }

    Event all_adopt = y1 & y2 & y4 & both3;
    report.all_adopt_prob = probability(space, all_adopt);
    report.all_adopt_prob_given_good = probability(space, all_adopt, good);

    AdoptionPayoff<P> payoff{cost};
    report.best_response_verified = best_response_violations(ctx, profile, payoff, tol).empty();
    return report;
}

// ---- Multiple seeds ---------------------------------------------------------

template <class P>
struct MultiSeedReport {
    P multi_good_given_uninformed;    // P_M[G | N_1]
    P single_good_given_uninformed;   // P[G | N_1]
    P partner_given_planner_sourced;  // P_M[Y_2 | 1 heard from the planner]
    P partner_given_planner_only;     // P_M[Y_2 | 1 heard exactly from the planner]
    bool multi_equilibrium_certified = false;   // adopt iff informed, two seeds
    bool single_equilibrium_certified = false;  // always adopt, one seed
    P payoff_multi;   // enumerated ex ante payoff under two seeds
    P payoff_single;  // enumerated ex ante payoff under one seed
    int payoff_sign;  // sign of payoff_multi - payoff_single
};

// Certifies both equilibria on the window P_M[G|N_1] < c <= P[G|N_1] and
// compares the agents' ex ante payoffs.
template <class B>
MultiSeedReport<typename B::Prob> solve_multiseed(const ModelParams<typename B::Prob>& params,
                                                  const typename B::Prob& cost,
                                                  const typename B::Prob& tol = 0) {
    using P = typename B::Prob;
    AdoptionParams<P>{cost}.validate();

    OutcomeSpace<B> multi = enumerate_outcomes<B>(two_seed_structure(), params);
    OutcomeSpace<B> single = enumerate_outcomes<B>(pair_structure(1), params);
    BeliefContext<B> mctx(multi);
    BeliefContext<B> sctx(single);

    MultiSeedReport<P> report;
    report.multi_good_given_uninformed = probability(multi, event_good(multi), ~event_informed(multi, 1));
    report.single_good_given_uninformed = probability(single, event_good(single), ~event_informed(single, 1));
    report.partner_given_planner_sourced =
        probability(multi, event_informed(multi, 2), event_heard_from(multi, 1, kPlanner));
    report.partner_given_planner_only =
        probability(multi, event_informed(multi, 2), event_sources_exact(multi, 1, 1));

    if (!(cost > report.multi_good_given_uninformed && cost <= report.single_good_given_uninformed)) {
        throw OutOfRange("cost outside the window (P_M[G|N_1], P[G|N_1]]");
    }

    AdoptionPayoff<P> payoff{cost};
    StrategyProfile<P> iff_informed = uniform_profile(mctx, P(1), P(0));
    StrategyProfile<P> always = uniform_profile(sctx, P(1), P(1));
    report.multi_equilibrium_certified = best_response_violations(mctx, iff_informed, payoff, tol).empty();
    report.single_equilibrium_certified = best_response_violations(sctx, always, payoff, tol).empty();

    report.payoff_multi = expected_payoff(mctx, iff_informed, 1, payoff);
    report.payoff_single = expected_payoff(sctx, always, 1, payoff);
    P diff = report.payoff_multi - report.payoff_single;
    report.payoff_sign = diff > 0 ? 1 : (diff < 0 ? -1 : 0);
    return report;
}

// Closed forms from the counterexample: ex ante payoffs with two seeds and
// with one seed under the respective equilibria.
template <class P>
P multiseed_payoff_formula(const ModelParams<P>& params, const P& cost) {
    const P keep = P(1) - params.epsilon;
    return params.rho * keep * keep * (P(1) + P(2) * params.epsilon) * (P(1) - cost) -
           params.rho * keep * params.epsilon * params.epsilon * cost;
}

template <class P>
P singleseed_payoff_formula(const ModelParams<P>& params, const P& cost) {
    return params.rho - cost;
}

// ---- Random seeds -----------------------------------------------------------

template <class P>
struct RandomSeedReport {
    P window_lo;  // P^1[G | N_1], single seed
    P window_hi;  // P~[G | N_1], random seed
    bool random_always_adopt_certified = false;
    bool single_always_adopt_fails = false;  // the same profile breaks with a known seed
    P all_adopt_prob_random;                 // 1 under always-adopt
    P all_adopt_prob_single_best;            // P[Y*] under adopt-iff-informed
};

// Certifies always-adopt under a uniformly random seed for
// P^1[G|N_1] < c < P~[G|N_1] and shows it fails under a deterministic seed.
template <class B>
RandomSeedReport<typename B::Prob> solve_randomseed(const ModelParams<typename B::Prob>& params,
                                                    const typename B::Prob& cost,
                                                    const typename B::Prob& tol = 0) {
    using P = typename B::Prob;
    AdoptionParams<P>{cost}.validate();

    OutcomeSpace<B> mixed = general_outcomes<B>(random_seed_scenario<P>(), params);
    OutcomeSpace<B> single = enumerate_outcomes<B>(pair_structure(1), params);
    BeliefContext<B> mixed_ctx(mixed);
    BeliefContext<B> single_ctx(single);

    RandomSeedReport<P> report;
    report.window_lo = probability(single, event_good(single), ~event_informed(single, 1));
    report.window_hi = probability(mixed, event_good(mixed), ~event_informed(mixed, 1));
    if (!(cost > report.window_lo && cost < report.window_hi)) {
        throw OutOfRange("cost outside the window (P^1[G|N_1], P~[G|N_1])");
    }

    AdoptionPayoff<P> payoff{cost};
    StrategyProfile<P> always_mixed = uniform_profile(mixed_ctx, P(1), P(1));
    StrategyProfile<P> always_single = uniform_profile(single_ctx, P(1), P(1));
    report.random_always_adopt_certified = best_response_violations(mixed_ctx, always_mixed, payoff, tol).empty();
    report.single_always_adopt_fails = !best_response_violations(single_ctx, always_single, payoff, tol).empty();

    report.all_adopt_prob_random = 1;
    report.all_adopt_prob_single_best = probability(single, event_all_informed(single));
    return report;
}

}  // namespace seedcast
