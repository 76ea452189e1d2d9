#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "seedcast/belief.hpp"
#include "seedcast/enumerate.hpp"
#include "seedcast/verify.hpp"

using namespace seedcast;

namespace {

const ModelParams<Rational> kBase{Rational(1, 2), Rational(1, 10)};

OutcomeSpace<ExactBackend> line3_space() {
    auto info = orient(build_forest(3, {{1, 2}, {2, 3}}), Seeding{{1}});
    return enumerate_outcomes<ExactBackend>(info, kBase);
}

Event random_event(size_t n, std::mt19937_64& rng) {
    Event e(n);
    std::uniform_int_distribution<int> bit(0, 1);
    for (size_t i = 0; i < n; ++i) {
        if (bit(rng)) e.set(i);
    }
    return e;
}

}  // namespace

TEST_CASE("p_belief on the line example") {
    auto space = line3_space();
    BeliefContext<ExactBackend> ctx(space);
    Event omega = Event::all(space.size());
    Event good = event_good(space);

    CHECK(ctx.p_belief(1, Rational(1), omega) == omega);
    CHECK(ctx.p_belief(2, Rational(1, 3), omega) == omega);

    // P[G | N_1] = 1/11 and P[G | Y_1] = 1, so at p = 1/2 agent 1 believes G
    // exactly when informed, and at p = 1/20 everywhere.
    CHECK(ctx.p_belief(1, Rational(1, 2), good) == event_informed(space, 1));
    CHECK(ctx.p_belief(1, Rational(1, 20), good) == omega);
}

TEST_CASE("mutual p-belief intersects the agents") {
    auto space = line3_space();
    BeliefContext<ExactBackend> ctx(space);
    Event omega = Event::all(space.size());
    Event good = event_good(space);

    CHECK(mutual_p_belief(ctx, Rational(1, 2), omega) == omega);
    CHECK(mutual_p_belief(ctx, Rational(1, 2), good) == event_all_informed(space));
    CHECK_FALSE(mutual_p_belief(ctx, Rational(1, 2), Event::none(space.size())).any());
}

TEST_CASE("common p-belief hits the trichotomy regions") {
    auto space = line3_space();
    BeliefContext<ExactBackend> ctx(space);
    Event good = event_good(space);

    CHECK(common_p_belief(ctx, Rational(1, 20), good) == Event::all(space.size()));
    CHECK(common_p_belief(ctx, Rational(1, 2), good) == event_all_informed(space));
    CHECK_FALSE(common_p_belief(ctx, Rational(9, 10), good).any());

    // Weak inequality: p exactly at P[G | N_1] still gives the whole space.
    CHECK(common_p_belief(ctx, Rational(1, 11), good) == Event::all(space.size()));
    // Just above the upper breakpoint the event collapses.
    CHECK(common_p_belief(ctx, Rational(81, 100), good) == event_all_informed(space));
    CHECK_FALSE(common_p_belief(ctx, Rational(81, 100) + Rational(1, 1000000000), good).any());
}

TEST_CASE("classification closed forms") {
    auto cls = classify_common_belief_good(kBase, 3);
    CHECK(cls.has_middle_region);
    CHECK(cls.t1 == Rational(1, 11));
    CHECK(cls.t2 == Rational(81, 100));
    REQUIRE(cls.regions.size() == 3);
    CHECK(cls.regions[0].prob == 1);
    CHECK(cls.regions[1].prob == Rational(729, 2000));
    CHECK(cls.regions[1].prob_given_good == Rational(729, 1000));
    CHECK(cls.regions[2].prob == 0);
    CHECK(cls.label_at(Rational(1, 11)) == CommonBeliefLabel::kWholeSpace);
    CHECK(cls.label_at(Rational(1, 2)) == CommonBeliefLabel::kAllInformed);
    CHECK(cls.label_at(Rational(9, 10)) == CommonBeliefLabel::kEmpty);

    // Above the crossing loss rate the middle region vanishes; the single
    // breakpoint is P[G | N_1] = 0.6*0.5 / (1 - 0.5*0.4) = 3/8.
    ModelParams<Rational> heavy{Rational(1, 2), Rational(3, 5)};
    auto big = classify_common_belief_good(heavy, 3);
    CHECK_FALSE(big.has_middle_region);
    REQUIRE(big.regions.size() == 2);
    CHECK(big.t1 == Rational(3, 8));
    CHECK(big.label_at(Rational(3, 8)) == CommonBeliefLabel::kWholeSpace);
    CHECK(big.label_at(Rational(2, 5)) == CommonBeliefLabel::kEmpty);
}

TEST_CASE("belief operator monotonicity properties") {
    auto space = line3_space();
    BeliefContext<ExactBackend> ctx(space);
    std::mt19937_64 rng(11);

    for (int trial = 0; trial < 200; ++trial) {
        Event e = random_event(space.size(), rng);
        Event extra = random_event(space.size(), rng);
        Event wider = e | extra;
        Rational p(1 + static_cast<int>(rng() % 9), 10);
        Rational q = p + Rational(static_cast<int>(rng() % 5), 100);
        if (q > 1) q = 1;

        for (AgentId i = 1; i <= 3; ++i) {
            // E subset E' lifts through the operator.
            CHECK(ctx.p_belief(i, p, e).is_subset_of(ctx.p_belief(i, p, wider)));
            // Raising p shrinks the believing set.
            CHECK(ctx.p_belief(i, q, e).is_subset_of(ctx.p_belief(i, p, e)));
        }
        CHECK(mutual_p_belief(ctx, p, e).is_subset_of(mutual_p_belief(ctx, p, wider)));
        CHECK(common_p_belief(ctx, p, e).is_subset_of(common_p_belief(ctx, p, wider)));
        CHECK(common_p_belief(ctx, q, e).is_subset_of(common_p_belief(ctx, p, e)));
    }
}

TEST_CASE("iteration stabilizes within agent-count plus one steps for G") {
    for (int agents : {2, 3, 4}) {
        ModelParams<Rational> params{Rational(1, 2), Rational(1, 10)};
        auto cls = classify_common_belief_good(params, agents);
        auto grid = auto_p_grid(cls);
        enumerate_seeded_trees(agents, [&](const UndirectedForest& forest, const Seeding& seeding) {
            auto space = enumerate_outcomes<ExactBackend>(orient(forest, seeding), params);
            BeliefContext<ExactBackend> ctx(space);
            Event good = event_good(space);
            for (const auto& p : grid) {
                CommonBeliefTrace trace;
                common_p_belief(ctx, p, good, &trace);
                CHECK(trace.iterations <= agents + 1);
            }
        });
    }
}

TEST_CASE("classification agrees with the enumerated fixed point") {
    for (int agents : {2, 3, 4}) {
        for (const Rational& eps : {Rational(1, 10), Rational(3, 5)}) {
            ModelParams<Rational> params{Rational(1, 2), eps};
            auto cls = classify_common_belief_good(params, agents);
            auto grid = auto_p_grid(cls);
            enumerate_seeded_trees(agents, [&](const UndirectedForest& forest, const Seeding& seeding) {
                auto space = enumerate_outcomes<ExactBackend>(orient(forest, seeding), params);
                BeliefContext<ExactBackend> ctx(space);
                Event good = event_good(space);
                for (const auto& p : grid) {
                    Event c = common_p_belief(ctx, p, good);
                    const auto& region = cls.region_at(p);
                    CHECK(label_event(space, c) == region.label);
                    CHECK(probability(space, c) == region.prob);
                }
            });
        }
    }
}
