#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "seedcast/enumerate.hpp"
#include "seedcast/monte_carlo.hpp"
#include "seedcast/outcome_space.hpp"
#include "seedcast/probability.hpp"
#include "seedcast/verify.hpp"

using namespace seedcast;

namespace {

const ModelParams<Rational> kBase{Rational(1, 2), Rational(1, 10)};

InformationStructure line3_seed1() {
    return orient(build_forest(3, {{1, 2}, {2, 3}}), Seeding{{1}});
}

InformationStructure broadcast3() {
    return orient(build_forest(3, {}), Seeding{{1, 2, 3}});
}

// Probability of the state with exactly the given informed set; 0 when the
// state is outside the support.
Rational state_prob(const OutcomeSpace<ExactBackend>& space, bool good, const std::vector<int>& informed) {
    for (size_t k = 0; k < space.size(); ++k) {
        const auto& st = space.states[k];
        if (st.good != good) continue;
        bool match = true;
        for (AgentId i = 1; i <= space.agent_count; ++i) {
            bool want = std::find(informed.begin(), informed.end(), i) != informed.end();
            if (st.informed(i) != want) match = false;
        }
        if (match) return space.prob(k);
    }
    return 0;
}

}  // namespace

TEST_CASE("enumerate_outcomes reproduces the line example distribution") {
    auto space = enumerate_outcomes<ExactBackend>(line3_seed1(), kBase);

    CHECK(state_prob(space, true, {1, 2, 3}) == Rational(729, 2000));  // 0.5 * 0.9^3
    CHECK(state_prob(space, false, {}) == Rational(1, 2));
    // (g, n, y, y) is impossible when 1 is the seed: no such state in the support.
    CHECK(state_prob(space, true, {2, 3}) == 0);

    // Seeding at 2 makes it possible.
    auto seed2 = orient(build_forest(3, {{1, 2}, {2, 3}}), Seeding{{2}});
    auto space2 = enumerate_outcomes<ExactBackend>(seed2, kBase);
    CHECK(state_prob(space2, true, {2, 3}) > 0);

    // Normalization is exact.
    Rational total = 0;
    for (size_t k = 0; k < space.size(); ++k) total += space.prob(k);
    CHECK(total == 1);
}

TEST_CASE("event probabilities and conditioning") {
    auto space = enumerate_outcomes<ExactBackend>(line3_seed1(), kBase);
    Event good = event_good(space);
    Event all = event_all_informed(space);

    CHECK(probability(space, good) == Rational(1, 2));
    CHECK(probability(space, all, event_informed(space, 1)) == Rational(81, 100));
    for (AgentId i = 1; i <= 3; ++i) {
        CHECK(probability(space, all, event_uninformed(space, i)) == 0);
    }

    Event impossible = good & ~good;
    CHECK_THROWS_AS(probability(space, all, impossible), ConditionOnNull);
}

TEST_CASE("closed forms match their stated values") {
    CHECK(closed_form(ClosedForm::kGoodGivenUninformedAtK, 1, kBase, 3) == Rational(1, 11));
    CHECK(closed_form(ClosedForm::kAllInformedGivenInformedAtK, 3, kBase, 3) == 1);
    CHECK(closed_form(ClosedForm::kAllInformedGivenGood, 1, kBase, 3) == Rational(729, 1000));
    CHECK(closed_form(ClosedForm::kAllInformedGivenSeedInformed, 1, kBase, 3) == Rational(81, 100));
    CHECK_THROWS_AS(closed_form(ClosedForm::kGoodGivenUninformedAtK, 0, kBase, 3), BadIndex);
    CHECK_THROWS_AS(closed_form(ClosedForm::kGoodGivenUninformedAtK, 4, kBase, 3), BadIndex);

    // P[Y* | G] is structure independent: line and broadcast agree.
    auto line_space = enumerate_outcomes<ExactBackend>(line3_seed1(), kBase);
    auto bc_space = enumerate_outcomes<ExactBackend>(broadcast3(), kBase);
    Rational expected = closed_form(ClosedForm::kAllInformedGivenGood, 1, kBase, 3);
    CHECK(probability(line_space, event_all_informed(line_space), event_good(line_space)) == expected);
    CHECK(probability(bc_space, event_all_informed(bc_space), event_good(bc_space)) == expected);
}

TEST_CASE("path lemmas hold exactly on every enumerated structure") {
    for (int agents : {2, 3, 4, 5}) {
        for (const Rational& eps : {Rational(1, 20), Rational(1, 10), Rational(3, 10)}) {
            ModelParams<Rational> params{Rational(1, 2), eps};
            enumerate_seeded_trees(agents, [&](const UndirectedForest& forest, const Seeding& seeding) {
                auto info = orient(forest, seeding);
                auto space = enumerate_outcomes<ExactBackend>(info, params);
                auto result = verify_path_lemmas(info, space, params);
                CHECK_MESSAGE(result.verified, result.first_failure);
            });
        }
    }
}

TEST_CASE("float backend tracks the exact backend") {
    ModelParams<Rational> exact_params{Rational(3, 10), Rational(3, 10)};
    ModelParams<double> float_params{0.3, 0.3};
    auto tree = orient(build_forest(4, {{1, 2}, {1, 3}, {3, 4}}), Seeding{{3}});
    auto es = enumerate_outcomes<ExactBackend>(tree, exact_params);
    auto fs = enumerate_outcomes<FloatBackend>(tree, float_params);
    REQUIRE(es.size() == fs.size());
    for (size_t k = 0; k < es.size(); ++k) {
        CHECK(es.states[k].good == fs.states[k].good);
        CHECK(es.states[k].sources == fs.states[k].sources);
        CHECK(std::abs(to_double(es.prob(k)) - fs.prob(k)) < 1e-12);
    }
}

TEST_CASE("link cap") {
    std::vector<std::pair<AgentId, AgentId>> edges;
    for (int i = 1; i < 26; ++i) edges.emplace_back(i, i + 1);
    auto big = orient(build_forest(26, edges), Seeding{{1}});
    CHECK_THROWS_AS(enumerate_outcomes<FloatBackend>(big, ModelParams<double>{0.5, 0.1}), CapExceeded);
}

TEST_CASE("epsilon_bar solves the crossing equation") {
    auto eb3 = epsilon_bar(3, 0.5);
    CHECK_FALSE(eb3.degenerate);
    // Defining equation: rho e / (1 - rho (1 - e)) = (1 - e)^(I-1).
    double lhs = 0.5 * eb3.value / (1.0 - 0.5 * (1.0 - eb3.value));
    double rhs = (1.0 - eb3.value) * (1.0 - eb3.value);
    CHECK(std::abs(lhs - rhs) < 1e-12);
    CHECK(std::abs(eb3.value - 0.4451) < 1e-4);

    // Independent oracle: for rho = 1/2, I = 3 the crossing point is the root
    // of e^3 - e^2 - 2e + 1 in (0,1); bisect the cubic directly.
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 100; ++i) {
        double mid = 0.5 * (lo + hi);
        double f = mid * mid * mid - mid * mid - 2.0 * mid + 1.0;
        (f > 0 ? lo : hi) = mid;
    }
    CHECK(eb3.value == doctest::Approx(0.5 * (lo + hi)).epsilon(1e-12));

    // rho = 1/2, I = 2: e/(1+e) = 1-e has the closed-form root (sqrt(5)-1)/2.
    auto eb2 = epsilon_bar(2, 0.5);
    CHECK(eb2.value == doctest::Approx((std::sqrt(5.0) - 1.0) / 2.0).epsilon(1e-12));
    double lhs2 = 0.5 * eb2.value / (1.0 - 0.5 * (1.0 - eb2.value));
    CHECK(std::abs(lhs2 - (1.0 - eb2.value)) < 1e-12);

    auto eb1 = epsilon_bar(1, 0.5);
    CHECK(eb1.degenerate);
    CHECK(eb1.value == 1.0);

    // Residual stays below 1e-12 across the acceptance parameter grid.
    for (int agents : {2, 3, 4, 5, 6}) {
        for (double rho : {0.3, 0.5, 0.7}) {
            auto eb = epsilon_bar(agents, rho);
            double l = rho * eb.value / (1.0 - rho * (1.0 - eb.value));
            double r = std::pow(1.0 - eb.value, agents - 1);
            CHECK(std::abs(l - r) < 1e-12);
        }
    }
}

TEST_CASE("monte carlo is deterministic and consistent") {
    ModelParams<double> params{0.5, 0.1};
    auto info = line3_seed1();

    auto a = monte_carlo(info, params, 5000, 42);
    auto b = monte_carlo(info, params, 5000, 42);
    REQUIRE(a.size() == b.size());
    for (size_t k = 0; k < a.size(); ++k) {
        CHECK(a.states[k].sources == b.states[k].sources);
        CHECK(a.weights[k] == b.weights[k]);
    }

    auto single = monte_carlo(info, params, 1, 7);
    CHECK(single.size() == 1);
    CHECK(single.weights[0] == 1.0);

    // Splitting across workers changes the stream but stays consistent.
    auto split = monte_carlo(info, params, 200000, 42, 4);
    auto exact = enumerate_outcomes<FloatBackend>(info, params);
    const double n = 200000.0;
    for (size_t k = 0; k < exact.size(); ++k) {
        double p = exact.prob(k);
        double freq = 0.0;
        for (size_t j = 0; j < split.size(); ++j) {
            if (split.states[j].good == exact.states[k].good &&
                split.states[j].sources == exact.states[k].sources) {
                freq = split.weights[j];
            }
        }
        CHECK(std::abs(freq - p) <= 4.0 * std::sqrt(p * (1.0 - p) / n));
    }

    // Example check: empirical P[Y*] within 3 standard errors at 10^6 trials.
    auto big = monte_carlo(info, params, 1000000, 20240205);
    double freq = 0.0;
    for (size_t k = 0; k < big.size(); ++k) {
        if (big.states[k].good && big.states[k].informed(1) && big.states[k].informed(2) &&
            big.states[k].informed(3)) {
            freq = big.weights[k];
        }
    }
    CHECK(std::abs(freq - 0.3645) <= 3.0 * std::sqrt(0.3645 * (1.0 - 0.3645) / 1e6));
}
