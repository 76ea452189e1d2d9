#include "seedcast/verify.hpp"

#include <algorithm>

#include "seedcast/probability.hpp"

namespace seedcast {

std::vector<Rational> auto_p_grid(const CommonBeliefClassification<Rational>& classification) {
    const Rational delta(1, 1000000000);
    std::vector<Rational> grid;
    for (const Rational& t : {classification.t1, classification.t2}) {
        grid.push_back(t - delta);
        grid.push_back(t);
        grid.push_back(t + delta);
    }
    grid.push_back(1);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    std::erase_if(grid, [](const Rational& p) { return !(p > 0 && p <= 1); });
    return grid;
}

VerifyResult verify_irrelevance(const std::vector<InformationStructure>& structures,
                                const ModelParams<Rational>& params) {
    VerifyResult result;
    if (structures.empty()) return result;

    const int agents = structures.front().agent_count();
    auto classification = classify_common_belief_good(params, agents);
    auto grid = auto_p_grid(classification);

    for (const auto& info : structures) {
        if (info.agent_count() != agents) {
            result.fail("structures mix agent counts");
            return result;
        }
        auto space = enumerate_outcomes<ExactBackend>(info, params);
        BeliefContext<ExactBackend> ctx(space);
        Event good = event_good(space);
        for (const Rational& p : grid) {
            Event c = common_p_belief(ctx, p, good);
            const auto& region = classification.region_at(p);
            if (label_event(space, c) != region.label) {
                result.fail("common-belief label deviates at structure " +
                            std::to_string(result.structures_checked) + ", p = " + format_rational(p));
            }
            if (!(probability(space, c) == region.prob)) {
                result.fail("P[C^p(G)] deviates at structure " + std::to_string(result.structures_checked) +
                            ", p = " + format_rational(p));
            }
        }
        ++result.structures_checked;
    }
    return result;
}

VerifyResult verify_path_lemmas(const InformationStructure& info, const OutcomeSpace<ExactBackend>& space,
                                const ModelParams<Rational>& params) {
    VerifyResult result;
    const int agents = info.agent_count();
    Event good = event_good(space);
    Event all = event_all_informed(space);

    if (!(probability(space, all, good) ==
          closed_form(ClosedForm::kAllInformedGivenGood, 1, params, agents))) {
        result.fail("P[Y* | G] deviates from (1-eps)^I");
    }

    for (const auto& path : root_to_leaf_paths(info)) {
        Rational prev_g_given_n, prev_y_given_n, prev_ystar_given_y;
        const Rational keep = Rational(1) - params.epsilon;
        for (int k = 1; k <= static_cast<int>(path.size()); ++k) {
            AgentId agent = path[static_cast<size_t>(k - 1)];
            Event yk = event_informed(space, agent);
            Event nk = ~yk;
            Event prev_informed = k == 1 ? good : event_informed(space, path[static_cast<size_t>(k - 2)]);

            Rational g_given_n = probability(space, good, nk);
            Rational y_given_n = probability(space, prev_informed, nk);
            Rational ystar_given_y = probability(space, all, yk);

            if (!(g_given_n == closed_form(ClosedForm::kGoodGivenUninformedAtK, k, params, agents))) {
                result.fail("P[G | N_k] deviates from its closed form at k=" + std::to_string(k));
            }
            if (!(y_given_n == closed_form(ClosedForm::kPrevInformedGivenUninformed, k, params, agents))) {
                result.fail("P[Y_{k-1} | N_k] deviates from its closed form at k=" + std::to_string(k));
            }
            if (!(ystar_given_y == closed_form(ClosedForm::kAllInformedGivenInformedAtK, k, params, agents))) {
                result.fail("P[Y* | Y_k] deviates from its closed form at k=" + std::to_string(k));
            }
            if (k > 1) {
                if (!(g_given_n > prev_g_given_n)) result.fail("P[G | N_k] fails to increase along a path");
                if (!(y_given_n < prev_y_given_n)) result.fail("P[Y_{k-1} | N_k] fails to decrease along a path");
                if (!(ystar_given_y > prev_ystar_given_y)) result.fail("P[Y* | Y_k] fails to increase along a path");
                if (!(prev_ystar_given_y == keep * ystar_given_y)) {
                    result.fail("consecutive P[Y* | Y_k] ratio differs from 1-eps");
                }
            }
            prev_g_given_n = g_given_n;
            prev_y_given_n = y_given_n;
            prev_ystar_given_y = ystar_given_y;
        }
    }
    result.structures_checked = 1;
    return result;
}

}  // namespace seedcast
