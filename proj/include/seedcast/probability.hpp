#pragma once

#include <cmath>
#include <string>

#include "seedcast/backend.hpp"
#include "seedcast/errors.hpp"

namespace seedcast {

// Posterior quantities with closed forms, indexed by the position k of an
// agent along a root-to-leaf path (the seed is k=1).
enum class ClosedForm {
    kGoodGivenUninformedAtK,      // P[G | N_k]
    kPrevInformedGivenUninformed, // P[Y_{k-1} | N_k], with Y_0 = G
    kAllInformedGivenInformedAtK, // P[Y* | Y_k]
    kAllInformedGivenGood,        // P[Y* | G]
    kAllInformedGivenSeedInformed // P[Y* | Y_1]
};

template <class P>
P closed_form(ClosedForm quantity, int k, const ModelParams<P>& params, int agent_count) {
    params.validate();
    if (k < 1 || k > agent_count) {
        throw BadIndex("path position " + std::to_string(k) + " outside 1.." + std::to_string(agent_count));
    }
    const P one = 1;
    const P keep = one - params.epsilon;
    auto kpow = [&](int e) {
        P acc = 1;
        for (int i = 0; i < e; ++i) acc *= keep;
        return acc;
    };
    switch (quantity) {
        case ClosedForm::kGoodGivenUninformedAtK:
            return params.rho * (one - kpow(k)) / (one - params.rho * kpow(k));
        case ClosedForm::kPrevInformedGivenUninformed:
            return params.rho * kpow(k - 1) * params.epsilon / (one - params.rho * kpow(k));
        case ClosedForm::kAllInformedGivenInformedAtK:
            return kpow(agent_count - k);
        case ClosedForm::kAllInformedGivenGood:
            return kpow(agent_count);
        case ClosedForm::kAllInformedGivenSeedInformed:
            return kpow(agent_count - 1);
    }
    throw BadParams("unknown closed form");
}

struct EpsilonBar {
    double value = 1.0;
    bool degenerate = false;  // I = 1: no interior root, value pinned at 1
};

// The loss rate at which P[G | N_1] and P[Y* | Y_1] cross. The left side
// increases and the right side decreases in epsilon, so bisection finds the
// unique interior root.
EpsilonBar epsilon_bar(int agent_count, double rho);

}  // namespace seedcast
