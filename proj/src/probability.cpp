#include "seedcast/probability.hpp"

namespace seedcast {

EpsilonBar epsilon_bar(int agent_count, double rho) {
    if (agent_count < 1) throw BadParams("agent count must be positive");
    if (!(rho > 0.0 && rho < 1.0)) throw BadParams("rho must lie strictly inside (0,1)");
    if (agent_count == 1) return {1.0, true};

    auto f = [&](double e) {
        double lhs = rho * e / (1.0 - rho * (1.0 - e));
        double rhs = std::pow(1.0 - e, agent_count - 1);
        return lhs - rhs;
    };
    double lo = 0.0, hi = 1.0;
    for (int iter = 0; iter < 200; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo < 1e-16) break;
    }
    return {0.5 * (lo + hi), false};
}

}  // namespace seedcast
