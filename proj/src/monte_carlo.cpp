#include "seedcast/monte_carlo.hpp"

#include <future>
#include <map>

#include "seedcast/errors.hpp"

namespace seedcast {

namespace {

using Counts = std::map<std::pair<bool, std::vector<uint32_t>>, std::uint64_t>;

Counts run_worker(const InformationStructure& info, const ModelParams<double>& params, std::uint64_t trials,
                  std::uint64_t seed) {
    const auto& links = info.links();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    Counts counts;
    std::vector<uint32_t> sources(static_cast<size_t>(info.agent_count()));
    std::vector<char> fired(links.size());

    for (std::uint64_t t = 0; t < trials; ++t) {
        std::fill(sources.begin(), sources.end(), 0);
        const bool good = unit(rng) < params.rho;
        if (good) {
            std::fill(fired.begin(), fired.end(), 0);
            // Replay transmissions until no agent has anything new to send.
            bool progress = true;
            while (progress) {
                progress = false;
                for (size_t l = 0; l < links.size(); ++l) {
                    if (fired[l]) continue;
                    auto [u, v] = links[l];
                    bool ready = u == kPlanner;
                    if (!ready) {
                        ready = (sources[static_cast<size_t>(u - 1)] & ~(uint32_t{1} << v)) != 0;
                    }
                    if (!ready) continue;
                    fired[l] = 1;
                    progress = true;
                    if (unit(rng) >= params.epsilon) {
                        sources[static_cast<size_t>(v - 1)] |= uint32_t{1} << u;
                    }
                }
            }
        }
        ++counts[{good, sources}];
    }
    return counts;
}

}  // namespace

OutcomeSpace<FloatBackend> monte_carlo(const InformationStructure& info, const ModelParams<double>& params,
                                       std::uint64_t trials, std::uint64_t rng_seed, int workers) {
    params.validate();
    if (trials < 1) throw BadParams("trials must be at least 1");
    if (workers < 1) throw BadParams("workers must be at least 1");
    if (static_cast<std::uint64_t>(workers) > trials) workers = static_cast<int>(trials);

    std::vector<std::future<Counts>> futures;
    std::uint64_t per = trials / static_cast<std::uint64_t>(workers);
    std::uint64_t extra = trials % static_cast<std::uint64_t>(workers);
    for (int w = 0; w < workers; ++w) {
        std::uint64_t n = per + (static_cast<std::uint64_t>(w) < extra ? 1 : 0);
        futures.push_back(std::async(std::launch::async, run_worker, std::cref(info), std::cref(params), n,
                                     rng_seed + static_cast<std::uint64_t>(w)));
    }

    Counts merged;
    for (auto& f : futures) {
        for (auto& [key, n] : f.get()) merged[key] += n;
    }

    OutcomeSpace<FloatBackend> space;
    space.agent_count = info.agent_count();
    space.denom = 1.0;
    for (auto& [key, n] : merged) {
        space.states.push_back(WorldState{key.first, key.second});
        space.weights.push_back(static_cast<double>(n) / static_cast<double>(trials));
    }
    return space;
}

}  // namespace seedcast
