#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "seedcast/info_structure.hpp"
#include "seedcast/outcome_space.hpp"

namespace seedcast {

// Sampling oracle for enumerate_outcomes: draws theta and per-link outcomes,
// replays delivery message by message, and reports empirical frequencies.
// Deterministic for a given rng_seed (also across worker counts: every worker
// owns a seed derived from its index and results merge in index order).
OutcomeSpace<FloatBackend> monte_carlo(const InformationStructure& info, const ModelParams<double>& params,
                                       std::uint64_t trials, std::uint64_t rng_seed, int workers = 1);

}  // namespace seedcast
