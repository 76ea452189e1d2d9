#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "seedcast/forest.hpp"
#include "seedcast/info_structure.hpp"

namespace seedcast {

inline constexpr int kDefaultAgentCap = 6;

// Every labeled tree on agent_count nodes (decoded from bijective sequences,
// so the yield is exactly agent_count^(agent_count-2)) crossed with every
// choice of seed. Throws CapExceeded above the cap.
void enumerate_seeded_trees(int agent_count,
                            const std::function<void(const UndirectedForest&, const Seeding&)>& visit,
                            int agent_cap = kDefaultAgentCap);

// Convenience wrapper collecting oriented structures.
std::vector<InformationStructure> enumerate_tree_structures(int agent_count, int agent_cap = kDefaultAgentCap);

// Edge lists of all labeled trees on agent_count nodes.
std::vector<std::vector<std::pair<AgentId, AgentId>>> all_labeled_trees(int agent_count,
                                                                        int agent_cap = kDefaultAgentCap);

// A random seeded forest with at least two components (when agent_count >= 2):
// random set partition, a random labeled tree per block, a random seed per tree.
std::pair<UndirectedForest, Seeding> sample_multi_tree_forest(int agent_count, std::mt19937_64& rng);

}  // namespace seedcast
