#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace seedcast {

// Agents are 1..I; id 0 is the planner and never appears as a network node.
using AgentId = int;
inline constexpr AgentId kPlanner = 0;

// Validated acyclic undirected network. Isolated nodes are trivial trees.
class UndirectedForest {
public:
    UndirectedForest(int agent_count, const std::vector<std::pair<AgentId, AgentId>>& edge_list);

    int agent_count() const { return agent_count_; }
    const std::vector<AgentId>& neighbors(AgentId i) const { return adjacency_[static_cast<size_t>(i)]; }
    int component_of(AgentId i) const { return component_[static_cast<size_t>(i)]; }
    int component_count() const { return component_count_; }

    // Sorted unordered pairs (i < j); canonical representation.
    std::vector<std::pair<AgentId, AgentId>> edges() const;

private:
    int agent_count_;
    std::vector<std::vector<AgentId>> adjacency_;  // index 0 unused
    std::vector<int> component_;                   // index 0 unused
    int component_count_ = 0;
};

// One seed per connected component, each inside its component.
struct Seeding {
    std::vector<AgentId> seeds;
};

// Throws BadEdge on self-loops, duplicates, out-of-range ids; CycleDetected on
// cyclic input.
UndirectedForest build_forest(int agent_count, const std::vector<std::pair<AgentId, AgentId>>& edge_list);

}  // namespace seedcast
