#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "seedcast/forest.hpp"

namespace seedcast {

// Directed message graph rooted at the planner. Produced from a forest and a
// seeding (tree case: one in-link per agent) or built for the general
// structures where agents can have several sources.
class InformationStructure {
public:
    InformationStructure(int agent_count, std::vector<std::pair<AgentId, AgentId>> links);

    int agent_count() const { return agent_count_; }
    const std::vector<std::pair<AgentId, AgentId>>& links() const { return links_; }
    const std::vector<AgentId>& in_neighbors(AgentId i) const { return in_[static_cast<size_t>(i)]; }
    const std::vector<AgentId>& seeds() const { return seeds_; }

    bool is_tree() const { return is_tree_; }

private:
    int agent_count_;
    std::vector<std::pair<AgentId, AgentId>> links_;  // sorted by (from, to)
    std::vector<std::vector<AgentId>> in_;            // per agent, sorted
    std::vector<AgentId> seeds_;                      // agents with a planner in-link
    bool is_tree_ = false;
};

// Orients a forest away from its seeds: planner link to each seed, then BFS.
// Throws SeedMismatch when the seeding does not cover the components.
InformationStructure orient(const UndirectedForest& forest, const Seeding& seeding);

// Orientation for arbitrary (possibly cyclic) undirected networks with one or
// more seeds: multi-source BFS layering. An edge between consecutive layers
// points outward; an edge inside one layer yields links both ways.
InformationStructure orient_general(int agent_count,
                                    const std::vector<std::pair<AgentId, AgentId>>& edge_list,
                                    const std::vector<AgentId>& seeds);

// Number of directed links on the unique planner-to-agent path. Tree case only.
int depth(const InformationStructure& info, AgentId i);

// [0, ..., i] along the unique path. Tree case only.
std::vector<AgentId> path_from_root(const InformationStructure& info, AgentId i);

// All root-to-leaf agent sequences (excluding the planner), ordered by leaf id.
std::vector<std::vector<AgentId>> root_to_leaf_paths(const InformationStructure& info);

}  // namespace seedcast
