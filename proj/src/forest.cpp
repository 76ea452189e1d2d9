#include "seedcast/forest.hpp"

#include <algorithm>
#include <string>

#include "seedcast/errors.hpp"

namespace seedcast {

UndirectedForest::UndirectedForest(int agent_count,
                                   const std::vector<std::pair<AgentId, AgentId>>& edge_list)
    : agent_count_(agent_count) {
    if (agent_count < 1) throw BadParams("agent count must be positive");
    adjacency_.assign(static_cast<size_t>(agent_count) + 1, {});
    component_.assign(static_cast<size_t>(agent_count) + 1, -1);

    std::set<std::pair<AgentId, AgentId>> seen;
    for (auto [a, b] : edge_list) {
        if (a < 1 || a > agent_count || b < 1 || b > agent_count) {
            throw BadEdge("edge endpoint out of range: {" + std::to_string(a) + "," + std::to_string(b) + "}");
        }
        if (a == b) throw BadEdge("self-loop at agent " + std::to_string(a));
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second) {
            throw BadEdge("duplicate edge {" + std::to_string(key.first) + "," + std::to_string(key.second) + "}");
        }
        adjacency_[static_cast<size_t>(a)].push_back(b);
        adjacency_[static_cast<size_t>(b)].push_back(a);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());

    // Union-find cycle check doubles as component labeling.
    std::vector<int> parent(static_cast<size_t>(agent_count) + 1);
    for (int i = 0; i <= agent_count; ++i) parent[static_cast<size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (auto [a, b] : seen) {
        int ra = find(a), rb = find(b);
        if (ra == rb) {
            throw CycleDetected("edge {" + std::to_string(a) + "," + std::to_string(b) + "} closes a cycle");
        }
        parent[static_cast<size_t>(ra)] = rb;
    }

    for (AgentId i = 1; i <= agent_count; ++i) {
        int root = find(i);
        if (component_[static_cast<size_t>(root)] < 0) component_[static_cast<size_t>(root)] = component_count_++;
    }
    for (AgentId i = 1; i <= agent_count; ++i) component_[static_cast<size_t>(i)] = component_[static_cast<size_t>(find(i))];
}

std::vector<std::pair<AgentId, AgentId>> UndirectedForest::edges() const {
    std::vector<std::pair<AgentId, AgentId>> out;
    for (AgentId i = 1; i <= agent_count_; ++i) {
        for (AgentId j : neighbors(i)) {
            if (i < j) out.emplace_back(i, j);
        }
    }
    return out;
}

UndirectedForest build_forest(int agent_count, const std::vector<std::pair<AgentId, AgentId>>& edge_list) {
    return UndirectedForest(agent_count, edge_list);
}

}  // namespace seedcast
