#include "seedcast/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "seedcast/errors.hpp"

namespace seedcast {

namespace {

// Decodes a Prufer sequence over 1..n into the edge list of a labeled tree.
std::vector<std::pair<AgentId, AgentId>> prufer_decode(const std::vector<int>& seq, int n) {
    std::vector<int> degree(static_cast<size_t>(n) + 1, 1);
    for (int v : seq) degree[static_cast<size_t>(v)]++;

    std::vector<std::pair<AgentId, AgentId>> edges;
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    for (int v : seq) {
        for (int leaf = 1; leaf <= n; ++leaf) {
            if (degree[static_cast<size_t>(leaf)] == 1 && !used[static_cast<size_t>(leaf)]) {
                edges.emplace_back(leaf, v);
                used[static_cast<size_t>(leaf)] = 1;
                degree[static_cast<size_t>(v)]--;
                break;
            }
        }
    }
    int a = -1, b = -1;
    for (int v = 1; v <= n; ++v) {
        if (degree[static_cast<size_t>(v)] == 1 && !used[static_cast<size_t>(v)]) {
            if (a < 0) {
                a = v;
            } else {
                b = v;
            }
        }
    }
    edges.emplace_back(a, b);
    return edges;
}

// Maps block-local trees onto the global agent labels.
std::vector<std::pair<AgentId, AgentId>> relabel(const std::vector<std::pair<AgentId, AgentId>>& edges,
                                                 const std::vector<AgentId>& members) {
    std::vector<std::pair<AgentId, AgentId>> out;
    out.reserve(edges.size());
    for (auto [a, b] : edges) {
        out.emplace_back(members[static_cast<size_t>(a - 1)], members[static_cast<size_t>(b - 1)]);
    }
    return out;
}

std::vector<std::pair<AgentId, AgentId>> random_tree_edges(const std::vector<AgentId>& members,
                                                           std::mt19937_64& rng) {
    const int m = static_cast<int>(members.size());
    if (m <= 1) return {};
    if (m == 2) return {{members[0], members[1]}};
    std::uniform_int_distribution<int> pick(1, m);
    std::vector<int> seq(static_cast<size_t>(m - 2));
    for (auto& v : seq) v = pick(rng);
    return relabel(prufer_decode(seq, m), members);
}

}  // namespace

void enumerate_seeded_trees(int agent_count,
                            const std::function<void(const UndirectedForest&, const Seeding&)>& visit,
                            int agent_cap) {
    if (agent_count < 1) throw BadParams("agent count must be positive");
    if (agent_count > agent_cap) {
        throw CapExceeded("agent count " + std::to_string(agent_count) + " exceeds cap " +
                          std::to_string(agent_cap));
    }
    for (const auto& edges : all_labeled_trees(agent_count, agent_cap)) {
        UndirectedForest forest(agent_count, edges);
        for (AgentId s = 1; s <= agent_count; ++s) {
            visit(forest, Seeding{{s}});
        }
    }
}

std::vector<std::vector<std::pair<AgentId, AgentId>>> all_labeled_trees(int agent_count, int agent_cap) {
    if (agent_count < 1) throw BadParams("agent count must be positive");
    if (agent_count > agent_cap) {
        throw CapExceeded("agent count " + std::to_string(agent_count) + " exceeds cap " +
                          std::to_string(agent_cap));
    }
    std::vector<std::vector<std::pair<AgentId, AgentId>>> trees;
    if (agent_count == 1) {
        trees.push_back({});
        return trees;
    }
    if (agent_count == 2) {
        trees.push_back({{1, 2}});
        return trees;
    }
    std::vector<int> seq(static_cast<size_t>(agent_count - 2), 1);
    while (true) {
        trees.push_back(prufer_decode(seq, agent_count));
        int pos = static_cast<int>(seq.size()) - 1;
        while (pos >= 0 && seq[static_cast<size_t>(pos)] == agent_count) {
            seq[static_cast<size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) break;
        seq[static_cast<size_t>(pos)]++;
    }
    return trees;
}

std::vector<InformationStructure> enumerate_tree_structures(int agent_count, int agent_cap) {
    std::vector<InformationStructure> out;
    enumerate_seeded_trees(
        agent_count, [&](const UndirectedForest& f, const Seeding& s) { out.push_back(orient(f, s)); },
        agent_cap);
    return out;
}

std::pair<UndirectedForest, Seeding> sample_multi_tree_forest(int agent_count, std::mt19937_64& rng) {
    if (agent_count < 2) throw BadParams("need at least two agents for a multi-tree forest");
    std::uniform_int_distribution<int> block_count(2, agent_count);
    const int blocks = block_count(rng);

    // Random assignment of agents to blocks, resampled until none is empty.
    std::vector<int> assign(static_cast<size_t>(agent_count));
    while (true) {
        std::uniform_int_distribution<int> pick(0, blocks - 1);
        std::vector<int> sizes(static_cast<size_t>(blocks), 0);
        for (auto& a : assign) {
            a = pick(rng);
            sizes[static_cast<size_t>(a)]++;
        }
        if (std::all_of(sizes.begin(), sizes.end(), [](int s) { return s > 0; })) break;
    }

    std::vector<std::vector<AgentId>> members(static_cast<size_t>(blocks));
    for (AgentId i = 1; i <= agent_count; ++i) members[static_cast<size_t>(assign[static_cast<size_t>(i - 1)])].push_back(i);

    std::vector<std::pair<AgentId, AgentId>> edges;
    for (const auto& block : members) {
        auto tree = random_tree_edges(block, rng);
        edges.insert(edges.end(), tree.begin(), tree.end());
    }
    UndirectedForest forest(agent_count, edges);

    // One random seed per component, listed in component order.
    Seeding seeding;
    seeding.seeds.resize(static_cast<size_t>(forest.component_count()));
    std::vector<std::vector<AgentId>> by_component(static_cast<size_t>(forest.component_count()));
    for (AgentId i = 1; i <= agent_count; ++i) by_component[static_cast<size_t>(forest.component_of(i))].push_back(i);
    for (size_t c = 0; c < by_component.size(); ++c) {
        std::uniform_int_distribution<size_t> pick(0, by_component[c].size() - 1);
        seeding.seeds[c] = by_component[c][pick(rng)];
    }
    return {std::move(forest), std::move(seeding)};
}

}  // namespace seedcast
