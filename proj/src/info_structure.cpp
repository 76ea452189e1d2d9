#include "seedcast/info_structure.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "seedcast/errors.hpp"

namespace seedcast {

InformationStructure::InformationStructure(int agent_count, std::vector<std::pair<AgentId, AgentId>> links)
    : agent_count_(agent_count), links_(std::move(links)) {
    if (agent_count < 1) throw BadParams("agent count must be positive");
    std::sort(links_.begin(), links_.end());
    in_.assign(static_cast<size_t>(agent_count) + 1, {});
    for (auto [u, v] : links_) {
        if (u < 0 || u > agent_count || v < 1 || v > agent_count || u == v) {
            throw BadEdge("invalid link " + std::to_string(u) + "->" + std::to_string(v));
        }
        in_[static_cast<size_t>(v)].push_back(u);
        if (u == kPlanner) seeds_.push_back(v);
    }

    // Reachability from the planner.
    std::vector<char> reach(static_cast<size_t>(agent_count) + 1, 0);
    std::deque<AgentId> queue(seeds_.begin(), seeds_.end());
    for (AgentId s : seeds_) reach[static_cast<size_t>(s)] = 1;
    while (!queue.empty()) {
        AgentId u = queue.front();
        queue.pop_front();
        for (auto [a, b] : links_) {
            if (a == u && !reach[static_cast<size_t>(b)]) {
                reach[static_cast<size_t>(b)] = 1;
                queue.push_back(b);
            }
        }
    }
    for (AgentId i = 1; i <= agent_count; ++i) {
        if (!reach[static_cast<size_t>(i)]) {
            throw SeedMismatch("agent " + std::to_string(i) + " is unreachable from the planner");
        }
    }

    is_tree_ = true;
    for (AgentId i = 1; i <= agent_count; ++i) {
        if (in_[static_cast<size_t>(i)].size() != 1) is_tree_ = false;
    }
}

InformationStructure orient(const UndirectedForest& forest, const Seeding& seeding) {
    const int I = forest.agent_count();
    if (static_cast<int>(seeding.seeds.size()) != forest.component_count()) {
        throw SeedMismatch("expected " + std::to_string(forest.component_count()) + " seeds, got " +
                           std::to_string(seeding.seeds.size()));
    }
    std::set<int> seeded_components;
    for (AgentId s : seeding.seeds) {
        if (s < 1 || s > I) throw SeedMismatch("seed " + std::to_string(s) + " out of range");
        if (!seeded_components.insert(forest.component_of(s)).second) {
            throw SeedMismatch("component of seed " + std::to_string(s) + " seeded twice");
        }
    }

    std::vector<std::pair<AgentId, AgentId>> links;
    std::vector<char> visited(static_cast<size_t>(I) + 1, 0);
    for (AgentId s : seeding.seeds) {
        links.emplace_back(kPlanner, s);
        visited[static_cast<size_t>(s)] = 1;
        std::deque<AgentId> queue{s};
        while (!queue.empty()) {
            AgentId u = queue.front();
            queue.pop_front();
            for (AgentId v : forest.neighbors(u)) {
                if (visited[static_cast<size_t>(v)]) continue;
                visited[static_cast<size_t>(v)] = 1;
                links.emplace_back(u, v);
                queue.push_back(v);
            }
        }
    }
    return InformationStructure(I, std::move(links));
}

InformationStructure orient_general(int agent_count,
                                    const std::vector<std::pair<AgentId, AgentId>>& edge_list,
                                    const std::vector<AgentId>& seeds) {
    if (seeds.empty()) throw SeedMismatch("at least one seed required");
    std::set<AgentId> seedset(seeds.begin(), seeds.end());
    if (seedset.size() != seeds.size()) throw SeedMismatch("duplicate seed");

    std::vector<std::vector<AgentId>> adj(static_cast<size_t>(agent_count) + 1);
    std::set<std::pair<AgentId, AgentId>> seen;
    for (auto [a, b] : edge_list) {
        if (a < 1 || a > agent_count || b < 1 || b > agent_count) {
            throw BadEdge("edge endpoint out of range: {" + std::to_string(a) + "," + std::to_string(b) + "}");
        }
        if (a == b) throw BadEdge("self-loop at agent " + std::to_string(a));
        if (!seen.insert(std::minmax(a, b)).second) throw BadEdge("duplicate edge");
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
    }

    // Layered BFS from all seeds at depth 1.
    std::vector<int> layer(static_cast<size_t>(agent_count) + 1, -1);
    std::deque<AgentId> queue;
    for (AgentId s : seeds) {
        if (s < 1 || s > agent_count) throw SeedMismatch("seed " + std::to_string(s) + " out of range");
        layer[static_cast<size_t>(s)] = 1;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        AgentId u = queue.front();
        queue.pop_front();
        for (AgentId v : adj[static_cast<size_t>(u)]) {
            if (layer[static_cast<size_t>(v)] < 0) {
                layer[static_cast<size_t>(v)] = layer[static_cast<size_t>(u)] + 1;
                queue.push_back(v);
            }
        }
    }

    std::vector<std::pair<AgentId, AgentId>> links;
    for (AgentId s : seeds) links.emplace_back(kPlanner, s);
    for (auto [a, b] : seen) {
        int la = layer[static_cast<size_t>(a)];
        int lb = layer[static_cast<size_t>(b)];
        if (la < 0 || lb < 0) continue;  // unreachable endpoints caught below
        if (la + 1 == lb) {
            links.emplace_back(a, b);
        } else if (lb + 1 == la) {
            links.emplace_back(b, a);
        } else if (la == lb) {
            links.emplace_back(a, b);
            links.emplace_back(b, a);
        }
    }
    return InformationStructure(agent_count, std::move(links));
}

namespace {

AgentId sole_parent(const InformationStructure& info, AgentId i) {
    const auto& in = info.in_neighbors(i);
    if (in.size() != 1) {
        throw NotATree("agent " + std::to_string(i) + " has " + std::to_string(in.size()) + " in-links");
    }
    return in.front();
}

}  // namespace

int depth(const InformationStructure& info, AgentId i) {
    if (i < 1 || i > info.agent_count()) throw BadIndex("agent " + std::to_string(i) + " out of range");
    int d = 0;
    AgentId cur = i;
    while (cur != kPlanner) {
        cur = sole_parent(info, cur);
        ++d;
        if (d > info.agent_count()) throw NotATree("in-link structure is not rooted at the planner");
    }
    return d;
}

std::vector<AgentId> path_from_root(const InformationStructure& info, AgentId i) {
    if (i < 1 || i > info.agent_count()) throw BadIndex("agent " + std::to_string(i) + " out of range");
    std::vector<AgentId> rev{i};
    AgentId cur = i;
    while (cur != kPlanner) {
        cur = sole_parent(info, cur);
        rev.push_back(cur);
        if (rev.size() > static_cast<size_t>(info.agent_count()) + 1) {
            throw NotATree("in-link structure is not rooted at the planner");
        }
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

std::vector<std::vector<AgentId>> root_to_leaf_paths(const InformationStructure& info) {
    std::vector<char> has_child(static_cast<size_t>(info.agent_count()) + 1, 0);
    for (auto [u, v] : info.links()) {
        if (u != kPlanner) has_child[static_cast<size_t>(u)] = 1;
    }
    std::vector<std::vector<AgentId>> paths;
    for (AgentId i = 1; i <= info.agent_count(); ++i) {
        if (has_child[static_cast<size_t>(i)]) continue;
        auto p = path_from_root(info, i);
        p.erase(p.begin());  // drop the planner
        paths.push_back(std::move(p));
    }
    return paths;
}

}  // namespace seedcast
