#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "seedcast/enumerate.hpp"
#include "seedcast/errors.hpp"
#include "seedcast/forest.hpp"
#include "seedcast/info_structure.hpp"

using namespace seedcast;

namespace {

std::set<std::pair<AgentId, AgentId>> link_set(const InformationStructure& info) {
    return {info.links().begin(), info.links().end()};
}

// Undirected edges recovered from the oriented links (planner links dropped).
std::set<std::pair<AgentId, AgentId>> undirected_edges(const InformationStructure& info) {
    std::set<std::pair<AgentId, AgentId>> out;
    for (auto [u, v] : info.links()) {
        if (u != kPlanner) out.insert(std::minmax(u, v));
    }
    return out;
}

}  // namespace

TEST_CASE("build_forest validates edge lists") {
    UndirectedForest line = build_forest(3, {{1, 2}, {2, 3}});
    CHECK(line.component_count() == 1);
    CHECK(line.agent_count() == 3);

    UndirectedForest trivial = build_forest(1, {});
    CHECK(trivial.component_count() == 1);

    CHECK_THROWS_AS(build_forest(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}), CycleDetected);
    CHECK_THROWS_AS(build_forest(3, {{1, 1}}), BadEdge);
    CHECK_THROWS_AS(build_forest(3, {{1, 2}, {2, 1}}), BadEdge);
    CHECK_THROWS_AS(build_forest(3, {{1, 4}}), BadEdge);
    CHECK_THROWS_AS(build_forest(3, {{0, 1}}), BadEdge);
}

TEST_CASE("orient produces the directed information structure") {
    UndirectedForest line = build_forest(3, {{1, 2}, {2, 3}});

    auto seeded_at_1 = orient(line, Seeding{{1}});
    CHECK(link_set(seeded_at_1) == std::set<std::pair<AgentId, AgentId>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(seeded_at_1.is_tree());

    auto seeded_at_2 = orient(line, Seeding{{2}});
    CHECK(link_set(seeded_at_2) == std::set<std::pair<AgentId, AgentId>>{{0, 2}, {2, 1}, {2, 3}});

    UndirectedForest isolated = build_forest(3, {});
    auto broadcast = orient(isolated, Seeding{{1, 2, 3}});
    CHECK(link_set(broadcast) == std::set<std::pair<AgentId, AgentId>>{{0, 1}, {0, 2}, {0, 3}});

    CHECK_THROWS_AS(orient(line, Seeding{{1, 3}}), SeedMismatch);
    CHECK_THROWS_AS(orient(isolated, Seeding{{1, 2}}), SeedMismatch);
    CHECK_THROWS_AS(orient(isolated, Seeding{{1, 1, 2}}), SeedMismatch);
}

TEST_CASE("depth and path queries") {
    UndirectedForest line = build_forest(3, {{1, 2}, {2, 3}});
    auto s1 = orient(line, Seeding{{1}});
    auto s2 = orient(line, Seeding{{2}});

    CHECK(depth(s1, 3) == 3);
    CHECK(depth(s2, 3) == 2);
    CHECK(path_from_root(s1, 3) == std::vector<AgentId>{0, 1, 2, 3});

    UndirectedForest star = build_forest(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
    auto hub = orient(star, Seeding{{1}});
    CHECK(path_from_root(hub, 5) == std::vector<AgentId>{0, 1, 5});
    CHECK(path_from_root(hub, 1) == std::vector<AgentId>{0, 1});

    UndirectedForest isolated = build_forest(3, {});
    auto broadcast = orient(isolated, Seeding{{1, 2, 3}});
    for (AgentId i = 1; i <= 3; ++i) CHECK(depth(broadcast, i) == 1);

    auto cycle = orient_general(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}, {1});
    CHECK_FALSE(cycle.is_tree());
    CHECK_THROWS_AS(depth(cycle, 3), NotATree);
    CHECK_THROWS_AS(path_from_root(cycle, 3), NotATree);
}

TEST_CASE("orientation invariants over all seeded trees") {
    for (int agents : {1, 2, 3, 4, 5}) {
        enumerate_seeded_trees(agents, [&](const UndirectedForest& forest, const Seeding& seeding) {
            auto info = orient(forest, seeding);
            CHECK(static_cast<int>(info.links().size()) == agents);
            for (AgentId i = 1; i <= agents; ++i) {
                CHECK(static_cast<int>(path_from_root(info, i).size()) == depth(info, i) + 1);
            }
            // Re-orienting with any other seed keeps the undirected edges.
            auto base_edges = undirected_edges(info);
            for (AgentId other = 1; other <= agents; ++other) {
                auto again = orient(forest, Seeding{{other}});
                CHECK(undirected_edges(again) == base_edges);
            }
        });
    }
}

TEST_CASE("labeled tree enumeration matches the closed-form count") {
    // Cayley: I^(I-2) labeled trees, each with I seeds.
    int pairs3 = 0;
    enumerate_seeded_trees(3, [&](const UndirectedForest&, const Seeding&) { ++pairs3; });
    CHECK(pairs3 == 9);

    int pairs4 = 0;
    enumerate_seeded_trees(4, [&](const UndirectedForest&, const Seeding&) { ++pairs4; });
    CHECK(pairs4 == 64);

    int pairs1 = 0;
    enumerate_seeded_trees(1, [&](const UndirectedForest&, const Seeding&) { ++pairs1; });
    CHECK(pairs1 == 1);

    CHECK(all_labeled_trees(5).size() == 125);

    // Distinctness of the decoded trees.
    std::set<std::set<std::pair<AgentId, AgentId>>> distinct;
    for (const auto& edges : all_labeled_trees(4)) {
        std::set<std::pair<AgentId, AgentId>> canon;
        for (auto [a, b] : edges) canon.insert(std::minmax(a, b));
        distinct.insert(canon);
    }
    CHECK(distinct.size() == 16);

    CHECK_THROWS_AS(enumerate_seeded_trees(7, [](const UndirectedForest&, const Seeding&) {}), CapExceeded);
}

TEST_CASE("multi-tree forest sampling") {
    std::mt19937_64 rng(7);
    for (int agents : {2, 4, 6}) {
        for (int trial = 0; trial < 25; ++trial) {
            auto [forest, seeding] = sample_multi_tree_forest(agents, rng);
            CHECK(forest.component_count() >= 2);
            CHECK(static_cast<int>(seeding.seeds.size()) == forest.component_count());
            auto info = orient(forest, seeding);  // validates seeds sit in their components
            CHECK(info.is_tree());
        }
    }
}

TEST_CASE("general orientation layers the cycle and the two-seed pair") {
    auto cycle = orient_general(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}, {1});
    CHECK(link_set(cycle) == std::set<std::pair<AgentId, AgentId>>{{0, 1}, {1, 2}, {1, 4}, {2, 3}, {4, 3}});

    auto two_seed = orient_general(2, {{1, 2}}, {1, 2});
    CHECK(link_set(two_seed) == std::set<std::pair<AgentId, AgentId>>{{0, 1}, {0, 2}, {1, 2}, {2, 1}});

    CHECK_THROWS_AS(orient_general(3, {{1, 2}}, {1}), SeedMismatch);  // agent 3 unreachable
}
