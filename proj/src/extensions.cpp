#include "seedcast/extensions.hpp"

namespace seedcast {

InformationStructure cycle_structure() {
    return orient_general(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}, {1});
}

InformationStructure two_seed_structure() {
    return orient_general(2, {{1, 2}}, {1, 2});
}

InformationStructure pair_structure(AgentId seed) {
    UndirectedForest forest = build_forest(2, {{1, 2}});
    return orient(forest, Seeding{{seed}});
}

}  // namespace seedcast
