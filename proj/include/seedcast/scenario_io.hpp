#pragma once

#include <string>
#include <utility>
#include <vector>

#include "seedcast/backend.hpp"
#include "seedcast/info_structure.hpp"

namespace seedcast {

// On-disk scenario: agents, undirected edges, seeds, and parameters. rho and
// epsilon keep their source text so exact mode sees the written decimals.
struct Scenario {
    int agents = 0;
    std::vector<std::pair<AgentId, AgentId>> edges;
    std::vector<AgentId> seeds;
    std::string rho_text;
    std::string epsilon_text;
};

Scenario load_scenario(const std::string& path);
Scenario parse_scenario(const std::string& json_text);

// Forest validation plus orientation. With general=true cyclic networks and
// multiple seeds per component are allowed (layered orientation).
InformationStructure structure_of(const Scenario& scenario, bool general);

template <class P>
ModelParams<P> params_of(const Scenario& scenario);

template <>
ModelParams<double> params_of(const Scenario& scenario);
template <>
ModelParams<Rational> params_of(const Scenario& scenario);

}  // namespace seedcast
