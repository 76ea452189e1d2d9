#include "seedcast/scenario_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "seedcast/errors.hpp"
#include "seedcast/forest.hpp"

namespace seedcast {

namespace {

// Keeps the decimal the author wrote: numbers round-trip through the shortest
// representation, strings pass through verbatim.
std::string number_text(const nlohmann::json& j, const char* field) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number()) return j.dump();
    throw BadParams(std::string(field) + " must be a number or a numeric string");
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw BadParams(std::string("scenario is not valid JSON: ") + e.what());
    }
    Scenario s;
    if (!j.contains("agents") || !j["agents"].is_number_integer()) {
        throw BadParams("scenario needs an integer 'agents' field");
    }
    s.agents = j["agents"].get<int>();
    if (j.contains("edges")) {
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2) throw BadEdge("edges must be [i, j] pairs");
            s.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    }
    if (!j.contains("seeds") || !j["seeds"].is_array()) throw BadParams("scenario needs a 'seeds' array");
    for (const auto& v : j["seeds"]) s.seeds.push_back(v.get<int>());
    s.rho_text = j.contains("rho") ? number_text(j["rho"], "rho") : "0.5";
    s.epsilon_text = j.contains("epsilon") ? number_text(j["epsilon"], "epsilon") : "0.1";
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadParams("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

InformationStructure structure_of(const Scenario& scenario, bool general) {
    if (general) {
        return orient_general(scenario.agents, scenario.edges, scenario.seeds);
    }
    UndirectedForest forest = build_forest(scenario.agents, scenario.edges);
    return orient(forest, Seeding{scenario.seeds});
}

template <>
ModelParams<double> params_of(const Scenario& scenario) {
    ModelParams<double> p{to_double(parse_rational(scenario.rho_text)),
                          to_double(parse_rational(scenario.epsilon_text))};
    p.validate();
    return p;
}

template <>
ModelParams<Rational> params_of(const Scenario& scenario) {
    ModelParams<Rational> p{parse_rational(scenario.rho_text), parse_rational(scenario.epsilon_text)};
    p.validate();
    return p;
}

}  // namespace seedcast
