#pragma once
#include <string>

#include <json.hpp>

#include "serreq/grmod.hpp"

namespace serreq {

/// Module file format:
///   { "p": 32003, "nvars": 2, "gens": [0, -1], "rels": [["x0^2", "x1"], ...] }
/// gens lists the generator degrees of F0; each relation row gives one
/// polynomial string per generator.
GradedModulePresentation module_from_json(const nlohmann::json& j);
nlohmann::json module_to_json(const GradedModulePresentation& m);

GradedModulePresentation load_module(const std::string& path);
void save_module(const std::string& path, const GradedModulePresentation& m);

/// Map format: { "matrix": [["x0", "0"], ...] } plus embedded source/target
/// modules under "source" and "target".
GradedMap map_from_json(const nlohmann::json& j);
nlohmann::json map_to_json(const GradedMap& phi);

}  // namespace serreq
