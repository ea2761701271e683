#include "serreq/json_io.hpp"

#include <fstream>

namespace serreq {

namespace {

std::vector<FreeElement> rows_from_json(const Ring& R, const nlohmann::json& rows,
                                        std::size_t width, const char* what) {
  std::vector<FreeElement> out;
  if (!rows.is_array()) throw ParseError(std::string(what) + " must be an array");
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != width)
      throw ParseError(std::string(what) + " row has wrong length");
    std::vector<GradedPolynomial> comps;
    for (const auto& cell : row) {
      if (!cell.is_string()) throw ParseError(std::string(what) + " entries must be strings");
      try {
        comps.push_back(parse_poly(R, cell.get<std::string>()));
      } catch (const InhomogeneousInput& e) {
        throw ParseError(std::string(what) + ": " + e.what());
      }
    }
    out.push_back(FreeElement(std::move(comps)));
  }
  return out;
}

nlohmann::json rows_to_json(const std::vector<FreeElement>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json jrow = nlohmann::json::array();
    for (const auto& comp : row.components()) jrow.push_back(format_poly(comp));
    out.push_back(std::move(jrow));
  }
  return out;
}

}  // namespace

GradedModulePresentation module_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("module document must be a JSON object");
  if (!j.contains("nvars") || !j["nvars"].is_number_integer())
    throw ParseError("module needs an integer \"nvars\"");
  std::uint32_t p = 32003;
  if (j.contains("p")) {
    if (!j["p"].is_number_unsigned() && !j["p"].is_number_integer())
      throw ParseError("\"p\" must be a positive integer");
    long long raw = j["p"].get<long long>();
    if (raw < 2) throw ParseError("\"p\" must be a prime >= 2");
    p = static_cast<std::uint32_t>(raw);
  }
  int nvars = j["nvars"].get<int>();
  if (nvars < 1) throw ParseError("\"nvars\" must be positive");
  Ring R{PrimeField(p), nvars};

  if (!j.contains("gens") || !j["gens"].is_array())
    throw ParseError("module needs an array \"gens\" of generator degrees");
  std::vector<int> gens;
  for (const auto& g : j["gens"]) {
    if (!g.is_number_integer()) throw ParseError("\"gens\" entries must be integers");
    gens.push_back(g.get<int>());
  }
  FreeModule f0{std::move(gens)};

  std::vector<FreeElement> rels;
  if (j.contains("rels"))
    rels = rows_from_json(R, j["rels"], static_cast<std::size_t>(f0.rank()), "\"rels\"");
  try {
    return GradedModulePresentation(R, std::move(f0), std::move(rels));
  } catch (const InhomogeneousInput& e) {
    throw ParseError(std::string("relations are not homogeneous: ") + e.what());
  }
}

nlohmann::json module_to_json(const GradedModulePresentation& m) {
  nlohmann::json j;
  j["p"] = m.ring().field.characteristic();
  j["nvars"] = m.ring().nvars;
  j["gens"] = m.f0().gen_degrees;
  j["rels"] = rows_to_json(m.relations());
  return j;
}

GradedModulePresentation load_module(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open module file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return module_from_json(j);
}

void save_module(const std::string& path, const GradedModulePresentation& m) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write module file: " + path);
  out << module_to_json(m).dump(2) << "\n";
}

GradedMap map_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("source") || !j.contains("target") ||
      !j.contains("matrix"))
    throw ParseError("map document needs \"source\", \"target\", \"matrix\"");
  GradedModulePresentation source = module_from_json(j["source"]);
  GradedModulePresentation target = module_from_json(j["target"]);
  std::vector<FreeElement> rows = rows_from_json(
      source.ring(), j["matrix"], static_cast<std::size_t>(target.f0().rank()),
      "\"matrix\"");
  if (rows.size() != static_cast<std::size_t>(source.f0().rank()))
    throw ParseError("\"matrix\" must have one row per source generator");
  try {
    return GradedMap(std::move(source), std::move(target), std::move(rows));
  } catch (const IllFormedMap& e) {
    throw ParseError(std::string("matrix does not define a map: ") + e.what());
  }
}

nlohmann::json map_to_json(const GradedMap& phi) {
  nlohmann::json j;
  j["source"] = module_to_json(phi.source());
  j["target"] = module_to_json(phi.target());
  j["matrix"] = rows_to_json(phi.matrix());
  return j;
}

}  // namespace serreq
