// JSON dumps of a built CAD and of its projection layers.

#ifndef ECCAD_JSON_IO_HPP
#define ECCAD_JSON_IO_HPP

#include <json.hpp>
#include <string>
#include <vector>

#include "eccad/engine.hpp"

namespace eccad {

inline nlohmann::ordered_json poly_list_json(const PolySet& s, const std::vector<std::string>& names) {
  auto a = nlohmann::ordered_json::array();
  for (const auto& p : s) a.push_back(to_string(p, names));
  return a;
}

inline nlohmann::ordered_json coordinate_json(const SampleNode& n, const std::vector<std::string>& names) {
  if (!n.is_algebraic()) return n.rational()->get_str();
  auto [lo, hi] = n.isolating_interval();
  nlohmann::ordered_json j;
  j["poly"] = to_string(from_rpoly(n.def(), -1), names);
  j["root"] = n.root_index();
  j["lo"] = lo.get_str();
  j["hi"] = hi.get_str();
  return j;
}

inline nlohmann::ordered_json cell_json(const Cell& c, const std::vector<std::string>& names) {
  nlohmann::ordered_json j;
  j["index"] = c.index;
  auto s = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < c.sample.size(); ++i) s.push_back(coordinate_json(c.sample[i], names));
  j["sample"] = std::move(s);
  if (c.truth != Truth::Undetermined) j["truth"] = truth_text(c.truth);
  return j;
}

/// Whole CAD: run settings, then per level the lifting set and its cells.
inline nlohmann::ordered_json cad_json(const CadResult& R) {
  nlohmann::ordered_json j;
  j["variables"] = R.names;
  j["mode"] = mode_text(R.mode);
  j["designation"] = R.designation.label();
  auto levels = nlohmann::ordered_json::array();
  for (int k = 0; k < R.cad.n(); ++k) {
    nlohmann::ordered_json l;
    l["variable"] = R.names[k];
    l["lifting_set"] = poly_list_json(R.cad.lifting[k], R.names);
    l["restricted"] = static_cast<bool>(R.cad.restricted[k]);
    auto cells = nlohmann::ordered_json::array();
    for (const auto& c : R.cad.levels[k]) cells.push_back(cell_json(c, R.names));
    l["cells"] = std::move(cells);
    levels.push_back(std::move(l));
  }
  j["levels"] = std::move(levels);
  j["total_cells"] = R.cad.size();
  j["solution_cells"] = solution_cells(R.cad).size();
  return j;
}

/// Per level (top first): A_k, B_k, F_k, C_k and the operator that projected it.
inline nlohmann::ordered_json projection_json(const CadResult& R) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  const auto& L = R.layers;
  for (int k = static_cast<int>(R.names.size()) - 1; k >= 0; --k) {
    nlohmann::ordered_json l;
    l["variable"] = R.names[k];
    l["A"] = poly_list_json(L.A[k], R.names);
    l["B"] = poly_list_json(L.B[k], R.names);
    l["F"] = poly_list_json(L.F[k], R.names);
    l["C"] = poly_list_json(L.C[k], R.names);
    l["operator_used"] = op_text(L.op[k]);
    j.push_back(std::move(l));
  }
  return j;
}

}  // namespace eccad

#endif  // ECCAD_JSON_IO_HPP
