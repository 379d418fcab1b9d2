#pragma once

#include <json.hpp>

#include "pathobj/moore_path.hpp"
#include "pathobj/simplex/presentation.hpp"
#include "pathobj/traversal.hpp"

namespace pathobj {

inline Simplex simplex_from_json(const PresentationPtr& p, const nlohmann::json& j) {
  return {p, cell_from_json(*p, j)};
}

inline nlohmann::ordered_json simplex_to_json(const Simplex& s) { return cell_to_json(*s.space(), s.cell()); }

// {"traversal": ..., "zetas": [...], "phis": [...]}; the face discipline is checked.
inline MoorePath<Simplex> path_from_json(const PresentationPtr& p, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("traversal") || !j.contains("zetas"))
    throw InputError("moore path: expected {\"traversal\", \"zetas\", \"phis\"}");
  std::vector<Simplex> z, ph;
  for (auto& e : j.at("zetas")) z.push_back(simplex_from_json(p, e));
  for (auto& e : j.value("phis", nlohmann::json::array())) ph.push_back(simplex_from_json(p, e));
  return MoorePath<Simplex>::make(traversal_from_json(j.at("traversal")), std::move(z), std::move(ph));
}

template <class S, class F>
nlohmann::ordered_json path_to_json(const MoorePath<S>& path, F&& element_to_json) {
  nlohmann::ordered_json z = nlohmann::ordered_json::array(), ph = nlohmann::ordered_json::array();
  for (auto& x : path.zetas()) z.push_back(element_to_json(x));
  for (auto& x : path.phis()) ph.push_back(element_to_json(x));
  return {{"traversal", traversal_to_json(path.traversal())}, {"zetas", z}, {"phis", ph}};
}

inline nlohmann::ordered_json path_to_json(const MoorePath<Simplex>& path) {
  return path_to_json(path, [](const Simplex& s) { return simplex_to_json(s); });
}

}  // namespace pathobj
