#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "analysis.hpp"
#include "constructions.hpp"
#include "errors.hpp"
#include "family.hpp"
#include "projective.hpp"
#include "search.hpp"

namespace ratiolab {

using Json = nlohmann::json;

// Interchange schema: {"n": int, "r": int, "sets": [[int, ...], ...]} with
// each set ascending and the list in canonical order.
inline Json family_to_json(const Family& f) {
  Json sets = Json::array();
  for (const VertexSet& s : f.sets) sets.push_back(s.elements());
  return Json{{"n", f.n}, {"r", f.r}, {"sets", std::move(sets)}};
}

inline Family family_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("r") || !j.contains("sets") ||
      !j["n"].is_number_integer() || !j["r"].is_number_integer() || !j["sets"].is_array())
    fail(Errc::BadParameters, "family JSON must be {\"n\": int, \"r\": int, \"sets\": [[int,...],...]}");
  std::vector<std::vector<int>> sets;
  for (const Json& s : j["sets"]) {
    if (!s.is_array()) fail(Errc::BadParameters, "family JSON: each set must be an array");
    std::vector<int> elems;
    for (const Json& v : s) {
      if (!v.is_number_integer()) fail(Errc::BadParameters, "family JSON: elements must be integers");
      elems.push_back(v.get<int>());
    }
    sets.push_back(std::move(elems));
  }
  return make_family(j["n"].get<int>(), j["r"].get<int>(), sets);
}

inline std::string family_to_string(const Family& f) { return family_to_json(f).dump(); }

inline void save_family(const Family& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::BadParameters, "cannot open " + path + " for writing");
  out << family_to_json(f).dump(2) << "\n";
}

inline Family load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::BadParameters, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    fail(Errc::BadParameters, std::string("invalid JSON: ") + e.what());
  }
  return family_from_json(j);
}

inline Json to_json(const DegreeProfile& p) {
  Json j;
  j["degrees"] = p.degrees;
  j["delta_max"] = p.delta_max;
  j["delta_min"] = p.delta_min;
  j["ratio"] = p.ratio ? Json(p.ratio->to_string()) : Json(nullptr);
  return j;
}

inline Json to_json(const BoundsReport& b) {
  Json j;
  j["n"] = b.n;
  j["r"] = b.r;
  j["m_lower"] = b.m_lower.to_string();
  j["M_upper"] = b.M_upper.to_string();
  if (b.M_lower_thm1ii) j["M_lower_thm1ii"] = b.M_lower_thm1ii->to_string();
  return j;
}

inline Json to_json(const BlokhuisReport& r) {
  Json j;
  j["p"] = r.p;
  j["bound"] = r.bound;
  j["checked"] = r.checked;
  j["blocking_sets"] = r.blocking_sets;
  j["violations"] = r.violations;
  return j;
}

inline Json sets_to_json(const Family& f) {
  Json sets = Json::array();
  for (const VertexSet& s : f.sets) sets.push_back(s.elements());
  return sets;
}

inline Json to_json(const ExtremalReport& r) {
  Json j;
  j["n"] = r.n;
  j["r"] = r.r;
  j["require_cover"] = r.require_cover;
  j["families"] = r.family_count;
  j["m"] = r.m.to_string();
  j["m_witness"] = sets_to_json(r.m_witness);
  j["M"] = r.M.to_string();
  j["M_witness"] = sets_to_json(r.M_witness);
  return j;
}

inline Json to_json(const PartitionReport& p) {
  Json j;
  j["f1"] = sets_to_json(p.f1);
  j["f2"] = sets_to_json(p.f2);
  Json removable = Json::array();
  for (std::size_t i = 0; i < p.f1.sets.size(); ++i)
    removable.push_back(Json{{"set", p.f1.sets[i].elements()}, {"g", p.removable[i]}});
  j["removable"] = std::move(removable);
  j["dj"] = p.dj;
  return j;
}

inline Json to_json(const FMapReport& r) {
  Json j;
  j["tau"] = r.tau;
  j["y"] = r.y;
  j["max_preimage"] = r.max_preimage;
  j["bound"] = r.bound;
  j["ok"] = r.ok;
  return j;
}

inline Json to_json(const MatchResult& m) {
  Json j;
  j["k"] = m.params.k;
  j["p"] = m.params.p;
  j["s"] = m.params.s;
  j["n_achieved"] = m.n_achieved;
  j["r_achieved"] = m.r_achieved;
  j["deviation"] = m.deviation.to_string();
  return j;
}

}  // namespace ratiolab
