#include "reticular/report_json.hpp"

namespace reticular {

namespace {

Json codim_value(const QuotientReport& q) {
  if (q.infinite) return "INFINITE";
  return q.codim;
}

Json tri_value(Tri t) {
  if (t == Tri::Indeterminate) return "INDETERMINATE";
  return t == Tri::True;
}

}  // namespace

Json to_json(const QuotientReport& q) {
  Json j;
  j["mode"] = to_string(q.mode);
  j["codim"] = codim_value(q);
  j["basis"] = q.basis_strings();
  j["l_used"] = q.l_used;
  j["stabilized"] = q.stabilized;
  return j;
}

Json to_json(const ClassifyResult& c) {
  Json j;
  j["class"] = c.verdict;
  if (c.cls) j["codim"] = c.cls->codim;
  else j["codim"] = nullptr;
  if (c.determinacy) j["determinacy"] = *c.determinacy;
  else j["determinacy"] = nullptr;
  if (c.cls) j["corank"] = c.cls->corank;
  j["residual"] = format_poly(c.split.residual);
  j["quad_rank"] = c.split.quad_rank;
  j["log"] = c.log;
  return j;
}

Json to_json(const VersalityReport& v) {
  Json j;
  j["versal"] = tri_value(v.versal);
  j["codim"] = codim_value(v.codim);
  if (v.determinacy) j["determinacy"] = *v.determinacy;
  else j["determinacy"] = nullptr;
  j["l_used"] = v.l_used;
  j["reasons"] = v.reasons;
  return j;
}

Json to_json(const StabilityReport& s) {
  Json j;
  j["versal"] = tri_value(s.versality.versal);
  j["stable"] = s.stable;
  j["codim"] = codim_value(s.versality.codim);
  j["class"] = s.class_label;
  if (s.versality.determinacy) j["determinacy"] = *s.versality.determinacy;
  else j["determinacy"] = nullptr;
  j["l_used"] = s.versality.l_used;
  j["reasons"] = s.reasons;
  return j;
}

Json to_json(const CatalogEntry& e) {
  Json j;
  j["key"] = e.key;
  j["kind"] = to_string(e.kind);
  j["mode"] = to_string(e.mode);
  j["r"] = e.r;
  j["k"] = e.k;
  j["n"] = e.n;
  j["family"] = format_poly(e.family.F());
  j["germ"] = format_poly(e.germ);
  j["class"] = e.class_label;
  j["printed_label"] = e.printed_label;
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

Json mesh_summary(const DiscriminantMesh& m) {
  Json j;
  j["kind"] = m.kind;
  j["ambient_dim"] = m.ambient_dim;
  j["coords"] = m.coord_names;
  j["res"] = m.res;
  Json region = Json::array();
  for (const auto& [lo, hi] : m.region) region.push_back({lo, hi});
  j["region"] = region;
  j["points"] = m.points.size();
  Json strata = Json::object();
  for (const auto& s : m.strata) strata[s] = m.count(s);
  j["strata"] = strata;
  j["tol_eq"] = m.tol_eq;
  j["tol_deg"] = m.tol_deg;
  j["dropped_seeds"] = m.dropped_seeds;
  j["rejected_points"] = m.rejected_points;
  return j;
}

}  // namespace reticular
