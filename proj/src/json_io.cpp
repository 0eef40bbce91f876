#include "singlat/json_io.hpp"

namespace singlat {

Json to_json(const Integer& z) { return z.str(); }

Json to_json(const Rational& q) {
  Json j;
  j["num"] = numerator(q).str();
  j["den"] = denominator(q).str();
  return j;
}

Json to_json(const Cycle& l) {
  Json coeffs = Json::array();
  for (Eigen::Index v = 0; v < l.size(); ++v) coeffs.push_back(to_json(l(v)));
  Json j;
  j["coefficients"] = std::move(coeffs);
  return j;
}

Json to_json(const ClassElement& h) {
  Json j = Json::array();
  for (const auto& c : h.coords) j.push_back(c.str());
  return j;
}

Json to_json(const ClassGroup& cg) {
  Json j;
  j["order"] = cg.order().str();
  Json f = Json::array();
  for (const auto& d : cg.invariant_factors()) f.push_back(d.str());
  j["factors"] = std::move(f);
  return j;
}

Json to_json(const ResolutionGraph& g) {
  Json vs = Json::array();
  for (const auto& v : g.vertices())
    vs.push_back(Json{{"id", v.id}, {"euler", std::to_string(v.euler)}, {"genus", std::to_string(v.genus)}});
  Json es = Json::array();
  for (const auto& e : g.edges()) es.push_back(Json::array({g.vertex(e.first).id, g.vertex(e.second).id}));
  Json j;
  j["vertices"] = std::move(vs);
  j["edges"] = std::move(es);
  return j;
}

Json to_json(const SingularityType& t, const ResolutionGraph& g) {
  Json j;
  j["kind"] = to_string(t.kind);
  j["rational"] = t.rational;
  j["elliptic"] = t.elliptic;
  j["minimally_elliptic"] = t.minimally_elliptic;
  j["minimal"] = t.minimal;
  j["minimal_good"] = t.minimal_good;
  j["verdict_confirmed"] = t.verdict_confirmed;
  j["numerically_gorenstein"] = t.numerically_gorenstein;
  j["rational_homology_sphere_link"] = t.tree_genus_zero;
  j["betti_number"] = std::to_string(g.betti_number());
  j["chi_zmin"] = to_json(t.chi_zmin);
  j["zmin"] = to_json(t.zmin);
  j["zk"] = to_json(t.zk);
  j["zk_equals_zmin"] = t.zk_equals_zmin;
  j["elliptic_cycle"] = t.elliptic_cycle ? to_json(*t.elliptic_cycle) : Json(nullptr);
  j["support_c_is_e"] = t.support_c_is_e ? Json(*t.support_c_is_e) : Json(nullptr);
  j["geometric_genus"] = t.geometric_genus ? Json(std::to_string(*t.geometric_genus)) : Json(nullptr);
  j["notes"] = t.notes;
  return j;
}

Json to_json(const ClassificationReport& r, const ResolutionGraph& g) {
  Json j;
  j["schema"] = schema_version;
  j["type"] = to_json(r.type, g);
  j["class_group"] = to_json(r.group);
  j["relation"] = to_string(r.relation);
  Json fams = Json::array();
  for (const auto& f : r.families) {
    Json fj;
    fj["label"] = f.label;
    fj["class"] = to_json(f.h);
    fj["chern_class"] = to_json(f.chern_class);
    fj["family_dim"] = std::to_string(f.family_dim);
    fj["exceptions"] = f.exceptions;
    fj["special"] = f.special ? Json(*f.special) : Json(nullptr);
    fj["flat"] = to_string(f.flat_count);
    fams.push_back(std::move(fj));
  }
  j["families"] = std::move(fams);
  Json rows = Json::array();
  for (const auto& row : r.vertices) {
    Json rj;
    rj["vertex"] = g.vertex(row.vertex).id;
    rj["multiplicity"] = row.multiplicity.str();
    rj["dual"] = to_json(row.dual);
    rj["dual_class"] = to_json(row.dual_class);
    rj["s"] = to_json(row.s);
    rj["s_is_dual"] = row.s_is_dual;
    rj["extended_rational"] = row.extended_rational ? Json(*row.extended_rational) : Json(nullptr);
    rj["extended_euler"] = row.extended_euler ? Json(std::to_string(*row.extended_euler)) : Json(nullptr);
    rj["special_full"] = row.special_full ? Json(*row.special_full) : Json(nullptr);
    rows.push_back(std::move(rj));
  }
  j["vertices"] = std::move(rows);
  j["notes"] = r.notes;
  return j;
}

Json to_json(const Transcript& t) {
  Json j;
  j["schema"] = schema_version;
  j["box_factor"] = std::to_string(t.box_factor);
  j["passed"] = t.passed();
  Json checks = Json::array();
  for (const auto& c : t.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = std::move(checks);
  return j;
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace singlat
