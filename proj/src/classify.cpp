#include "singlat/classify.hpp"

#include "singlat/errors.hpp"
#include "singlat/extend.hpp"

namespace singlat {

std::string to_string(FlatCount f) {
  switch (f) {
    case FlatCount::all: return "all";
    case FlatCount::exactly_one: return "exactly-one";
    case FlatCount::zero_known: return "zero-known";
    case FlatCount::unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(Relation r) {
  return r == Relation::equality ? "equality" : "inclusion-only";
}

namespace {

void require_rational(const SingularityType& t) {
  if (!t.rational)
    throw PreconditionError("graph is not rational (Laufer criterion fails; type " + to_string(t.kind) + ")");
}

std::optional<std::size_t> dual_witness(const Lattice& lat, const Cycle& s, const Cycle& zmin) {
  for (Eigen::Index v = 0; v < lat.rank(); ++v)
    if (zmin(v) == 1 && s == lat.dual_basis().col(v)) return static_cast<std::size_t>(v);
  return std::nullopt;
}

}  // namespace

std::vector<SpecialnessRecord> special_full_sheaves(const Lattice& lat) {
  if (!laufer_rational(lat)) throw PreconditionError("specialness is defined here for rational graphs only");
  const Cycle zmin = fundamental_cycle(lat).end;
  const ClassGroup cg = class_group(lat);

  std::vector<SpecialnessRecord> out;
  for (const auto& h : cg.elements()) {
    if (h.is_zero()) continue;
    SpecialnessRecord r{h, s_h(lat, cg, h), 0, std::nullopt, 0, false};
    r.pairing_with_zmin = -pairing(lat, r.s, zmin);
    r.witness = dual_witness(lat, r.s, zmin);
    r.h1 = h1_rational(lat, r.s);
    r.special = r.pairing_with_zmin == 1;
    if (r.special != r.witness.has_value() || r.special != (r.h1 == 0))
      throw InternalError("specialness tests disagree for s_h = " + to_string(r.pairing_with_zmin));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VertexRow> wunram_table(const Lattice& lat) {
  const SingularityType type = classify_singularity(lat);
  require_rational(type);
  const ClassGroup cg = class_group(lat);

  std::vector<VertexRow> rows;
  for (std::size_t v = 0; v < lat.graph().size(); ++v) {
    const auto iv = static_cast<Eigen::Index>(v);
    VertexRow row;
    row.vertex = v;
    row.multiplicity = numerator(type.zmin(iv));
    row.dual = dual_cycle(lat, v);
    row.dual_class = class_of(cg, row.dual);
    row.s = s_h(lat, cg, row.dual_class);
    row.s_is_dual = row.s == row.dual;

    const auto ext = extend_graph(lat, v);
    row.extended_rational = ext.rational;
    row.extended_euler = ext.euler;
    row.special_full = !row.dual_class.is_zero() && row.s_is_dual && h1_rational(lat, row.dual) == 0;

    const bool m_one = row.multiplicity == 1;
    const bool third = row.s_is_dual && m_one;
    if (third != *row.special_full)
      throw InternalError("vertex '" + lat.graph().vertex(v).id + "': (s = E_v^* and m_v = 1) disagrees with specialness");
    if (type.minimal && (m_one != ext.rational || m_one != third))
      throw InternalError("vertex '" + lat.graph().vertex(v).id + "': minimal-resolution equivalences fail");
    rows.push_back(std::move(row));
  }
  return rows;
}

ClassificationReport full_sheaf_classes_rational(const Lattice& lat) {
  SingularityType type = classify_singularity(lat);
  require_rational(type);
  ClassGroup cg = class_group(lat);
  const auto specials = special_full_sheaves(lat);

  ClassificationReport report{std::move(type), cg, {}, wunram_table(lat), Relation::equality, {}};
  std::size_t next_special = 0;
  for (const auto& h : cg.elements()) {
    FullSheafFamily f;
    f.h = h;
    f.family_dim = 0;
    if (h.is_zero()) {
      f.label = "trivial";
      f.chern_class = zero_cycle(lat.rank());
      f.special = true;
    } else {
      const auto& rec = specials.at(next_special++);
      f.label = "s_h";
      f.chern_class = rec.s;
      f.special = rec.special;
    }
    report.families.push_back(std::move(f));
  }
  if (!report.type.minimal)
    report.notes.push_back("non-minimal resolution: special full sheaves are indexed by s_h = E_v^*, m_v = 1");
  report.notes.push_back("higher rank: each E_v^* also carries a special full sheaf of rank m_v");
  return flat_annotation(lat, std::move(report));
}

ClassificationReport full_sheaf_classes_min_elliptic(const Lattice& lat) {
  SingularityType type = classify_singularity(lat);
  if (!type.minimally_elliptic)
    throw PreconditionError("graph is not minimally elliptic (" + to_string(type.kind) +
                            (type.elliptic ? ", C = Z_K fails" : ", chi(Z_min) != 0") + ")");
  if (!type.support_c_is_e.value_or(false))
    throw PreconditionError("support of the minimally elliptic cycle is not all of E");

  ClassGroup cg = class_group(lat);
  ClassificationReport report{std::move(type), cg, {}, {}, Relation::equality, {}};
  const Cycle zmin = report.type.zmin;

  report.families.push_back({"trivial", zero_cycle(lat.rank()), cg.zero(), 0, {}, std::nullopt,
                             FlatCount::unknown});
  report.families.push_back({"Z_min", zmin, cg.zero(), 1,
                             {"natural bundle O(-Z_min) excluded (analytic point, symbolic)"},
                             std::nullopt, FlatCount::unknown});
  for (const auto& h : cg.elements()) {
    if (h.is_zero()) continue;
    report.families.push_back({"s_h", s_h(lat, cg, h), h, 1, {}, std::nullopt, FlatCount::unknown});
  }

  for (std::size_t v = 0; v < lat.graph().size(); ++v) {
    VertexRow row;
    row.vertex = v;
    row.multiplicity = numerator(zmin(static_cast<Eigen::Index>(v)));
    row.dual = dual_cycle(lat, v);
    row.dual_class = class_of(cg, row.dual);
    row.s = s_h(lat, cg, row.dual_class);
    row.s_is_dual = row.s == row.dual;
    report.vertices.push_back(std::move(row));
  }

  if (!lat.graph().all_genus_zero()) {
    report.relation = Relation::inclusion_only;
    report.notes.push_back("some E_v has positive genus: only the inclusion Full^1 in the union is asserted");
  }
  if (!report.type.minimal_good)
    report.notes.push_back("resolution is not minimal; |C| = E holds so the classification is applied");
  return flat_annotation(lat, std::move(report));
}

ClassificationReport flat_annotation(const Lattice& lat, ClassificationReport report) {
  const auto& t = report.type;
  if (t.rational) {
    for (auto& f : report.families) f.flat_count = FlatCount::all;
    return report;
  }
  if (t.kind == SingularityKind::cusp) {
    for (auto& f : report.families) f.flat_count = FlatCount::all;
    return report;
  }
  const bool qhs = lat.graph().is_tree() && lat.graph().all_genus_zero();
  for (auto& f : report.families) {
    if (t.minimally_elliptic && qhs && t.minimal_good) {
      if (f.label == "trivial") f.flat_count = FlatCount::all;
      else if (f.label == "Z_min") f.flat_count = FlatCount::zero_known;
      else f.flat_count = FlatCount::exactly_one;
    } else {
      f.flat_count = FlatCount::unknown;
    }
  }
  return report;
}

ClassificationReport classify(const Lattice& lat) {
  const SingularityType t = classify_singularity(lat);
  if (t.rational) return full_sheaf_classes_rational(lat);
  if (t.minimally_elliptic) return full_sheaf_classes_min_elliptic(lat);
  std::string why = t.elliptic ? "elliptic but C = Z_K fails (not minimally elliptic)"
                               : "not rational (Laufer criterion) and chi(Z_min) = " + to_string(t.chi_zmin);
  throw PreconditionError("classify covers rational and minimally elliptic graphs only: " + why);
}

}  // namespace singlat
