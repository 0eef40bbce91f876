#pragma once

// Rank-one full sheaves at the level of first Chern classes: the rational
// and minimally elliptic classifications, specialness, the per-vertex
// (Wunram) table and flatness annotations.

#include "singlat/form.hpp"
#include "singlat/lattice.hpp"
#include "singlat/laufer.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace singlat {

enum class FlatCount { all, exactly_one, zero_known, unknown };
enum class Relation { equality, inclusion_only };

std::string to_string(FlatCount f);
std::string to_string(Relation r);

/// One family of full sheaves sharing a first Chern class. The trivial
/// sheaf and, in the minimally elliptic case, Pic^{-Z_min} minus the
/// natural bundle are separate h = 0 families.
struct FullSheafFamily {
  std::string label;   // "trivial", "s_h" or "Z_min"
  Cycle chern_class;   // -c_1, anti-nef
  ClassElement h;
  int family_dim = 0;  // p_g
  std::vector<std::string> exceptions;
  std::optional<bool> special;  // rational graphs only
  FlatCount flat_count = FlatCount::unknown;
};

/// The three equivalent specialness tests for O(-s_h), h != 0.
struct SpecialnessRecord {
  ClassElement h;
  Cycle s;
  Rational pairing_with_zmin;  // (-s_h, Z_min)
  std::optional<std::size_t> witness;  // v with s_h = E_v^* and m_v = 1
  Integer h1;                          // h^1(O(s_h)) along the Laufer sequence
  bool special = false;
};

struct VertexRow {
  std::size_t vertex = 0;
  Integer multiplicity;  // m_v
  Cycle dual;            // E_v^*
  ClassElement dual_class;
  Cycle s;               // s_{[E_v^*]}
  bool s_is_dual = false;
  std::optional<bool> extended_rational;
  std::optional<std::int64_t> extended_euler;
  /// O(-E_v^*) is a non-trivial special full sheaf.
  std::optional<bool> special_full;
};

struct ClassificationReport {
  SingularityType type;
  ClassGroup group;
  std::vector<FullSheafFamily> families;
  std::vector<VertexRow> vertices;
  Relation relation = Relation::equality;
  std::vector<std::string> notes;
};

/// Specialness of every h != 0 on a rational graph. Raises InternalError if
/// the pairing, witness and h^1 tests disagree.
std::vector<SpecialnessRecord> special_full_sheaves(const Lattice& lat);

/// Per-vertex table on a rational graph, with the corollary equivalences
/// checked (all four on minimal resolutions, (3) <=> (4) otherwise).
std::vector<VertexRow> wunram_table(const Lattice& lat);

/// Full sheaves of a rational graph: exactly O(-s_h), h in H.
ClassificationReport full_sheaf_classes_rational(const Lattice& lat);

/// Full sheaves of a minimally elliptic graph with |C| = E.
ClassificationReport full_sheaf_classes_min_elliptic(const Lattice& lat);

/// Fill flat_count on every family.
ClassificationReport flat_annotation(const Lattice& lat, ClassificationReport report);

/// Dispatch on the singularity type; PreconditionError for graphs that are
/// neither rational nor minimally elliptic.
ClassificationReport classify(const Lattice& lat);

}  // namespace singlat
