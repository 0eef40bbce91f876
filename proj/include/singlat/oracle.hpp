#pragma once

// Brute-force verifiers. Everything here enumerates integral coefficient
// boxes with machine integers and shares no code path with the Laufer
// machinery it checks.

#include "singlat/form.hpp"
#include "singlat/lattice.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace singlat {

/// Per-vertex inclusive upper bounds on the integral part of a cycle.
struct Box {
  std::vector<std::int64_t> upper;

  /// Number of lattice points, saturating at INT64_MAX.
  std::int64_t volume() const;
};

inline constexpr int default_box_factor = 3;
inline constexpr std::size_t verify_vertex_limit = 8;

/// ceil(B * Z_min).
Box default_box(const Lattice& lat, int factor = default_box_factor);

/// Widen a box so it also contains the given cycle.
Box widen(Box box, const Cycle& l);

/// Coefficient-wise minimum of all anti-nef cycles r_h + n with
/// 0 <= n <= box; absent if there are none.
std::optional<Cycle> brute_lipman_min(const Lattice& lat, const ClassGroup& cg, const ClassElement& h,
                                      const Box& box);

struct ChiMinimum {
  std::int64_t value = 0;
  IntVector witness;  // first minimizer in lexicographic order
};

/// min chi over integral 0 < l <= box; absent if the box is {0}.
std::optional<ChiMinimum> brute_min_chi(const Lattice& lat, const Box& box);

/// Minimal nonzero anti-nef integral cycle inside the box.
std::optional<IntVector> brute_fundamental_cycle(const Lattice& lat, const Box& box);

struct IntegralMinima {
  std::optional<ChiMinimum> chi;
  std::optional<IntVector> fundamental_cycle;
};

/// Both of the above in a single pass over the box.
IntegralMinima brute_integral_minima(const Lattice& lat, const Box& box);

/// det by Laplace expansion along the first row.
Integer brute_determinant(const IntMatrix& m);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;  // witness on failure
};

struct Transcript {
  int box_factor = default_box_factor;
  std::vector<Check> checks;

  bool passed() const;
  std::string to_text() const;
};

/// Every cross-check across modules. Throws PreconditionError before
/// running anything if the graph is not negative definite or has more than
/// verify_vertex_limit vertices.
Transcript verify_all(const ResolutionGraph& g, int box_factor = default_box_factor);

}  // namespace singlat
