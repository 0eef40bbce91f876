#pragma once

// The intersection form on L_Q: pairings, dual cycles E_v^*, the canonical
// cycle Z_K and the Riemann-Roch expression chi.

#include "singlat/exact.hpp"
#include "singlat/graph.hpp"

namespace singlat {

/// A negative-definite resolution graph together with its intersection
/// matrix M, det(-M) and the dual basis. Construction throws
/// PreconditionError when M is not negative definite.
class Lattice {
 public:
  explicit Lattice(ResolutionGraph g);

  const ResolutionGraph& graph() const { return graph_; }
  Eigen::Index rank() const { return form_.rows(); }

  const IntMatrix& form() const { return form_; }
  const RatMatrix& rational_form() const { return rational_form_; }
  /// det(-M), always positive.
  const Integer& determinant() const { return determinant_; }
  /// Column v is E_v^* = the v-th column of (-M)^{-1}.
  const RatMatrix& dual_basis() const { return dual_basis_; }
  /// Right-hand side (Z_K, E_v) = E_v^2 + 2 - 2 g_v.
  const IntVector& adjunction() const { return adjunction_; }
  /// The canonical cycle Z_K (see canonical_cycle).
  const Cycle& canonical() const { return canonical_; }

 private:
  ResolutionGraph graph_;
  IntMatrix form_;
  RatMatrix rational_form_;
  Integer determinant_;
  RatMatrix dual_basis_;
  IntVector adjunction_;
  Cycle canonical_;
};

/// The vector ((l, E_v))_v = M l.
RatVector pairings(const Lattice& lat, const Cycle& l);

/// (a, b) = a^T M b.
Rational pairing(const Lattice& lat, const Cycle& a, const Cycle& b);

Cycle dual_cycle(const Lattice& lat, std::size_t v);

struct CanonicalCycle {
  Cycle cycle;
  bool integral = false;  // numerically Gorenstein
};

/// Z_K with (Z_K, E_v) = E_v^2 + 2 - 2 g_v for every v.
CanonicalCycle canonical_cycle(const Lattice& lat);

/// chi(l) = -(l, l - Z_K) / 2.
Rational chi(const Lattice& lat, const Cycle& l);

/// l in L' iff every pairing (l, E_v) is integral.
bool in_dual_lattice(const Lattice& lat, const Cycle& l);

}  // namespace singlat
