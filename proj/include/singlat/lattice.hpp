#pragma once

// L subset L' and the finite group H = L'/L in Smith-normal-form
// coordinates, reduced representatives r_h, and the Lipman cone.

#include "singlat/exact.hpp"
#include "singlat/form.hpp"

#include <compare>
#include <vector>

namespace singlat {

/// An element of H as residues coords[i] in [0, d_i).
struct ClassElement {
  std::vector<Integer> coords;

  bool is_zero() const;
  friend bool operator==(const ClassElement&, const ClassElement&) = default;
  friend bool operator<(const ClassElement& a, const ClassElement& b) { return a.coords < b.coords; }
};

class ClassGroup {
 public:
  /// |H| = det(-M).
  const Integer& order() const { return order_; }
  /// d_1 | d_2 | ..., each > 1. Empty for the trivial group.
  const std::vector<Integer>& invariant_factors() const { return factors_; }
  /// Cycles in L' whose classes are the unit vectors of the coordinates.
  const std::vector<Cycle>& generators() const { return generators_; }
  /// Number of vertices of the underlying graph.
  Eigen::Index rank() const { return form_.rows(); }

  ClassElement zero() const;
  ClassElement add(const ClassElement& a, const ClassElement& b) const;
  ClassElement negate(const ClassElement& a) const;
  bool contains(const ClassElement& h) const;

  /// Every element, in lexicographic order of the coordinate tuples.
  std::vector<ClassElement> elements() const;

 private:
  friend ClassGroup class_group(const Lattice&);
  friend ClassElement class_of(const ClassGroup&, const Cycle&);

  IntMatrix form_;
  Integer order_;
  std::vector<Integer> factors_;
  IntMatrix projection_;  // one row of the Smith left factor per invariant factor
  std::vector<Cycle> generators_;
};

ClassGroup class_group(const Lattice& lat);

/// [l] for l in L'; throws DomainError naming a non-integral pairing.
ClassElement class_of(const ClassGroup& cg, const Cycle& l);

/// r_h: the representative of h with every E-coefficient in [0, 1).
Cycle reduced_rep(const ClassGroup& cg, const ClassElement& h);

/// Anti-nef: (l, E_v) <= 0 for every v.
bool in_lipman_cone(const Lattice& lat, const Cycle& l);

/// Coefficient-wise minimum.
Cycle cycle_min(const Cycle& a, const Cycle& b);

}  // namespace singlat
