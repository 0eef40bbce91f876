#include "singlat/form.hpp"

#include "singlat/errors.hpp"
#include "singlat/linalg.hpp"

namespace singlat {

Lattice::Lattice(ResolutionGraph g) : graph_(std::move(g)), form_(intersection_matrix(graph_)) {
  if (!is_negative_definite(form_))
    throw PreconditionError("intersection matrix is not negative definite");
  rational_form_ = form_.cast<Rational>();
  determinant_ = singlat::determinant(IntMatrix(-form_));
  auto inv = inverse(IntMatrix(-form_));
  if (!inv) throw InternalError("negative-definite intersection matrix reported singular");
  dual_basis_ = std::move(*inv);
  adjunction_.resize(rank());
  for (Eigen::Index v = 0; v < rank(); ++v) {
    const auto& vx = graph_.vertex(static_cast<std::size_t>(v));
    adjunction_(v) = Integer(vx.euler + 2 - 2 * vx.genus);
  }
  // M z = t  <=>  z = -(-M)^{-1} t
  canonical_ = -(dual_basis_ * adjunction_.cast<Rational>());
}

namespace {

void require_size(const Lattice& lat, const Cycle& l) {
  if (l.size() != lat.rank())
    throw DomainError("cycle has " + std::to_string(l.size()) + " coefficients, graph has " +
                      std::to_string(lat.rank()) + " vertices");
}

}  // namespace

RatVector pairings(const Lattice& lat, const Cycle& l) {
  require_size(lat, l);
  return lat.rational_form() * l;
}

Rational pairing(const Lattice& lat, const Cycle& a, const Cycle& b) {
  require_size(lat, a);
  return a.dot(pairings(lat, b));
}

Cycle dual_cycle(const Lattice& lat, std::size_t v) {
  if (v >= static_cast<std::size_t>(lat.rank()))
    throw DomainError("vertex index " + std::to_string(v) + " outside the graph");
  return lat.dual_basis().col(static_cast<Eigen::Index>(v));
}

CanonicalCycle canonical_cycle(const Lattice& lat) {
  return {lat.canonical(), is_integral(lat.canonical())};
}

Rational chi(const Lattice& lat, const Cycle& l) {
  require_size(lat, l);
  return -pairing(lat, l, Cycle(l - lat.canonical())) / 2;
}

bool in_dual_lattice(const Lattice& lat, const Cycle& l) { return is_integral(pairings(lat, l)); }

}  // namespace singlat
