#include "singlat/lattice.hpp"

#include "singlat/errors.hpp"
#include "singlat/linalg.hpp"

namespace singlat {

namespace {

Integer mod_positive(const Integer& a, const Integer& d) {
  Integer r = a % d;
  if (r < 0) r += d;
  return r;
}

}  // namespace

bool ClassElement::is_zero() const {
  for (const auto& c : coords)
    if (c != 0) return false;
  return true;
}

ClassElement ClassGroup::zero() const {
  return ClassElement{std::vector<Integer>(factors_.size(), Integer(0))};
}

bool ClassGroup::contains(const ClassElement& h) const {
  if (h.coords.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (h.coords[i] < 0 || h.coords[i] >= factors_[i]) return false;
  return true;
}

ClassElement ClassGroup::add(const ClassElement& a, const ClassElement& b) const {
  if (!contains(a) || !contains(b)) throw DomainError("class element does not belong to this group");
  ClassElement out = zero();
  for (std::size_t i = 0; i < factors_.size(); ++i)
    out.coords[i] = mod_positive(a.coords[i] + b.coords[i], factors_[i]);
  return out;
}

ClassElement ClassGroup::negate(const ClassElement& a) const {
  if (!contains(a)) throw DomainError("class element does not belong to this group");
  ClassElement out = zero();
  for (std::size_t i = 0; i < factors_.size(); ++i)
    out.coords[i] = mod_positive(-a.coords[i], factors_[i]);
  return out;
}

std::vector<ClassElement> ClassGroup::elements() const {
  std::vector<ClassElement> out;
  ClassElement h = zero();
  for (;;) {
    out.push_back(h);
    std::size_t i = factors_.size();
    while (i > 0) {
      --i;
      h.coords[i] += 1;
      if (h.coords[i] < factors_[i]) break;
      h.coords[i] = 0;
      if (i == 0) return out;
    }
    if (factors_.empty()) return out;
  }
}

ClassGroup class_group(const Lattice& lat) {
  // Pairing vectors p = M l identify L' with Z^n and L with M Z^n, so
  // H = coker M. With U M V = D the map p -> U p (mod d_i) is an isomorphism.
  const SmithForm snf = smith_normal_form(lat.form());
  ClassGroup cg;
  cg.form_ = lat.form();
  cg.order_ = lat.determinant();

  std::vector<Eigen::Index> rows;
  for (Eigen::Index i = 0; i < snf.diagonal.size(); ++i) {
    if (snf.diagonal(i) == 0) throw InternalError("Smith form of a definite matrix has a zero");
    if (snf.diagonal(i) != 1) rows.push_back(i);
  }
  cg.projection_.resize(static_cast<Eigen::Index>(rows.size()), lat.rank());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto i = rows[k];
    cg.factors_.push_back(snf.diagonal(i));
    cg.projection_.row(static_cast<Eigen::Index>(k)) = snf.left.row(i);
    // p = U^{-1} e_i, l = M^{-1} p = -(-M)^{-1} p
    const RatVector p = snf.left_inverse.col(i).cast<Rational>();
    cg.generators_.push_back(-(lat.dual_basis() * p));
  }

  Integer product = 1;
  for (const auto& d : cg.factors_) product *= d;
  if (product != cg.order_)
    throw InternalError("invariant factors multiply to " + product.str() + ", det(-M) = " +
                        cg.order_.str());
  return cg;
}

ClassElement class_of(const ClassGroup& cg, const Cycle& l) {
  if (l.size() != cg.form_.rows())
    throw DomainError("cycle size does not match the graph of this class group");
  const RatVector p = cg.form_.cast<Rational>() * l;
  IntVector ip(p.size());
  for (Eigen::Index v = 0; v < p.size(); ++v) {
    if (!is_integral(p(v)))
      throw DomainError("cycle is not in L': pairing with vertex #" + std::to_string(v) + " is " +
                        to_string(p(v)));
    ip(v) = numerator(p(v));
  }
  ClassElement h = cg.zero();
  for (std::size_t k = 0; k < cg.factors_.size(); ++k) {
    const Integer c = cg.projection_.row(static_cast<Eigen::Index>(k)).dot(ip);
    h.coords[k] = mod_positive(c, cg.factors_[k]);
  }
  return h;
}

Cycle reduced_rep(const ClassGroup& cg, const ClassElement& h) {
  if (!cg.contains(h)) throw DomainError("class element does not belong to this group");
  Cycle l = zero_cycle(cg.rank());
  for (std::size_t k = 0; k < h.coords.size(); ++k)
    l += Rational(h.coords[k]) * cg.generators()[k];
  for (Eigen::Index v = 0; v < l.size(); ++v) l(v) = fractional_part(l(v));
  return l;
}

bool in_lipman_cone(const Lattice& lat, const Cycle& l) {
  const RatVector p = pairings(lat, l);
  for (Eigen::Index v = 0; v < p.size(); ++v)
    if (p(v) > 0) return false;
  return true;
}

Cycle cycle_min(const Cycle& a, const Cycle& b) {
  if (a.size() != b.size()) throw DomainError("cycle_min on cycles of different graphs");
  Cycle out(a.size());
  for (Eigen::Index v = 0; v < a.size(); ++v) out(v) = a(v) < b(v) ? a(v) : b(v);
  return out;
}

}  // namespace singlat
