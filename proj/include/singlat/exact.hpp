#pragma once

// Exact scalar types and the Eigen aliases used throughout the library.
//
// Eigen 3.4 gives dense expressions a `const_iterator` member, which Boost
// 1.74's byte-container detection mistakes for a range and instantiates
// eagerly. The constrained specialization below opts every Eigen type out of
// that path; it must be seen before any Boost.Multiprecision backend header.

#include <Eigen/Core>
#include <boost/multiprecision/traits/is_byte_container.hpp>

#include <type_traits>

namespace singlat::detail {
template <class D>
std::true_type eigen_probe(const Eigen::EigenBase<D>*);
std::false_type eigen_probe(...);
template <class C>
concept eigen_type = decltype(eigen_probe(static_cast<const C*>(nullptr)))::value;
}  // namespace singlat::detail

namespace boost::multiprecision::detail {
template <class C>
  requires singlat::detail::eigen_type<C>
struct is_byte_container_imp<C, true> : boost::false_type {};
}  // namespace boost::multiprecision::detail

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <string>

namespace singlat {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

/// A rational cycle in the basis {E_v} of exceptional curves, indexed in
/// vertex declaration order.
using Cycle = RatVector;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Largest integer <= q.
inline Integer floor(const Rational& q) {
  const Integer n = numerator(q);
  const Integer d = denominator(q);  // always positive
  Integer f = n / d;                 // truncates toward zero
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

inline Integer ceil(const Rational& q) { return -floor(-q); }

/// q - floor(q), in [0, 1).
inline Rational fractional_part(const Rational& q) { return q - Rational(floor(q)); }

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

template <typename Derived>
bool is_integral(const Eigen::MatrixBase<Derived>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!is_integral(v(i))) return false;
  return true;
}

inline std::string to_string(const Integer& z) { return z.str(); }

inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

/// "(a, b, c)" in vertex order.
template <typename Derived>
std::string to_string(const Eigen::MatrixBase<Derived>& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v(i));
  }
  return out + ")";
}

/// Zero cycle on n vertices.
inline Cycle zero_cycle(Eigen::Index n) { return Cycle::Constant(n, Rational(0)); }

/// The cycle E_v.
inline Cycle basis_cycle(Eigen::Index n, Eigen::Index v) {
  Cycle c = zero_cycle(n);
  c(v) = 1;
  return c;
}

template <typename Derived>
Cycle to_cycle(const Eigen::MatrixBase<Derived>& integral) {
  return integral.template cast<Rational>();
}

/// Coefficient-wise comparison a >= b.
template <typename A, typename B>
bool dominates(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) < b(i)) return false;
  return true;
}

}  // namespace singlat
