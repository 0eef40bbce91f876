#include "singlat/catalog.hpp"
#include "singlat/errors.hpp"
#include "singlat/form.hpp"

#include "support/random_graphs.hpp"

#include <doctest.h>

using namespace singlat;

namespace {

Cycle cycle(std::initializer_list<Rational> xs) {
  Cycle c(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) c(i++) = x;
  return c;
}

}  // namespace

TEST_CASE("dual cycles") {
  const Lattice z7(catalog("paper-z7"));
  const Cycle e4 = dual_cycle(z7, 4);
  CHECK(e4 == cycle({Rational(2, 7), Rational(4, 7), Rational(6, 7), Rational(5, 7), Rational(4, 7), Rational(3, 7)}));
  for (std::size_t v = 0; v < 6; ++v)
    for (std::size_t w = 0; w < 6; ++w)
      CHECK(pairing(z7, dual_cycle(z7, v), basis_cycle(6, static_cast<Eigen::Index>(w))) == (v == w ? -1 : 0));
  CHECK_THROWS_AS(dual_cycle(z7, 6), DomainError);

  const Lattice a2(catalog("A2"));
  CHECK(dual_cycle(a2, 0) == cycle({Rational(2, 3), Rational(1, 3)}));
}

TEST_CASE("canonical cycle") {
  const auto a1 = canonical_cycle(Lattice(catalog("A1")));
  CHECK(a1.cycle == zero_cycle(1));
  CHECK(a1.integral);

  const auto cusp = canonical_cycle(Lattice(catalog("cusp-3x3")));
  CHECK(cusp.cycle == cycle({1, 1, 1}));
  CHECK(cusp.integral);

  const auto d3 = canonical_cycle(Lattice(catalog("simply-elliptic-d3")));
  CHECK(d3.cycle == cycle({1}));

  const auto gamma = canonical_cycle(Lattice(catalog("gamma-2-3-7")));
  CHECK(gamma.cycle == cycle({2, 1, 1, 1}));

  const auto z7 = canonical_cycle(Lattice(catalog("paper-z7")));
  CHECK_FALSE(z7.integral);
  CHECK(z7.cycle == cycle({Rational(2, 7), Rational(4, 7), Rational(6, 7), Rational(5, 7), Rational(4, 7), Rational(3, 7)}));
}

TEST_CASE("chi") {
  const Lattice a1(catalog("A1"));
  CHECK(chi(a1, cycle({1})) == 1);
  CHECK(chi(a1, cycle({2})) == 4);
  CHECK(chi(a1, cycle({Rational(1, 2)})) == Rational(1, 4));

  const Lattice cusp(catalog("cusp-3x3"));
  CHECK(chi(cusp, cycle({1, 1, 1})) == 0);
  CHECK(chi(cusp, cycle({1, 0, 0})) == 1);
  CHECK(chi(cusp, cycle({1, 1, 0})) == 1);

  const Lattice d3(catalog("simply-elliptic-d3"));
  CHECK(chi(d3, cycle({1})) == 0);
  CHECK(chi(d3, cycle({2})) == 3);

  CHECK_THROWS_AS(chi(a1, cycle({1, 1})), DomainError);
}

TEST_CASE("chi is quadratic with the intersection form as polar") {
  testing::GraphGenerator gen(3);
  for (int round = 0; round < 50; ++round) {
    const Lattice lat(gen.any(6));
    const auto n = lat.rank();
    Cycle a(n), b(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      a(i) = static_cast<long>(gen.uniform(0, 8)) - 4;
      b(i) = static_cast<long>(gen.uniform(0, 8)) - 4;
    }
    CHECK(chi(lat, a + b) == chi(lat, a) + chi(lat, b) - pairing(lat, a, b));
    CHECK(chi(lat, zero_cycle(n)) == 0);
    CHECK(chi(lat, lat.canonical() - a) == chi(lat, a));
    CHECK(in_dual_lattice(lat, lat.canonical()));
    for (Eigen::Index v = 0; v < n; ++v) CHECK(in_dual_lattice(lat, dual_cycle(lat, static_cast<std::size_t>(v))));
  }
}

TEST_CASE("dual lattice membership") {
  const Lattice a1(catalog("A1"));
  CHECK(in_dual_lattice(a1, cycle({Rational(1, 2)})));
  CHECK_FALSE(in_dual_lattice(a1, cycle({Rational(1, 3)})));
  CHECK(pairings(a1, cycle({Rational(1, 2)})) == cycle({-1}));
}
