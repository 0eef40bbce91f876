#include "singlat/catalog.hpp"
#include "singlat/errors.hpp"
#include "singlat/laufer.hpp"

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

Cycle zmin(std::string_view name) { return fundamental_cycle(Lattice(catalog(name))).end; }

}  // namespace

TEST_CASE("fundamental cycles") {
  CHECK(zmin("A1") == cycle({1}));
  CHECK(zmin("A4") == cycle({1, 1, 1, 1}));
  CHECK(zmin("D4") == cycle({1, 2, 1, 1}));
  CHECK(zmin("D6") == cycle({1, 2, 2, 2, 1, 1}));
  CHECK(zmin("E6") == cycle({1, 2, 3, 2, 1, 2}));
  CHECK(zmin("E7") == cycle({2, 3, 4, 3, 2, 1, 2}));
  CHECK(zmin("E8") == cycle({2, 4, 6, 5, 4, 3, 2, 3}));
  CHECK(zmin("paper-z7") == cycle({1, 2, 3, 2, 1, 2}));
  CHECK(zmin("gamma-2-3-7") == cycle({6, 3, 2, 1}));
  CHECK(zmin("cusp-3x3") == cycle({1, 1, 1}));
  CHECK(zmin("simply-elliptic-d3") == cycle({1}));
}

TEST_CASE("computation sequence records its steps") {
  const Lattice d4(catalog("D4"));
  const auto seq = fundamental_cycle(d4);
  CHECK(seq.start == basis_cycle(4, 0));
  CHECK(seq.steps.size() == 4);
  Cycle x = seq.start;
  for (const auto& step : seq.steps) {
    CHECK(step.pairing > 0);
    CHECK(pairings(d4, x)(static_cast<Eigen::Index>(step.vertex)) == step.pairing);
    x(static_cast<Eigen::Index>(step.vertex)) += 1;
  }
  CHECK(x == seq.end);
}

TEST_CASE("long chains stay within the step bound") {
  const Lattice a(catalog("A300"));
  const auto seq = fundamental_cycle(a, 150);
  CHECK(seq.end == Cycle::Constant(300, Rational(1)));
  CHECK(seq.steps.size() == 299);
}

TEST_CASE("minimal anti-nef representatives") {
  const Lattice a1(catalog("A1"));
  const ClassGroup cg1 = class_group(a1);
  for (const auto& h : cg1.elements())
    CHECK(s_h(a1, cg1, h) == (h.is_zero() ? zero_cycle(1) : cycle({Rational(1, 2)})));

  const Lattice z7(catalog("paper-z7"));
  const ClassGroup cg = class_group(z7);
  const auto s = [&](std::size_t v) { return s_h(z7, cg, class_of(cg, dual_cycle(z7, v))); };
  CHECK(s(0) == dual_cycle(z7, 0));
  CHECK(s(1) == dual_cycle(z7, 4));
  CHECK(s(3) == dual_cycle(z7, 3));
  CHECK(s(4) == dual_cycle(z7, 4));

  const Lattice a3(catalog("A3"));
  const ClassGroup cg3 = class_group(a3);
  CHECK(s_h(a3, cg3, class_of(cg3, dual_cycle(a3, 1))) == cycle({Rational(1, 2), 1, Rational(1, 2)}));
}

TEST_CASE("s_h is anti-nef, minimal in its class and independent of tie-breaks") {
  testing::GraphGenerator gen(17);
  for (int round = 0; round < 40; ++round) {
    const Lattice lat(gen.any(6));
    const ClassGroup cg = class_group(lat);
    const auto choose = gen.random_chooser();
    for (const auto& h : cg.elements()) {
      const Cycle s = s_h(lat, cg, h);
      CHECK(in_lipman_cone(lat, s));
      CHECK(class_of(cg, s) == h);
      CHECK(s_h(lat, cg, h, choose) == s);
      for (Eigen::Index v = 0; v < s.size(); ++v) {
        Cycle lower = s;
        lower(v) -= 1;
        if (lower(v) >= 0) CHECK_FALSE(in_lipman_cone(lat, lower));
      }
    }
    const Cycle z = fundamental_cycle(lat).end;
    for (std::size_t v = 0; v < lat.graph().size(); ++v) CHECK(fundamental_cycle(lat, v, choose).end == z);
  }
}

TEST_CASE("rationality test") {
  for (const char* name : {"A1", "A5", "D5", "E6", "E7", "E8", "paper-z7"}) CHECK(laufer_rational(Lattice(catalog(name))));
  for (const char* name : {"gamma-2-3-7", "cusp-3x3", "simply-elliptic-d3"})
    CHECK_FALSE(laufer_rational(Lattice(catalog(name))));
  CHECK_FALSE(laufer_rational(Lattice(ResolutionGraph({{"a", -3, 0}, {"b", -3, 0}, {"c", -3, 0}, {"d", -3, 0},
                                                       {"e", -2, 0}},
                                                      {{0, 4}, {1, 4}, {2, 4}, {3, 4}}))));
}

TEST_CASE("h1 along the Laufer sequence") {
  const Lattice z7(catalog("paper-z7"));
  CHECK(h1_rational(z7, dual_cycle(z7, 3)) == 1);
  CHECK(h1_rational(z7, dual_cycle(z7, 0)) == 0);
  CHECK(h1_rational(z7, dual_cycle(z7, 4)) == 0);
  CHECK(h1_rational(z7, zero_cycle(6)) == 0);
  CHECK_THROWS_AS(h1_rational(z7, basis_cycle(6, 0) / 3), DomainError);
  CHECK_THROWS_AS(h1_rational(Lattice(catalog("cusp-3x3")), zero_cycle(3)), PreconditionError);
}

TEST_CASE("minimally elliptic cycle") {
  CHECK(minimally_elliptic_cycle(Lattice(catalog("cusp-3x3"))) == cycle({1, 1, 1}));
  CHECK(minimally_elliptic_cycle(Lattice(catalog("simply-elliptic-d3"))) == cycle({1}));
  CHECK(minimally_elliptic_cycle(Lattice(catalog("gamma-2-3-7"))) == cycle({2, 1, 1, 1}));
  CHECK_THROWS_AS(minimally_elliptic_cycle(Lattice(catalog("E8"))), PreconditionError);
}

TEST_CASE("singularity types") {
  const auto type = [](std::string_view name) { return classify_singularity(Lattice(catalog(name))); };
  CHECK(type("E8").kind == SingularityKind::rational);
  CHECK(type("E8").geometric_genus == 0);
  CHECK(type("paper-z7").kind == SingularityKind::rational);
  CHECK(type("cusp-3x3").kind == SingularityKind::cusp);
  CHECK(type("cusp-3x3").minimally_elliptic);
  CHECK(type("simply-elliptic-d3").kind == SingularityKind::minimally_elliptic);
  CHECK(type("simply-elliptic-d3").support_c_is_e == true);

  const auto gamma = type("gamma-2-3-7");
  CHECK(gamma.kind == SingularityKind::minimally_elliptic);
  CHECK_FALSE(gamma.minimal);
  CHECK(gamma.minimal_good);
  CHECK(gamma.numerically_gorenstein);
  CHECK_FALSE(gamma.zk_equals_zmin);
  CHECK(gamma.geometric_genus == 1);

  const auto g2 = classify_singularity(Lattice(ResolutionGraph({{"a", -1, 2}}, {})));
  CHECK(g2.kind == SingularityKind::other);
  CHECK(g2.chi_zmin == -1);
  CHECK_FALSE(g2.geometric_genus);
}

TEST_CASE("anti-nef representatives of a class contain s_h plus integral anti-nef cycles") {
  const Lattice z7(catalog("paper-z7"));
  const ClassGroup cg = class_group(z7);
  const Cycle z = fundamental_cycle(z7).end;
  for (const auto& h : cg.elements()) {
    const Cycle s = s_h(z7, cg, h);
    for (int k = 1; k <= 3; ++k) {
      CHECK(in_lipman_cone(z7, s + k * z));
      CHECK(class_of(cg, s + k * z) == h);
    }
  }

  // the converse fails: 2 E2^* represents [E1^*] but 2 E2^* - s_h = E2 is not anti-nef
  const Lattice a2(catalog("A2"));
  const ClassGroup cg2 = class_group(a2);
  const Cycle s = s_h(a2, cg2, class_of(cg2, dual_cycle(a2, 0)));
  const Cycle other = 2 * dual_cycle(a2, 1);
  CHECK(s == dual_cycle(a2, 0));
  CHECK(class_of(cg2, other) == class_of(cg2, s));
  CHECK(in_lipman_cone(a2, other));
  CHECK_FALSE(in_lipman_cone(a2, other - s));
}
