#include "singlat/catalog.hpp"
#include "singlat/classify.hpp"
#include "singlat/errors.hpp"

#include "support/random_graphs.hpp"

#include <doctest.h>

#include <set>

using namespace singlat;

namespace {

std::size_t count_special(const ClassificationReport& r) {
  std::size_t n = 0;
  for (const auto& f : r.families) n += f.special.value_or(false);
  return n;
}

}  // namespace

TEST_CASE("rational graphs have one family per class") {
  const Lattice a1(catalog("A1"));
  const auto r = classify(a1);
  REQUIRE(r.families.size() == 2);
  CHECK(r.families[0].label == "trivial");
  CHECK(r.families[0].chern_class == zero_cycle(1));
  CHECK(r.families[1].label == "s_h");
  CHECK(r.families[1].chern_class == basis_cycle(1, 0) / 2);
  CHECK(r.families[1].special == true);
  CHECK(r.relation == Relation::equality);
  for (const auto& f : r.families) {
    CHECK(f.family_dim == 0);
    CHECK(f.flat_count == FlatCount::all);
  }

  const auto e8 = classify(Lattice(catalog("E8")));
  CHECK(e8.families.size() == 1);
  CHECK(e8.families[0].label == "trivial");

  const Lattice z7(catalog("paper-z7"));
  const auto rz = classify(z7);
  CHECK(rz.families.size() == 7);
  CHECK(count_special(rz) == 3);
  CHECK(rz.families[0].special == true);
}

TEST_CASE("specialness tests agree") {
  const Lattice z7(catalog("paper-z7"));
  const auto records = special_full_sheaves(z7);
  CHECK(records.size() == 6);
  std::set<std::size_t> witnesses;
  for (const auto& r : records) {
    CHECK(r.special == (r.pairing_with_zmin == 1));
    CHECK(r.special == r.witness.has_value());
    CHECK(r.special == (r.h1 == 0));
    if (r.witness) witnesses.insert(*r.witness);
  }
  CHECK(witnesses == std::set<std::size_t>{0, 4});

  for (const auto& g : testing::rational_corpus(25, 29)) CHECK_NOTHROW(special_full_sheaves(Lattice(g)));
  CHECK_THROWS_AS(special_full_sheaves(Lattice(catalog("cusp-3x3"))), PreconditionError);
}

TEST_CASE("per-vertex table") {
  const Lattice z7(catalog("paper-z7"));
  const auto rows = wunram_table(z7);
  REQUIRE(rows.size() == 6);
  const std::vector<int> mult{1, 2, 3, 2, 1, 2};
  for (std::size_t v = 0; v < 6; ++v) {
    CHECK(rows[v].multiplicity == mult[v]);
    CHECK(rows[v].dual == dual_cycle(z7, v));
    const bool special = v == 0 || v == 4;
    CHECK(rows[v].special_full == special);
    CHECK(rows[v].extended_rational == special);
  }
  CHECK(rows[1].s == dual_cycle(z7, 4));
  CHECK_FALSE(rows[1].s_is_dual);
  CHECK(rows[3].s_is_dual);

  const BlowUp up = blow_up(z7.graph(), BlowUpLocus::at_vertex(4));
  const auto blown = wunram_table(Lattice(up.graph));
  REQUIRE(blown.size() == 7);
  CHECK(blown[6].multiplicity == 1);
  CHECK(blown[4].dual == total_transform(up.map, dual_cycle(z7, 4)));
}

TEST_CASE("minimally elliptic reports") {
  const auto cusp = classify(Lattice(catalog("cusp-3x3")));
  CHECK(cusp.type.kind == SingularityKind::cusp);
  REQUIRE(cusp.families.size() == 17);
  CHECK(cusp.families[0].label == "trivial");
  CHECK(cusp.families[1].label == "Z_min");
  CHECK(cusp.families[1].family_dim == 1);
  CHECK(cusp.families[1].exceptions.size() == 1);
  for (const auto& f : cusp.families) CHECK(f.flat_count == FlatCount::all);
  CHECK(cusp.relation == Relation::equality);

  const auto gamma = classify(Lattice(catalog("gamma-2-3-7")));
  REQUIRE(gamma.families.size() == 2);
  CHECK(gamma.families[0].flat_count == FlatCount::all);
  CHECK(gamma.families[1].flat_count == FlatCount::zero_known);
  CHECK(gamma.families[1].chern_class == gamma.type.zmin);

  const auto d3 = classify(Lattice(catalog("simply-elliptic-d3")));
  CHECK(d3.families.size() == 4);
  CHECK(d3.relation == Relation::inclusion_only);
  for (const auto& f : d3.families) CHECK(f.flat_count == FlatCount::unknown);
}

TEST_CASE("graphs outside both classifications are refused") {
  CHECK_THROWS_AS(full_sheaf_classes_min_elliptic(Lattice(catalog("paper-z7"))), PreconditionError);
  CHECK_THROWS_AS(full_sheaf_classes_rational(Lattice(catalog("cusp-3x3"))), PreconditionError);
  CHECK_THROWS_AS(classify(Lattice(ResolutionGraph({{"a", -1, 2}}, {}))), PreconditionError);
}

TEST_CASE("labels") {
  CHECK(to_string(FlatCount::exactly_one) == "exactly-one");
  CHECK(to_string(FlatCount::zero_known) == "zero-known");
  CHECK(to_string(Relation::inclusion_only) == "inclusion-only");
}
