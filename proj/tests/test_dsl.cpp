#include "singlat/catalog.hpp"
#include "singlat/dsl.hpp"
#include "singlat/errors.hpp"
#include "singlat/json_io.hpp"

#include "support/random_graphs.hpp"

#include <doctest.h>

using namespace singlat;

namespace {

// Parse text that must fail and return "line:col".
std::string error_position(std::string_view text) {
  try {
    parse(text);
  } catch (const InputError& e) {
    return std::to_string(e.line()) + ":" + std::to_string(e.column());
  }
  return "no error";
}

}  // namespace

TEST_CASE("parse a graph with cycles") {
  const GraphDocument doc = parse(
      "# two curves\n"
      "graph pair\n"
      "vertex a euler=-2\n"
      "vertex b euler = -3 genus=0   # spaces around '='\n"
      "edge a b\n"
      "cycle half E: a=1/2 b=-2/4\n"
      "cycle d Edual: b=2\n");
  CHECK(doc.name == "pair");
  REQUIRE(doc.vertices.size() == 2);
  CHECK(doc.vertices[1] == Vertex{"b", -3, 0});
  CHECK(doc.edges == std::vector<std::pair<std::string, std::string>>{{"a", "b"}});
  REQUIRE(doc.cycles.size() == 2);
  CHECK(doc.cycles[0].coefficients[1].second == Rational(-1, 2));

  const Lattice lat(to_graph(doc));
  Cycle half(2);
  half << Rational(1, 2), Rational(-1, 2);
  CHECK(cycle_value(doc, lat, "half") == half);
  CHECK(cycle_value(doc, lat, "d") == 2 * dual_cycle(lat, 1));
  CHECK_THROWS_AS(cycle_value(doc, lat, "missing"), DomainError);
}

TEST_CASE("error positions") {
  CHECK(error_position("") == "1:1");
  CHECK(error_position("# nothing\n\n") == "1:1");
  CHECK(error_position("vertex a euler=-2\nvertex a euler=-2\n") == "2:8");
  CHECK(error_position("vertex a euler=-2\nedge a b\n") == "2:8");
  CHECK(error_position("vertex a euler=-2\nedge a a\n") == "2:8");
  CHECK(error_position("vertex a\n") == "1:9");
  CHECK(error_position("vertex a euler=x\n") == "1:16");
  CHECK(error_position("vertex a euler=-2 colour=red\n") == "1:19");
  CHECK(error_position("vertex a euler=-2\nwibble\n") == "2:1");
  CHECK(error_position("graph g extra\nvertex a euler=-2\n") == "1:9");
  CHECK(error_position("vertex a euler=-2\ncycle z E: a=1/0\n") == "2:14");
  CHECK(error_position("vertex a euler=-2\ncycle z Edual: a=1/2\n") == "2:18");
  CHECK(error_position("vertex a euler=-2\ncycle z E: a=1 a=2\n") == "2:16");
  CHECK(error_position("vertex a euler=-2\ncycle z E: a=1\ncycle z E: a=2\n") == "3:7");
  CHECK(error_position("vertex é euler=-2 genus=-1\n") == "1:25");
  CHECK(error_position("vertex a euler=99999999999999999999\n") == "1:16");
}

TEST_CASE("disconnected graphs are input errors") {
  CHECK_THROWS_WITH_AS(parse("vertex a euler=-2\nvertex b euler=-2\n"), doctest::Contains("not connected"), InputError);
}

TEST_CASE("serialize and parse round trip") {
  for (const auto& name : catalog_names()) {
    const GraphDocument doc = catalog_document(name);
    CHECK(parse(serialize(doc)) == doc);
  }
  GraphDocument with_cycles = catalog_document("paper-z7");
  with_cycles.cycles.push_back({"k", CycleBasis::E, {{"E1", Rational(2, 7)}, {"f", Rational(-3)}}});
  with_cycles.cycles.push_back({"d", CycleBasis::Edual, {{"E4", Rational(1)}}});
  CHECK(parse(serialize(with_cycles)) == with_cycles);

  testing::GraphGenerator gen(41);
  for (int round = 0; round < 50; ++round) {
    const GraphDocument doc = to_document(gen.any(7), "random");
    CHECK(parse(serialize(doc)) == doc);
    CHECK(to_graph(parse(serialize(doc))) == to_graph(doc));
  }
}

TEST_CASE("catalog") {
  CHECK(catalog("A4").size() == 4);
  CHECK(catalog("D7").size() == 7);
  CHECK(catalog("E7").vertex(6).id == "E7");
  CHECK(catalog("gamma-2-3-7").vertex(0).euler == -1);
  CHECK(catalog("simply-elliptic-d3").vertex(0).genus == 1);
  CHECK_THROWS_AS(catalog("A0"), InputError);
  CHECK_THROWS_AS(catalog("D3"), InputError);
  CHECK_THROWS_AS(catalog("E9"), InputError);
  CHECK_THROWS_WITH_AS(catalog("nope"), doctest::Contains("paper-z7"), InputError);
}

TEST_CASE("json encoding") {
  const Lattice a1(catalog("A1"));
  CHECK(dump(to_json(zero_cycle(1))) == R"({"coefficients":[{"num":"0","den":"1"}]})");
  CHECK(dump(to_json(Rational(-4, 6))) == R"({"num":"-2","den":"3"})");
  CHECK(dump(to_json(class_group(Lattice(catalog("paper-z7"))))) == R"({"order":"7","factors":["7"]})");
  CHECK(dump(to_json(class_group(Lattice(catalog("E8"))))) == R"({"order":"1","factors":[]})");
  const Json g = to_json(catalog("A2"));
  CHECK(dump(g) == dump(to_json(catalog("A2"))));
  CHECK(Json::parse(dump(to_json(classify(a1), a1.graph())))["families"].size() == 2);
}
