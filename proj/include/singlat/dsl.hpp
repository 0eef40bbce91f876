#pragma once

// Line-oriented graph description language:
//
//   graph <name>
//   vertex <id> euler=<int> [genus=<int>]
//   edge <id> <id>
//   cycle <name> E: <id>=<p/q> ...
//   cycle <name> Edual: <id>=<int> ...
//
// '#' starts a comment. '=' and ':' may be surrounded by whitespace.

#include "singlat/form.hpp"
#include "singlat/graph.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace singlat {

enum class CycleBasis { E, Edual };

struct CycleDefinition {
  std::string name;
  CycleBasis basis = CycleBasis::E;
  std::vector<std::pair<std::string, Rational>> coefficients;

  friend bool operator==(const CycleDefinition&, const CycleDefinition&) = default;
};

struct GraphDocument {
  std::string name;
  std::vector<Vertex> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<CycleDefinition> cycles;

  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

/// Throws InputError with line and column on any error, including a
/// disconnected or empty graph.
GraphDocument parse(std::string_view text);

std::string serialize(const GraphDocument& doc);

ResolutionGraph to_graph(const GraphDocument& doc);

GraphDocument to_document(const ResolutionGraph& g, std::string name = {});

/// The cycle in the E basis; throws DomainError for an unknown name.
Cycle cycle_value(const GraphDocument& doc, const Lattice& lat, std::string_view name);

}  // namespace singlat
