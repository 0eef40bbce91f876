#pragma once

#include "singlat/exact.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace singlat {

struct Vertex {
  std::string id;
  std::int64_t euler = -2;  // self-intersection E_v^2
  std::int64_t genus = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Unordered pair of vertex indices, stored with first < second.
struct Edge {
  std::size_t first = 0;
  std::size_t second = 0;

  Edge() = default;
  Edge(std::size_t a, std::size_t b) : first(std::min(a, b)), second(std::max(a, b)) {}

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Decorated dual graph of a resolution: vertices carry Euler number and
/// genus, edges form a multiset (parallel edges allowed, loops rejected).
/// Construction validates well-formedness and connectedness and throws
/// InputError otherwise; the value is immutable afterwards.
class ResolutionGraph {
 public:
  ResolutionGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  /// Edges given by vertex ids.
  static ResolutionGraph from_ids(std::vector<Vertex> vertices,
                                  const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(std::size_t v) const { return vertices_.at(v); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<std::size_t> find(std::string_view id) const;
  /// Throws InputError for unknown ids.
  std::size_t index_of(std::string_view id) const;

  int edge_multiplicity(std::size_t u, std::size_t v) const;
  /// Number of edge ends at v (parallel edges counted separately).
  int degree(std::size_t v) const;

  /// First Betti number |E| - |V| + 1 of the (connected) graph.
  std::size_t betti_number() const { return edges_.size() + 1 - vertices_.size(); }
  bool is_tree() const { return edges_.size() + 1 == vertices_.size(); }
  /// Exactly one cycle through every vertex (a "loop" graph).
  bool is_cycle() const;
  bool all_genus_zero() const;

  friend bool operator==(const ResolutionGraph&, const ResolutionGraph&) = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

/// m_vv = euler_v, m_uv = number of edges between u and v.
IntMatrix intersection_matrix(const ResolutionGraph& g);

/// True iff -m has all leading principal minors positive.
bool is_negative_definite(const IntMatrix& m);

/// Where a blow-up happens: a generic point of a vertex, or the
/// intersection point represented by one copy of an edge.
struct BlowUpLocus {
  std::size_t vertex = 0;
  std::optional<std::size_t> other;  // set for an edge locus

  static BlowUpLocus at_vertex(std::size_t v) { return {v, std::nullopt}; }
  static BlowUpLocus at_edge(std::size_t u, std::size_t v) { return {u, v}; }
  bool on_edge() const { return other.has_value(); }
};

struct BlowUpMap {
  std::size_t source_size = 0;
  BlowUpLocus locus;
  std::size_t new_vertex = 0;  // index of the new curve in the target
};

struct BlowUp {
  ResolutionGraph graph;
  BlowUpMap map;
};

/// Blow up g at the given locus. The new vertex (euler -1, genus 0) is
/// appended last. Throws InputError if the locus does not exist.
BlowUp blow_up(const ResolutionGraph& g, const BlowUpLocus& locus,
               const std::string& new_id = "E_new");

/// Total transform sigma^* of a cycle on the source graph.
Cycle total_transform(const BlowUpMap& map, const Cycle& l);

}  // namespace singlat
