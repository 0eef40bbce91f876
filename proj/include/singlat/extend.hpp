#pragma once

#include "singlat/form.hpp"
#include "singlat/graph.hpp"

#include <cstdint>
#include <optional>

namespace singlat {

/// Gamma^e_v: the graph with one extra genus-0 vertex glued to v.
struct ExtendedGraph {
  ResolutionGraph graph;
  std::size_t new_vertex = 0;
  std::int64_t euler = 0;
  /// Z_min-multiplicity of the new vertex.
  Integer new_multiplicity;
  bool rational = false;
};

/// Glue a vertex of the given euler number to v. Without an explicit euler
/// number, search downward from -2 for the largest k giving a negative
/// definite graph with new multiplicity 1 whose rationality verdict (and
/// multiplicity) is unchanged at k-1 and k-2.
ExtendedGraph extend_graph(const Lattice& lat, std::size_t v,
                           std::optional<std::int64_t> euler = std::nullopt);

}  // namespace singlat
