#include "singlat/extend.hpp"

#include "singlat/errors.hpp"
#include "singlat/laufer.hpp"

namespace singlat {

namespace {

std::string fresh_id(const ResolutionGraph& g, const std::string& base) {
  std::string id = base + "_e";
  for (int k = 2; g.find(id); ++k) id = base + "_e" + std::to_string(k);
  return id;
}

std::optional<ExtendedGraph> try_extend(const ResolutionGraph& g, std::size_t v, std::int64_t k) {
  auto vertices = g.vertices();
  auto edges = g.edges();
  vertices.push_back(Vertex{fresh_id(g, g.vertex(v).id), k, 0});
  edges.emplace_back(v, g.size());
  ResolutionGraph ext(std::move(vertices), std::move(edges));
  if (!is_negative_definite(intersection_matrix(ext))) return std::nullopt;

  const Lattice lat(ext);
  const Cycle zmin = fundamental_cycle(lat).end;
  ExtendedGraph out{std::move(ext), g.size(), k, numerator(zmin(zmin.size() - 1)), false};
  out.rational = laufer_rational(lat);
  return out;
}

}  // namespace

ExtendedGraph extend_graph(const Lattice& lat, std::size_t v, std::optional<std::int64_t> euler) {
  const auto& g = lat.graph();
  if (v >= g.size()) throw DomainError("vertex index outside the graph");

  if (euler) {
    auto ext = try_extend(g, v, *euler);
    if (!ext)
      throw PreconditionError("extended graph with euler " + std::to_string(*euler) +
                              " at '" + g.vertex(v).id + "' is not negative definite");
    return std::move(*ext);
  }

  // -M^e is definite once k < -(E_v^*)_v; multiplicity one needs k <= -m_v.
  // Well below both, the verdicts are stable, so the search is bounded.
  const Cycle zmin = fundamental_cycle(lat).end;
  const Integer limit = ceil(lat.dual_basis()(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(v))) +
                        2 * ceil(zmin.sum()) + 16;
  const auto floor_k = -static_cast<std::int64_t>(limit);

  for (std::int64_t k = -2; k >= floor_k; --k) {
    auto ext = try_extend(g, v, k);
    if (!ext || ext->new_multiplicity != 1) continue;
    bool stable = true;
    for (std::int64_t step = 1; step <= 2 && stable; ++step) {
      const auto probe = try_extend(g, v, k - step);
      stable = probe && probe->new_multiplicity == 1 && probe->rational == ext->rational;
    }
    if (stable) return std::move(*ext);
  }
  throw PreconditionError("no stable euler number found for the extended graph at '" + g.vertex(v).id + "'");
}

}  // namespace singlat
