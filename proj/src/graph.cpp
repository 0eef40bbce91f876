#include "singlat/graph.hpp"

#include "singlat/errors.hpp"
#include "singlat/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace singlat {

namespace {

bool connected(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const auto& e : edges) {
    const auto a = root(e.first);
    const auto b = root(e.second);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace

ResolutionGraph::ResolutionGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.empty()) throw InputError("resolution graph has no vertices");
  std::set<std::string_view> seen;
  for (const auto& v : vertices_) {
    if (v.id.empty()) throw InputError("vertex with empty id");
    if (!seen.insert(v.id).second) throw InputError("duplicate vertex id '" + v.id + "'");
    if (v.genus < 0) throw InputError("vertex '" + v.id + "' has negative genus");
  }
  for (const auto& e : edges_) {
    if (e.second >= vertices_.size())
      throw InputError("edge references vertex index " + std::to_string(e.second) +
                       " outside the graph");
    if (e.first == e.second)
      throw InputError("loop edge at vertex '" + vertices_[e.first].id + "'");
  }
  if (!connected(vertices_.size(), edges_)) throw InputError("resolution graph is not connected");
}

ResolutionGraph ResolutionGraph::from_ids(
    std::vector<Vertex> vertices, const std::vector<std::pair<std::string, std::string>>& edges) {
  std::vector<Edge> indexed;
  indexed.reserve(edges.size());
  auto lookup = [&](const std::string& id) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i].id == id) return i;
    throw InputError("edge references unknown vertex '" + id + "'");
  };
  for (const auto& [a, b] : edges) {
    if (a == b) throw InputError("loop edge at vertex '" + a + "'");
    indexed.emplace_back(lookup(a), lookup(b));
  }
  return ResolutionGraph(std::move(vertices), std::move(indexed));
}

std::optional<std::size_t> ResolutionGraph::find(std::string_view id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].id == id) return i;
  return std::nullopt;
}

std::size_t ResolutionGraph::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw InputError("unknown vertex '" + std::string(id) + "'");
}

int ResolutionGraph::edge_multiplicity(std::size_t u, std::size_t v) const {
  const Edge key(u, v);
  return static_cast<int>(std::count(edges_.begin(), edges_.end(), key));
}

int ResolutionGraph::degree(std::size_t v) const {
  int d = 0;
  for (const auto& e : edges_) d += (e.first == v) + (e.second == v);
  return d;
}

bool ResolutionGraph::is_cycle() const {
  if (edges_.size() != vertices_.size() || vertices_.size() < 2) return false;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (degree(v) != 2) return false;
  return true;  // connected, 2-regular
}

bool ResolutionGraph::all_genus_zero() const {
  return std::all_of(vertices_.begin(), vertices_.end(),
                     [](const Vertex& v) { return v.genus == 0; });
}

IntMatrix intersection_matrix(const ResolutionGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.size());
  IntMatrix m = IntMatrix::Constant(n, n, Integer(0));
  for (Eigen::Index v = 0; v < n; ++v) m(v, v) = g.vertex(static_cast<std::size_t>(v)).euler;
  for (const auto& e : g.edges()) {
    const auto a = static_cast<Eigen::Index>(e.first);
    const auto b = static_cast<Eigen::Index>(e.second);
    m(a, b) += 1;
    m(b, a) += 1;
  }
  return m;
}

bool is_negative_definite(const IntMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) return false;
  if (m != m.transpose()) return false;
  return is_positive_definite(IntMatrix(-m));
}

BlowUp blow_up(const ResolutionGraph& g, const BlowUpLocus& locus, const std::string& new_id) {
  if (locus.vertex >= g.size() || (locus.other && *locus.other >= g.size()))
    throw InputError("blow-up locus references a vertex outside the graph");
  if (g.find(new_id)) throw InputError("blow-up vertex id '" + new_id + "' already in use");

  auto vertices = g.vertices();
  auto edges = g.edges();
  const std::size_t fresh = vertices.size();
  vertices.push_back(Vertex{new_id, -1, 0});

  if (!locus.on_edge()) {
    vertices[locus.vertex].euler -= 1;
    edges.emplace_back(locus.vertex, fresh);
  } else {
    const Edge target(locus.vertex, *locus.other);
    auto it = std::find(edges.begin(), edges.end(), target);
    if (it == edges.end())
      throw InputError("no edge between '" + g.vertex(locus.vertex).id + "' and '" +
                       g.vertex(*locus.other).id + "'");
    edges.erase(it);
    vertices[locus.vertex].euler -= 1;
    vertices[*locus.other].euler -= 1;
    edges.emplace_back(locus.vertex, fresh);
    edges.emplace_back(*locus.other, fresh);
  }
  return BlowUp{ResolutionGraph(std::move(vertices), std::move(edges)),
                BlowUpMap{g.size(), locus, fresh}};
}

Cycle total_transform(const BlowUpMap& map, const Cycle& l) {
  if (static_cast<std::size_t>(l.size()) != map.source_size)
    throw DomainError("cycle has " + std::to_string(l.size()) + " coefficients, blow-up source has " +
                      std::to_string(map.source_size) + " vertices");
  Cycle out(l.size() + 1);
  out.head(l.size()) = l;
  Rational fresh = l(static_cast<Eigen::Index>(map.locus.vertex));
  if (map.locus.on_edge()) fresh += l(static_cast<Eigen::Index>(*map.locus.other));
  out(l.size()) = fresh;
  return out;
}

}  // namespace singlat
