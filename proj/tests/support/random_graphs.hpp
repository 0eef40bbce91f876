#pragma once

#include "singlat/form.hpp"
#include "singlat/graph.hpp"
#include "singlat/laufer.hpp"
#include "singlat/oracle.hpp"

#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace singlat::testing {

// Small random resolution graphs for property tests. Euler numbers lie in
// [-4, -1] with -1 rare; only negative-definite graphs are returned.
class GraphGenerator {
 public:
  explicit GraphGenerator(std::uint64_t seed) : rng_(seed) {}

  std::int64_t euler() {
    if (uniform(0, 9) == 0) return -1;
    static constexpr std::int64_t weights[] = {-2, -2, -2, -3, -3, -4};
    return weights[uniform(0, 5)];
  }

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  // A genus-0 tree with 1..max_vertices vertices.
  ResolutionGraph tree(std::size_t max_vertices) {
    for (;;) {
      const std::size_t n = uniform(1, max_vertices);
      std::vector<Vertex> vs;
      std::vector<Edge> es;
      for (std::size_t i = 0; i < n; ++i) {
        vs.push_back({"v" + std::to_string(i), euler(), 0});
        if (i > 0) es.emplace_back(uniform(0, i - 1), i);
      }
      ResolutionGraph g(std::move(vs), std::move(es));
      if (is_negative_definite(intersection_matrix(g))) return g;
    }
  }

  // Trees, plus occasionally an extra (possibly parallel) edge or a genus-1 vertex.
  ResolutionGraph any(std::size_t max_vertices) {
    for (;;) {
      const ResolutionGraph t = tree(max_vertices);
      auto vs = t.vertices();
      auto es = t.edges();
      if (vs.size() >= 2 && uniform(0, 3) == 0) {
        const std::size_t a = uniform(0, vs.size() - 1);
        std::size_t b = uniform(0, vs.size() - 2);
        if (b >= a) ++b;
        es.emplace_back(a, b);
      }
      if (uniform(0, 6) == 0) vs[uniform(0, vs.size() - 1)].genus = 1;
      ResolutionGraph g(std::move(vs), std::move(es));
      if (is_negative_definite(intersection_matrix(g))) return g;
    }
  }

  // A tie-break policy choosing uniformly among the candidates.
  VertexChooser random_chooser() {
    auto rng = std::make_shared<std::mt19937_64>(rng_());
    return [rng](std::span<const std::size_t> c) {
      return c[std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(*rng)];
    };
  }

 private:
  std::mt19937_64 rng_;
};

// Keeps the brute-force boxes at desk scale.
inline bool small_box(const ResolutionGraph& g, std::int64_t limit = 2'000'000) {
  return default_box(Lattice(g)).volume() <= limit;
}

inline std::vector<ResolutionGraph> rational_corpus(std::size_t count, std::uint64_t seed,
                                                    std::size_t max_vertices = 6) {
  GraphGenerator gen(seed);
  std::vector<ResolutionGraph> out;
  while (out.size() < count) {
    ResolutionGraph g = gen.tree(max_vertices);
    if (laufer_rational(Lattice(g)) && small_box(g)) out.push_back(std::move(g));
  }
  return out;
}

inline std::vector<ResolutionGraph> mixed_corpus(std::size_t count, std::uint64_t seed,
                                                 std::size_t max_vertices = 6) {
  GraphGenerator gen(seed);
  std::vector<ResolutionGraph> out;
  while (out.size() < count) {
    ResolutionGraph g = gen.any(max_vertices);
    if (small_box(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace singlat::testing
