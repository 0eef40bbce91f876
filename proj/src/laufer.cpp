#include "singlat/laufer.hpp"

#include "singlat/errors.hpp"

#include <algorithm>
#include <numeric>

namespace singlat {

std::size_t lowest_index(std::span<const std::size_t> candidates) { return candidates.front(); }

namespace {

// Order of [E_v^*] in H: the lcm of the denominators of E_v^*.
Integer dual_order(const Lattice& lat, Eigen::Index v) {
  Integer order = 1;
  for (Eigen::Index u = 0; u < lat.rank(); ++u) order = lcm(order, denominator(lat.dual_basis()(u, v)));
  return order;
}

// Total number of steps any sequence from `start` can take. With
// start = sum a_v E_v^*, the cycle w = sum (a_v + b_v D_v) E_v^*, D_v the
// order of [E_v^*] and b_v = ceil(max(0, -a_v) / D_v), is anti-nef, >= start
// and congruent to it, so s(start) <= w.
Integer step_bound(const Lattice& lat, const Cycle& start, const RatVector& p) {
  Cycle w = start;
  for (Eigen::Index v = 0; v < lat.rank(); ++v) {
    const Rational a = -p(v);
    if (a >= 0) continue;
    const Integer d = dual_order(lat, v);
    const Integer b = ceil(Rational(-a) / Rational(d));
    w += Rational(b * d) * lat.dual_basis().col(v);
  }
  return ceil((w - start).sum());
}

}  // namespace

ComputationSequence generalized_laufer(const Lattice& lat, const Cycle& start,
                                       const VertexChooser& choose) {
  RatVector p = pairings(lat, start);
  const Integer cap = step_bound(lat, start, p);

  ComputationSequence seq{start, {}, start};
  std::vector<std::size_t> candidates;
  candidates.reserve(static_cast<std::size_t>(lat.rank()));
  for (;;) {
    candidates.clear();
    for (Eigen::Index v = 0; v < lat.rank(); ++v)
      if (p(v) > 0) candidates.push_back(static_cast<std::size_t>(v));
    if (candidates.empty()) break;

    const std::size_t v = choose(candidates);
    if (std::find(candidates.begin(), candidates.end(), v) == candidates.end())
      throw InternalError("vertex chooser returned a vertex with non-positive pairing");
    if (Integer(seq.steps.size()) >= cap)
      throw InternalError("Laufer sequence exceeded its step bound " + cap.str());

    const auto iv = static_cast<Eigen::Index>(v);
    seq.steps.push_back({v, p(iv)});
    seq.end(iv) += 1;
    p += lat.rational_form().col(iv);
  }
  return seq;
}

ComputationSequence fundamental_cycle(const Lattice& lat, std::size_t start_vertex,
                                      const VertexChooser& choose) {
  if (start_vertex >= static_cast<std::size_t>(lat.rank()))
    throw DomainError("start vertex outside the graph");
  auto seq = generalized_laufer(lat, basis_cycle(lat.rank(), static_cast<Eigen::Index>(start_vertex)),
                                choose);
  for (Eigen::Index v = 0; v < lat.rank(); ++v)
    if (seq.end(v) < 1) throw InternalError("fundamental cycle does not have full support");
  return seq;
}

Cycle s_h(const Lattice& lat, const ClassGroup& cg, const ClassElement& h,
          const VertexChooser& choose) {
  return generalized_laufer(lat, reduced_rep(cg, h), choose).end;
}

bool laufer_rational(const Lattice& lat) {
  const auto& g = lat.graph();
  if (!g.is_tree() || !g.all_genus_zero()) return false;
  for (std::size_t v0 = 0; v0 < g.size(); ++v0) {
    const auto seq = fundamental_cycle(lat, v0);
    for (const auto& step : seq.steps)
      if (step.pairing != 1) return false;
  }
  return true;
}

Integer h1_rational(const Lattice& lat, const Cycle& l, const VertexChooser& choose) {
  if (!laufer_rational(lat)) throw PreconditionError("h1_rational requires a rational graph");
  if (!in_dual_lattice(lat, l)) throw DomainError("h1_rational: cycle is not in L'");
  const auto seq = generalized_laufer(lat, Cycle(-l), choose);
  Integer total = 0;
  for (const auto& step : seq.steps) total += numerator(step.pairing) - 1;
  return total;
}

namespace {

// chi on integral cycles in machine integers:
// chi(D) = -(D^T M D - D . t) / 2 with t_v = (Z_K, E_v).
struct IntegralChi {
  std::vector<std::vector<long long>> m;
  std::vector<long long> t;

  explicit IntegralChi(const Lattice& lat) {
    const auto n = static_cast<std::size_t>(lat.rank());
    m.assign(n, std::vector<long long>(n));
    t.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      t[i] = static_cast<long long>(lat.adjunction()(static_cast<Eigen::Index>(i)));
      for (std::size_t j = 0; j < n; ++j)
        m[i][j] = static_cast<long long>(lat.form()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
    }
  }

  long long operator()(const std::vector<long long>& d) const {
    long long q = 0, lin = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] == 0) continue;
      lin += d[i] * t[i];
      for (std::size_t j = 0; j < d.size(); ++j) q += d[i] * m[i][j] * d[j];
    }
    return -(q - lin) / 2;
  }
};

}  // namespace

std::optional<Cycle> minimally_elliptic_cycle(const Lattice& lat) {
  if (laufer_rational(lat)) throw PreconditionError("minimally elliptic cycle requested on a rational graph");
  const Cycle zmin = fundamental_cycle(lat).end;
  if (chi(lat, zmin) != 0)
    throw PreconditionError("graph is not elliptic: chi(Z_min) = " + to_string(chi(lat, zmin)));

  const auto n = static_cast<std::size_t>(lat.rank());
  std::vector<long long> bound(n);
  for (std::size_t i = 0; i < n; ++i) bound[i] = static_cast<long long>(numerator(zmin(static_cast<Eigen::Index>(i))));

  const IntegralChi chi_int(lat);
  std::vector<std::vector<long long>> zeros;
  std::vector<long long> d(n, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < n && d[i] == bound[i]) d[i++] = 0;
    if (i == n) break;
    ++d[i];
    if (chi_int(d) == 0) zeros.push_back(d);
  }
  if (zeros.empty()) return std::nullopt;

  auto total = [](const std::vector<long long>& c) { return std::accumulate(c.begin(), c.end(), 0LL); };
  const auto best = *std::min_element(zeros.begin(), zeros.end(),
                                      [&](const auto& a, const auto& b) { return total(a) < total(b); });
  for (const auto& z : zeros) {
    for (std::size_t k = 0; k < n; ++k)
      if (z[k] < best[k]) throw InternalError("cycles with chi = 0 have no unique minimum below Z_min");
  }
  Cycle c(lat.rank());
  for (std::size_t k = 0; k < n; ++k) c(static_cast<Eigen::Index>(k)) = best[k];
  return c;
}

std::string to_string(SingularityKind kind) {
  switch (kind) {
    case SingularityKind::rational: return "rational";
    case SingularityKind::elliptic: return "elliptic";
    case SingularityKind::minimally_elliptic: return "minimally-elliptic";
    case SingularityKind::cusp: return "cusp";
    case SingularityKind::other: return "other";
  }
  return "other";
}

SingularityType classify_singularity(const Lattice& lat) {
  const auto& g = lat.graph();
  SingularityType t;
  t.zmin = fundamental_cycle(lat).end;
  t.zk = lat.canonical();
  t.numerically_gorenstein = is_integral(t.zk);
  t.tree_genus_zero = g.is_tree() && g.all_genus_zero();
  t.betti_number = g.betti_number();
  t.zk_equals_zmin = t.zk == t.zmin;
  t.chi_zmin = chi(lat, t.zmin);

  t.minimal = true;
  t.minimal_good = true;
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto& vx = g.vertex(v);
    if (vx.genus != 0 || vx.euler != -1) continue;
    t.minimal = false;
    if (g.degree(v) <= 2) t.minimal_good = false;
  }

  t.rational = laufer_rational(lat);
  if (t.rational) {
    t.kind = SingularityKind::rational;
    t.geometric_genus = 0;
    return t;
  }

  t.elliptic = t.chi_zmin == 0;
  if (!t.elliptic) {
    t.kind = SingularityKind::other;
    t.notes.push_back("neither rational nor elliptic: chi(Z_min) = " + to_string(t.chi_zmin));
    return t;
  }

  t.elliptic_cycle = minimally_elliptic_cycle(lat);
  if (!t.elliptic_cycle)
    throw InternalError("elliptic graph without a chi = 0 cycle below Z_min");
  const Cycle& c = *t.elliptic_cycle;
  t.support_c_is_e = std::all_of(c.begin(), c.end(), [](const Rational& x) { return x > 0; });

  t.minimally_elliptic = t.numerically_gorenstein && c == t.zk && (!t.minimal || t.zk_equals_zmin);
  if (t.minimally_elliptic) {
    t.geometric_genus = 1;
    if (!t.zk_equals_zmin)
      t.notes.push_back("C = Z_K but Z_K != Z_min: the graph is not the minimal resolution");
  }

  const bool cusp_shape = g.is_cycle() && g.all_genus_zero();
  if (cusp_shape) {
    t.kind = SingularityKind::cusp;
    if (!t.minimally_elliptic) t.notes.push_back("cycle graph fails the C = Z_K test");
  } else if (t.minimally_elliptic) {
    t.kind = SingularityKind::minimally_elliptic;
  } else {
    t.kind = SingularityKind::elliptic;
  }

  if ((cusp_shape || t.minimally_elliptic) && !t.minimal_good) {
    t.verdict_confirmed = false;
    t.notes.push_back("resolution is not minimal (contractible rational -1 curve): " +
                      to_string(t.kind) + " verdict is consistent-with only");
  }
  return t;
}

}  // namespace singlat
