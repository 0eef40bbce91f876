#include "singlat/oracle.hpp"

#include "singlat/classify.hpp"
#include "singlat/errors.hpp"
#include "singlat/laufer.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace singlat {

namespace {

constexpr std::int64_t volume_limit = 4'000'000'000;

std::int64_t to_i64(const Integer& z) {
  if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min())
    throw PreconditionError("value " + z.str() + " does not fit the enumeration oracle");
  return z.convert_to<std::int64_t>();
}

struct SmallForm {
  std::size_t n = 0;
  std::vector<std::int64_t> m;  // row-major
  std::vector<std::int64_t> t;  // (Z_K, E_v)
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> columns;  // nonzero entries

  std::int64_t at(std::size_t u, std::size_t v) const { return m[u * n + v]; }
};

SmallForm small_form(const Lattice& lat) {
  SmallForm f;
  f.n = static_cast<std::size_t>(lat.rank());
  for (std::size_t u = 0; u < f.n; ++u) {
    for (std::size_t v = 0; v < f.n; ++v)
      f.m.push_back(to_i64(lat.form()(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v))));
    f.t.push_back(to_i64(lat.adjunction()(static_cast<Eigen::Index>(u))));
  }
  f.columns.resize(f.n);
  for (std::size_t v = 0; v < f.n; ++v)
    for (std::size_t u = 0; u < f.n; ++u)
      if (f.at(u, v) != 0) f.columns[v].emplace_back(u, f.at(u, v));
  return f;
}

void check_box(const Lattice& lat, const Box& box) {
  if (box.upper.size() != static_cast<std::size_t>(lat.rank()))
    throw DomainError("box has " + std::to_string(box.upper.size()) + " bounds for " +
                      std::to_string(lat.rank()) + " vertices");
  for (auto b : box.upper)
    if (b < 0) throw DomainError("box bounds must be nonnegative");
  if (box.volume() > volume_limit)
    throw PreconditionError("box has " + std::to_string(box.volume()) +
                            " points; use a smaller box factor or a smaller graph");
}

// Visits every integral x with 0 <= x <= box in lexicographic order (last
// coordinate fastest). p = base + M x and q = 2 chi(x) are kept up to date;
// positive counts the v with p_v > 0. visit returns false to stop.
template <typename Visit>
void scan(const SmallForm& f, const Box& box, std::vector<std::int64_t> p, Visit&& visit) {
  const std::size_t n = f.n;
  std::vector<std::int64_t> x(n, 0);
  std::int64_t q = 0;
  std::size_t positive = static_cast<std::size_t>(std::count_if(p.begin(), p.end(), [](auto a) { return a > 0; }));

  auto shift = [&](std::size_t v, std::int64_t k) {
    q += -2 * k * p[v] - k * k * f.at(v, v) + k * f.t[v];
    for (const auto& [u, d] : f.columns[v]) {
      const bool was = p[u] > 0;
      p[u] += k * d;
      const bool now = p[u] > 0;
      if (was != now) positive += now ? 1 : std::size_t(-1);
    }
    x[v] += k;
  };

  for (;;) {
    if (!visit(static_cast<const std::vector<std::int64_t>&>(x), static_cast<const std::vector<std::int64_t>&>(p),
               q, positive))
      return;
    std::size_t i = n;
    for (;;) {
      if (i == 0) return;
      --i;
      if (x[i] < box.upper[i]) {
        shift(i, 1);
        break;
      }
      if (x[i] != 0) shift(i, -x[i]);
    }
  }
}

bool all_zero(const std::vector<std::int64_t>& x) {
  return std::all_of(x.begin(), x.end(), [](auto a) { return a == 0; });
}

void take_min(std::optional<std::vector<std::int64_t>>& acc, const std::vector<std::int64_t>& x) {
  if (!acc) {
    acc = x;
    return;
  }
  for (std::size_t i = 0; i < x.size(); ++i) (*acc)[i] = std::min((*acc)[i], x[i]);
}

IntVector to_int_vector(const std::vector<std::int64_t>& x) {
  IntVector out(static_cast<Eigen::Index>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) out(static_cast<Eigen::Index>(i)) = x[i];
  return out;
}

}  // namespace

std::int64_t Box::volume() const {
  std::int64_t out = 1;
  for (auto b : upper) {
    if (b < 0) return 0;
    if (out > std::numeric_limits<std::int64_t>::max() / (b + 1)) return std::numeric_limits<std::int64_t>::max();
    out *= b + 1;
  }
  return out;
}

Box default_box(const Lattice& lat, int factor) {
  if (factor < 1) throw DomainError("box factor must be at least 1");
  const Cycle zmin = fundamental_cycle(lat).end;
  Box box;
  for (Eigen::Index v = 0; v < zmin.size(); ++v) box.upper.push_back(to_i64(ceil(Rational(factor) * zmin(v))));
  return box;
}

Box widen(Box box, const Cycle& l) {
  for (std::size_t v = 0; v < box.upper.size(); ++v)
    box.upper[v] = std::max(box.upper[v], to_i64(ceil(l(static_cast<Eigen::Index>(v)))));
  return box;
}

std::optional<Cycle> brute_lipman_min(const Lattice& lat, const ClassGroup& cg, const ClassElement& h,
                                      const Box& box) {
  check_box(lat, box);
  const SmallForm f = small_form(lat);
  const Cycle r = reduced_rep(cg, h);
  const RatVector base = pairings(lat, r);
  std::vector<std::int64_t> p;
  for (Eigen::Index v = 0; v < base.size(); ++v) {
    if (!is_integral(base(v))) throw InternalError("reduced representative is not in L'");
    p.push_back(to_i64(numerator(base(v))));
  }

  std::optional<std::vector<std::int64_t>> best;
  scan(f, box, std::move(p), [&](const auto& x, const auto&, std::int64_t, std::size_t positive) {
    if (positive == 0) take_min(best, x);
    return !(best && all_zero(*best));
  });
  if (!best) return std::nullopt;
  return Cycle(r + to_cycle(to_int_vector(*best)));
}

IntegralMinima brute_integral_minima(const Lattice& lat, const Box& box) {
  check_box(lat, box);
  const SmallForm f = small_form(lat);
  std::optional<std::int64_t> best;
  std::vector<std::int64_t> witness;
  std::optional<std::vector<std::int64_t>> zmin;
  bool origin = true;
  scan(f, box, std::vector<std::int64_t>(f.n, 0), [&](const auto& x, const auto&, std::int64_t q, std::size_t positive) {
    if (origin) {
      origin = false;
      return true;
    }
    if (!best || q < *best) {
      best = q;
      witness = x;
    }
    if (positive == 0) take_min(zmin, x);
    return true;
  });

  IntegralMinima out;
  if (best) {
    if (*best % 2 != 0) throw InternalError("2 chi is odd on an integral cycle");
    out.chi = ChiMinimum{*best / 2, to_int_vector(witness)};
  }
  if (zmin) out.fundamental_cycle = to_int_vector(*zmin);
  return out;
}

std::optional<ChiMinimum> brute_min_chi(const Lattice& lat, const Box& box) {
  return brute_integral_minima(lat, box).chi;
}

std::optional<IntVector> brute_fundamental_cycle(const Lattice& lat, const Box& box) {
  return brute_integral_minima(lat, box).fundamental_cycle;
}

Integer brute_determinant(const IntMatrix& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer out = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, k = 0; c < n; ++c)
        if (c != j) minor(r - 1, k++) = m(r, c);
    const Integer term = m(0, j) * brute_determinant(minor);
    out += (j % 2 == 0) ? term : Integer(-term);
  }
  return out;
}

bool Transcript::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::string Transcript::to_text() const {
  std::ostringstream os;
  os << "box factor B = " << box_factor << " (all enumerations are box-bounded)\n";
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  os << (passed() ? "all checks passed" : "some checks failed") << '\n';
  return os.str();
}

namespace {

class Recorder {
 public:
  explicit Recorder(Transcript& t) : t_(t) {}

  void operator()(std::string name, bool ok, std::string detail = {}) {
    t_.checks.push_back({std::move(name), ok, ok ? std::string{} : std::move(detail)});
  }

  template <typename F>
  void guarded(const std::string& name, F&& f) {
    try {
      f();
    } catch (const Error& e) {
      (*this)(name, false, e.what());
    }
  }

 private:
  Transcript& t_;
};

std::size_t highest_index(std::span<const std::size_t> c) { return c.back(); }
std::size_t middle_index(std::span<const std::size_t> c) { return c[c.size() / 2]; }

std::string class_label(const ClassElement& h) {
  std::string s = "[";
  for (std::size_t i = 0; i < h.coords.size(); ++i) s += (i ? "," : "") + h.coords[i].str();
  return s + "]";
}

void check_blow_ups(Recorder& rec, const Lattice& lat, const ClassGroup& cg, bool rational) {
  const auto& g = lat.graph();
  std::vector<BlowUpLocus> loci;
  for (std::size_t v = 0; v < g.size(); ++v) loci.push_back(BlowUpLocus::at_vertex(v));
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : g.edges())
    if (seen.insert({e.first, e.second}).second) loci.push_back(BlowUpLocus::at_edge(e.first, e.second));

  std::set<std::string> source;
  if (rational)
    for (const auto& h : cg.elements()) source.insert(to_string(s_h(lat, cg, h)));

  for (const auto& locus : loci) {
    const std::string where = locus.on_edge()
                                  ? "edge " + g.vertex(locus.vertex).id + "-" + g.vertex(*locus.other).id
                                  : "vertex " + g.vertex(locus.vertex).id;
    rec.guarded("blow-up at " + where, [&] {
      const BlowUp bu = blow_up(g, locus);
      const Lattice up(bu.graph);
      rec("blow-up at " + where + ": det(-M) preserved", up.determinant() == lat.determinant(),
          up.determinant().str() + " vs " + lat.determinant().str());

      bool pairings_ok = true;
      std::string bad;
      for (Eigen::Index u = 0; u < lat.rank() && pairings_ok; ++u)
        for (Eigen::Index v = 0; v < lat.rank() && pairings_ok; ++v) {
          const Cycle a = total_transform(bu.map, basis_cycle(lat.rank(), u));
          const Cycle b = total_transform(bu.map, basis_cycle(lat.rank(), v));
          if (pairing(up, a, b) != Rational(lat.form()(u, v))) {
            pairings_ok = false;
            bad = g.vertex(static_cast<std::size_t>(u)).id + "," + g.vertex(static_cast<std::size_t>(v)).id;
          }
        }
      rec("blow-up at " + where + ": total transform preserves pairings", pairings_ok, bad);

      if (!rational) return;
      const ClassGroup ucg = class_group(up);
      std::set<std::string> target, pulled;
      for (const auto& h : ucg.elements()) target.insert(to_string(s_h(up, ucg, h)));
      for (const auto& h : cg.elements()) pulled.insert(to_string(total_transform(bu.map, s_h(lat, cg, h))));
      rec("blow-up at " + where + ": sigma^* maps {s_h} bijectively onto {s_h} upstairs",
          pulled == target && pulled.size() == source.size(),
          std::to_string(pulled.size()) + " pulled back vs " + std::to_string(target.size()) + " upstairs");
    });
  }
}

}  // namespace

Transcript verify_all(const ResolutionGraph& g, int box_factor) {
  if (g.size() > verify_vertex_limit)
    throw PreconditionError("verify is limited to " + std::to_string(verify_vertex_limit) + " vertices (graph has " +
                            std::to_string(g.size()) + "); check a smaller subgraph or use the non-verifying commands");
  if (!is_negative_definite(intersection_matrix(g)))
    throw PreconditionError("intersection matrix is not negative definite; nothing to verify");

  Transcript t;
  t.box_factor = box_factor;
  Recorder rec(t);
  const Lattice lat(g);
  const Eigen::Index n = lat.rank();

  // Lattice basics.
  const RatMatrix id = -lat.rational_form() * lat.dual_basis();
  rec("dual basis: (-M) E^* = I", id == RatMatrix::Identity(n, n));
  const Cycle zk = lat.canonical();
  rec("canonical cycle solves its adjunction system", pairings(lat, zk) == to_cycle(lat.adjunction()),
      to_string(pairings(lat, zk)));
  {
    bool ok = true;
    std::string bad;
    for (Eigen::Index u = 0; u < n && ok; ++u)
      for (Eigen::Index v = 0; v < n && ok; ++v) {
        const Cycle a = basis_cycle(n, u) + lat.dual_basis().col(v);
        const Cycle b = Rational(2) * basis_cycle(n, v) - zk;
        if (chi(lat, a + b) != chi(lat, a) + chi(lat, b) - pairing(lat, a, b)) {
          ok = false;
          bad = std::to_string(u) + "," + std::to_string(v);
        }
      }
    rec("chi is quadratic: chi(a+b) = chi(a) + chi(b) - (a,b)", ok, bad);
  }
  const Integer laplace = brute_determinant(-lat.form());
  rec("det(-M) by Laplace expansion agrees with Bareiss", laplace == lat.determinant(),
      laplace.str() + " vs " + lat.determinant().str());

  // Class group.
  const ClassGroup cg = class_group(lat);
  rec("|H| = det(-M)", cg.order() == laplace, cg.order().str());
  {
    bool ok = true;
    std::string bad;
    for (const auto& h : cg.elements()) {
      const Cycle r = reduced_rep(cg, h);
      if (class_of(cg, r) != h || !in_dual_lattice(lat, r)) {
        ok = false;
        bad = class_label(h);
      }
    }
    for (Eigen::Index v = 0; v < n; ++v) {
      const Cycle d = lat.dual_basis().col(v);
      if (!is_integral(Cycle(d - reduced_rep(cg, class_of(cg, d))))) {
        ok = false;
        bad = "E*_" + g.vertex(static_cast<std::size_t>(v)).id;
      }
    }
    rec("class_of and reduced_rep are mutually inverse", ok, bad);
  }

  // Laufer sequences against brute force.
  const Box box = default_box(lat, box_factor);
  const IntegralMinima minima = brute_integral_minima(lat, box);
  const auto zmin_seq = fundamental_cycle(lat);
  const Cycle zmin = zmin_seq.end;
  {
    const auto& brute = minima.fundamental_cycle;
    rec("Z_min equals the brute-force minimal nonzero anti-nef cycle", brute && to_cycle(*brute) == zmin,
        brute ? to_string(*brute) + " vs " + to_string(zmin) : "no anti-nef cycle in box");
  }
  {
    bool ok = true;
    std::string bad;
    for (std::size_t v = 0; v < g.size(); ++v)
      for (const VertexChooser& c : {VertexChooser(lowest_index), VertexChooser(highest_index),
                                     VertexChooser(middle_index)})
        if (fundamental_cycle(lat, v, c).end != zmin) {
          ok = false;
          bad = "start " + g.vertex(v).id;
        }
    rec("Z_min is independent of start vertex and tie-break", ok, bad);
  }

  const SingularityType type = classify_singularity(lat);
  for (const auto& h : cg.elements()) {
    const std::string label = "h = " + class_label(h);
    rec.guarded(label, [&] {
      const Cycle s = s_h(lat, cg, h);
      const Box hb = widen(box, s);
      const auto brute = brute_lipman_min(lat, cg, h, hb);
      rec(label + ": s_h equals the brute-force Lipman minimum", brute && *brute == s,
          brute ? to_string(*brute) + " vs " + to_string(s) : "no anti-nef representative in box");
      const Cycle alt = s_h(lat, cg, h, highest_index);
      rec(label + ": s_h is independent of tie-break", alt == s, to_string(alt));
      if (!type.rational) return;
      const Integer a = h1_rational(lat, s);
      const Integer b = h1_rational(lat, s, highest_index);
      rec(label + ": h^1 sum is independent of tie-break", a == b, a.str() + " vs " + b.str());
    });
  }

  // Rationality and ellipticity against bounded chi.
  const auto& chi_min = minima.chi;
  rec("bounded min chi exists", chi_min.has_value(), "box is {0}");
  if (chi_min) {
    const std::string seen = "min chi = " + std::to_string(chi_min->value) + " at " + to_string(chi_min->witness);
    rec("Laufer rational <=> bounded min chi = 1", type.rational == (chi_min->value == 1), seen);
    rec("chi(Z_min) = 0 <=> (bounded min chi = 0 and not rational)",
        (type.chi_zmin == 0) == (chi_min->value == 0 && !type.rational), seen);
  }

  if (type.rational) {
    rec.guarded("specialness triple agreement", [&] {
      const auto sp = special_full_sheaves(lat);
      rec("specialness triple agreement", true);
      bool ok = true;
      for (const auto& r : sp)
        if ((r.h1 == 0) != r.special) ok = false;
      rec("h^1(s_h) = 0 exactly on special classes", ok);
    });
    rec.guarded("rational classification", [&] {
      const auto report = full_sheaf_classes_rational(lat);
      std::set<std::string> chern, sh;
      for (const auto& f : report.families) chern.insert(to_string(f.chern_class));
      for (const auto& h : cg.elements()) sh.insert(to_string(s_h(lat, cg, h)));
      rec("rational classification: Chern classes = {s_h}, |H| distinct",
          chern == sh && report.families.size() == static_cast<std::size_t>(cg.order()));
      rec("Wunram table equivalences", true);
    });
  }
  if (type.elliptic) {
    rec.guarded("minimally elliptic cycle", [&] {
      const auto c = minimally_elliptic_cycle(lat);
      rec("minimally elliptic cycle exists below Z_min", c.has_value());
      if (c) rec("chi(C) = 0", chi(lat, *c) == 0, to_string(chi(lat, *c)));
      if (c && type.minimally_elliptic)
        rec("C = Z_K on a minimally elliptic graph", *c == zk, to_string(*c) + " vs " + to_string(zk));
    });
  }

  rec.guarded("blow-ups", [&] { check_blow_ups(rec, lat, cg, type.rational); });
  return t;
}

}  // namespace singlat
