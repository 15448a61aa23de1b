#include "lambda2/spectral.hpp"

#include <algorithm>
#include <stdexcept>

namespace lambda2 {

namespace {

// Dense n x n integer matrix, row major.
struct Mat {
  int n;
  std::vector<Int> a;
  explicit Mat(int n_) : n(n_), a(static_cast<size_t>(n_) * n_) {}
  Int& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

Mat adjacency(const Graph& g) {
  Mat m(g.vertex_count());
  for (auto [u, v] : g.edges()) {
    m.at(u, v) = 1;
    m.at(v, u) = 1;
  }
  return m;
}

Mat mul(const Mat& x, const Mat& y) {
  Mat out(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      const Int& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < x.n; ++j) {
        const Int& w = y.at(k, j);
        if (w != 0) out.at(i, j) += v * w;
      }
    }
  return out;
}

Int trace(const Mat& m) {
  Int t = 0;
  for (int i = 0; i < m.n; ++i) t += m.at(i, i);
  return t;
}

void check_vertex(const Graph& g, int v, const char* who) {
  if (v < 0 || v >= g.vertex_count())
    throw std::invalid_argument(std::string(who) + ": vertex out of range");
}

}  // namespace

IntPoly charpoly(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return IntPoly{1};
  Mat a = adjacency(g);
  std::vector<Int> coeff(n + 1);
  coeff[n] = 1;
  Mat m = a;
  Int c = -trace(m);
  coeff[n - 1] = c;
  for (int k = 2; k <= n; ++k) {
    // M_k = A * (M_{k-1} + c_{k-1} I)
    for (int i = 0; i < n; ++i) m.at(i, i) += c;
    m = mul(a, m);
    Int t = -trace(m);
    if (t % k != 0) throw std::runtime_error("charpoly: inexact trace division");
    c = t / k;
    coeff[n - k] = c;
  }
  return IntPoly(std::move(coeff));
}

CycleSet cycles_through_vertex(const Graph& g, int v) {
  check_vertex(g, v, "cycles_through_vertex");
  int n = g.vertex_count();
  CycleSet out;
  std::vector<int> path{v};
  std::vector<bool> on(n, false);
  on[v] = true;

  // Paths v, w1, ..., wk close into a cycle on an edge back to v; requiring
  // w1 < wk reports each cycle for exactly one of its two directions.
  auto dfs = [&](auto&& self, int cur) -> void {
    for (int w : g.neighbors(cur)) {
      if (w == v) {
        if (path.size() >= 3 && path[1] < cur) {
          std::vector<int> cyc = path;
          std::sort(cyc.begin(), cyc.end());
          out.cycles.push_back(std::move(cyc));
        }
      } else if (!on[w]) {
        on[w] = true;
        path.push_back(w);
        self(self, w);
        path.pop_back();
        on[w] = false;
      }
    }
  };
  dfs(dfs, v);
  return out;
}

CycleSet cycles_through_edge(const Graph& g, int u, int v) {
  check_vertex(g, u, "cycles_through_edge");
  check_vertex(g, v, "cycles_through_edge");
  if (!g.has_edge(u, v)) throw std::invalid_argument("cycles_through_edge: edge absent");
  int n = g.vertex_count();
  CycleSet out;
  std::vector<int> path{u};
  std::vector<bool> on(n, false);
  on[u] = true;

  // Each cycle through uv is the edge plus a unique simple u-v path of
  // length >= 2 that avoids the edge itself.
  auto dfs = [&](auto&& self, int cur) -> void {
    for (int w : g.neighbors(cur)) {
      if (w == v) {
        if (cur != u) {
          std::vector<int> cyc = path;
          cyc.push_back(v);
          std::sort(cyc.begin(), cyc.end());
          out.cycles.push_back(std::move(cyc));
        }
      } else if (!on[w]) {
        on[w] = true;
        path.push_back(w);
        self(self, w);
        path.pop_back();
        on[w] = false;
      }
    }
  };
  dfs(dfs, u);
  return out;
}

IntPoly schwenk_vertex(const Graph& g, int v, int max_vertices) {
  check_vertex(g, v, "schwenk_vertex");
  if (g.vertex_count() > max_vertices)
    throw std::invalid_argument("schwenk_vertex: graph exceeds the size gate");
  IntPoly acc = IntPoly{0, 1} * charpoly(remove_vertex(g, v));
  for (int u : g.neighbors(v)) {
    int drop[2] = {v, u};
    acc = acc - charpoly(induced_without(g, drop));
  }
  for (const auto& cyc : cycles_through_vertex(g, v).cycles)
    acc = acc - scale(charpoly(induced_without(g, cyc)), 2);
  return acc;
}

IntPoly schwenk_edge(const Graph& g, int u, int v, int max_vertices) {
  check_vertex(g, u, "schwenk_edge");
  check_vertex(g, v, "schwenk_edge");
  if (!g.has_edge(u, v)) throw std::invalid_argument("schwenk_edge: edge absent");
  if (g.vertex_count() > max_vertices)
    throw std::invalid_argument("schwenk_edge: graph exceeds the size gate");
  std::vector<std::pair<int, int>> kept;
  for (auto e : g.edges())
    if (e != std::pair{std::min(u, v), std::max(u, v)}) kept.push_back(e);
  IntPoly acc = charpoly(Graph::from_edges(g.vertex_count(), kept));
  int drop[2] = {u, v};
  acc = acc - charpoly(induced_without(g, drop));
  for (const auto& cyc : cycles_through_edge(g, u, v).cycles)
    acc = acc - scale(charpoly(induced_without(g, cyc)), 2);
  return acc;
}

std::vector<IntPoly> squarefree_layers(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_layers: zero polynomial");
  std::vector<IntPoly> layers;
  IntPoly cur = p;
  while (cur.degree() >= 1) {
    IntPoly g = poly_gcd(cur, derivative(cur));
    layers.push_back(exact_div(cur, g));
    cur = std::move(g);
  }
  return layers;
}

RootCounter::RootCounter(const IntPoly& p) {
  for (const IntPoly& layer : squarefree_layers(p)) chains_.emplace_back(layer, true);
}

int RootCounter::above(const Rational& r) const {
  int total = 0;
  for (const SturmChain& c : chains_) total += c.count_above(r);
  return total;
}

SpectralPosition spectral_position(const Graph& g, const BoundConstant& a, int budget) {
  IntPoly p = charpoly(g);
  int k = 0;
  while (auto q = try_exact_div(p, a.defining)) {
    p = std::move(*q);
    ++k;
  }
  int m = 0;
  if (p.degree() >= 1) {
    // Shrink the isolating interval of a until the deflated polynomial has
    // no root inside it; every root is then cleanly above hi or at most lo.
    IntPoly sf = squarefree_part(p);
    SturmChain sfchain(sf, true);
    SturmChain dchain(a.defining);
    Rational lo = a.lo, hi = a.hi;
    int iter = 0;
    while (sfchain.count_in(lo, hi) > 0) {
      if (++iter > budget) throw std::runtime_error("spectral_position: refinement budget exceeded");
      Rational mid = (lo + hi) / 2;
      if (dchain.count_in(lo, mid) == 1)
        hi = mid;
      else
        lo = mid;
    }
    for (const IntPoly& layer : squarefree_layers(p)) m += SturmChain(layer, true).count_above(hi);
  }
  return {m, k};
}

Rel compare_eigenvalue(const Graph& g, int j, const BoundConstant& a) {
  if (j < 1 || j > g.vertex_count())
    throw std::invalid_argument("compare_eigenvalue: index out of range");
  SpectralPosition sp = spectral_position(g, a);
  if (sp.count_above >= j) return Rel::greater;
  if (j <= sp.count_above + sp.multiplicity) return Rel::equal;
  return Rel::less;
}

int deflated_charpoly_sign(const Graph& g, const BoundConstant& a) {
  IntPoly p = charpoly(g);
  int k = 0;
  while (auto q = try_exact_div(p, a.defining)) {
    p = std::move(*q);
    ++k;
  }
  if (k == 0) throw std::invalid_argument("deflated_charpoly_sign: not an eigenvalue");
  // Q(a) = P^(k)(a) / k! and k! > 0, so the k-th derivative carries the sign.
  IntPoly dk = charpoly(g);
  for (int i = 0; i < k; ++i) dk = derivative(dk);
  Sign s = sign_at(dk, a);
  if (s == Sign::zero) throw std::runtime_error("deflated_charpoly_sign: unexpected zero");
  return s == Sign::positive ? 1 : -1;
}

std::vector<double> eigenvalues_approx(const Graph& g, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("eigenvalues_approx: tol must be positive");
  IntPoly p = charpoly(g);
  if (p.degree() == 0) return {};
  auto layers = squarefree_layers(p);
  std::vector<SturmChain> chains;
  for (const IntPoly& layer : layers) chains.emplace_back(layer, true);
  const SturmChain& chain = chains[0];

  Rational b = cauchy_root_bound(layers[0]);
  std::vector<std::pair<Rational, Rational>> isolated;
  std::vector<std::pair<Rational, Rational>> work{{-b, b}};
  while (!work.empty()) {
    auto [lo, hi] = work.back();
    work.pop_back();
    int c = chain.count_in(lo, hi);
    if (c == 0) continue;
    if (c == 1) {
      isolated.emplace_back(lo, hi);
      continue;
    }
    Rational mid = (lo + hi) / 2;
    work.emplace_back(lo, mid);
    work.emplace_back(mid, hi);
  }

  Rational width(tol);
  std::vector<std::pair<Rational, double>> roots;  // (interval lo, value)
  int total = 0;
  for (auto& [lo, hi] : isolated) {
    while (hi - lo > width) {
      Rational mid = (lo + hi) / 2;
      if (chain.count_in(lo, mid) == 1)
        hi = mid;
      else
        lo = mid;
    }
    int mult = 1;
    for (size_t i = 1; i < chains.size(); ++i) mult += chains[i].count_in(lo, hi);
    double val = Rational((lo + hi) / 2).get_d();
    for (int i = 0; i < mult; ++i) roots.emplace_back(lo, val);
    total += mult;
  }
  if (total != g.vertex_count())
    throw std::runtime_error("eigenvalues_approx: multiplicities do not sum to n");
  std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  std::vector<double> out;
  out.reserve(roots.size());
  for (auto& r : roots) out.push_back(r.second);
  return out;
}

bool interlacing_counts_ok(const Graph& g, int v, const std::vector<Rational>& probes) {
  check_vertex(g, v, "interlacing_counts_ok");
  if (g.vertex_count() < 2)
    throw std::invalid_argument("interlacing_counts_ok: need at least two vertices");
  RootCounter cg(charpoly(g));
  RootCounter ch(charpoly(remove_vertex(g, v)));
  for (const Rational& r : probes) {
    int a = cg.above(r);
    int b = ch.above(r);
    if (b != a && b != a - 1) return false;
  }
  return true;
}

}  // namespace lambda2
