#include "univoque/spectral.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace univoque {

Matrix adjacency_matrix(const UnivoqueGraph& g) {
  Matrix a(g.size(), std::vector<long>(g.size(), 0));
  for (const auto& e : g.edges) a[e.from][e.to] += 1;
  return a;
}

IntPoly characteristic_polynomial(const Matrix& a) {
  const std::size_t n = a.size();
  using IntMatrix = std::vector<std::vector<Int>>;
  IntMatrix A(n, std::vector<Int>(n)), Mk(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A[i][j] = a[i][j];
  std::vector<Int> c(n + 1, 0);
  c[n] = 1;
  // Faddeev–LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (A[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] += A[i][l] * Mk[l][j];
      }
    for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    Mk = std::move(next);
    Int tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += A[i][l] * Mk[l][i];
    if (tr % Int(static_cast<long>(k)) != 0) throw ConsistencyError("characteristic polynomial is not integral");
    c[n - k] = -tr / Int(static_cast<long>(k));
  }
  return IntPoly(c);
}

namespace {

Radius irreducible_radius(const Matrix& a) {
  const std::size_t n = a.size();
  Radius r;
  if (n == 1) {
    r.value = static_cast<long double>(a[0][0]);
    r.charpoly_checked = true;
    return r;
  }
  // power iteration on A + I, which is primitive
  std::vector<long double> x(n, 1.0L), y(n);
  long double lo = 0, hi = 0;
  for (int it = 0; it < 100000; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      long double s = x[i];
      for (std::size_t j = 0; j < n; ++j) s += a[i][j] * x[j];
      y[i] = s;
    }
    lo = INFINITY;
    hi = 0;
    long double top = 0;
    for (std::size_t i = 0; i < n; ++i) {
      long double q = y[i] / x[i];
      lo = std::min(lo, q);
      hi = std::max(hi, q);
      top = std::max(top, y[i]);
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / top;
    if (hi - lo <= 1e-13L * hi) break;
  }
  r.value = (lo + hi) / 2 - 1;
  r.err = (hi - lo) / 2;
  if (hi - lo > 1e-12L * hi) throw ConsistencyError("power iteration did not converge");
  if (n <= 12) {
    IntPoly p = characteristic_polynomial(a);
    long double eps = std::max(4 * r.err, 1e-9L * std::max<long double>(1, r.value));
    int s1 = sgn(p.eval(Rat(static_cast<double>(r.value - eps))));
    int s2 = sgn(p.eval(Rat(static_cast<double>(r.value + eps))));
    if (s1 * s2 >= 0) throw ConsistencyError("characteristic polynomial does not bracket the Perron root");
    r.charpoly_checked = true;
  }
  return r;
}

std::vector<std::vector<int>> blocks_of(const Matrix& a) {
  UnivoqueGraph g;
  g.vertices.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[i][j] > 0) g.edges.push_back({static_cast<int>(i), 0, static_cast<int>(j)});
  return scc(g).members;
}

Matrix restrict(const Matrix& a, const std::vector<int>& idx) {
  Matrix b(idx.size(), std::vector<long>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) b[i][j] = a[idx[i]][idx[j]];
  return b;
}

Radius max_over_blocks(const Matrix& a, std::vector<ComponentRadius>* parts) {
  Radius best;
  best.charpoly_checked = true;
  for (const auto& blk : blocks_of(a)) {
    Radius r = irreducible_radius(restrict(a, blk));
    if (parts) parts->push_back({blk, r.value});
    if (r.value > best.value) best = r;
    best.charpoly_checked = best.charpoly_checked && (r.charpoly_checked || blk.size() > 12);
  }
  return best;
}

long double log_q(const BaseContext& ctx) {
  ctx.field->refine(Rat(Int(1), Int("1000000000000000")));
  return std::log(static_cast<long double>(ctx.field->to_double()));
}

}  // namespace

Radius perron_radius(const Matrix& a) {
  if (a.empty()) return {};
  return max_over_blocks(a, nullptr);
}

Radius spectral_radius(const UnivoqueGraph& g) { return perron_radius(adjacency_matrix(g)); }

long double dimension_of(const UnivoqueGraph& g, const BaseContext& ctx) {
  Radius r = spectral_radius(g);
  if (r.value < 1) return 0;
  return std::log(r.value) / log_q(ctx);
}

SpectralReport spectral_report(const UnivoqueGraph& g, const BaseContext& ctx) {
  SpectralReport rep;
  rep.matrix = adjacency_matrix(g);
  if (!rep.matrix.empty()) rep.radius = max_over_blocks(rep.matrix, &rep.per_scc);
  rep.entropy = rep.radius.value < 1 ? 0 : std::log(rep.radius.value);
  rep.dimension = rep.entropy / log_q(ctx);
  return rep;
}

ComponentDimensions component_dimensions(const BaseContext& ctx) {
  if (ctx.cls != BaseClass::IN_CLOSURE_U_NOT_U)
    throw ValidationError("component dimensions apply to bases in closure(U) minus U");
  UnivoqueGraph t = build_graph(ctx, Variant::TILDE);
  ComponentDimensions cd;
  cd.report = spectral_report(t, ctx);
  for (const auto& c : cd.report.per_scc) {
    bool inside = std::any_of(c.vertices.begin(), c.vertices.end(), [&](int v) {
      return t.vertices[v].is(A_RIGHT) || t.vertices[v].is(B_LEFT);
    });
    cd.meets_tilde1.push_back(inside);
    if (inside) cd.tilde1_radius = std::max(cd.tilde1_radius, c.radius);
  }
  cd.t110_hypothesis = std::fabs(cd.tilde1_radius - cd.report.radius.value) <= 1e-9L;
  return cd;
}

std::string to_json(const SpectralReport& r, int places) {
  auto dec = [places](long double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(places) << v;
    return os.str();
  };
  nlohmann::ordered_json j;
  j["radius"] = dec(r.radius.value);
  j["radius_err"] = static_cast<double>(r.radius.err);
  j["entropy"] = dec(r.entropy);
  j["dimension"] = dec(r.dimension);
  j["charpoly_checked"] = r.radius.charpoly_checked;
  auto comps = nlohmann::ordered_json::array();
  for (const auto& c : r.per_scc) comps.push_back({{"vertices", c.vertices}, {"radius", dec(c.radius)}});
  j["scc"] = comps;
  return j.dump(2);
}

}  // namespace univoque
