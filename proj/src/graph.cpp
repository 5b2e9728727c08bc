#include "univoque/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace univoque {

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::FULL: return "full";
    case Variant::TILDE: return "tilde";
    case Variant::TILDE1: return "tilde1";
  }
  return "?";
}

Variant parse_variant(const std::string& s) {
  if (s == "full") return Variant::FULL;
  if (s == "tilde") return Variant::TILDE;
  if (s == "tilde1") return Variant::TILDE1;
  throw ValidationError("unknown graph variant '" + s + "' (full|tilde|tilde1)");
}

std::vector<std::vector<Edge>> UnivoqueGraph::out_edges() const {
  std::vector<std::vector<Edge>> r(vertices.size());
  for (const auto& e : edges) r[e.from].push_back(e);
  return r;
}

std::vector<std::vector<Edge>> UnivoqueGraph::in_edges() const {
  std::vector<std::vector<Edge>> r(vertices.size());
  for (const auto& e : edges) r[e.to].push_back(e);
  return r;
}

int UnivoqueGraph::find(const std::string& name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].name() == name) return static_cast<int>(i);
  return -1;
}

namespace {

struct ClassIndex {
  std::vector<int> theta, eta;
  int a1 = -1, b1 = -1;
};

ClassIndex index_classes(const PointOrder& order, Digit M) {
  ClassIndex ix;
  ix.theta.assign(M + 1, -1);
  ix.eta.assign(M + 2, -1);
  for (std::size_t c = 0; c < order.classes.size(); ++c)
    for (const auto& p : order.classes[c].members) {
      int ci = static_cast<int>(c);
      if (p.kind == PointKind::THETA) ix.theta[p.index] = ci;
      if (p.kind == PointKind::ETA) ix.eta[p.index] = ci;
      if (p.kind == PointKind::A && p.index == 1) ix.a1 = ci;
      if (p.kind == PointKind::B && p.index == 1) ix.b1 = ci;
    }
  return ix;
}

bool has_index_at_most(const PointClass& c, PointKind kind, int lo, int hi) {
  return std::any_of(c.members.begin(), c.members.end(),
                     [&](const Point& p) { return p.kind == kind && p.index >= lo && p.index <= hi; });
}

// first class with value ≥ x
int lower_class(const PointOrder& order, const AlgebraicReal& x) {
  int lo = 0, hi = static_cast<int>(order.classes.size());
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (compare(order.classes[mid].value(), x) == Cmp::LT)
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo;
}

// last class with value ≤ x
int upper_class(const PointOrder& order, const AlgebraicReal& x) {
  int lo = 0, hi = static_cast<int>(order.classes.size());
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (compare(order.classes[mid].value(), x) != Cmp::GT)
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo - 1;
}

}  // namespace

UnivoqueGraph build_graph(const BaseContext& ctx, Variant variant) {
  return build_graph(ctx, order_points(ctx), variant);
}

UnivoqueGraph build_graph(const BaseContext& ctx, const PointOrder& order, Variant variant) {
  if (!ctx.graph_capable())
    throw ValidationError(std::string("graphs are defined only for bases in V minus U, class is ") +
                          class_name(ctx.cls));
  const Digit M = ctx.M;
  const int N = static_cast<int>(ctx.N);
  const ClassIndex ix = index_classes(order, M);
  const int P = static_cast<int>(order.classes.size());

  UnivoqueGraph g;
  g.variant = Variant::FULL;
  g.M = M;
  for (int l = 0; l + 1 < P; ++l) {
    const int r = l + 1;
    bool in_switch = false;
    for (int j = 1; j <= M && !in_switch; ++j) in_switch = ix.theta[j] <= l && r <= ix.eta[j];
    if (in_switch) continue;
    const PointClass& L = order.classes[l];
    const PointClass& R = order.classes[r];
    Vertex v;
    v.left = l;
    v.right = r;
    v.left_name = L.label();
    v.right_name = R.label();
    v.lo = L.value();
    v.hi = R.value();
    if (has_index_at_most(R, PointKind::A, 1, N)) v.kinds |= A_RIGHT;
    if (has_index_at_most(L, PointKind::B, 1, N)) v.kinds |= B_LEFT;
    if (has_index_at_most(L, PointKind::A, 1, N) && has_index_at_most(R, PointKind::B, 1, N)) v.kinds |= AB;
    if (has_index_at_most(R, PointKind::THETA, 1, M)) v.kinds |= THETA_LEFT;
    if (has_index_at_most(L, PointKind::ETA, 1, M)) v.kinds |= ETA_RIGHT;
    for (int j = 1; j <= M; ++j)
      if (ix.theta[j] <= l) v.forced = j;
    g.vertices.push_back(std::move(v));
  }

  const AlgebraicReal top = AlgebraicReal::upper_end(ctx.field);
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const Vertex& I = g.vertices[i];
    for (Digit k = 0; k <= M; ++k) {
      AlgebraicReal lo = I.lo.apply_T(k), hi = I.hi.apply_T(k);
      if (hi.sign() <= 0 || compare(lo, top) != Cmp::LT) continue;
      int from = lower_class(order, lo), to = upper_class(order, hi);
      for (std::size_t j = 0; j < g.vertices.size(); ++j)
        if (g.vertices[j].left >= from && g.vertices[j].right <= to)
          g.edges.push_back({static_cast<int>(i), k, static_cast<int>(j)});
    }
  }
  std::sort(g.edges.begin(), g.edges.end());

  if (variant == Variant::FULL) return g;
  std::vector<int> keep;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const Vertex& v = g.vertices[i];
    bool inside = v.left >= ix.b1 && v.right <= ix.a1;
    if (variant == Variant::TILDE1) inside = inside && (v.is(A_RIGHT) || v.is(B_LEFT));
    if (inside) keep.push_back(static_cast<int>(i));
  }
  UnivoqueGraph sub = induced_subgraph(g, keep);
  sub.variant = variant;
  return sub;
}

UnivoqueGraph induced_subgraph(const UnivoqueGraph& g, const std::vector<int>& keep) {
  UnivoqueGraph s;
  s.variant = g.variant;
  s.M = g.M;
  std::vector<int> pos(g.size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    pos[keep[i]] = static_cast<int>(i);
    s.vertices.push_back(g.vertices[keep[i]]);
  }
  for (const auto& e : g.edges)
    if (pos[e.from] >= 0 && pos[e.to] >= 0) s.edges.push_back({pos[e.from], e.label, pos[e.to]});
  std::sort(s.edges.begin(), s.edges.end());
  return s;
}

// ---------------------------------------------------------------- SCC

bool SccResult::nontrivial(const UnivoqueGraph& g, int c) const {
  if (members[c].size() > 1) return true;
  int v = members[c][0];
  return std::any_of(g.edges.begin(), g.edges.end(), [&](const Edge& e) { return e.from == v && e.to == v; });
}

SccResult scc(const UnivoqueGraph& g) {
  const int n = static_cast<int>(g.size());
  auto out = g.out_edges();
  std::vector<int> index(n, -1), low(n, 0), raw(n, -1);
  std::vector<bool> on(n, false);
  std::vector<int> stack;
  int counter = 0, ncomp = 0;
  // iterative Tarjan
  for (int s = 0; s < n; ++s) {
    if (index[s] >= 0) continue;
    std::vector<std::pair<int, std::size_t>> call{{s, 0}};
    index[s] = low[s] = counter++;
    stack.push_back(s);
    on[s] = true;
    while (!call.empty()) {
      auto& [v, it] = call.back();
      if (it < out[v].size()) {
        int w = out[v][it++].to;
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on[w] = true;
          call.push_back({w, 0});
        } else if (on[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on[w] = false;
          raw[w] = ncomp;
        } while (w != v);
        ++ncomp;
      }
      int done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  // renumber by smallest member
  std::vector<int> first(ncomp, n);
  for (int v = 0; v < n; ++v) first[raw[v]] = std::min(first[raw[v]], v);
  std::vector<int> ord(ncomp);
  for (int c = 0; c < ncomp; ++c) ord[c] = c;
  std::sort(ord.begin(), ord.end(), [&](int x, int y) { return first[x] < first[y]; });
  std::vector<int> rename(ncomp);
  for (int c = 0; c < ncomp; ++c) rename[ord[c]] = c;
  SccResult r;
  r.comp.resize(n);
  r.members.resize(ncomp);
  for (int v = 0; v < n; ++v) {
    r.comp[v] = rename[raw[v]];
    r.members[r.comp[v]].push_back(v);
  }
  for (const auto& e : g.edges)
    if (r.comp[e.from] != r.comp[e.to]) r.dag.insert({r.comp[e.from], r.comp[e.to]});
  return r;
}

std::vector<bool> reachable(const UnivoqueGraph& g, const std::vector<int>& sources) {
  auto out = g.out_edges();
  std::vector<bool> seen(g.size(), false);
  std::vector<int> todo;
  for (int s : sources)
    if (!seen[s]) {
      seen[s] = true;
      todo.push_back(s);
    }
  while (!todo.empty()) {
    int v = todo.back();
    todo.pop_back();
    for (const auto& e : out[v])
      if (!seen[e.to]) {
        seen[e.to] = true;
        todo.push_back(e.to);
      }
  }
  return seen;
}

// ---------------------------------------------------------------- connectivity

ConnectivityReport connectivity_report(const BaseContext& ctx) {
  if (ctx.cls != BaseClass::IN_CLOSURE_U_NOT_U)
    throw ValidationError("connectivity criteria apply to bases in closure(U) minus U");
  SpecialPoints sp = special_points(ctx);
  PointOrder order = order_points(ctx, sp);
  UnivoqueGraph t = build_graph(ctx, order, Variant::TILDE);
  ConnectivityReport rep;
  SccResult s = scc(t);
  rep.components = s.members.size();
  rep.direct = s.strongly_connected();

  std::vector<int> g1;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t.vertices[i].is(A_RIGHT) || t.vertices[i].is(B_LEFT)) g1.push_back(static_cast<int>(i));
  auto seen = reachable(t, g1);
  rep.p121 = true;
  for (std::size_t i = 0; i < t.size(); ++i)
    if ((t.vertices[i].is(AB) || t.vertices[i].is(THETA_LEFT)) && !seen[i]) {
      rep.p121 = false;
      rep.unreached.push_back(t.vertices[i].name());
    }

  rep.p125 = true;
  const int N = static_cast<int>(ctx.N);
  for (int i = 2; i < N; ++i)
    if (compare(sp.Bp(2).value, sp.A(i).value) != Cmp::LT) rep.p125 = false;

  std::vector<int> all1 = g1;
  rep.tilde1_strong = !g1.empty() && scc(induced_subgraph(t, g1)).strongly_connected();

  if (rep.direct != rep.p121)
    throw ConsistencyError("reachability criterion disagrees with the direct strong-connectivity verdict");
  if (rep.p125 && !rep.direct) throw ConsistencyError("sufficient condition holds but the graph is not strongly connected");
  return rep;
}

// ---------------------------------------------------------------- isomorphism

namespace {

bool verify_map(const UnivoqueGraph& g1, const UnivoqueGraph& g2, const std::vector<int>& f) {
  std::vector<Edge> mapped;
  for (const auto& e : g1.edges) mapped.push_back({f[e.from], e.label, f[e.to]});
  std::sort(mapped.begin(), mapped.end());
  return mapped == g2.edges;
}

struct Signature {
  std::vector<Digit> out_labels;
  std::size_t in = 0;
  bool loop = false;
  auto operator<=>(const Signature&) const = default;
};

std::vector<Signature> signatures(const UnivoqueGraph& g) {
  std::vector<Signature> s(g.size());
  for (const auto& e : g.edges) {
    s[e.from].out_labels.push_back(e.label);
    s[e.to].in++;
    if (e.from == e.to) s[e.from].loop = true;
  }
  for (auto& x : s) std::sort(x.out_labels.begin(), x.out_labels.end());
  return s;
}

}  // namespace

std::optional<std::vector<int>> check_isomorphic(const UnivoqueGraph& g1, const UnivoqueGraph& g2) {
  const std::size_t n = g1.size();
  if (n != g2.size() || g1.edges.size() != g2.edges.size()) return std::nullopt;
  std::vector<int> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);
  if (verify_map(g1, g2, id)) return id;
  if (n > 64) return std::nullopt;

  auto s1 = signatures(g1), s2 = signatures(g2);
  std::map<std::pair<int, int>, std::vector<Digit>> e1, e2;
  for (const auto& e : g1.edges) e1[{e.from, e.to}].push_back(e.label);
  for (const auto& e : g2.edges) e2[{e.from, e.to}].push_back(e.label);
  auto labels = [](const std::map<std::pair<int, int>, std::vector<Digit>>& m, int a, int b) {
    auto it = m.find({a, b});
    return it == m.end() ? std::vector<Digit>{} : it->second;
  };
  std::vector<int> f(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || s1[i] != s2[c]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = labels(e1, static_cast<int>(i), static_cast<int>(j)) == labels(e2, static_cast<int>(c), f[j]) &&
             labels(e1, static_cast<int>(j), static_cast<int>(i)) == labels(e2, f[j], static_cast<int>(c));
      }
      if (ok) ok = labels(e1, static_cast<int>(i), static_cast<int>(i)) ==
                   labels(e2, static_cast<int>(c), static_cast<int>(c));
      if (!ok) continue;
      f[i] = static_cast<int>(c);
      used[c] = true;
      if (go(i + 1)) return true;
      used[c] = false;
      f[i] = -1;
    }
    return false;
  };
  if (go(0) && verify_map(g1, g2, f)) return f;
  return std::nullopt;
}

// ---------------------------------------------------------------- tower

namespace {

int vertex_with_left(const UnivoqueGraph& g, const PointOrder& order, PointKind kind, int index) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (order.classes[g.vertices[i].left].has(kind, index)) return static_cast<int>(i);
  return -1;
}

// Embedding of G(q_m) into G(q_{m+1}) through left endpoints.
std::vector<int> embed(const BaseContext& qm, const UnivoqueGraph& gm, const PointOrder& om,
                       const UnivoqueGraph& gn, const PointOrder& on) {
  const int n = static_cast<int>(qm.N / 2);
  std::vector<int> F(gm.size(), -1);
  for (std::size_t v = 0; v < gm.size(); ++v) {
    const PointClass& c = om.classes[gm.vertices[v].left];
    PointKind kind = PointKind::A;
    int index = -1;
    if (c.has(PointKind::A, n)) {
      index = n;
    } else {
      for (const auto& p : c.members)
        if (p.kind == PointKind::A && p.index != 2 * n && index < 0) index = p.index;
      if (index < 0)
        for (const auto& p : c.members)
          if ((p.kind == PointKind::THETA || p.kind == PointKind::ETA) && index < 0) {
            kind = p.kind;
            index = p.index;
          }
    }
    if (index < 0) throw ConsistencyError("vertex " + gm.vertices[v].name() + " has no admissible left endpoint");
    F[v] = vertex_with_left(gn, on, kind, index);
    if (F[v] < 0)
      throw ConsistencyError("no image vertex for " + gm.vertices[v].name() + " via " + point_name(kind, index));
  }
  std::vector<int> sorted = F;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ConsistencyError("embedding is not injective");
  // labeled edges correspond exactly on the image
  std::vector<int> pos(gn.size(), -1);
  for (std::size_t v = 0; v < F.size(); ++v) pos[F[v]] = static_cast<int>(v);
  std::vector<Edge> mapped, image;
  for (const auto& e : gm.edges) mapped.push_back({F[e.from], e.label, F[e.to]});
  for (const auto& e : gn.edges)
    if (pos[e.from] >= 0 && pos[e.to] >= 0) image.push_back(e);
  std::sort(mapped.begin(), mapped.end());
  if (mapped != image) throw ConsistencyError("embedding does not preserve labeled edges");
  return F;
}

}  // namespace

TowerDecomposition tower_decompose(const BaseContext& ctx0, int m) {
  if (ctx0.cls != BaseClass::IN_CLOSURE_U_NOT_U) throw ValidationError("tower needs q_0 in closure(U) minus U");
  if (m < 1) throw ValidationError("tower height must be at least 1");
  TowerDecomposition t;
  t.n = ctx0.N;
  t.chain.push_back(ctx0);
  for (int j = 1; j <= m; ++j) t.chain.push_back(v_successor(t.chain.back()));
  std::vector<PointOrder> orders;
  for (int j = 1; j <= m; ++j) {
    orders.push_back(order_points(t.chain[j]));
    t.graphs.push_back(build_graph(t.chain[j], orders.back(), Variant::FULL));
  }

  // emb[j]: vertices of G(q_{j+1}) -> G(q_m)
  std::vector<std::vector<int>> emb(m);
  std::vector<std::vector<int>> local_cycles(m);  // cycle C_{j+1} in G(q_{j+1}) ids
  std::vector<Word> words(m);
  {
    std::vector<int> id(t.graphs[m - 1].size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    emb[m - 1] = id;
  }
  for (int j = m - 2; j >= 0; --j) {
    auto F = embed(t.chain[j + 1], t.graphs[j], orders[j], t.graphs[j + 1], orders[j + 1]);
    emb[j].resize(F.size());
    for (std::size_t v = 0; v < F.size(); ++v) emb[j][v] = emb[j + 1][F[v]];

    const UnivoqueGraph& gn = t.graphs[j + 1];
    std::vector<bool> in_image(gn.size(), false);
    for (int v : F) in_image[v] = true;
    std::vector<int> rest;
    for (std::size_t v = 0; v < gn.size(); ++v)
      if (!in_image[v]) rest.push_back(static_cast<int>(v));
    const std::size_t len = t.chain[j + 1].N;
    if (rest.size() != len)
      throw ConsistencyError("complement of the embedded graph has " + std::to_string(rest.size()) +
                             " vertices, expected " + std::to_string(len));
    auto out = gn.out_edges();
    int start = -1;
    for (int v : rest)
      if (orders[j + 1].classes[gn.vertices[v].right].has(PointKind::A, 1)) start = v;
    if (start < 0) throw ConsistencyError("no cycle vertex ending at a_1");
    std::vector<int> cyc;
    Word w;
    int v = start;
    do {
      if (out[v].size() != 1 || in_image[out[v][0].to])
        throw ConsistencyError("cycle vertex " + gn.vertices[v].name() + " is not purely cyclical");
      cyc.push_back(v);
      w.push_back(out[v][0].label);
      v = out[v][0].to;
    } while (v != start && cyc.size() <= len);
    if (v != start || cyc.size() != len) throw ConsistencyError("complement is not a single cycle");
    local_cycles[j + 1] = cyc;
    words[j + 1] = w;
  }

  t.blocks.resize(m);
  for (std::size_t v = 0; v < t.graphs[0].size(); ++v) t.blocks[0].push_back(emb[0][v]);
  for (int j = 1; j < m; ++j) {
    std::vector<int> cyc;
    for (int v : local_cycles[j]) cyc.push_back(emb[j][v]);
    t.cycles.push_back(cyc);
    t.cycle_words.push_back(words[j]);
    std::vector<int> b = cyc;
    std::sort(b.begin(), b.end());
    t.blocks[j] = b;
  }
  std::sort(t.blocks[0].begin(), t.blocks[0].end());

  // sizes and partition
  const UnivoqueGraph& top = t.graphs.back();
  std::vector<int> block_of(top.size(), -1);
  for (int j = 0; j < m; ++j)
    for (int v : t.blocks[j]) {
      if (block_of[v] >= 0) throw ConsistencyError("tower blocks overlap");
      block_of[v] = j;
    }
  for (int b : block_of)
    if (b < 0) throw ConsistencyError("tower blocks do not cover the graph");
  const std::size_t n = t.n;
  if (t.blocks[0].size() != 2 * n + static_cast<std::size_t>(ctx0.M) - 1)
    throw ConsistencyError("first block has the wrong size");
  for (int j = 1; j < m; ++j)
    if (t.blocks[j].size() != (std::size_t{1} << j) * n) throw ConsistencyError("block size mismatch");

  // each C_j stays a pure cycle inside G(q_m), and reachability runs upward only
  for (int j = 1; j < m; ++j) {
    UnivoqueGraph c = induced_subgraph(top, t.blocks[j]);
    auto out = c.out_edges();
    for (const auto& o : out)
      if (o.size() != 1) throw ConsistencyError("spanned cycle subgraph is not purely cyclical");
    if (!scc(c).strongly_connected()) throw ConsistencyError("spanned cycle subgraph is not a single cycle");
  }
  for (int j = 0; j < m; ++j) {
    auto seen = reachable(top, t.blocks[j]);
    for (int k = 0; k < m; ++k) {
      bool hit = std::any_of(t.blocks[k].begin(), t.blocks[k].end(), [&](int v) { return seen[v]; });
      if (hit != (j <= k))
        throw ConsistencyError("reachability between blocks " + std::to_string(j + 1) + " and " +
                               std::to_string(k + 1) + " is wrong");
    }
  }
  for (int j = 1; j < m; ++j)
    if (words[j] != t.chain[j].period())
      throw ConsistencyError("cycle word differs from the period of alpha(q_" + std::to_string(j) + ")");
  return t;
}

// ---------------------------------------------------------------- words

namespace {

using Bits = std::vector<std::uint64_t>;

Bits full_set(std::size_t n) {
  Bits b((n + 63) / 64, 0);
  for (std::size_t i = 0; i < n; ++i) b[i / 64] |= std::uint64_t{1} << (i % 64);
  return b;
}

bool empty(const Bits& b) {
  return std::all_of(b.begin(), b.end(), [](std::uint64_t x) { return x == 0; });
}

struct Stepper {
  std::vector<std::vector<Bits>> next;  // next[d][v]
  Digit M;
  std::size_t n;
  Stepper(const UnivoqueGraph& g) : M(g.M), n(g.size()) {
    next.assign(M + 1, std::vector<Bits>(n, Bits((n + 63) / 64, 0)));
    for (const auto& e : g.edges) next[e.label][e.from][e.to / 64] |= std::uint64_t{1} << (e.to % 64);
  }
  Bits step(const Bits& s, Digit d) const {
    Bits r(s.size(), 0);
    for (std::size_t v = 0; v < n; ++v)
      if (s[v / 64] >> (v % 64) & 1)
        for (std::size_t k = 0; k < r.size(); ++k) r[k] |= next[d][v][k];
    return r;
  }
};

}  // namespace

std::uint64_t count_label_paths(const UnivoqueGraph& g, int L) {
  if (L < 0) throw ValidationError("word length must be nonnegative");
  if (g.size() == 0) return L == 0 ? 1 : 0;
  Stepper st(g);
  std::map<Bits, std::uint64_t> layer{{full_set(g.size()), 1}};
  for (int i = 0; i < L; ++i) {
    std::map<Bits, std::uint64_t> nxt;
    for (const auto& [s, c] : layer)
      for (Digit d = 0; d <= g.M; ++d) {
        Bits t = st.step(s, d);
        if (!empty(t)) nxt[t] += c;
      }
    layer = std::move(nxt);
  }
  std::uint64_t total = 0;
  for (const auto& [s, c] : layer) total += c;
  return total;
}

std::set<Word> label_words(const UnivoqueGraph& g, int L) {
  if (L < 0 || L > 14) throw ValidationError("word enumeration supports lengths 0..14");
  std::set<Word> out;
  if (g.size() == 0) {
    if (L == 0) out.insert(Word{});
    return out;
  }
  Stepper st(g);
  Word w;
  std::function<void(const Bits&)> go = [&](const Bits& s) {
    if (static_cast<int>(w.size()) == L) {
      out.insert(w);
      if (out.size() > 1000000) throw ValidationError("word enumeration exceeds 10^6 words");
      return;
    }
    for (Digit d = 0; d <= g.M; ++d) {
      Bits t = st.step(s, d);
      if (empty(t)) continue;
      w.push_back(d);
      go(t);
      w.pop_back();
    }
  };
  go(full_set(g.size()));
  return out;
}

// ---------------------------------------------------------------- export

std::string to_dot(const UnivoqueGraph& g) {
  std::ostringstream os;
  os << "digraph G {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < g.size(); ++i) os << "  v" << i << " [label=\"" << g.vertices[i].name() << "\"];\n";
  for (const auto& e : g.edges) os << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.label << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string to_json(const UnivoqueGraph& g, int places) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["variant"] = variant_name(g.variant);
  j["M"] = g.M;
  ordered_json vs = ordered_json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Vertex& v = g.vertices[i];
    ordered_json kinds = ordered_json::array();
    for (auto [k, n] : {std::pair{A_RIGHT, "a_right"}, {B_LEFT, "b_left"}, {AB, "ab"}, {THETA_LEFT, "theta_left"},
                        {ETA_RIGHT, "eta_right"}})
      if (v.is(k)) kinds.push_back(n);
    vs.push_back({{"id", i},
                  {"label", v.name()},
                  {"left", v.left_name},
                  {"right", v.right_name},
                  {"left_approx", v.lo.approx(places)},
                  {"right_approx", v.hi.approx(places)},
                  {"kinds", kinds},
                  {"digit", v.forced}});
  }
  j["vertices"] = vs;
  ordered_json es = ordered_json::array();
  for (const auto& e : g.edges) es.push_back({{"from", e.from}, {"label", e.label}, {"to", e.to}});
  j["edges"] = es;
  return j.dump(2);
}

}  // namespace univoque
