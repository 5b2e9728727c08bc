#include "univoque/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <tuple>

namespace univoque {

const char* oracle_mode_name(OracleMode m) { return m == OracleMode::U_PREFIX ? "u" : "v"; }

OracleMode parse_oracle_mode(const std::string& s) {
  if (s == "u" || s == "U" || s == "U_PREFIX") return OracleMode::U_PREFIX;
  if (s == "v" || s == "V" || s == "V_PREFIX") return OracleMode::V_PREFIX;
  throw ValidationError("unknown oracle mode '" + s + "' (u|v)");
}

namespace {

// Follower automaton: the pending constraints "rest ≤ α" and "rest ≥ reflected α",
// each remembered by how many digits of α it has matched so far (mod N).
struct Automaton {
  using State = std::pair<std::uint64_t, std::uint64_t>;
  Digit M;
  Word a;
  std::size_t N;
  std::vector<State> states;
  std::map<State, int> id;
  std::vector<std::vector<int>> next;  // next[s][d], -1 when dead

  Automaton(Digit M_, const Word& period) : M(M_), a(period), N(period.size()) {
    add({0, 0});
    for (std::size_t i = 0; i < states.size(); ++i) {
      std::vector<int> row(M + 1, -1);
      for (Digit d = 0; d <= M; ++d) {
        auto t = step(states[i], d);
        if (t) row[d] = add(*t);
      }
      next.push_back(row);
    }
  }

  int add(const State& s) {
    auto [it, fresh] = id.emplace(s, static_cast<int>(states.size()));
    if (fresh) states.push_back(s);
    return it->second;
  }

  std::optional<State> step(const State& s, Digit d) const {
    std::uint64_t up = 0, lo = 0;
    for (std::size_t p = 0; p < N; ++p) {
      if (s.first >> p & 1) {
        Digit bound = a[p];
        if (d > bound) return std::nullopt;
        if (d == bound) up |= std::uint64_t{1} << ((p + 1) % N);
      }
      if (s.second >> p & 1) {
        Digit bound = M - a[p];
        if (d < bound) return std::nullopt;
        if (d == bound) lo |= std::uint64_t{1} << ((p + 1) % N);
      }
    }
    if (d < M) up |= 1;
    if (d > 0) lo |= 1;
    return State{up, lo};
  }
};

// Kosaraju over the live transition graph.
std::vector<int> components(const std::vector<std::vector<int>>& next, int& count) {
  const int n = static_cast<int>(next.size());
  std::vector<std::vector<int>> rev(n);
  for (int v = 0; v < n; ++v)
    for (int w : next[v])
      if (w >= 0) rev[w].push_back(v);
  std::vector<int> order;
  std::vector<bool> seen(n, false);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<int, std::size_t>> st{{s, 0}};
    seen[s] = true;
    while (!st.empty()) {
      auto& [v, i] = st.back();
      if (i < next[v].size()) {
        int w = next[v][i++];
        if (w >= 0 && !seen[w]) {
          seen[w] = true;
          st.push_back({w, 0});
        }
      } else {
        order.push_back(v);
        st.pop_back();
      }
    }
  }
  std::vector<int> comp(n, -1);
  count = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[*it] >= 0) continue;
    std::vector<int> todo{*it};
    comp[*it] = count;
    while (!todo.empty()) {
      int v = todo.back();
      todo.pop_back();
      for (int w : rev[v])
        if (comp[w] < 0) {
          comp[w] = count;
          todo.push_back(w);
        }
    }
    ++count;
  }
  return comp;
}

// periodic word equal to the tail of α (or its reflection) from phase p
bool matches_alpha_tail(const Word& loop, const Word& a, std::size_t p, Digit M, bool reflected) {
  const std::size_t N = a.size();
  const std::size_t len = std::max(loop.size(), N) * 2;
  for (std::size_t i = 0; i < len; ++i) {
    Digit want = a[(p + i) % N];
    if (reflected) want = M - want;
    if (loop[i % loop.size()] != want) return false;
  }
  return true;
}

std::vector<bool> live_states(const Automaton& au, OracleMode mode) {
  const int n = static_cast<int>(au.states.size());
  int nc = 0;
  auto comp = components(au.next, nc);
  std::vector<int> size(nc, 0);
  std::vector<bool> branching(nc, false), looped(nc, false);
  for (int v = 0; v < n; ++v) ++size[comp[v]];
  for (int v = 0; v < n; ++v) {
    int within = 0;
    for (int w : au.next[v])
      if (w >= 0 && comp[w] == comp[v]) {
        ++within;
        if (w == v) looped[comp[v]] = true;
      }
    if (within >= 2) branching[comp[v]] = true;
  }
  std::vector<bool> good(n, false);
  for (int v = 0; v < n; ++v) {
    int c = comp[v];
    bool cyclic = size[c] > 1 || looped[c];
    if (!cyclic) continue;
    if (mode == OracleMode::V_PREFIX || branching[c]) {
      good[v] = true;
      continue;
    }
    // a lone cycle: strict conditions fail iff some pending constraint follows α forever
    Word loop;
    std::vector<int> path;
    int u = v;
    do {
      Digit d = 0;
      while (au.next[u][d] < 0 || comp[au.next[u][d]] != c) ++d;
      loop.push_back(d);
      path.push_back(u);
      u = au.next[u][d];
    } while (u != v);
    bool ok = true;
    for (std::size_t i = 0; i < path.size() && ok; ++i) {
      Word rot(loop.begin() + i, loop.end());
      rot.insert(rot.end(), loop.begin(), loop.begin() + i);
      const auto& s = au.states[path[i]];
      for (std::size_t p = 0; p < au.N && ok; ++p) {
        if ((s.first >> p & 1) && matches_alpha_tail(rot, au.a, p, au.M, false)) ok = false;
        if ((s.second >> p & 1) && matches_alpha_tail(rot, au.a, p, au.M, true)) ok = false;
      }
    }
    good[v] = ok;
  }
  // live: reaches a good state
  std::vector<bool> live = good;
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (live[v]) continue;
      for (int w : au.next[v])
        if (w >= 0 && live[w]) {
          live[v] = changed = true;
          break;
        }
    }
  }
  return live;
}

}  // namespace

std::set<Word> enumerate_admissible_words(const BaseContext& ctx, int L, OracleMode mode) {
  if (L < 0 || L > 12) throw ValidationError("oracle word length must be in 0..12");
  if (!ctx.alpha.is_purely_periodic()) throw ValidationError("oracle needs a purely periodic alpha");
  if (ctx.N > 62) throw ValidationError("oracle supports alpha periods up to 62");
  Automaton au(ctx.M, ctx.period());
  auto live = live_states(au, mode);
  std::set<Word> out;
  if (!live[0]) return out;
  Word w;
  // depth-first over live states
  std::function<void(int)> go = [&](int s) {
    if (static_cast<int>(w.size()) == L) {
      out.insert(w);
      return;
    }
    for (Digit d = 0; d <= ctx.M; ++d) {
      int t = au.next[s][d];
      if (t < 0 || !live[t]) continue;
      w.push_back(d);
      go(t);
      w.pop_back();
    }
  };
  go(0);
  return out;
}

std::optional<Word> language_difference(const UnivoqueGraph& g, const BaseContext& ctx, int L, OracleMode mode) {
  if (L < 0 || L > 64) throw ValidationError("word length must be in 0..64");
  if (!ctx.alpha.is_purely_periodic()) throw ValidationError("oracle needs a purely periodic alpha");
  if (ctx.N > 62) throw ValidationError("oracle supports alpha periods up to 62");
  if (g.M != ctx.M) throw ValidationError("graph and base use different alphabets");
  Automaton au(ctx.M, ctx.period());
  auto live = live_states(au, mode);

  using Set = std::vector<std::uint64_t>;
  const std::size_t n = g.size(), words = (n + 63) / 64;
  std::vector<std::vector<Set>> succ(ctx.M + 1, std::vector<Set>(n, Set(words, 0)));
  for (const auto& e : g.edges) succ[e.label][e.from][e.to / 64] |= std::uint64_t{1} << (e.to % 64);
  auto step = [&](const Set& s, Digit d) {
    Set r(words, 0);
    for (std::size_t v = 0; v < n; ++v)
      if (s[v / 64] >> (v % 64) & 1)
        for (std::size_t k = 0; k < words; ++k) r[k] |= succ[d][v][k];
    return r;
  };
  auto nonempty = [](const Set& s) { return std::any_of(s.begin(), s.end(), [](auto x) { return x != 0; }); };

  // a path of length r leaves s
  std::map<std::pair<Set, int>, bool> extends;
  std::function<bool(const Set&, int)> graph_ext = [&](const Set& s, int r) {
    if (!nonempty(s)) return false;
    if (r == 0) return true;
    auto key = std::make_pair(s, r);
    if (auto it = extends.find(key); it != extends.end()) return it->second;
    bool ok = false;
    for (Digit d = 0; d <= ctx.M && !ok; ++d) ok = graph_ext(step(s, d), r - 1);
    return extends[key] = ok;
  };

  std::set<std::tuple<Set, int, int>> agreed;
  Word w;
  std::function<bool(const Set&, int, int)> same = [&](const Set& s, int state, int r) {
    if (r == 0 || !agreed.emplace(s, state, r).second) return true;
    for (Digit d = 0; d <= ctx.M; ++d) {
      Set t = step(s, d);
      int u = au.next[state][d];
      bool in_graph = graph_ext(t, r - 1), in_oracle = u >= 0 && live[u];
      w.push_back(d);
      if (in_graph != in_oracle) return false;
      if (in_graph && !same(t, u, r - 1)) return false;
      w.pop_back();
    }
    return true;
  };

  Set all(words, 0);
  for (std::size_t v = 0; v < n; ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
  bool g_any = graph_ext(all, L), o_any = live[0];
  if (g_any != o_any) return Word{};
  if (!g_any || same(all, 0, L)) return std::nullopt;
  return w;
}

BruteCount brute_count_expansions(const BaseContext& ctx, const AlgebraicReal& x, int depth) {
  if (depth < 0 || depth > 24) throw ValidationError("oracle depth must be in 0..24");
  const AlgebraicReal top = AlgebraicReal::upper_end(ctx.field);
  if (x.sign() < 0 || compare(x, top) == Cmp::GT) throw ValidationError("x must lie in [0, M/(q-1)]");
  auto feasible = [&](const AlgebraicReal& r) {
    std::vector<AlgebraicReal> out;
    for (Digit d = 0; d <= ctx.M; ++d) {
      AlgebraicReal y = r.times_q() - AlgebraicReal::integer(ctx.field, d);
      if (y.sign() >= 0 && compare(y, top) != Cmp::GT) out.push_back(y);
    }
    return out;
  };
  std::vector<AlgebraicReal> layer{x};
  for (int i = 0; i < depth; ++i) {
    std::vector<AlgebraicReal> nxt;
    for (const auto& r : layer)
      for (auto& y : feasible(r)) nxt.push_back(std::move(y));
    layer = std::move(nxt);
    if (layer.size() > 5000000) throw ValidationError("oracle prefix count exceeds 5e6");
  }
  BruteCount bc;
  bc.feasible = layer.size();
  for (const auto& r : layer) {
    // follow forced digits until the remainder repeats
    std::vector<AlgebraicReal> trail{r};
    bool pinned = false;
    for (int step = 0; step < 4 * depth + 64; ++step) {
      auto f = feasible(trail.back());
      if (f.size() != 1) break;
      auto hit = std::find_if(trail.begin(), trail.end(),
                              [&](const AlgebraicReal& t) { return compare(t, f[0]) == Cmp::EQ; });
      if (hit != trail.end()) {
        pinned = true;
        break;
      }
      trail.push_back(f[0]);
    }
    bc.pinned += pinned;
  }
  return bc;
}

}  // namespace univoque
