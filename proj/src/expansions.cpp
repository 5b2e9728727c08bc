#include "univoque/expansions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "univoque/graph.hpp"

namespace univoque {

namespace {

void check_range(const BaseContext& ctx, const AlgebraicReal& x) {
  if (x.sign() < 0 || compare(x, AlgebraicReal::upper_end(ctx.field)) == Cmp::GT)
    throw ValidationError("x must lie in [0, M/(q-1)]");
}

Digit greedy_digit(const BaseContext& ctx, const AlgebraicReal& x) {
  Digit d = ctx.M;
  while (d > 0 && x.apply_T(d).sign() < 0) --d;
  return d;
}

Word zeros(std::size_t n) { return Word(n, 0); }

}  // namespace

Word greedy_expand(const BaseContext& ctx, const AlgebraicReal& x, int L) {
  check_range(ctx, x);
  Word out;
  AlgebraicReal s = x;
  for (int i = 0; i < L; ++i) {
    Digit d = greedy_digit(ctx, s);
    out.push_back(d);
    s = s.apply_T(d);
  }
  return out;
}

EpSeq greedy_sequence(const BaseContext& ctx, const AlgebraicReal& x, std::size_t bound) {
  check_range(ctx, x);
  std::map<AlgebraicReal, std::size_t, ExactLess> seen;
  Word digits;
  AlgebraicReal s = x;
  while (digits.size() <= bound) {
    if (s.sign() == 0) return EpSeq::finite(digits);
    auto [it, fresh] = seen.emplace(s, digits.size());
    if (!fresh) {
      std::size_t k = it->second;
      return EpSeq(Word(digits.begin(), digits.begin() + k), Word(digits.begin() + k, digits.end()));
    }
    Digit d = greedy_digit(ctx, s);
    digits.push_back(d);
    s = s.apply_T(d);
  }
  throw ValidationError("greedy expansion not eventually periodic within " + std::to_string(bound) + " digits");
}

EpSeq quasi_greedy_expand(const BaseContext& ctx, const AlgebraicReal& x, std::size_t bound) {
  EpSeq g = greedy_sequence(ctx, x, bound);
  if (!g.has_finite_tail() || g.is_zero()) return g;
  Word w = g.finite_word();
  return prepend(minus(w), ctx.alpha);
}

// ---------------------------------------------------------------- counting

const char* count_kind_name(CountKind k) {
  switch (k) {
    case CountKind::EXACT: return "EXACT";
    case CountKind::INFINITE_CYCLE: return "INFINITE_CYCLE";
    case CountKind::CAP_EXCEEDED: return "CAP_EXCEEDED";
  }
  return "?";
}

std::string ExpansionCount::to_string() const {
  if (kind == CountKind::EXACT) return "EXACT(" + std::to_string(count) + ")";
  return count_kind_name(kind);
}

ExpansionCount count_expansions(const BaseContext& ctx, const AlgebraicReal& x, std::size_t cap) {
  if (cap < 1) throw ValidationError("cap must be at least 1");
  check_range(ctx, x);
  const AlgebraicReal top = AlgebraicReal::upper_end(ctx.field);
  std::vector<AlgebraicReal> states{x};
  std::map<AlgebraicReal, int, ExactLess> index{{x, 0}};
  UnivoqueGraph g;
  g.M = ctx.M;
  ExpansionCount res;
  for (std::size_t i = 0; i < states.size(); ++i) {
    bool any = false;
    for (Digit d = 0; d <= ctx.M; ++d) {
      AlgebraicReal y = states[i].apply_T(d);
      if (y.sign() < 0) break;
      if (compare(y, top) == Cmp::GT) continue;
      any = true;
      auto [it, fresh] = index.emplace(y, static_cast<int>(states.size()));
      if (fresh) {
        if (states.size() >= cap) {
          res.kind = CountKind::CAP_EXCEEDED;
          res.states = states.size();
          return res;
        }
        states.push_back(y);
      }
      g.edges.push_back({static_cast<int>(i), d, it->second});
    }
    if (!any) throw ConsistencyError("remainder with no feasible digit");
  }
  g.vertices.resize(states.size());
  std::sort(g.edges.begin(), g.edges.end());
  res.states = states.size();

  SccResult s = scc(g);
  auto out = g.out_edges();
  std::vector<bool> cyclic(states.size(), false);
  for (std::size_t c = 0; c < s.members.size(); ++c)
    if (s.nontrivial(g, static_cast<int>(c)))
      for (int v : s.members[c]) {
        cyclic[v] = true;
        if (out[v].size() >= 2) ++res.branching_states;
      }
  if (res.branching_states > 0) {
    res.kind = CountKind::INFINITE_CYCLE;
    return res;
  }

  // every cycle is a closed loop; count paths into them
  std::vector<std::uint64_t> memo(states.size(), 0);
  std::vector<bool> done(states.size(), false);
  std::function<std::uint64_t(int)> paths = [&](int v) -> std::uint64_t {
    if (done[v]) return memo[v];
    std::uint64_t n = 0;
    if (cyclic[v]) {
      n = 1;
    } else {
      for (const auto& e : out[v]) n = std::min<std::uint64_t>(n + paths(e.to), UINT64_MAX / 2);
    }
    done[v] = true;
    return memo[v] = n;
  };
  res.kind = CountKind::EXACT;
  res.count = paths(0);

  if (res.count <= 4096) {
    Word prefix;
    std::function<void(int)> walk = [&](int v) {
      if (cyclic[v]) {
        Word loop;
        int u = v;
        do {
          loop.push_back(out[u][0].label);
          u = out[u][0].to;
        } while (u != v);
        res.witnesses.push_back(EpSeq(prefix, loop));
        return;
      }
      for (const auto& e : out[v]) {
        prefix.push_back(e.label);
        walk(e.to);
        prefix.pop_back();
      }
    };
    walk(0);
    std::sort(res.witnesses.begin(), res.witnesses.end(), lex_less);
  }
  return res;
}

// ---------------------------------------------------------------- admissibility

FilterResult f_family_filter(const BaseContext& ctx, const EpSeq& c, Strictness strictness) {
  check_alphabet(c, ctx.M);
  if (!ctx.graph_capable()) throw ValidationError("the admissibility filter needs a base in V minus U");
  const Digit M = ctx.M;
  const EpSeq& alpha = ctx.alpha;
  const Word& w = ctx.period();
  const std::size_t N = w.size();
  const bool strict = strictness == Strictness::STRICT;
  auto ok = [strict](Cmp r) { return strict ? r == Cmp::LT : r != Cmp::GT; };

  FilterResult r;
  r.starts_with_conj = c.prefix(N) == reflect(w, M);
  const std::size_t span = c.pre().size() + c.per().size();
  for (std::size_t n = 0; n <= span && r.failure.empty(); ++n) {
    Digit cn = n == 0 ? -1 : c.at(n - 1);
    EpSeq tail = shift(c, n);
    if ((n == 0 || cn < M) && !ok(lex_cmp(tail, alpha)))
      r.failure = "shift at n=" + std::to_string(n) + " is not below alpha";
    else if ((n == 0 || cn > 0) && !ok(lex_cmp(reflect(tail, M), alpha)))
      r.failure = "reflected shift at n=" + std::to_string(n) + " is not below alpha";
  }
  for (std::size_t k = 1; k < N && r.failure.empty(); ++k) {
    if (w[k - 1] >= M) continue;
    Word head = plus(Word(w.begin() + k, w.end()));
    if (!ok(lex_cmp(prepend(head, c), alpha)))
      r.failure = "alpha_" + std::to_string(k + 1) + "..alpha_N+ followed by c is not below alpha";
  }
  r.ok = r.failure.empty();

  r.reduced_pair = true;
  for (std::size_t k = 1; k < N; ++k) {
    if (w[k - 1] >= M) continue;
    if (word_cmp(c.prefix(k), reflect(Word(w.begin(), w.begin() + k), M)) > 0 ||
        lex_cmp(shift(c, k), alpha) == Cmp::GT)
      r.reduced_pair = false;
  }
  return r;
}

std::optional<EpSeq> default_witness_tail(const BaseContext& ctx) {
  if (!ctx.graph_capable()) throw ValidationError("witness tails need a base in V minus U");
  const Digit M = ctx.M;
  const Word head = reflect(ctx.period(), M);
  const std::size_t limit = 4 * ctx.N;
  for (std::size_t len = 1; len <= limit; ++len) {
    double space = 1;
    for (std::size_t i = 0; i < len; ++i) space *= M + 1;
    if (space > 2e6) break;
    std::optional<EpSeq> best;
    for (std::size_t ul = 0; ul < len; ++ul) {
      Word digits(len, 0);
      while (true) {
        Word u(digits.begin(), digits.begin() + ul), v(digits.begin() + ul, digits.end());
        EpSeq c(concat(head, u), v);
        if ((!best || lex_less(c, *best)) && f_family_filter(ctx, c, Strictness::STRICT)) best = c;
        std::size_t i = len;
        while (i > 0 && digits[i - 1] == M) digits[--i] = 0;
        if (i == 0) break;
        ++digits[i - 1];
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

Witness build_witness_xm(const BaseContext& ctx, int m, const EpSeq& c, Strictness strictness) {
  if (m < 1) throw ValidationError("m must be at least 1");
  FilterResult f = f_family_filter(ctx, c, strictness);
  if (!f) throw ValidationError("c = " + to_string(c) + " is not admissible: " + f.failure);
  const Word& w = ctx.period();
  const std::size_t N = w.size();
  Witness out;
  out.expansions.push_back(prepend(concat({1}, zeros((m - 1) * N)), c));
  for (int j = 0; j + 2 <= m; ++j)
    out.expansions.push_back(
        prepend(concat(concat(concat({0}, power(w, j)), plus(w)), zeros((m - 2 - j) * N)), c));
  out.value = AlgebraicReal::of_sequence(ctx.field, out.expansions.front());
  for (const auto& e : out.expansions)
    if (compare(AlgebraicReal::of_sequence(ctx.field, e), out.value) != Cmp::EQ)
      throw ConsistencyError("witness expansion " + to_string(e) + " has a different value");
  return out;
}

// ---------------------------------------------------------------- structure of alpha

std::string AlphaStructure::to_string() const {
  if (trivial) return "trivial";
  std::ostringstream os;
  os << "k =";
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i == k_period_start) os << " (";
    else os << " ";
    os << k[i];
  }
  os << ")";
  return os.str();
}

std::optional<AlphaStructure> alpha_structure(const BaseContext& ctx, const BaseContext& pL) {
  if (!pL.graph_capable()) throw ValidationError("p_L must lie in V minus U");
  if (ctx.M != pL.M) throw ValidationError("bases use different alphabets");
  const Digit M = ctx.M;
  AlphaStructure st;
  if (ctx.alpha == pL.alpha) {
    st.trivial = true;
    return st;
  }
  if (!lex_less(pL.alpha, ctx.alpha) || !lex_less(ctx.alpha, p_right_alpha(pL))) return std::nullopt;
  const Word w = pL.period(), wp = plus(w);
  const std::size_t m = w.size();
  const EpSeq& a = ctx.alpha;
  std::size_t pos = 0;
  auto take = [&](const Word& u) {
    for (std::size_t i = 0; i < m; ++i)
      if (a.at(pos + i) != u[i]) return false;
    pos += m;
    return true;
  };
  if (!take(wp)) return std::nullopt;
  const std::size_t pre = a.pre().size(), per = a.per().size();
  std::map<std::pair<std::size_t, int>, std::size_t> seen;
  const Word wr = reflect(w, M), wpr = reflect(wp, M);
  while (true) {
    const int parity = static_cast<int>(st.k.size() % 2);
    std::size_t phase = pos < pre ? pos : pre + (pos - pre) % per;
    auto [it, fresh] = seen.emplace(std::make_pair(phase, parity), st.k.size());
    if (!fresh) {
      st.k_period_start = it->second;
      st.k_period = st.k.size() - it->second;
      break;
    }
    const Word& unit = parity == 0 ? wr : w;
    const Word& end = parity == 0 ? wpr : wp;
    int k = 0;
    while (take(unit))
      if (++k > static_cast<int>(pre + 2 * per)) return std::nullopt;
    if (!take(end)) return std::nullopt;
    st.k.push_back(k);
  }
  for (int k : st.k)
    if (k > st.k.front()) {
      if (ctx.graph_capable()) throw ConsistencyError("block exponent exceeds the first one");
      return std::nullopt;
    }
  return st;
}

}  // namespace univoque
