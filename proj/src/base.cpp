#include "univoque/base.hpp"

#include <algorithm>
#include <sstream>

namespace univoque {

Rat default_precision() { return Rat(Int(1), Int("1000000000000")); }

BaseContext BaseContext::clone() const {
  BaseContext c = *this;
  c.field = std::make_shared<QField>(*field);
  return c;
}

namespace {

BaseContext finish(Digit M, EpSeq beta, EpSeq alpha, const Rat& precision) {
  BaseContext ctx;
  ctx.M = M;
  ctx.beta = std::move(beta);
  ctx.alpha = std::move(alpha);
  ctx.cls = classify_alpha(M, ctx.alpha);
  ctx.N = ctx.alpha.is_purely_periodic() ? ctx.alpha.per().size() : 0;
  ctx.poly = base_polynomial(M, ctx.beta);
  ctx.precision = precision;
  ctx.field = std::make_shared<QField>(ctx.poly, M, precision);
  auto one = AlgebraicReal::integer(ctx.field, 1);
  if (compare(AlgebraicReal::of_sequence(ctx.field, ctx.beta), one) != Cmp::EQ ||
      compare(AlgebraicReal::of_sequence(ctx.field, ctx.alpha), one) != Cmp::EQ)
    throw ConsistencyError("expansion of 1 does not evaluate to 1 for beta " + to_string(ctx.beta));
  return ctx;
}

}  // namespace

BaseContext new_base_context(Digit M, const EpSeq& beta, const Rat& precision) {
  if (M < 1) throw ValidationError("alphabet bound M must be at least 1");
  check_alphabet(beta, M);
  if (beta == EpSeq::finite({1})) throw ValidationError("beta = 1(0) is the base q = 1, outside every construction");
  if (!is_greedy_beta(M, beta)) throw ValidationError("not a greedy expansion of 1: " + to_string(beta));
  EpSeq alpha = alpha_from_beta(M, beta);
  if (!is_quasigreedy_alpha(M, alpha))
    throw ConsistencyError("derived alpha is not quasi-greedy: " + to_string(alpha));
  return finish(M, beta, alpha, precision);
}

BaseContext context_from_alpha(Digit M, const EpSeq& alpha, const Rat& precision) {
  if (M < 1) throw ValidationError("alphabet bound M must be at least 1");
  check_alphabet(alpha, M);
  if (!is_quasigreedy_alpha(M, alpha)) throw ValidationError("not a quasi-greedy expansion of 1: " + to_string(alpha));
  if (alpha.is_zero()) throw ValidationError("alpha = (0) is the base q = 1, outside every construction");
  EpSeq beta = beta_from_alpha(M, alpha);
  if (!is_greedy_beta(M, beta)) throw ConsistencyError("derived beta is not greedy: " + to_string(beta));
  return finish(M, beta, alpha, precision);
}

BaseContext v_successor(const BaseContext& ctx) {
  if (!ctx.graph_capable()) throw ValidationError("successor needs a base in V minus U");
  Word wp = plus(ctx.period());
  BaseContext next = context_from_alpha(ctx.M, EpSeq::periodic(concat(wp, reflect(wp, ctx.M))),
                                        ctx.precision);
  if (next.cls != BaseClass::IN_V_NOT_CLOSURE_U)
    throw ConsistencyError("successor base is not in V minus closure(U): " + to_string(next.alpha));
  return next;
}

BaseContext r_chain(const BaseContext& ctx, int k) {
  if (!ctx.graph_capable()) throw ValidationError("r-chain needs a base in V minus U");
  if (k < 0) throw ValidationError("chain index must be nonnegative");
  if (k == 0) return ctx;
  const Word& w = ctx.period();
  Word word = concat(plus(w), power(reflect(w, ctx.M), static_cast<std::size_t>(k)));
  BaseContext r = new_base_context(ctx.M, EpSeq::finite(word), ctx.precision);
  BaseClass want = k == 1 ? BaseClass::IN_V_NOT_CLOSURE_U : BaseClass::IN_CLOSURE_U_NOT_U;
  if (r.cls != want)
    throw ConsistencyError("r_" + std::to_string(k) + " has class " + class_name(r.cls) + ", expected " +
                           class_name(want));
  return r;
}

EpSeq p_right_alpha(const BaseContext& ctx) {
  const Word& w = ctx.period();
  return EpSeq(plus(w), reflect(w, ctx.M));
}

BaseContext golden_ratio_base(Digit M) {
  if (M < 1) throw ValidationError("alphabet bound M must be at least 1");
  Digit m = (M + 1) / 2;
  if (M % 2 == 1) return new_base_context(M, EpSeq::finite({m, m}));
  return new_base_context(M, EpSeq::finite({M / 2 + 1}));
}

std::string point_name(PointKind kind, int index) {
  switch (kind) {
    case PointKind::A: return "a" + std::to_string(index);
    case PointKind::B: return "b" + std::to_string(index);
    case PointKind::THETA: return "theta" + std::to_string(index);
    case PointKind::ETA: return "eta" + std::to_string(index);
  }
  return "?";
}

std::string Point::name() const { return point_name(kind, index); }

std::vector<Point> SpecialPoints::all() const {
  std::vector<Point> r;
  for (auto* v : {&a, &b, &theta, &eta}) r.insert(r.end(), v->begin(), v->end());
  return r;
}

SpecialPoints special_points(const BaseContext& ctx) {
  if (!ctx.graph_capable())
    throw ValidationError(std::string("special points need a base in V minus U, class is ") + class_name(ctx.cls));
  const Digit M = ctx.M;
  const int N = static_cast<int>(ctx.N);
  const FieldPtr& f = ctx.field;
  const Word bw = ctx.beta.finite_word();
  const AlgebraicReal top = AlgebraicReal::upper_end(f);
  const EpSeq top_key = EpSeq::constant(M);

  SpecialPoints sp;
  for (int i = 1; i <= N + 1; ++i) {
    EpSeq fin = EpSeq::finite(Word(bw.begin() + (i - 1), bw.end()));
    AlgebraicReal v = AlgebraicReal::of_sequence(f, fin);
    EpSeq key = i <= N ? shift(ctx.alpha, static_cast<std::size_t>(i - 1)) : EpSeq();
    sp.a.push_back({PointKind::A, i, v, key});
    sp.b.push_back({PointKind::B, i, top - v, i <= N ? reflect(key, M) : top_key});
  }
  for (int j = 0; j <= M; ++j) {
    AlgebraicReal v = AlgebraicReal::integer(f, j).divided_by_q();
    EpSeq key = j == 0 ? EpSeq() : prepend({j - 1}, ctx.alpha);
    sp.theta.push_back({PointKind::THETA, j, v, key});
  }
  for (int j = 1; j <= M; ++j) {
    const Point& t = sp.theta[M + 1 - j];
    sp.eta.push_back({PointKind::ETA, j, top - t.value, reflect(t.key, M)});
  }
  sp.eta.push_back({PointKind::ETA, M + 1, top, top_key});
  return sp;
}

std::vector<std::string> PointClass::names() const {
  std::vector<std::string> r;
  for (const auto& p : members) r.push_back(p.name());
  return r;
}

bool PointClass::has(PointKind kind) const {
  return std::any_of(members.begin(), members.end(), [&](const Point& p) { return p.kind == kind; });
}

bool PointClass::has(PointKind kind, int index) const {
  return std::any_of(members.begin(), members.end(),
                     [&](const Point& p) { return p.kind == kind && p.index == index; });
}

std::string PointOrder::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i) s += "<";
    auto n = classes[i].names();
    for (std::size_t j = 0; j < n.size(); ++j) {
      if (j) s += "=";
      s += n[j];
    }
  }
  return s;
}

PointOrder order_points(const BaseContext& ctx) { return order_points(ctx, special_points(ctx)); }

PointOrder order_points(const BaseContext& ctx, const SpecialPoints& sp) {
  const int N = static_cast<int>(ctx.N);
  std::vector<Point> pts;
  for (const auto& p : sp.all())
    if (!((p.kind == PointKind::A || p.kind == PointKind::B) && p.index == N + 1)) pts.push_back(p);
  std::stable_sort(pts.begin(), pts.end(), [](const Point& x, const Point& y) {
    Cmp c = lex_cmp(x.key, y.key);
    if (c != Cmp::EQ) return c == Cmp::LT;
    if (x.kind != y.kind) return x.kind < y.kind;
    return x.index < y.index;
  });
  PointOrder order;
  for (auto& p : pts) {
    if (!order.classes.empty() && order.classes.back().key() == p.key) {
      if (compare(order.classes.back().value(), p.value) != Cmp::EQ)
        throw ConsistencyError("equal keys but distinct values: " + order.classes.back().label() + ", " + p.name());
      order.classes.back().members.push_back(p);
    } else {
      if (!order.classes.empty() && compare(order.classes.back().value(), p.value) != Cmp::LT)
        throw ConsistencyError("lexicographic and algebraic order disagree at " + order.classes.back().label() +
                               " < " + p.name());
      order.classes.push_back({{p}});
    }
  }
  return order;
}

std::vector<std::vector<std::string>> parse_chain(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::stringstream ss(text);
  std::string cls;
  while (std::getline(ss, cls, '<')) {
    std::vector<std::string> names;
    std::stringstream cs(cls);
    std::string n;
    while (std::getline(cs, n, '=')) {
      n.erase(std::remove_if(n.begin(), n.end(), ::isspace), n.end());
      if (!n.empty()) names.push_back(n);
    }
    std::sort(names.begin(), names.end());
    out.push_back(std::move(names));
  }
  return out;
}

std::vector<std::vector<std::string>> chain_classes(const PointOrder& order) {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : order.classes) {
    auto n = c.names();
    std::sort(n.begin(), n.end());
    out.push_back(std::move(n));
  }
  return out;
}

}  // namespace univoque
