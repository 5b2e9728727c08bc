#include "common/fixtures.hpp"
#include "doctest.h"
#include "univoque/oracle.hpp"

using namespace univoque;
using fixtures::make;

namespace {

bool admissible(const EpSeq& c, const BaseContext& ctx, bool strict) {
  const std::size_t span = c.pre().size() + c.per().size();
  for (std::size_t n = 1; n <= span; ++n) {
    Digit cn = c.at(n - 1);
    EpSeq tail = shift(c, n);
    Cmp up = lex_cmp(tail, ctx.alpha), down = lex_cmp(reflect(tail, ctx.M), ctx.alpha);
    if (cn < ctx.M && (up == Cmp::GT || (strict && up == Cmp::EQ))) return false;
    if (cn > 0 && (down == Cmp::GT || (strict && down == Cmp::EQ))) return false;
  }
  return true;
}

std::vector<Word> all_words(Digit M, std::size_t len) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (Digit d = 0; d <= M; ++d) {
        Word x = w;
        x.push_back(d);
        next.push_back(x);
      }
    out = std::move(next);
  }
  return out;
}

// words extending to u·v^∞ with |u| ≤ 2 and |v| ≤ 2N
std::set<Word> direct_words(const BaseContext& ctx, int L, bool strict) {
  std::set<Word> out;
  for (const auto& w : all_words(ctx.M, L)) {
    bool found = false;
    for (std::size_t ul = 0; ul <= 2 && !found; ++ul)
      for (const auto& u : all_words(ctx.M, ul)) {
        for (std::size_t vl = 1; vl <= 2 * ctx.N && !found; ++vl)
          for (const auto& v : all_words(ctx.M, vl))
            if (admissible(EpSeq(concat(w, u), v), ctx, strict)) {
              found = true;
              break;
            }
        if (found) break;
      }
    if (found) out.insert(w);
  }
  return out;
}

}  // namespace

TEST_CASE("golden ratio words") {
  auto g = golden_ratio_base(1);
  auto w = enumerate_admissible_words(g, 3, OracleMode::V_PREFIX);
  std::set<Word> want;
  for (const char* s : {"000", "001", "010", "101", "110", "111"}) want.insert(parse_word(s));
  CHECK(w == want);
  CHECK(enumerate_admissible_words(g, 0, OracleMode::V_PREFIX) == std::set<Word>{Word{}});
  CHECK_THROWS_AS(enumerate_admissible_words(g, 13, OracleMode::V_PREFIX), ValidationError);
}

TEST_CASE("oracle against direct lexicographic search") {
  for (auto [M, beta] : std::vector<std::pair<Digit, std::string>>{{1, "111(0)"}, {1, "11(0)"}, {1, "111001(0)"}, {2, "21(0)"}}) {
    CAPTURE(beta);
    auto ctx = make(M, beta);
    for (int L = 1; L <= 5; ++L) {
      CAPTURE(L);
      CHECK(enumerate_admissible_words(ctx, L, OracleMode::V_PREFIX) == direct_words(ctx, L, false));
      CHECK(enumerate_admissible_words(ctx, L, OracleMode::U_PREFIX) == direct_words(ctx, L, true));
    }
  }
}

TEST_CASE("oracle words match graph paths") {
  for (auto [M, beta] : fixtures::closure_battery()) {
    CAPTURE(beta);
    auto q0 = make(M, beta);
    auto q1 = v_successor(q0);
    for (int L = 1; L <= 6; ++L) {
      CHECK(label_words(build_graph(q0, Variant::FULL), L) == enumerate_admissible_words(q0, L, OracleMode::V_PREFIX));
      CHECK(label_words(build_graph(q1, Variant::FULL), L) == enumerate_admissible_words(q1, L, OracleMode::U_PREFIX));
    }
  }
  auto t = make(1, "111(0)");
  CHECK(label_words(build_graph(t, Variant::FULL), 8) == enumerate_admissible_words(t, 8, OracleMode::V_PREFIX));
}

TEST_CASE("strict words are fewer on the successor") {
  auto q1 = v_successor(make(1, "111(0)"));
  CHECK(enumerate_admissible_words(q1, 6, OracleMode::U_PREFIX).size() <
        enumerate_admissible_words(q1, 6, OracleMode::V_PREFIX).size());
}

TEST_CASE("language difference agrees with explicit word sets") {
  for (auto [M, beta] : fixtures::closure_battery()) {
    CAPTURE(beta);
    auto q0 = fixtures::make(M, beta);
    auto q1 = v_successor(q0);
    auto g0 = build_graph(q0, Variant::FULL), g1 = build_graph(q1, Variant::FULL);
    for (int L = 0; L <= 5; ++L) {
      CHECK_FALSE(language_difference(g0, q0, L, OracleMode::V_PREFIX).has_value());
      CHECK_FALSE(language_difference(g1, q1, L, OracleMode::U_PREFIX).has_value());
    }
  }
  auto q1 = v_successor(fixtures::make(1, "111(0)"));
  auto g1 = build_graph(q1, Variant::FULL);
  bool split = false;
  for (int L = 1; L <= 8; ++L) {
    auto d = language_difference(g1, q1, L, OracleMode::V_PREFIX);
    bool sets_differ = label_words(g1, L) != enumerate_admissible_words(q1, L, OracleMode::V_PREFIX);
    CHECK(d.has_value() == sets_differ);
    if (d) {
      split = true;
      CHECK(d->size() <= static_cast<std::size_t>(L));
    }
  }
  CHECK(split);
  auto other = build_graph(fixtures::make(1, "11011(0)"), Variant::FULL);
  auto tri = fixtures::make(1, "111(0)");
  bool apart = false;
  for (int L = 1; L <= 8; ++L) {
    auto d = language_difference(other, tri, L, OracleMode::V_PREFIX);
    CHECK(d.has_value() == (label_words(other, L) != enumerate_admissible_words(tri, L, OracleMode::V_PREFIX)));
    apart = apart || d.has_value();
  }
  CHECK(apart);
}
