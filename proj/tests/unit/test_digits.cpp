#include <random>

#include "doctest.h"
#include "univoque/digits.hpp"

using namespace univoque;

namespace {
EpSeq S(const char* s) { return parse_seq(s); }
}

TEST_CASE("parse and print round trip") {
  CHECK(to_string(S("111(0)")) == "111(0)");
  CHECK(to_string(S("(110)^")) == "(110)");
  CHECK(to_string(S("(110110)")) == "(110)");
  CHECK(to_string(S("1(01)")) == "(10)");
  CHECK(to_string(S("3,12,0(4)")) == "3,12,0(4)");
  CHECK(to_string(S("111")) == "111(0)");
  CHECK_THROWS_AS(S("1a1"), ValidationError);
  CHECK_THROWS_AS(S("1(1"), ValidationError);
  CHECK_THROWS_AS(S("1()"), ValidationError);
}

TEST_CASE("canonical form") {
  EpSeq a({1, 1, 0}, {1, 1, 0});
  CHECK(a.pre().empty());
  CHECK(a.per() == Word{1, 1, 0});
  EpSeq b({0, 1}, {0, 1, 0, 1});
  CHECK(b == EpSeq::periodic({0, 1}));
}

TEST_CASE("reflect") {
  CHECK(reflect(Word{1, 1, 0}, 1) == Word{0, 0, 1});
  CHECK(reflect(S("(10)"), 1) == S("(01)"));
  CHECK(reflect(reflect(S("12(021)"), 2), 2) == S("12(021)"));
  CHECK_THROWS_AS(reflect(Word{2}, 1), ValidationError);
}

TEST_CASE("lexicographic comparison") {
  CHECK(lex_cmp(S("(10)"), S("(1100)")) == Cmp::LT);
  CHECK(lex_cmp(S("(110)"), S("(110)")) == Cmp::EQ);
  CHECK(lex_cmp(S("(0)"), S("0001(0)")) == Cmp::LT);
  CHECK(lex_cmp(S("1(0)"), S("0(1)")) == Cmp::GT);
}

TEST_CASE("shift") {
  CHECK(shift(S("(110)"), 1) == S("(101)"));
  CHECK(shift(S("01(10)"), 2) == S("(10)"));
  CHECK(shift(S("01(10)"), 0) == S("01(10)"));
}

TEST_CASE("greedy and quasi-greedy predicates") {
  CHECK(is_greedy_beta(1, S("111(0)")));
  // 101 0^∞ is the greedy expansion of 1 in the root of q^3 = q^2 + 1
  CHECK(is_greedy_beta(1, S("101(0)")));
  CHECK_FALSE(is_greedy_beta(1, S("1011(0)")));
  CHECK(is_greedy_beta(1, S("1(0)")));
  CHECK(is_quasigreedy_alpha(1, S("(110)")));
  CHECK(is_quasigreedy_alpha(1, S("(10)")));
  CHECK_FALSE(is_quasigreedy_alpha(1, S("(011)")));
  CHECK_FALSE(is_quasigreedy_alpha(1, S("11(0)")));
}

TEST_CASE("classification") {
  CHECK(classify_alpha(1, S("(110)")) == BaseClass::IN_CLOSURE_U_NOT_U);
  CHECK(classify_alpha(1, S("(10)")) == BaseClass::IN_V_NOT_CLOSURE_U);
  CHECK(classify_alpha(1, S("(1)")) == BaseClass::IN_U);
  CHECK(classify_alpha(1, S("(111000)")) == BaseClass::IN_V_NOT_CLOSURE_U);
  CHECK(classify_alpha(1, S("(100)")) == BaseClass::NOT_IN_V);
  CHECK(classify_alpha(4, S("(321)")) == BaseClass::IN_CLOSURE_U_NOT_U);
  CHECK_THROWS_AS(classify_alpha(1, S("(011)")), ValidationError);
}

TEST_CASE("alpha and beta conversion") {
  CHECK(alpha_from_beta(1, S("111(0)")) == S("(110)"));
  CHECK(beta_from_alpha(1, S("(110)")) == S("111(0)"));
  CHECK(beta_from_alpha(1, S("(1)")) == S("(1)"));
  CHECK(alpha_from_beta(4, S("4331(0)")) == S("(4330)"));
}

TEST_CASE("unique expansion sequences") {
  const EpSeq a = S("(110)");
  CHECK(is_unique_expansion_seq(a, S("(0)"), 1, UniqMode::UNIQUE));
  CHECK_FALSE(is_unique_expansion_seq(a, S("(110)"), 1, UniqMode::UNIQUE));
  CHECK(is_unique_expansion_seq(a, S("(110)"), 1, UniqMode::DOUBLY_INFINITE));
  CHECK_FALSE(is_unique_expansion_seq(a, S("1(0)"), 1, UniqMode::DOUBLY_INFINITE));
}

TEST_CASE("properties on random sequences") {
  std::mt19937 rng(7);
  for (int it = 0; it < 300; ++it) {
    Digit M = 1 + static_cast<Digit>(rng() % 4);
    auto rw = [&](std::size_t lo, std::size_t hi) {
      Word w(lo + rng() % (hi - lo + 1));
      for (auto& d : w) d = static_cast<Digit>(rng() % (M + 1));
      return w;
    };
    EpSeq a(rw(0, 4), rw(1, 5)), b(rw(0, 4), rw(1, 5)), c(rw(0, 4), rw(1, 5));
    CHECK(reflect(reflect(a, M), M) == a);
    CHECK(EpSeq(a.pre(), a.per()) == a);
    Cmp ab = lex_cmp(a, b);
    CHECK(lex_cmp(b, a) == cmp_of(-static_cast<int>(ab)));
    CHECK(lex_cmp(reflect(b, M), reflect(a, M)) == ab);
    if (lex_leq(a, b) && lex_leq(b, c)) CHECK(lex_leq(a, c));
    CHECK((ab == Cmp::EQ) == (a == b));
    if (is_quasigreedy_alpha(M, a))
      for (std::size_t n = 0; n < 2 * window(a); ++n) CHECK(lex_leq(shift(a, n), a));
  }
}
