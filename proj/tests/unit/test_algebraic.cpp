#include <cmath>
#include <memory>

#include "doctest.h"
#include "univoque/algebraic.hpp"

using namespace univoque;

namespace {

// independent numeric root by bisection in long double
long double float_root(const std::vector<long>& c, long double lo, long double hi) {
  auto f = [&](long double x) {
    long double v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
  };
  long double flo = f(lo);
  for (int i = 0; i < 200; ++i) {
    long double mid = (lo + hi) / 2, fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

FieldPtr field(Digit M, const char* beta) {
  return std::make_shared<QField>(base_polynomial(M, parse_seq(beta)), M, Rat("1/1000000000000"));
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  IntPoly p = IntPoly::from_longs({-1, -1, 1});
  IntPoly q = IntPoly::from_longs({1, 1});
  CHECK((p * q) == IntPoly::from_longs({-1, -2, 0, 1}));
  CHECK((p + q) == IntPoly::from_longs({0, 0, 1}));
  CHECK(IntPoly::from_longs({0, 0, 0, 1}).mod_monic(p) == IntPoly::from_longs({1, 2}));
  CHECK(poly_gcd(p * q, q * q) == q);
  CHECK(squarefree(q * q * p) == (q * p));
  CHECK(p.to_string() == "t^2 - t - 1");
}

TEST_CASE("base polynomials") {
  CHECK(base_polynomial(1, parse_seq("11(0)")) == IntPoly::from_longs({-1, -1, 1}));
  CHECK(base_polynomial(1, parse_seq("111(0)")) == IntPoly::from_longs({-1, -1, -1, 1}));
  CHECK(base_polynomial(2, parse_seq("2(0)")) == IntPoly::from_longs({-2, 1}));
  CHECK_THROWS_AS(base_polynomial(1, parse_seq("1(0)")), ValidationError);
  CHECK_THROWS_AS(base_polynomial(1, parse_seq("1011(0)")), ValidationError);
}

TEST_CASE("root isolation matches float bisection") {
  struct Case {
    std::vector<long> c;
    double expect;
  } cases[] = {{{-1, -1, 1}, 1.61803},
               {{-1, -1, -1, 1}, 1.83929},
               {{-1, 1, -2, 1}, 1.75488},
               {{-1, -1, -2, 0, 1}, 1.71064}};
  for (auto& k : cases) {
    Interval iv = isolate_root(IntPoly::from_longs(k.c), 1, Rat(1, 100000));
    CHECK(iv.width() <= Rat(1, 100000));
    double mid = Rat((iv.lo + iv.hi) / 2).get_d();
    CHECK(std::fabs(mid - k.expect) < 1e-5);
    CHECK(std::fabs(mid - static_cast<double>(float_root(k.c, 1, 2))) < 1e-5);
  }
}

TEST_CASE("values and comparisons") {
  FieldPtr f = field(1, "111(0)");
  auto one = AlgebraicReal::integer(f, 1);
  CHECK(compare(AlgebraicReal::of_sequence(f, parse_seq("111(0)")), one) == Cmp::EQ);
  CHECK(compare(AlgebraicReal::of_sequence(f, parse_seq("(110)")), one) == Cmp::EQ);
  CHECK(AlgebraicReal::of_sequence(f, parse_seq("(0)")).sign() == 0);
  CHECK(compare(AlgebraicReal::of_sequence(f, parse_seq("(1)")), AlgebraicReal::upper_end(f)) == Cmp::EQ);
  // a_N = θ_1 for Tribonacci: (1 0^∞) = θ_1 = 1/q
  auto aN = AlgebraicReal::of_sequence(f, parse_seq("1(0)"));
  auto th1 = AlgebraicReal::of_sequence(f, parse_seq("0(110)"));
  CHECK(compare(aN, th1) == Cmp::EQ);
  CHECK(aN.apply_T(1).sign() == 0);
  CHECK(compare(th1.apply_T(0), one) == Cmp::EQ);
  auto top = AlgebraicReal::upper_end(f);
  CHECK(compare(top.apply_T(1), top) == Cmp::EQ);
  CHECK(AlgebraicReal::q(f).approx(5) == "1.83929");
  CHECK(std::fabs(top.to_double() - 1.0 / (1.839286755214161 - 1)) < 1e-9);
}

TEST_CASE("value order follows lexicographic order on quasi-greedy sequences") {
  FieldPtr f = field(1, "111(0)");
  const char* seqs[] = {"(0)", "0(011)", "(001)", "(010)", "(011)", "0(110)", "(100)", "(101)", "(110)", "(1)"};
  for (auto a : seqs)
    for (auto b : seqs) {
      Cmp lx = lex_cmp(parse_seq(a), parse_seq(b));
      Cmp al = compare(AlgebraicReal::of_sequence(f, parse_seq(a)), AlgebraicReal::of_sequence(f, parse_seq(b)));
      CHECK_MESSAGE(lx == al, a, " vs ", b);
    }
}

TEST_CASE("reflection identity") {
  FieldPtr f = field(4, "322(0)");
  auto top = AlgebraicReal::upper_end(f);
  auto x = AlgebraicReal::of_sequence(f, parse_seq("12(031)"));
  auto y = AlgebraicReal::of_sequence(f, parse_seq("2(1)"));
  CHECK(compare(x, y) == compare(top - y, top - x));
  CHECK(compare(top - x, AlgebraicReal::of_sequence(f, reflect(parse_seq("12(031)"), 4))) == Cmp::EQ);
}

TEST_CASE("decimal rendering") {
  CHECK(decimal(Rat(1, 3), 4) == "0.3333");
  CHECK(decimal(Rat(2, 3), 4) == "0.6667");
  CHECK(decimal(Rat(-1, 8), 2) == "-0.13");
  CHECK(decimal(Rat(5), 0) == "5");
}
