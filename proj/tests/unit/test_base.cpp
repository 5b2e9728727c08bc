#include "doctest.h"
#include "univoque/base.hpp"

using namespace univoque;

namespace {
BaseContext ctx(Digit M, const char* beta) { return new_base_context(M, parse_seq(beta)); }
std::string order(Digit M, const char* beta) { return order_points(ctx(M, beta)).to_string(); }
}  // namespace

TEST_CASE("context construction") {
  auto t = ctx(1, "111(0)");
  CHECK(t.cls == BaseClass::IN_CLOSURE_U_NOT_U);
  CHECK(t.alpha == parse_seq("(110)"));
  CHECK(t.N == 3);
  auto s = ctx(1, "111001(0)");
  CHECK(s.cls == BaseClass::IN_V_NOT_CLOSURE_U);
  CHECK(s.alpha == parse_seq("(111000)"));
  CHECK(s.N == 6);
  CHECK(ctx(4, "322(0)").cls == BaseClass::IN_CLOSURE_U_NOT_U);
  CHECK(ctx(1, "101(0)").cls == BaseClass::NOT_IN_V);
  CHECK_THROWS_AS(ctx(1, "1(0)"), ValidationError);
  CHECK_THROWS_AS(ctx(1, "1011(0)"), ValidationError);
  CHECK_THROWS_AS(ctx(1, "121(0)"), ValidationError);
  auto two = context_from_alpha(1, parse_seq("(1)"));
  CHECK(two.cls == BaseClass::IN_U);
  CHECK(two.field->approx(6) == "2.000000");
  CHECK_THROWS_AS(special_points(two), ValidationError);
}

TEST_CASE("successor chains") {
  auto t = ctx(1, "111(0)");
  auto q1 = v_successor(t);
  CHECK(q1.alpha == parse_seq("(111000)"));
  CHECK(v_successor(q1).alpha == parse_seq("(111001000110)"));
  auto g = golden_ratio_base(1);
  CHECK(v_successor(g).alpha == parse_seq("(1100)"));
  CHECK(v_successor(v_successor(g)).alpha == parse_seq("(11010010)"));
  CHECK(r_chain(ctx(4, "322(0)"), 1).beta == parse_seq("322123(0)"));
  CHECK(r_chain(t, 1).beta == parse_seq("111001(0)"));
  CHECK(r_chain(t, 0).beta == t.beta);
  CHECK(r_chain(t, 3).beta == parse_seq("111001001001(0)"));
  CHECK(p_right_alpha(t) == parse_seq("111(001)"));
}

TEST_CASE("golden ratio bases") {
  CHECK(golden_ratio_base(1).beta == parse_seq("11(0)"));
  CHECK(golden_ratio_base(1).field->approx(5) == "1.61803");
  CHECK(golden_ratio_base(2).beta == parse_seq("2(0)"));
  CHECK(golden_ratio_base(2).field->approx(5) == "2.00000");
  CHECK(golden_ratio_base(3).beta == parse_seq("22(0)"));
  CHECK(golden_ratio_base(3).field->approx(6) == "2.732051");
}

TEST_CASE("special point identities") {
  for (auto [M, beta] : std::vector<std::pair<Digit, const char*>>{
           {1, "111(0)"}, {4, "4331(0)"}, {3, "331003(0)"}, {2, "2(0)"}, {3, "22(0)"}}) {
    auto c = ctx(M, beta);
    auto sp = special_points(c);
    auto top = AlgebraicReal::upper_end(c.field);
    const int N = static_cast<int>(c.N);
    for (int i = 1; i <= N + 1; ++i) CHECK(compare(sp.A(i).value + sp.Bp(i).value, top) == Cmp::EQ);
    for (const auto& p : sp.all()) CHECK(compare(AlgebraicReal::of_sequence(c.field, p.key), p.value) == Cmp::EQ);
    Digit an = c.period().back();
    CHECK(compare(sp.A(N).value, sp.Theta(an + 1).value) == Cmp::EQ);
    CHECK(compare(sp.Bp(N).value, sp.Eta(M - an).value) == Cmp::EQ);
    for (int j = 1; j <= M; ++j) {
      CHECK(sp.Theta(j).value.apply_T(j).sign() == 0);
      CHECK(compare(sp.Theta(j).value.apply_T(j - 1), AlgebraicReal::integer(c.field, 1)) == Cmp::EQ);
      CHECK(compare(sp.Eta(j).value.apply_T(j - 1), top) == Cmp::EQ);
    }
  }
}

TEST_CASE("point orders from the examples") {
  CHECK(order(1, "111(0)") == "theta0<b1<b2<a3=theta1<b3=eta1<a2<a1<eta2");
  CHECK(order(1, "11011(0)") == "theta0<b1<b4<b2<a3<a5=theta1<b5=eta1<b3<a2<a4<a1<eta2");
  CHECK(order(3, "331(0)") == "theta0<b1<b2<a3=theta1<eta1<theta2<eta2<theta3<b3=eta3<a2<a1<eta4");
  CHECK(order(2, "2(0)") == "theta0<theta1<a1=b1=theta2=eta1<eta2<eta3");
}
