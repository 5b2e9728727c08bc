#include <cmath>
#include <numeric>

#include "common/fixtures.hpp"
#include "doctest.h"
#include "univoque/spectral.hpp"

using namespace univoque;
using fixtures::make;

TEST_CASE("characteristic polynomial") {
  CHECK(characteristic_polynomial({{1}}) == IntPoly::from_longs({-1, 1}));
  CHECK(characteristic_polynomial({{1, 1}, {1, 0}}) == IntPoly::from_longs({-1, -1, 1}));
  CHECK(characteristic_polynomial({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}) == IntPoly::from_longs({-1, 0, 0, 1}));
  // companion matrix of t^3 - t^2 - t - 1
  CHECK(characteristic_polynomial({{1, 1, 1}, {1, 0, 0}, {0, 1, 0}}) == IntPoly::from_longs({-1, -1, -1, 1}));
}

TEST_CASE("perron radius of small matrices") {
  CHECK(perron_radius({{1}}).value == doctest::Approx(1.0));
  CHECK(perron_radius({{0}}).value == doctest::Approx(0.0));
  auto phi = perron_radius({{1, 1}, {1, 0}});
  CHECK(static_cast<double>(phi.value) == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-12));
  CHECK(phi.charpoly_checked);
  // a periodic cycle still has radius 1
  CHECK(static_cast<double>(perron_radius({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}).value) == doctest::Approx(1.0));
  // disjoint union takes the larger block
  Matrix u{{1, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  CHECK(static_cast<double>(perron_radius(u).value) == doctest::Approx(1.6180339887));
  CHECK(perron_radius({{0, 1}, {0, 0}}).value == 0);
  CHECK(static_cast<double>(perron_radius({{1, 1, 1}, {1, 0, 0}, {0, 1, 0}}).value) ==
        doctest::Approx(1.839286755214161).epsilon(1e-12));
}

TEST_CASE("radius against the Rayleigh bound on random matrices") {
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(2, 10)(rng);
    Matrix a(n, std::vector<long>(n));
    for (auto& row : a)
      for (auto& x : row) x = std::uniform_int_distribution<int>(0, 3)(rng) == 0;
    // irreducible through the cycle; the radius lies between the row-sum extremes
    for (std::size_t i = 0; i < n; ++i) a[i][(i + 1) % n] = 1;
    long lo = 1 << 30, hi = 0;
    for (auto& row : a) {
      long s = std::accumulate(row.begin(), row.end(), 0L);
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    auto r = perron_radius(a);
    CHECK(r.value >= lo - 1e-9L);
    CHECK(r.value <= hi + 1e-9L);
    CHECK(r.charpoly_checked);
  }
}

TEST_CASE("graph radii from the examples") {
  auto cd = component_dimensions(make(4, "322(0)"));
  REQUIRE(cd.report.per_scc.size() == 2);
  CHECK(static_cast<double>(cd.report.per_scc[1].radius) == doctest::Approx(1.0));
  CHECK(cd.t110_hypothesis);

  auto m1 = component_dimensions(make(1, "111001000111001(0)"));
  REQUIRE(m1.report.per_scc.size() == 2);
  CHECK(static_cast<double>(m1.report.per_scc[0].radius) == doctest::Approx(1.14798).epsilon(1e-5));
  CHECK(static_cast<double>(m1.report.per_scc[1].radius) == doctest::Approx(1.61803).epsilon(1e-5));
  CHECK(m1.meets_tilde1[0]);
  CHECK_FALSE(m1.meets_tilde1[1]);
  CHECK_FALSE(m1.t110_hypothesis);

  auto m2 = component_dimensions(make(2, "222002000222002(0)"));
  CHECK(m2.report.per_scc.size() == 1);
  CHECK(m2.t110_hypothesis);
  CHECK_THROWS_AS(component_dimensions(make(1, "111001(0)")), ValidationError);
}

TEST_CASE("dimension") {
  CHECK(dimension_of(build_graph(golden_ratio_base(2), Variant::FULL), golden_ratio_base(2)) == 0);
  auto t = make(1, "111(0)");
  auto g = build_graph(t, Variant::TILDE);
  long double d = dimension_of(g, t);
  CHECK(d > 0);
  CHECK(d < 1);
  // growth of the word count
  const int L = 14;
  long double est = std::log(static_cast<long double>(count_label_paths(g, L))) / L / std::log(1.839286755214161L);
  CHECK(std::fabs(static_cast<double>(est - d)) < 0.05);
  long double d1 = dimension_of(build_graph(r_chain(t, 1), Variant::TILDE), r_chain(t, 1));
  CHECK(static_cast<double>(std::log(spectral_radius(g).value)) ==
        doctest::Approx(static_cast<double>(std::log(spectral_radius(build_graph(r_chain(t, 1), Variant::TILDE)).value))));
  CHECK(d1 < d);
}

TEST_CASE("entropy is constant along the r chain") {
  for (auto [M, beta] : std::vector<std::pair<Digit, std::string>>{{1, "111(0)"}, {4, "322(0)"}}) {
    auto q0 = make(M, beta);
    long double r0 = spectral_radius(build_graph(q0, Variant::TILDE)).value;
    for (int k = 1; k <= 3; ++k) {
      auto rk = r_chain(q0, k);
      CHECK(std::fabs(static_cast<double>(spectral_radius(build_graph(rk, Variant::TILDE)).value - r0)) < 1e-6);
    }
  }
}

TEST_CASE("radius does not decrease along the tower") {
  auto t = tower_decompose(make(3, "331(0)"), 3);
  long double prev = 0;
  for (const auto& g : t.graphs) {
    long double r = spectral_radius(g).value;
    CHECK(r >= prev - 1e-12L);
    prev = r;
  }
}

TEST_CASE("spectral json") {
  auto t = make(1, "111(0)");
  auto js = to_json(spectral_report(build_graph(t, Variant::TILDE), t), 6);
  CHECK(js.find("\"radius\": \"1.618034\"") != std::string::npos);
  CHECK(js.find("\"scc\"") != std::string::npos);
}
