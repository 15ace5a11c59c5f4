/* test_desitter.cpp
 *
 * Static patch with mu = 1 - r^2: indicial quadratics and their roots
 * across degrees and dimensions, the full table layout, and the
 * stationary states (wave-operator annihilation of the degree-1
 * generator at stencil order, its failure to be coclosed, and the
 * annihilation of the two scalar-line states).
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "sdsform/block_ops.hpp"
#include "sdsform/desitter.hpp"
#include "sdsform/fit.hpp"

using namespace sdsform;

TEST_CASE("indicial quadratics and roots") {
  for (int n = 4; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      auto [tang, norm] = indicial_polynomial_box(k, n);

      CHECK(tang.b == doctest::Approx(-(n - 1.0)));
      CHECK(tang.c == doctest::Approx(k * (n - k - 1.0)));
      CHECK(norm.b == doctest::Approx(-(n - 1.0)));
      CHECK(norm.c == doctest::Approx((k - 1.0) * (n - k)));

      auto tr = tang.roots();
      CHECK(tr[0] == doctest::Approx(std::min<double>(k, n - 1 - k)));
      CHECK(tr[1] == doctest::Approx(std::max<double>(k, n - 1 - k)));
      auto nr = norm.roots();
      CHECK(nr[0] == doctest::Approx(std::min<double>(k - 1, n - k)));
      CHECK(nr[1] == doctest::Approx(std::max<double>(k - 1, n - k)));

      auto dr = indicial_roots_ddelta(k, n);
      CHECK(dr[0] == doctest::Approx(std::min<double>(k, n - k)));
      CHECK(dr[1] == doctest::Approx(std::max<double>(k, n - k)));

      /* 0 is never a double root of either quadratic */
      CHECK_FALSE((tr[0] == 0.0 && tr[1] == 0.0));
      CHECK_FALSE((nr[0] == 0.0 && nr[1] == 0.0));
    }
  }
}

TEST_CASE("table layout, n = 4") {
  IndicialTable t = table_41(4);
  REQUIRE(t.rows.size() == 5);
  for (int k = 0; k <= 4; ++k) {
    const IndicialRow& row = t.rows[k];
    CHECK(row.k == k);
    CHECK(row.has_tangential == (k != 4));
    CHECK(row.has_normal == (k != 0));
  }
  /* spot values */
  CHECK(t.rows[0].tangential_roots == std::array<double, 2>{0, 3});
  CHECK(t.rows[1].tangential_roots == std::array<double, 2>{1, 2});
  CHECK(t.rows[1].normal_roots == std::array<double, 2>{0, 3});
  CHECK(t.rows[2].tangential_roots == std::array<double, 2>{1, 2});
  CHECK(t.rows[2].normal_roots == std::array<double, 2>{1, 2});
  CHECK(t.rows[3].normal_roots == std::array<double, 2>{1, 2});
  CHECK(t.rows[4].normal_roots == std::array<double, 2>{0, 3});
  CHECK(t.rows[2].ddelta_roots == std::array<double, 2>{2, 2});
}

TEST_CASE("stationary state dimensions") {
  for (int n = 4; n <= 7; ++n) {
    DsStaticStates s = ds_static_states(n, 129);
    std::vector<int> want(n + 1, 0);
    want[0] = want[1] = want[n - 1] = want[n] = 1;
    CHECK(s.dims == want);
  }
}

TEST_CASE("degree-1 generator: annihilated by box, not by delta") {
  /* the discrete annihilation turns out to be exact: delta of the
     generator is constant up to roundoff and the d d part cancels
     algebraically, so only h^{-2}-amplified roundoff remains */
  RadialMetric m = RadialMetric::desitter(4);
  double box_worst = 0;
  double delta_floor = 1e9;
  for (int npts : {65, 129, 257}) {
    DsStaticStates s = ds_static_states(4, npts);
    const RadialGrid& g = s.grid;

    auto box1 = assemble_box(1, s.k1_generator.sector, m, g);
    auto del1 = assemble_delta(1, s.k1_generator.sector, m, g);

    double nrm = section_norm(s.k1_generator, m);
    box_worst = std::max(
        box_worst, annihilation_residual(box1, s.k1_generator) / nrm);
    delta_floor = std::min(
        delta_floor, annihilation_residual(del1, s.k1_generator) / nrm);
  }
  CHECK(box_worst < 1e-10);
  /* coclosedness genuinely fails: the residual stays O(1) */
  CHECK(delta_floor > 0.1);
  CHECK(delta_floor > 1e6 * box_worst);
}

TEST_CASE("generator profile is the differential of t + log alpha") {
  DsStaticStates s = ds_static_states(4, 129);
  const RadialGrid& g = s.grid;
  RadialMetric m = RadialMetric::desitter(4);
  for (int i = 0; i < g.size(); ++i) {
    double r = g.r[i];
    double a = m.alpha(r);
    /* slots store nt = alpha^{-1} (dt coefficient),
       tn = alpha (dr coefficient) */
    CHECK(std::abs(s.k1_generator.nt()[i] - 1.0 / a) < 1e-12);
    CHECK(std::abs(s.k1_generator.tn()[i] - (-r / a)) < 1e-12);
  }
}

TEST_CASE("scalar-line states are annihilated") {
  RadialMetric m = RadialMetric::desitter(4);
  DsStaticStates s = ds_static_states(4, 257);
  const RadialGrid& g = s.grid;

  auto box0 = assemble_box(0, s.one.sector, m, g);
  CHECK(annihilation_residual(box0, s.one) < 1e-13);

  auto box4 = assemble_box(4, s.star_one.sector, m, g);
  double nrm = section_norm(s.star_one, m);
  CHECK(annihilation_residual(box4, s.star_one) / nrm < 1e-4);

  /* star_one carries the r^{n-2} profile in the nn slot */
  for (int i = 0; i < g.size(); ++i)
    CHECK(std::abs(s.star_one.nn()[i] - g.r[i] * g.r[i]) < 1e-12);
}
