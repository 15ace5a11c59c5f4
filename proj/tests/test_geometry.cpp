/* test_geometry.cpp
 *
 * Horizon roots, photon sphere, nondegeneracy bound, and the reduced
 * cosmological constant.  Reference values were produced by an
 * independent 50-digit script and are pasted here verbatim; the
 * library has to reproduce them to near machine precision.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "sdsform/geometry.hpp"

using namespace sdsform;

TEST_CASE("reduced cosmological constant") {
  /* lambda = 2 Lambda / ((n-2)(n-1)) */
  CHECK(lambda_small({4, 1.0, 0.06}) == doctest::Approx(0.02).epsilon(1e-15));
  CHECK(lambda_small({4, 1.0, 0.03}) == doctest::Approx(0.01).epsilon(1e-15));
  CHECK(lambda_small({5, 1.0, 0.3}) == doctest::Approx(0.05).epsilon(1e-15));
  CHECK(lambda_small({6, 1.0, 0.02}) == doctest::Approx(0.002).epsilon(1e-15));
}

TEST_CASE("horizons and photon sphere, n=4 M=1 Lambda=0.03") {
  SdsParams p{4, 1.0, 0.03};
  HorizonData h = horizons(p);

  CHECK(h.r_minus == doctest::Approx(2.09148848441316582).epsilon(1e-14));
  CHECK(h.r_plus == doctest::Approx(8.78885066249972832).epsilon(1e-14));
  CHECK(h.r_p == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(h.beta_minus == doctest::Approx(4.81482513472311624).epsilon(1e-13));
  CHECK(h.beta_plus == doctest::Approx(13.3435634241023295).epsilon(1e-13));

  /* r_p = 3M for n = 4, independent of lambda */
  SdsParams p2{4, 1.0, 0.001};
  CHECK(photon_radius(p2) == doctest::Approx(3.0).epsilon(1e-15));
  SdsParams p3{4, 0.7, 0.02};
  CHECK(photon_radius(p3) == doctest::Approx(2.1).epsilon(1e-15));
}

TEST_CASE("horizons and photon sphere, n=5 M=1 Lambda=0.3") {
  SdsParams p{5, 1.0, 0.3};
  HorizonData h = horizons(p);

  CHECK(h.r_minus == doctest::Approx(1.50134383389853979).epsilon(1e-14));
  CHECK(h.r_plus == doctest::Approx(4.21259619384707152).epsilon(1e-14));
  CHECK(h.r_p == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(h.beta_minus == doctest::Approx(1.93822655520674631).epsilon(1e-13));
  CHECK(h.beta_plus == doctest::Approx(5.43843830102215308).epsilon(1e-13));
}

TEST_CASE("horizons and photon sphere, n=6 M=1 Lambda=0.02") {
  SdsParams p{6, 1.0, 0.02};
  HorizonData h = horizons(p);

  CHECK(h.r_minus == doctest::Approx(1.26126005988923456).epsilon(1e-14));
  CHECK(h.r_plus == doctest::Approx(22.3586791485786655).epsilon(1e-14));
  CHECK(h.r_p == doctest::Approx(std::cbrt(5.0)).epsilon(1e-14));
  CHECK(h.beta_minus == doctest::Approx(0.845322438060182895).epsilon(1e-13));
  CHECK(h.beta_plus == doctest::Approx(22.3686854143729592).epsilon(1e-13));
}

TEST_CASE("nondegeneracy bound") {
  /* n=4: 27 M^2 lambda < 1, i.e. 9 M^2 Lambda < 1 */
  CHECK(check_nondegeneracy({4, 1.0, 0.03}));
  CHECK(check_nondegeneracy({4, 1.0, 1.0 / 9.0 - 1e-6}));
  CHECK_FALSE(check_nondegeneracy({4, 1.0, 1.0 / 9.0}));
  CHECK_FALSE(check_nondegeneracy({4, 1.0, 0.2}));
  CHECK_THROWS_AS(horizons(SdsParams{4, 1.0, 0.2}), DegenerateSpacetime);

  /* n=5: M^2 lambda^2 < 2^2/4^4 = 1/64, with lambda = Lambda/6 */
  double lam_crit = std::sqrt(1.0 / 64.0); /* = 1/8 */
  CHECK(check_nondegeneracy({5, 1.0, 6.0 * lam_crit * 0.999}));
  CHECK_FALSE(check_nondegeneracy({5, 1.0, 6.0 * lam_crit * 1.001}));
}

TEST_CASE("Schwarzschild limit recovers r_minus -> 2M as lambda -> 0") {
  SdsParams p{4, 1.0, 3e-8};
  HorizonData h = horizons(p);
  CHECK(h.r_minus == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(h.r_plus > 1000.0);
}

TEST_CASE("mu and derivatives are mutually consistent") {
  SdsParams p{5, 1.3, 0.21};
  double r = 2.37;
  double h = 1e-6;
  double fd1 = (mu(p, r + h) - mu(p, r - h)) / (2 * h);
  double fd2 = (mu(p, r + h) - 2 * mu(p, r) + mu(p, r - h)) / (h * h);
  CHECK(dmu(p, r) == doctest::Approx(fd1).epsilon(1e-8));
  CHECK(d2mu(p, r) == doctest::Approx(fd2).epsilon(1e-3));
  CHECK(mu_tilde(p, r) == doctest::Approx(mu(p, r) / (r * r)).epsilon(1e-15));
  double fdt = (mu_tilde(p, r + h) - mu_tilde(p, r - h)) / (2 * h);
  CHECK(dmu_tilde(p, r) == doctest::Approx(fdt).epsilon(1e-8));
}

TEST_CASE("random nondegenerate sets: root ordering and residuals") {
  std::mt19937_64 rng(777);
  for (int n = 4; n <= 8; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      SdsParams p = random_nondegenerate(n, rng);
      HorizonData h = horizons(p);

      CHECK(0.0 < h.r_minus);
      CHECK(h.r_minus < h.r_p);
      CHECK(h.r_p < h.r_plus);

      CHECK(std::fabs(mu(p, h.r_minus)) < 1e-10);
      CHECK(std::fabs(mu(p, h.r_plus)) < 1e-10);

      /* r_p is the critical point of mu - tilde */
      CHECK(std::fabs(dmu_tilde(p, h.r_p)) < 1e-10);
      CHECK(mu(p, h.r_p) > 0.0);

      CHECK(h.beta_minus > 0.0);
      CHECK(h.beta_plus > 0.0);
      CHECK(h.beta_minus == doctest::Approx(2.0 / dmu(p, h.r_minus)).epsilon(1e-12));
      CHECK(h.beta_plus == doctest::Approx(-2.0 / dmu(p, h.r_plus)).epsilon(1e-12));
    }
  }
}

TEST_CASE("RadialMetric wraps both backgrounds") {
  SdsParams p{4, 1.0, 0.03};
  RadialMetric m = RadialMetric::from_sds(p);
  CHECK(m.mu(3.0) == doctest::Approx(mu(p, 3.0)).epsilon(1e-15));
  CHECK(m.alpha(3.0) == doctest::Approx(std::sqrt(mu(p, 3.0))).epsilon(1e-15));

  RadialMetric d = RadialMetric::desitter(4);
  CHECK(d.mu(0.5) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(d.dmu(0.5) == doctest::Approx(-1.0).epsilon(1e-15));
}
