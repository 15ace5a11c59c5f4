/* test_kds.cpp
 *
 * Slowly rotating Kerr-de Sitter metric and the explicit stationary
 * Maxwell 2-form pair: frozen component values at a generic point,
 * exact reduction at zero spin, Hodge involution, closedness and
 * coclosedness under grid refinement, the perturbed negative control,
 * and smooth dependence on the spin parameter.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "sdsform/fit.hpp"
#include "sdsform/kds.hpp"

using namespace sdsform;

namespace {
const KdsParams kGeneric{1.0, 0.03, 0.1};
}

TEST_CASE("metric components at a generic point") {
  /* frozen from an independent symbolic evaluation at r=4, theta=1 */
  Eigen::Matrix4d g = kds_metric(kGeneric, 4.0, 1.0);
  CHECK(g(0, 0) == doctest::Approx(0.33995240919188425).epsilon(1e-14));
  CHECK(g(0, 3) == doctest::Approx(0.046724122681422558).epsilon(1e-14));
  CHECK(g(1, 1) == doctest::Approx(-2.9371777523341282).epsilon(1e-14));
  CHECK(g(2, 2) == doctest::Approx(-16.002452111702843).epsilon(1e-14));
  CHECK(g(3, 3) == doctest::Approx(-11.337627795695639).epsilon(1e-14));
  CHECK(g(0, 1) == 0.0);
  CHECK(g(1, 2) == 0.0);
  CHECK(g == g.transpose().eval());

  CHECK(kds_delta_r(kGeneric, 4.0) == doctest::Approx(5.4484).epsilon(1e-14));
  CHECK(kds_sqrt_det(kGeneric, 4.0, 1.0) ==
        doctest::Approx(13.4632994398875416).epsilon(1e-13));

  /* sqrt|g| = rho^2 sin th / chi^2 */
  double chi = 1.0 + 0.03 * 0.01 / 3.0;
  double rho2 = 16.0 + 0.01 * std::cos(1.0) * std::cos(1.0);
  CHECK(kds_sqrt_det(kGeneric, 4.0, 1.0) ==
        doctest::Approx(rho2 * std::sin(1.0) / (chi * chi)).epsilon(1e-14));

  Eigen::Matrix4d gi = kds_inverse_metric(kGeneric, 4.0, 1.0);
  CHECK((g * gi - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() <
        1e-12);
}

TEST_CASE("field components at a generic point") {
  Eigen::Matrix4d f1 = u_a1(kGeneric, 4.0, 1.0);
  CHECK(f1(0, 1) == doctest::Approx(0.062465800254017130).epsilon(1e-14));
  CHECK(f1(1, 3) == doctest::Approx(0.0044230372711056021).epsilon(1e-14));
  CHECK(f1(0, 2) == doctest::Approx(-0.00014202589179715510).epsilon(1e-13));
  CHECK(f1(2, 3) == doctest::Approx(-0.022738345276724531).epsilon(1e-14));
  CHECK((f1 + f1.transpose().eval()).cwiseAbs().maxCoeff() == 0.0);

  Eigen::Matrix4d f2 = u_a2(kGeneric, 4.0, 1.0);
  CHECK(f2(0, 1) == doctest::Approx(-0.0016878287470551213).epsilon(1e-13));
  CHECK(f2(0, 2) == doctest::Approx(-0.0052563158456561146).epsilon(1e-13));
  CHECK(f2(1, 3) == doctest::Approx(-0.00011951066703877185).epsilon(1e-12));
  CHECK(f2(2, 3) == doctest::Approx(-0.84153616688954395).epsilon(1e-13));

  /* star star = -1 on 2-forms, and u_a2 = star u_a1 */
  Eigen::Matrix4d s1 = hodge_star_2form(kGeneric, 4.0, 1.0, f1);
  CHECK((s1 - f2).cwiseAbs().maxCoeff() < 1e-14);
  Eigen::Matrix4d s2 = hodge_star_2form(kGeneric, 4.0, 1.0, f2);
  CHECK((s2 + f1).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("zero-spin reduction") {
  KdsParams p0{1.0, 0.03, 0.0};
  for (double r : {3.2, 4.0, 5.5}) {
    for (double th : {0.4, 1.0, 2.3}) {
      Eigen::Matrix4d f1 = u_a1(p0, r, th);
      CHECK(f1(0, 1) == doctest::Approx(1.0 / (r * r)).epsilon(1e-15));
      CHECK(f1(0, 2) == 0.0);
      CHECK(f1(0, 3) == 0.0);
      CHECK(f1(1, 3) == 0.0);
      CHECK(f1(2, 3) == 0.0);
      Eigen::Matrix4d f2 = u_a2(p0, r, th);
      CHECK(f2(2, 3) == doctest::Approx(-std::sin(th)).epsilon(1e-14));
      CHECK(std::abs(f2(0, 1)) < 1e-16);
      CHECK(std::abs(f2(0, 2)) < 1e-16);
      CHECK(std::abs(f2(1, 3)) < 1e-16);

      /* metric diagonal matches mu = 1 - 2/r - 0.01 r^2 */
      Eigen::Matrix4d g = kds_metric(p0, r, th);
      double mu = 1.0 - 2.0 / r - 0.01 * r * r;
      CHECK(g(0, 0) == doctest::Approx(mu).epsilon(1e-14));
      CHECK(g(1, 1) == doctest::Approx(-1.0 / mu).epsilon(1e-14));
      CHECK(g(0, 3) == doctest::Approx(0.0));
    }
  }

  /* residuals at machine precision on the finest acceptance grid */
  Grid2D g = Grid2D::make(3.0, 6.0, 256, 256);
  CHECK(verify_closed(p0, g, KdsField::UA1).max_residual < 1e-13);
  CHECK(verify_coclosed(p0, g, KdsField::UA1).max_residual < 1e-13);
  CHECK(verify_closed(p0, g, KdsField::UA2).max_residual < 1e-12);
  CHECK(verify_coclosed(p0, g, KdsField::UA2).max_residual < 1e-12);
}

TEST_CASE("refinement study at nonzero spin") {
  for (double a : {0.02, 0.05, 0.1}) {
    KdsParams p{1.0, 0.03, a};
    std::vector<double> hs, e_d1, e_c1, e_d2, e_c2;
    for (int ng : {32, 64, 128, 256}) {
      Grid2D g = Grid2D::make(3.0, 6.0, ng, ng);
      hs.push_back(g.hr);
      e_d1.push_back(verify_closed(p, g, KdsField::UA1).max_residual);
      e_c1.push_back(verify_coclosed(p, g, KdsField::UA1).max_residual);
      e_d2.push_back(verify_closed(p, g, KdsField::UA2).max_residual);
      e_c2.push_back(verify_coclosed(p, g, KdsField::UA2).max_residual);
    }
    CHECK(loglog_slope(hs, e_d1) > 1.8);
    CHECK(loglog_slope(hs, e_c1) > 1.8);
    CHECK(loglog_slope(hs, e_d2) > 1.8);
    CHECK(loglog_slope(hs, e_c2) > 1.8);
    CHECK(e_d1.back() < 1e-6);
    CHECK(e_c1.back() < 1e-6);
    CHECK(e_d2.back() < 1e-6);
    CHECK(e_c2.back() < 1e-6);
  }
}

TEST_CASE("negative control does not converge") {
  KdsParams p{1.0, 0.03, 0.1};
  std::vector<double> res;
  for (int ng : {64, 128, 256}) {
    Grid2D g = Grid2D::make(3.0, 6.0, ng, ng);
    res.push_back(
        verify_coclosed(p, g, KdsField::UA1Perturbed).max_residual);
  }
  CHECK(res.back() >= 1e-3);
  /* plateau: refining by 4x changes the residual by < 10% */
  CHECK(std::fabs(res.back() - res.front()) < 0.1 * res.back());
}

TEST_CASE("smooth dependence on spin at a = 0") {
  double eps = 1e-6;
  KdsParams pe{1.0, 0.03, eps};
  KdsParams p0{1.0, 0.03, 0.0};
  double worst = 0;
  for (double r : {3.3, 4.7}) {
    for (double th : {0.7, 1.9}) {
      Eigen::Matrix4d d = (u_a1(pe, r, th) - u_a1(p0, r, th)) / eps;
      worst = std::max(worst, d.cwiseAbs().maxCoeff());
      CHECK(d.allFinite());
    }
  }
  CHECK(worst < 10.0); /* bounded difference quotient */
  CHECK(worst > 1e-4); /* and a genuine first-order response */
}

TEST_CASE("grid construction guards") {
  CHECK_THROWS_AS(Grid2D::make(3.0, 6.0, 4, 64), ConfigError);
  CHECK_THROWS_AS(Grid2D::make(6.0, 3.0, 64, 64), ConfigError);
  CHECK_THROWS_AS(Grid2D::make(3.0, 6.0, 64, 64, 0.0), ConfigError);
  CHECK_THROWS_AS(kds_metric(kGeneric, 4.0, 0.0), AxisSingularity);
}
