/* kds.hpp
 *
 * Slowly rotating Kerr-de Sitter (n = 4) in Boyer-Lindquist coordinates
 * (t, r, theta, phi):
 *
 *   Delta_r  = (r^2+a^2)(1 - Lambda r^2/3) - 2 M r
 *   Delta_th = 1 + (Lambda a^2/3) cos^2 theta
 *   rho^2    = r^2 + a^2 cos^2 theta,   chi = 1 + Lambda a^2/3
 *
 *   g = Delta_r/(chi^2 rho^2) e1 (x) e1 - Delta_th sin^2(th)/(chi^2 rho^2) e2 (x) e2
 *       - rho^2/Delta_r dr^2 - rho^2/Delta_th dth^2
 *   e1 = dt - a sin^2(th) dphi,  e2 = a dt - (r^2+a^2) dphi
 *
 * and the explicit stationary Maxwell 2-form pair
 *
 *   u_a1 = F_TR (dt - a sin^2 th dphi)^dr
 *          + F_ThPh sin th dth^(a dt - (r^2+a^2) dphi),
 *   F_TR = (r^2 - a^2 cos^2 th)/rho^4,  F_ThPh = 2 a r cos th / rho^4,
 *   u_a2 = star u_a1,
 *
 * with finite-difference verification that both are closed and
 * divergence-free.  At a = 0: u_a1 = r^{-2} dt^dr, u_a2 proportional to
 * the sphere volume form.
 */
#ifndef SDSFORM_KDS_HPP
#define SDSFORM_KDS_HPP

#include <Eigen/Dense>
#include <vector>

#include "sdsform/errors.hpp"

namespace sdsform {

struct KdsParams {
  double mass = 1;
  double cosmo = 0.03;
  double spin = 0;
};

struct Grid2D {
  std::vector<double> r;
  std::vector<double> theta;
  double hr = 0, hth = 0;

  static Grid2D make(double r_lo, double r_hi, int nr, int nth,
                     double theta_margin = 0.05);
};

double kds_delta_r(const KdsParams& p, double r);

/* components in coordinate order (t, r, theta, phi) */
Eigen::Matrix4d kds_metric(const KdsParams& p, double r, double theta);
Eigen::Matrix4d kds_inverse_metric(const KdsParams& p, double r,
                                   double theta);
double kds_sqrt_det(const KdsParams& p, double r, double theta);

/* antisymmetric coordinate-component matrices of the 2-forms */
Eigen::Matrix4d u_a1(const KdsParams& p, double r, double theta);
Eigen::Matrix4d u_a2(const KdsParams& p, double r, double theta);

/* (star F)_{mu nu} = (sqrt|g|/2) eps_{mu nu alpha beta} F^{alpha beta},
 * eps_{t r theta phi} = +1 */
Eigen::Matrix4d hodge_star_2form(const KdsParams& p, double r, double theta,
                                 const Eigen::Matrix4d& f);

enum class KdsField { UA1, UA2, UA1Perturbed };

struct KdsResidualReport {
  double max_residual = 0; /* max over components and interior nodes */
  int nr = 0, nth = 0;
};

KdsResidualReport verify_closed(const KdsParams& p, const Grid2D& g,
                                KdsField field = KdsField::UA1);
KdsResidualReport verify_coclosed(const KdsParams& p, const Grid2D& g,
                                  KdsField field = KdsField::UA1);

}  // namespace sdsform

#endif
