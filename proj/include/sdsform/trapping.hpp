/* trapping.hpp
 *
 * Normally hyperbolic trapping at the photon sphere for the null
 * geodesic flow, in the rescaled radial symbol variables:
 *
 *   p = Delta_r xi^2 - (r^4/Delta_r) z^2 + |eta|^2,   Delta_r = r^2 mu,
 *
 * reduced flow dr/ds = 2 Delta_r xi,
 *              dxi/ds = -(Delta_r' xi^2 - W' z^2),  W = r^4/Delta_r,
 * trapped set r = r_p, xi = 0, minimal transverse expansion rate
 *
 *   nu_min = 2 r_p ( (n-1) / (1 - (n-1)/(n-3) r_p^2 lambda) )^{1/2},
 *
 * escape function F = (r - r_p)^2, and the spectral-gap inequality
 * 2 r_p < nu_min / 2, equivalently r_p^2 lambda > (5-n)(n-3)/(4(n-1)).
 */
#ifndef SDSFORM_TRAPPING_HPP
#define SDSFORM_TRAPPING_HPP

#include <Eigen/Dense>
#include <vector>

#include "sdsform/geometry.hpp"

namespace sdsform {

struct PhasePoint {
  double r = 0;
  double xi = 0;
  double eta_sq = 0;
  double z = 1;
};

double principal_symbol(const SdsParams& params, double r, double xi,
                        double eta_sq, double z);

struct Trajectory {
  std::vector<double> s;  /* flow times */
  std::vector<double> r;
  std::vector<double> xi;
  bool horizon_escape = false;
  double escape_time = 0;     /* meaningful when horizon_escape */
  double p_drift_rate = 0;    /* max |p - p0| / (scale * s) */
};

/* RK4 with automatic step refinement until the symbol is conserved to
 * 1e-9 (relative to the symbol's term scale) per unit flow time. */
Trajectory hamilton_flow(const SdsParams& params, const PhasePoint& initial,
                         double s_span, int n_samples = 2000);

double nu_min(const SdsParams& params);

/* reduced (r,xi) linearization at the trapped set: off-diagonal entries
 * 2 r_p^4 mu~(r_p) and 2 (n-3) r_p^{-4} mu~(r_p)^{-2} z^2 */
Eigen::Matrix2d trapped_linearization(const SdsParams& params, double z = 1);

struct EscapeReport {
  int samples = 0;
  int violations = 0;
  double min_h2f = 0; /* smallest H_p^2 F seen over the sample */
  std::vector<PhasePoint> sample; /* small retained subsample */
};

EscapeReport escape_function_check(const SdsParams& params, int sample_size,
                                   std::uint64_t seed = 12345);

struct GapReport {
  bool holds = false;
  double lhs = 0;         /* r_p^2 lambda */
  double rhs = 0;         /* (5-n)(n-3)/(4(n-1)) */
  double margin = 0;      /* lhs - rhs */
  double nu_min_value = 0;
  double subprincipal_eigs[2] = {0, 0}; /* +/- 2 r_p */
  bool direct_comparison = false;       /* 2 r_p < nu_min/2 */
};

GapReport gap_condition(const SdsParams& params);

struct TrappingReport {
  double r_p = 0;
  double nu_min = 0;
  double subprincipal_eigs[2] = {0, 0};
  bool gap_condition_holds = false;
  double fitted_lyapunov = 0;
  bool fit_converged = false;
  std::vector<PhasePoint> phase_point_sample;
};

TrappingReport trapping_report(const SdsParams& params,
                               int escape_samples = 10000,
                               std::uint64_t seed = 12345);

}  // namespace sdsform

#endif
