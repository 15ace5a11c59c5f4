/* mode_scan.hpp
 *
 * Frequency-domain resonance scan for the sectors whose radial
 * reduction is a single second-order ODE
 *
 *   mu^2 u'' + B(r) u' + C(r) u = 0      on (r_minus, r_plus),
 *
 *   scalar (ell >= 0):   B = mu mu' + (n-2) mu^2 / r
 *                        C = sigma^2 - ell(ell+n-3) mu / r^2
 *   omega profile:       B = mu mu' - (n-2) mu^2 / r
 *                        C = sigma^2
 *   dt^dr profile:       B = mu mu' + (n-2) mu^2 / r
 *                        C = sigma^2 + (n-2) mu (mu'/r - mu/r^2)
 *
 * (the dt^dr profile equation is also obeyed by the exterior
 * derivative of the radial 1-form pair, so it covers the decoupled
 * 1-form combinations).
 *
 * At each horizon the solution with local behavior x^{-i beta sigma/2}
 * times a smooth series (x the distance to the horizon) is built by a
 * Frobenius recurrence and carried to the midpoint by RK4.  The
 * weighted Wronskian
 *
 *   W(sigma) = mu r^{n-2} (u_- u_+' - u_-' u_+)     (scalar, dt^dr)
 *   W(sigma) = mu r^{2-n} (u_- u_+' - u_-' u_+)     (omega)
 *
 * is r-independent and vanishes exactly at resonant sigma.  Zeros are
 * detected on the normalized determinant |W| / (N_- N_+) with N_b a
 * local solution magnitude at the midpoint, which removes the
 * exponential magnitude spread across the scan box.
 */
#ifndef SDSFORM_MODE_SCAN_HPP
#define SDSFORM_MODE_SCAN_HPP

#include <complex>
#include <vector>

#include "sdsform/geometry.hpp"

namespace sdsform {

using Cplx = std::complex<double>;

enum class ScanSector { Scalar, OmegaProfile, DtDrProfile };

struct ScanOptions {
  int ell = 0;         /* scalar sector only */
  double x0_frac = 0.05; /* series handoff distance / (r_plus - r_minus) */
  int series_cap = 200;
  int rk_steps = 1600;
};

struct ConnectionResult {
  Cplx sigma;
  Cplx w_raw = 0;        /* weighted Wronskian at the midpoint */
  double n_minus = 0;    /* local magnitudes used for normalization */
  double n_plus = 0;
  double det_norm = 0;   /* |w_raw| / (n_minus n_plus) */
};

ConnectionResult connection_determinant(const SdsParams& p, ScanSector sector,
                                        Cplx sigma,
                                        const ScanOptions& opt = {});

/* relative Cauchy-Riemann residual |d_im W - i d_re W| / (|d_re W| +
 * |d_im W|) by central differences with the given step */
double cauchy_riemann_residual(const SdsParams& p, ScanSector sector,
                               Cplx sigma, double step = 5e-4,
                               const ScanOptions& opt = {});

struct SigmaBox {
  double re_min = -2, re_max = 2, re_step = 0.02;
  double im_min = 0.02, im_max = 1, im_step = 0.02;
};

struct ModeScanResult {
  std::vector<double> re_axis, im_axis;
  std::vector<ConnectionResult> samples; /* row-major: iy * n_re + ix */
  double median_det = 0;
  std::vector<Cplx> zeros; /* det_norm < 1e-3 * median */
  double max_cr_residual = 0;
  int collisions_skipped = 0;
};

ModeScanResult mode_scan(const SdsParams& p, ScanSector sector,
                         const SigmaBox& box = {},
                         const ScanOptions& opt = {});

}  // namespace sdsform

#endif
