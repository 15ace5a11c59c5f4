/* fit.hpp
 *
 * Small fitting helpers: linear least squares, log-log refinement
 * slopes, and the damped-oscillation tail model
 *
 *   y(t) = c0 + A e^{-kappa t} cos(omega t + phi)
 *
 * fitted by an outer multistart + Nelder-Mead search over (kappa,
 * omega) with the conditionally linear parameters (c0, a, b) solved
 * exactly at each step.
 */
#ifndef SDSFORM_FIT_HPP
#define SDSFORM_FIT_HPP

#include <vector>

namespace sdsform {

struct LineFit {
  double slope = 0;
  double intercept = 0;
  double rms_residual = 0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

/* slope of ln(err) against ln(h); expects positive entries */
double loglog_slope(const std::vector<double>& h,
                    const std::vector<double>& err);

struct DecayFit {
  double c0 = 0;
  double amplitude = 0;
  double kappa = 0;
  double omega = 0;
  double phase = 0;
  double rms_residual = 0;
  double signal_range = 0;
  bool accepted = false; /* rms_residual < 1% of signal_range */
};

DecayFit fit_decay(const std::vector<double>& t,
                   const std::vector<double>& y);

}  // namespace sdsform

#endif
