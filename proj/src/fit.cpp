/* fit.cpp
 *
 * Least-squares helpers.  The decay fit treats (c0, a, b) in
 *
 *   y = c0 + e^{-kappa t} (a cos omega t + b sin omega t)
 *
 * as conditionally linear: for each trial (kappa, omega) they are
 * recovered by a rank-revealing QR solve, which reduces the search to
 * two dimensions.  A coarse multistart grid over (kappa, omega) seeds
 * a Nelder-Mead polish.
 */
#include "sdsform/fit.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>

#include "sdsform/errors.hpp"

namespace sdsform {

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw ConfigError("fit_line: need two or more paired samples");
  const int m = (int)x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < m; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double det = m * sxx - sx * sx;
  if (std::abs(det) < 1e-300)
    throw NumericalError("fit_line: degenerate abscissae");
  LineFit f;
  f.slope = (m * sxy - sx * sy) / det;
  f.intercept = (sy - f.slope * sx) / m;
  double acc = 0;
  for (int i = 0; i < m; ++i) {
    const double r = y[i] - (f.intercept + f.slope * x[i]);
    acc += r * r;
  }
  f.rms_residual = std::sqrt(acc / m);
  return f;
}

double loglog_slope(const std::vector<double>& h,
                    const std::vector<double>& err) {
  if (h.size() != err.size() || h.size() < 2)
    throw ConfigError("loglog_slope: need two or more paired samples");
  std::vector<double> lx(h.size()), ly(h.size());
  for (size_t i = 0; i < h.size(); ++i) {
    if (!(h[i] > 0) || !(err[i] > 0))
      throw ConfigError("loglog_slope: entries must be positive");
    lx[i] = std::log(h[i]);
    ly[i] = std::log(err[i]);
  }
  return fit_line(lx, ly).slope;
}

namespace {

/* residual of the best (c0, a, b) for fixed (kappa, omega); also
 * returns the linear coefficients */
double linear_solve(const std::vector<double>& t, const std::vector<double>& y,
                    double kappa, double omega, double* c0, double* a,
                    double* b) {
  const int m = (int)t.size();
  Eigen::MatrixXd M(m, 3);
  Eigen::VectorXd rhs(m);
  for (int i = 0; i < m; ++i) {
    const double e = std::exp(-kappa * t[i]);
    M(i, 0) = 1.0;
    M(i, 1) = e * std::cos(omega * t[i]);
    M(i, 2) = e * std::sin(omega * t[i]);
    rhs(i) = y[i];
  }
  Eigen::Vector3d sol = M.colPivHouseholderQr().solve(rhs);
  *c0 = sol(0);
  *a = sol(1);
  *b = sol(2);
  const double resid = (M * sol - rhs).norm() / std::sqrt((double)m);
  return resid;
}

struct Simplex2 {
  /* Nelder-Mead in (log kappa, omega) */
  static void run(const std::function<double(double, double)>& f, double* p,
                  double* q, int iters) {
    double vx[3] = {*p, *p + 0.3, *p};
    double vy[3] = {*q, *q, *q + 0.15};
    double fv[3];
    for (int i = 0; i < 3; ++i) fv[i] = f(vx[i], vy[i]);
    for (int it = 0; it < iters; ++it) {
      int order[3] = {0, 1, 2};
      std::sort(order, order + 3, [&](int i, int j) { return fv[i] < fv[j]; });
      const int lo = order[0], mid = order[1], hi = order[2];
      if (fv[hi] - fv[lo] < 1e-15 * (1 + std::abs(fv[lo]))) break;
      const double cx = 0.5 * (vx[lo] + vx[mid]);
      const double cy = 0.5 * (vy[lo] + vy[mid]);
      double rx = cx + (cx - vx[hi]), ry = cy + (cy - vy[hi]);
      double fr = f(rx, ry);
      if (fr < fv[lo]) {
        const double ex = cx + 2 * (cx - vx[hi]), ey = cy + 2 * (cy - vy[hi]);
        const double fe = f(ex, ey);
        if (fe < fr) {
          vx[hi] = ex;
          vy[hi] = ey;
          fv[hi] = fe;
        } else {
          vx[hi] = rx;
          vy[hi] = ry;
          fv[hi] = fr;
        }
      } else if (fr < fv[mid]) {
        vx[hi] = rx;
        vy[hi] = ry;
        fv[hi] = fr;
      } else {
        const double kx = cx + 0.5 * (vx[hi] - cx), ky = cy + 0.5 * (vy[hi] - cy);
        const double fk = f(kx, ky);
        if (fk < fv[hi]) {
          vx[hi] = kx;
          vy[hi] = ky;
          fv[hi] = fk;
        } else {
          for (int i : {mid, hi}) {
            vx[i] = vx[lo] + 0.5 * (vx[i] - vx[lo]);
            vy[i] = vy[lo] + 0.5 * (vy[i] - vy[lo]);
            fv[i] = f(vx[i], vy[i]);
          }
        }
      }
    }
    int best = 0;
    for (int i = 1; i < 3; ++i)
      if (fv[i] < fv[best]) best = i;
    *p = vx[best];
    *q = vy[best];
  }
};

}  // namespace

DecayFit fit_decay(const std::vector<double>& t, const std::vector<double>& y) {
  if (t.size() != y.size() || t.size() < 8)
    throw ConfigError("fit_decay: need eight or more paired samples");
  const int m = (int)t.size();
  const double T = t.back() - t.front();
  if (!(T > 0)) throw ConfigError("fit_decay: times must increase");

  DecayFit best;
  double ymin = y[0], ymax = y[0];
  for (double v : y) {
    ymin = std::min(ymin, v);
    ymax = std::max(ymax, v);
  }
  best.signal_range = ymax - ymin;

  const double dt_mean = T / (m - 1);
  const double omega_max = 3.14159265358979323846 / (4.0 * dt_mean);

  auto objective = [&](double logk, double omega) {
    double c0, a, b;
    return linear_solve(t, y, std::exp(logk), std::abs(omega), &c0, &a, &b);
  };

  double best_res = -1, best_logk = 0, best_omega = 0;
  for (int ik = 0; ik < 14; ++ik) {
    const double kappa = (0.25 / T) * std::pow(80.0, ik / 13.0);
    for (int iw = 0; iw <= 40; ++iw) {
      const double omega = omega_max * iw / 40.0;
      const double res = objective(std::log(kappa), omega);
      if (best_res < 0 || res < best_res) {
        best_res = res;
        best_logk = std::log(kappa);
        best_omega = omega;
      }
    }
  }
  Simplex2::run(objective, &best_logk, &best_omega, 200);

  double c0, a, b;
  const double kappa = std::exp(best_logk);
  const double omega = std::abs(best_omega);
  const double res = linear_solve(t, y, kappa, omega, &c0, &a, &b);
  best.c0 = c0;
  best.kappa = kappa;
  best.omega = omega;
  best.amplitude = std::hypot(a, b);
  best.phase = std::atan2(-b, a);
  best.rms_residual = res;
  best.accepted = best.signal_range > 0 && res < 0.01 * best.signal_range;
  return best;
}

}  // namespace sdsform
