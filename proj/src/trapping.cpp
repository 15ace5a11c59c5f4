/* trapping.cpp
 *
 * Reduced-flow integration, escape-function Monte Carlo, and the
 * closed-form expansion-rate and gap quantities.
 */
#include "sdsform/trapping.hpp"

#include <cmath>
#include <limits>

namespace sdsform {

namespace {

struct FlowFns {
  SdsParams params;

  double delta_r(double r) const { return r * r * mu(params, r); }
  double ddelta_r(double r) const {
    return 2 * r * mu(params, r) + r * r * dmu(params, r);
  }
  double W(double r) const { return r * r / mu(params, r); }
  double dW(double r) const {
    const double m = mu(params, r), dm = dmu(params, r);
    return (2 * r * m - r * r * dm) / (m * m);
  }

  /* reduced Hamilton vector field in (r, xi) at parameter z */
  void rhs(double r, double xi, double z, double& fr, double& fxi) const {
    fr = 2 * delta_r(r) * xi;
    fxi = -(ddelta_r(r) * xi * xi - dW(r) * z * z);
  }
};

}  // namespace

double principal_symbol(const SdsParams& params, double r, double xi,
                        double eta_sq, double z) {
  const double dr = r * r * mu(params, r);
  if (!(dr > 0))
    throw HorizonDomain("principal_symbol: Delta_r <= 0 at r = " +
                        std::to_string(r));
  return dr * xi * xi - (std::pow(r, 4) / dr) * z * z + eta_sq;
}

Trajectory hamilton_flow(const SdsParams& params, const PhasePoint& initial,
                         double s_span, int n_samples) {
  if (n_samples < 2) throw ConfigError("hamilton_flow: need >= 2 samples");
  const FlowFns f{params};
  if (!(f.delta_r(initial.r) > 0))
    throw HorizonDomain("hamilton_flow: initial point outside the domain");

  const double z = initial.z;
  const double p0 = principal_symbol(params, initial.r, initial.xi,
                                     initial.eta_sq, z);
  const HorizonData hor = horizons(params);
  const double r_lo = hor.r_minus, r_hi = hor.r_plus;
  const double dr_floor = 1e-12 * f.delta_r(hor.r_p);

  int substeps = 8; /* RK4 substeps per sample interval */
  for (int attempt = 0; attempt <= 12; ++attempt) {
    Trajectory t;
    t.s.reserve(n_samples + 1);
    t.r.reserve(n_samples + 1);
    t.xi.reserve(n_samples + 1);
    double r = initial.r, xi = initial.xi;
    double drift = 0;
    t.s.push_back(0);
    t.r.push_back(r);
    t.xi.push_back(xi);
    const double hs = s_span / n_samples / substeps;
    bool escaped = false;
    double s_now = 0;
    for (int i = 0; i < n_samples && !escaped; ++i) {
      for (int k = 0; k < substeps; ++k) {
        double k1r, k1x, k2r, k2x, k3r, k3x, k4r, k4x;
        f.rhs(r, xi, z, k1r, k1x);
        const double r2 = r + 0.5 * hs * k1r, x2 = xi + 0.5 * hs * k1x;
        if (!(r2 > r_lo && r2 < r_hi && f.delta_r(r2) > dr_floor)) {
          escaped = true;
          break;
        }
        f.rhs(r2, x2, z, k2r, k2x);
        const double r3 = r + 0.5 * hs * k2r, x3 = xi + 0.5 * hs * k2x;
        if (!(r3 > r_lo && r3 < r_hi && f.delta_r(r3) > dr_floor)) {
          escaped = true;
          break;
        }
        f.rhs(r3, x3, z, k3r, k3x);
        const double r4 = r + hs * k3r, x4 = xi + hs * k3x;
        if (!(r4 > r_lo && r4 < r_hi && f.delta_r(r4) > dr_floor)) {
          escaped = true;
          break;
        }
        f.rhs(r4, x4, z, k4r, k4x);
        r += hs / 6 * (k1r + 2 * k2r + 2 * k3r + k4r);
        xi += hs / 6 * (k1x + 2 * k2x + 2 * k3x + k4x);
        s_now += hs;
        if (!(r > r_lo && r < r_hi && f.delta_r(r) > dr_floor) ||
            std::abs(xi) > 1e14 || !std::isfinite(r) || !std::isfinite(xi)) {
          escaped = true;
          break;
        }
      }
      if (escaped) break;
      t.s.push_back(s_now);
      t.r.push_back(r);
      t.xi.push_back(xi);
      const double p =
          f.delta_r(r) * xi * xi - f.W(r) * z * z + initial.eta_sq;
      /* conservation measured against the local term scale: near a
         horizon the two leading terms blow up and cancel, so the fixed
         initial scale would demand more than double precision holds */
      const double scale =
          f.delta_r(r) * xi * xi + f.W(r) * z * z + initial.eta_sq + 1e-300;
      const double rate = std::abs(p - p0) / (scale * std::max(s_now, 1e-12));
      drift = std::max(drift, rate);
    }
    t.horizon_escape = escaped;
    t.escape_time = escaped ? s_now : 0;
    if (drift <= 1e-9 || attempt == 12) {
      if (drift > 1e-9)
        throw NumericalError(
            "hamilton_flow: symbol conservation not reached at max "
            "refinement");
      t.p_drift_rate = drift;
      return t;
    }
    substeps *= 2;
  }
  throw NumericalError(
      "hamilton_flow: symbol conservation not reached at max refinement");
}

double nu_min(const SdsParams& params) {
  const double rp = photon_radius(params);
  const int n = params.n;
  const double denom =
      1.0 - (n - 1) / double(n - 3) * rp * rp * lambda_small(params);
  if (!(denom > 0))
    throw DegenerateTrapping("nu_min: nonpositive radicand denominator");
  return 2 * rp * std::sqrt((n - 1) / denom);
}

Eigen::Matrix2d trapped_linearization(const SdsParams& params, double z) {
  const double rp = photon_radius(params);
  const double mt = mu_tilde(params, rp);
  if (!(mt > 0))
    throw DegenerateTrapping("trapped_linearization: mu~(r_p) <= 0");
  const int n = params.n;
  Eigen::Matrix2d a;
  a << 0, 2 * std::pow(rp, 4) * mt,
       2 * (n - 3) * std::pow(rp, -4) / (mt * mt) * z * z, 0;
  return a;
}

EscapeReport escape_function_check(const SdsParams& params, int sample_size,
                                   std::uint64_t seed) {
  const HorizonData hor = horizons(params);
  const FlowFns f{params};
  const double rp = hor.r_p;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);

  EscapeReport rep;
  rep.min_h2f = std::numeric_limits<double>::infinity();
  const double z = 1.0;
  const double margin = 0.02 * (hor.r_plus - hor.r_minus);

  auto h2f = [&](double r, double xi) {
    /* H_p^2 F for F = (r-r_p)^2:
       H_p F = 4 Delta_r xi (r - r_p)
       H_p^2 F = (4 Delta_r' xi (r-r_p) + 4 Delta_r xi) 2 Delta_r xi
                 + 4 Delta_r (r-r_p) (-Delta_r' xi^2 + W' z^2) */
    const double dr = f.delta_r(r), ddr = f.ddelta_r(r), dw = f.dW(r);
    return (4 * ddr * xi * (r - rp) + 4 * dr * xi) * 2 * dr * xi +
           4 * dr * (r - rp) * (-ddr * xi * xi + dw * z * z);
  };

  for (int i = 0; i < sample_size; ++i) {
    PhasePoint pt;
    pt.z = z;
    if (i % 2 == 0) {
      /* family A: xi = 0, r away from r_p, eta^2 = W z^2 puts p = 0 */
      double r;
      do {
        r = hor.r_minus + margin +
            uni(rng) * (hor.r_plus - hor.r_minus - 2 * margin);
      } while (std::abs(r - rp) < 1e-6 * rp);
      pt.r = r;
      pt.xi = 0;
      pt.eta_sq = f.W(r) * z * z;
    } else {
      /* family B: r = r_p, xi != 0, eta^2 = W z^2 - Delta_r xi^2 >= 0 */
      const double xi_max_sq = f.W(rp) * z * z / f.delta_r(rp);
      const double xi_sq = uni(rng) * xi_max_sq;
      pt.r = rp;
      pt.xi = (uni(rng) < 0.5 ? -1 : 1) * std::sqrt(xi_sq);
      if (pt.xi == 0) pt.xi = std::sqrt(0.5 * xi_max_sq);
      pt.eta_sq = f.W(rp) * z * z - f.delta_r(rp) * pt.xi * pt.xi;
    }
    const double val = h2f(pt.r, pt.xi);
    rep.min_h2f = std::min(rep.min_h2f, val);
    if (!(val > 0)) rep.violations += 1;
    if (rep.sample.size() < 32) rep.sample.push_back(pt);
    rep.samples += 1;
  }
  return rep;
}

GapReport gap_condition(const SdsParams& params) {
  const int n = params.n;
  const double rp = photon_radius(params);
  GapReport g;
  g.lhs = rp * rp * lambda_small(params);
  g.rhs = (5.0 - n) * (n - 3.0) / (4.0 * (n - 1.0));
  g.margin = g.lhs - g.rhs;
  g.holds = g.lhs > g.rhs;
  g.nu_min_value = nu_min(params);
  g.subprincipal_eigs[0] = 2 * rp;
  g.subprincipal_eigs[1] = -2 * rp;
  g.direct_comparison = 2 * rp < g.nu_min_value / 2;
  return g;
}

TrappingReport trapping_report(const SdsParams& params, int escape_samples,
                               std::uint64_t seed) {
  const HorizonData hor = horizons(params);
  TrappingReport rep;
  rep.r_p = hor.r_p;
  rep.nu_min = nu_min(params);
  rep.subprincipal_eigs[0] = 2 * hor.r_p;
  rep.subprincipal_eigs[1] = -2 * hor.r_p;
  const GapReport gap = gap_condition(params);
  rep.gap_condition_holds = gap.holds;

  /* Lyapunov fit: perturb along the unstable eigendirection
     (dr, dxi) ~ (1, nu/(2 Delta_r)) so |r - r_p| grows as e^{nu s}
     through the fit band |dr| in [1e-6, 1e-3] * r_p. */
  const FlowFns f{params};
  const double nu = rep.nu_min;
  const double d0 = 1e-7 * hor.r_p;
  PhasePoint start;
  start.r = hor.r_p + d0;
  start.xi = nu * d0 / (2 * f.delta_r(hor.r_p));
  start.eta_sq = 0;
  start.z = 1;
  const double s_span = std::log(3e4) / nu; /* reach ~3e-3 r_p */
  Trajectory tr = hamilton_flow(params, start, s_span, 4000);

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (size_t i = 0; i < tr.s.size(); ++i) {
    const double d = std::abs(tr.r[i] - hor.r_p);
    if (d < 1e-6 * hor.r_p || d > 1e-3 * hor.r_p) continue;
    const double x = tr.s[i], y = std::log(d);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m >= 8) {
    rep.fitted_lyapunov = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    rep.fit_converged = true;
  }

  EscapeReport esc = escape_function_check(params, escape_samples, seed);
  rep.phase_point_sample = esc.sample;
  if (esc.violations > 0)
    throw NumericalError("trapping_report: escape function check failed");
  return rep;
}

}  // namespace sdsform
