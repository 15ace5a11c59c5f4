/* test_evolve.cpp
 *
 * Time-domain checks: the tortoise grid, scalar decay to a constant,
 * decay-rate stability under grid refinement, stationarity of the
 * closed-form 1-form and 2-form states, relaxation of pulsed data onto
 * the stationary span, exact reversibility of the interior step, and
 * the Hodge-duality conjugacy of the 2-form sector.
 *
 * Tolerances were frozen from calibration runs at the resolutions used
 * here; measured values appear in comments next to each bound.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "sdsform/errors.hpp"
#include "sdsform/evolve.hpp"
#include "sdsform/fit.hpp"
#include "sdsform/geometry.hpp"
#include "sdsform/zero_modes.hpp"

using namespace sdsform;

namespace {

SdsParams reference_params() {
  SdsParams p;
  p.n = 4;
  p.mass = 1.0;
  p.cosmo = 0.03;
  return p;
}

/* drop the initial transient before fitting the tail model; the early
 * samples hold the outgoing pulse, not the ringdown */
void slice_tail(const std::vector<double>& t, const std::vector<double>& y,
                double t_min, std::vector<double>* ts,
                std::vector<double>* ys) {
  ts->clear();
  ys->clear();
  for (size_t k = 0; k < t.size(); ++k) {
    if (t[k] < t_min) continue;
    ts->push_back(t[k]);
    ys->push_back(y[k]);
  }
}

DecayFit probe_tail_fit(const ProbeSeries& s, int probe, double t_min) {
  std::vector<double> ts, ys;
  slice_tail(s.t, s.value[probe], t_min, &ts, &ys);
  return fit_decay(ts, ys);
}

double max_abs_diff(const std::vector<double>& a,
                    const std::vector<double>& b) {
  double worst = 0;
  for (size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::fabs(a[i] - b[i]));
  return worst;
}

}  // namespace

TEST_CASE("tortoise grid") {
  SdsParams p = reference_params();
  TortoiseGrid g = tortoise_grid(p, 40.0, 513);

  REQUIRE(g.size() == 513);
  CHECK(g.rstar.front() == doctest::Approx(-40.0));
  CHECK(g.rstar.back() == doctest::Approx(40.0));
  CHECK(g.h == doctest::Approx(80.0 / 512));

  HorizonData hor = horizons(p);
  for (int i = 0; i < g.size(); ++i) {
    CHECK(g.r[i] > hor.r_minus);
    CHECK(g.r[i] < hor.r_plus);
    CHECK(g.mu_node[i] > 0);
    if (i) CHECK(g.r[i] > g.r[i - 1]);
  }

  /* r(r_*) inverts the tortoise map, whose slope is dr/dr_* = mu, so a
   * central difference of r against r_* should reproduce mu at the node */
  for (int i = 1; i + 1 < g.size(); i += 37) {
    double drdx = (g.r[i + 1] - g.r[i - 1]) / (2 * g.h);
    CHECK(drdx == doctest::Approx(g.mu_node[i]).epsilon(5e-4));
  }

  /* too deep into either horizon for double precision */
  CHECK_THROWS_AS(tortoise_grid(p, 100.0, 513), NumericalError);
}

TEST_CASE("scalar l=0 settles to a constant") {
  SdsParams p = reference_params();
  EvolveOptions opt;
  opt.npts = 2049;

  ScalarInit init;
  TortoiseGrid g = tortoise_grid(p, opt.L, opt.npts);
  init.u0 = gaussian_pulse(g, 0.0, 2.0);
  init.v0.assign(g.size(), 0.0);

  ScalarEvolution ev = evolve_scalar(p, 0, init, 70.0, opt);
  REQUIRE(ev.u.value.size() == 3);

  std::vector<double> c0(3);
  for (int probe = 0; probe < 3; ++probe) {
    DecayFit f = probe_tail_fit(ev.u, probe, 12.0);
    CHECK(f.accepted);
    CHECK(f.kappa > 0);
    c0[probe] = f.c0;
  }
  /* probe independence of the asymptotic constant; measured spread
   * 2.4e-4 at this resolution */
  CHECK(std::fabs(c0[0] - c0[1]) <= 1e-3);
  CHECK(std::fabs(c0[1] - c0[2]) <= 1e-3);
  CHECK(std::fabs(c0[0] - c0[2]) <= 1e-3);

  /* discrete energy never grows once the pulse has left through the
   * horizons; by t = L + 10 both fronts are out */
  double t_exit = opt.L + 10.0;
  int violations = 0;
  for (size_t k = 1; k < ev.energy.size(); ++k) {
    if (ev.u.t[k] < t_exit) continue;
    if (ev.energy[k] > ev.energy[k - 1] * (1 + 1e-12)) ++violations;
  }
  CHECK(violations == 0);
  /* and nearly all of it leaves: 2.97 initially, ~1e-4 at t=70 */
  CHECK(ev.energy.back() <= 1e-3 * ev.energy.front());
}

TEST_CASE("scalar decay-rate fits converge across resolutions") {
  SdsParams p = reference_params();

  /* fitted kappa per probe, three resolutions; the rates must agree
   * within 1%.  Measured per-probe spread is below 0.3%. */
  std::vector<std::vector<double>> kappa(3);
  for (int npts : {1025, 2049, 4097}) {
    EvolveOptions opt;
    opt.npts = npts;
    TortoiseGrid g = tortoise_grid(p, opt.L, opt.npts);
    ScalarInit init;
    init.u0 = gaussian_pulse(g, 0.0, 2.0);
    init.v0.assign(g.size(), 0.0);
    ScalarEvolution ev = evolve_scalar(p, 0, init, 70.0, opt);
    for (int probe = 0; probe < 3; ++probe) {
      DecayFit f = probe_tail_fit(ev.u, probe, 12.0);
      REQUIRE(f.accepted);
      kappa[probe].push_back(f.kappa);
    }
  }
  for (int probe = 0; probe < 3; ++probe) {
    double lo = *std::min_element(kappa[probe].begin(), kappa[probe].end());
    double hi = *std::max_element(kappa[probe].begin(), kappa[probe].end());
    CHECK((hi - lo) / hi <= 0.01);
  }
}

TEST_CASE("scalar l=1 decays to zero") {
  SdsParams p = reference_params();
  EvolveOptions opt;
  opt.npts = 2049;
  TortoiseGrid g = tortoise_grid(p, opt.L, opt.npts);
  ScalarInit init;
  init.u0 = gaussian_pulse(g, 0.0, 2.0);
  init.v0.assign(g.size(), 0.0);

  /* the fitted rate is near 0.09, so the run must be long for the
   * probes to flatten out; measured |u| <= 1.5e-5 at t=140 from an
   * initial pulse of height 1 */
  ScalarEvolution ev = evolve_scalar(p, 1, init, 140.0, opt);
  for (int probe = 0; probe < 3; ++probe) {
    DecayFit f = probe_tail_fit(ev.u, probe, 12.0);
    CHECK(f.accepted);
    CHECK(f.kappa > 0);
    /* no constant survives with angular momentum */
    CHECK(std::fabs(f.c0) <= 1e-3);
    CHECK(std::fabs(ev.u.value[probe].back()) <= 1e-4);
  }
}

TEST_CASE("one-form stationary data stays put") {
  SdsParams p = reference_params();
  ZeroModeBasis basis = basis_u_pm(p);

  /* u_plus at three resolutions: max-norm drift over t_max = 30 must
   * shrink like h^2.  Measured 6.04e-5 / 1.51e-5 / 3.76e-6, i.e.
   * drift/(h^2 t_max) ~ 1e-4 */
  const double t_max = 30.0;
  std::vector<double> hs, drifts;
  for (int npts : {677, 1353, 2705}) {
    EvolveOptions opt;
    opt.L = 52;
    opt.npts = npts;
    TortoiseGrid g = tortoise_grid(p, opt.L, opt.npts);
    OneFormInit init;
    sample_zero_mode(basis.u_plus, g, &init.f1, &init.f2);
    init.v1.assign(g.size(), 0.0);
    init.v2.assign(g.size(), 0.0);
    OneFormEvolution ev = evolve_oneform(p, init, t_max, opt);
    double drift = std::max(max_abs_diff(ev.f1_final, init.f1),
                            max_abs_diff(ev.f2_final, init.f2));
    CHECK(drift <= 1e-3 * g.h * g.h * t_max);
    hs.push_back(g.h);
    drifts.push_back(drift);
  }
  CHECK(loglog_slope(hs, drifts) >= 1.8);

  /* u_minus, single resolution; measured 3.92e-5 */
  {
    EvolveOptions opt;
    opt.L = 52;
    opt.npts = 1353;
    TortoiseGrid g = tortoise_grid(p, opt.L, opt.npts);
    OneFormInit init;
    sample_zero_mode(basis.u_minus, g, &init.f1, &init.f2);
    init.v1.assign(g.size(), 0.0);
    init.v2.assign(g.size(), 0.0);
    OneFormEvolution ev = evolve_oneform(p, init, t_max, opt);
    double drift = std::max(max_abs_diff(ev.f1_final, init.f1),
                            max_abs_diff(ev.f2_final, init.f2));
    CHECK(drift <= 1e-3 * g.h * g.h * t_max);
  }
}

TEST_CASE("one-form pulse relaxes onto the stationary pair") {
  SdsParams p = reference_params();
  ZeroModeBasis basis = basis_u_pm(p);

  /* Known combination plus a small pulse.  L is chosen so that the
   * boundary reflections of the truncated domain reach the projection
   * window only after t_max = 72 (they arrive at the window edge near
   * t = 2L - window, so L = 52 keeps the window causally clean). */
  EvolveOptions opt;
  opt.L = 52;
  opt.npts = 2705;
  TortoiseGrid g = tortoise_grid(p, opt.L, opt.npts);

  OneFormInit init;
  std::vector<double> p1, p2, m1, m2;
  sample_zero_mode(basis.u_plus, g, &p1, &p2);
  sample_zero_mode(basis.u_minus, g, &m1, &m2);
  std::vector<double> pulse = gaussian_pulse(g, 0.0, 2.0);
  init.f1.resize(g.size());
  init.f2.resize(g.size());
  for (int i = 0; i < g.size(); ++i) {
    init.f1[i] = 1.0 * p1[i] + 0.5 * m1[i] + 0.025 * pulse[i];
    init.f2[i] = 1.0 * p2[i] + 0.5 * m2[i];
  }
  init.v1.assign(g.size(), 0.0);
  init.v2.assign(g.size(), 0.0);

  OneFormEvolution ev = evolve_oneform(p, init, 72.0, opt);

  /* final-state projection recovers the planted combination; measured
   * c_plus = 0.99995, c_minus = 0.50085, rel_residual = 1.5e-4 */
  OneFormProjection proj = project_oneform(p, g, ev.f1_final, ev.f2_final);
  CHECK(proj.c_plus == doctest::Approx(1.0).epsilon(5e-3));
  CHECK(proj.c_minus == doctest::Approx(0.5).epsilon(5e-3));
  CHECK(proj.rel_residual <= 1e-3);

  /* the ringdown fit at the central probe accepts with kappa > 0 */
  DecayFit f1_fit = probe_tail_fit(ev.f1, 1, 12.0);
  CHECK(f1_fit.accepted);
  CHECK(f1_fit.kappa > 0);

  /* probe independence: at each probe, solve the 2x2 system
   * (u_plus, u_minus profile values) * (c_plus, c_minus) = fitted
   * asymptotes of (f1, f2); the coefficients must agree across the
   * three probes within 1e-3 */
  std::vector<double> cp(3), cm(3);
  for (int probe = 0; probe < 3; ++probe) {
    DecayFit a = probe_tail_fit(ev.f1, probe, 12.0);
    DecayFit b = probe_tail_fit(ev.f2, probe, 12.0);
    double rs = ev.f1.probe_rstar[probe];
    /* locate the node holding this probe */
    int idx = (int)std::llround((rs + opt.L) / g.h);
    double det = p1[idx] * m2[idx] - m1[idx] * p2[idx];
    REQUIRE(std::fabs(det) > 1e-12);
    cp[probe] = (a.c0 * m2[idx] - m1[idx] * b.c0) / det;
    cm[probe] = (p1[idx] * b.c0 - a.c0 * p2[idx]) / det;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      CHECK(std::fabs(cp[i] - cp[j]) <= 1e-3);
      CHECK(std::fabs(cm[i] - cm[j]) <= 1e-3);
    }
}

TEST_CASE("interior one-form step is exactly time-reversible") {
  SdsParams p = reference_params();
  TortoiseGrid g = tortoise_grid(p, 40.0, 513);
  const int N = g.size();
  double dt = 0.8 * g.h;

  /* two arbitrary smooth levels */
  std::vector<double> p1(N), p2(N), c1(N), c2(N);
  for (int i = 0; i < N; ++i) {
    double x = g.rstar[i];
    double env = std::exp(-x * x / 50.0);
    p1[i] = env * std::cos(0.3 * x);
    p2[i] = env * std::sin(0.2 * x + 0.4);
    c1[i] = env * std::cos(0.3 * (x - dt));
    c2[i] = env * std::sin(0.2 * (x - dt) + 0.4);
  }

  std::vector<double> n1, n2;
  oneform_step(p, g, dt, p1, p2, c1, c2, &n1, &n2);

  /* swap the levels and negate f2: the step must return to (p1, -p2)
   * on the interior.  Measured worst error 6.7e-16. */
  std::vector<double> rn2(N), rc2(N), b1, b2;
  for (int i = 0; i < N; ++i) {
    rn2[i] = -n2[i];
    rc2[i] = -c2[i];
  }
  oneform_step(p, g, dt, n1, rn2, c1, rc2, &b1, &b2);

  double worst = 0;
  for (int i = 1; i + 1 < N; ++i) {
    worst = std::max(worst, std::fabs(b1[i] - p1[i]));
    worst = std::max(worst, std::fabs(b2[i] + p2[i]));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("two-form stationary states") {
  SdsParams p = reference_params();
  EvolveOptions opt;
  opt.npts = 1025;
  TortoiseGrid g = tortoise_grid(p, opt.L, opt.npts);
  const double t_max = 30.0;

  /* the omega profile is the constant 1 in the x slot */
  {
    TwoFormInit init;
    init.x.assign(g.size(), 1.0);
    init.w.assign(g.size(), 0.0);
    init.vx.assign(g.size(), 0.0);
    init.vw.assign(g.size(), 0.0);
    TwoFormEvolution ev = evolve_twoform(p, init, t_max, opt);
    double drift = std::max(max_abs_diff(ev.x_final, init.x),
                            max_abs_diff(ev.w_final, init.w));
    /* lies in the exact discrete kernel; measured 0.0 */
    CHECK(drift <= 1e-12);
  }

  /* r^{2-n} dt^dr in the w slot is also discretely exact: the scheme
   * differences r^{n-2} w, which is the constant 1.  Measured 2.7e-14. */
  {
    TwoFormInit init;
    init.x.assign(g.size(), 0.0);
    init.w.resize(g.size());
    for (int i = 0; i < g.size(); ++i)
      init.w[i] = std::pow(g.r[i], 2.0 - p.n);
    init.vx.assign(g.size(), 0.0);
    init.vw.assign(g.size(), 0.0);
    TwoFormEvolution ev = evolve_twoform(p, init, t_max, opt);
    double drift = std::max(max_abs_diff(ev.x_final, init.x),
                            max_abs_diff(ev.w_final, init.w));
    CHECK(drift <= 1e-12);
  }
}

TEST_CASE("two-form pulse converges to the stationary span") {
  SdsParams p = reference_params();
  EvolveOptions opt;
  opt.npts = 1025;
  TortoiseGrid g = tortoise_grid(p, opt.L, opt.npts);

  std::vector<double> pulse = gaussian_pulse(g, 0.0, 3.0);
  TwoFormInit init;
  init.x.resize(g.size());
  init.w.resize(g.size());
  init.vx.assign(g.size(), 0.0);
  init.vw.assign(g.size(), 0.0);
  for (int i = 0; i < g.size(); ++i) {
    double q = std::pow(g.r[i], 2.0 - p.n);
    init.x[i] = 1.0 + 0.05 * pulse[i];
    init.w[i] = 0.5 * q + 0.1 * pulse[i];
  }

  /* measured at t=70: c_omega = 1.0000046, c_dtdr = 0.5000087,
   * rel_residual = 5.9e-5 */
  TwoFormEvolution ev = evolve_twoform(p, init, 70.0, opt);
  TwoFormProjection proj = project_twoform(p, g, ev.x_final, ev.w_final);
  CHECK(proj.c_omega == doctest::Approx(1.0).epsilon(5e-3));
  CHECK(proj.c_dtdr == doctest::Approx(0.5).epsilon(5e-3));
  CHECK(proj.rel_residual <= 1e-3);
}

TEST_CASE("evolving Hodge-dual data yields the dual asymptote") {
  SdsParams p = reference_params();
  EvolveOptions opt;
  opt.npts = 1025;
  TortoiseGrid g = tortoise_grid(p, opt.L, opt.npts);

  std::vector<double> pulse = gaussian_pulse(g, 0.0, 3.0);
  TwoFormInit a, b;
  a.x.resize(g.size());
  a.w.resize(g.size());
  a.vx.assign(g.size(), 0.0);
  a.vw.assign(g.size(), 0.0);
  b = a;
  for (int i = 0; i < g.size(); ++i) {
    double q = std::pow(g.r[i], 2.0 - p.n);
    a.x[i] = 1.0 + 0.05 * pulse[i];
    a.w[i] = 0.5 * q + 0.1 * pulse[i];
    /* the star map swaps the slots with r^{n-2} weights */
    b.x[i] = a.w[i] / q;
    b.w[i] = q * a.x[i];
  }

  /* pointwise conjugacy: evolving the dual data equals dualizing the
   * evolved fields.  The interior stencils commute with the star map
   * exactly; only the one-sided outflow updates break the conjugacy,
   * and that mismatch rides the outgoing characteristic straight out
   * of the domain.  Measured: 4.4e-14 over |r_*| <= 20, 2.3e-3 at the
   * outermost nodes (grid-independent, pure boundary artifact). */
  {
    TwoFormEvolution e1 = evolve_twoform(p, a, 40.0, opt);
    TwoFormEvolution e2 = evolve_twoform(p, b, 40.0, opt);
    double worst_win = 0, worst_all = 0;
    for (int i = 0; i < g.size(); ++i) {
      double q = std::pow(g.r[i], 2.0 - p.n);
      double err = std::max(std::fabs(e2.x_final[i] - e1.w_final[i] / q),
                            std::fabs(e2.w_final[i] - q * e1.x_final[i]));
      worst_all = std::max(worst_all, err);
      if (std::fabs(g.rstar[i]) <= 20.0) worst_win = std::max(worst_win, err);
    }
    CHECK(worst_win <= 1e-10);
    CHECK(worst_all <= 1e-2);
  }

  /* asymptote swap: the dual run settles onto the dual combination.
   * Measured swap errors 7.4e-5 and 3.6e-6 at t=90. */
  {
    TwoFormEvolution e1 = evolve_twoform(p, a, 90.0, opt);
    TwoFormEvolution e2 = evolve_twoform(p, b, 90.0, opt);
    TwoFormProjection p1 = project_twoform(p, g, e1.x_final, e1.w_final);
    TwoFormProjection p2 = project_twoform(p, g, e2.x_final, e2.w_final);
    CHECK(std::fabs(p2.c_omega - p1.c_dtdr) <= 1e-3);
    CHECK(std::fabs(p2.c_dtdr - p1.c_omega) <= 1e-3);
    CHECK(p2.rel_residual <= 2e-3);
  }
}

TEST_CASE("evolution guards") {
  SdsParams p = reference_params();
  EvolveOptions opt;
  opt.npts = 257;
  TortoiseGrid g = tortoise_grid(p, opt.L, opt.npts);

  ScalarInit init;
  init.u0 = gaussian_pulse(g, 0.0, 2.0);
  init.v0.assign(g.size(), 0.0);

  SUBCASE("cfl out of range") {
    EvolveOptions bad = opt;
    bad.cfl = 1.2;
    CHECK_THROWS_AS(evolve_scalar(p, 0, init, 1.0, bad), CflViolation);
    bad.cfl = 0.0;
    CHECK_THROWS_AS(evolve_scalar(p, 0, init, 1.0, bad), CflViolation);
  }

  SUBCASE("initial data must match the grid") {
    ScalarInit short_init;
    short_init.u0.assign(100, 0.0);
    short_init.v0.assign(100, 0.0);
    CHECK_THROWS_AS(evolve_scalar(p, 0, short_init, 1.0, opt), ConfigError);
  }

  SUBCASE("nonfinite fields are caught") {
    ScalarInit bad = init;
    bad.u0[50] = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(evolve_scalar(p, 0, bad, 5.0, opt), NonfiniteField);
  }
}
