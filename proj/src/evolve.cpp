/* evolve.cpp
 *
 * Leapfrog in time, compact conservative differences in r_*.  The
 * interior update for a field y with spatial operator
 * a(r) [ W_{i+1/2}(Y_{i+1}-Y_i) - W_{i-1/2}(Y_i-Y_{i-1}) ] / h^2,
 * Y = c(r) y, is assembled once as per-node coefficient arrays.  The
 * 1-form pair couples through mu' d_t of the partner field, handled
 * by a pointwise implicit 2x2 solve (the cross term is skew, so the
 * solve never degenerates for dt mu' < 2).
 *
 * Boundary nodes advect the per-step difference v = y^k - y^{k-1}
 * along the outgoing characteristic (upwind, CFL dt/h <= 0.9 < 1).
 * For the 1-form pair, v is first rotated to g_pm = v1 +- v2; the
 * component whose characteristic carries a zeroth-order term gets
 * dt mu' g added, with mu' evaluated at the boundary node.
 */
#include "sdsform/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>

#include "sdsform/errors.hpp"

namespace sdsform {

namespace {

double rk4_step_r(const SdsParams& p, double r, double step) {
  /* one RK4 step of dr/dr_* = mu(r) */
  const double k1 = mu(p, r);
  const double k2 = mu(p, r + 0.5 * step * k1);
  const double k3 = mu(p, r + 0.5 * step * k2);
  const double k4 = mu(p, r + step * k3);
  return r + step / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
}

}  // namespace

TortoiseGrid tortoise_grid(const SdsParams& p, double L, int npts) {
  if (!(L > 0)) throw ConfigError("tortoise_grid: L must be positive");
  if (npts < 33 || npts % 2 == 0)
    throw ConfigError("tortoise_grid: npts must be odd and at least 33");
  const HorizonData hz = horizons(p);

  TortoiseGrid g;
  g.L = L;
  g.h = 2 * L / (npts - 1);
  g.rstar.resize(npts);
  g.r.resize(npts);
  g.r_half.resize(npts - 1);

  const int mid = (npts - 1) / 2;
  g.r[mid] = hz.r_p;
  /* march right and left with step h/2, collecting half nodes */
  double r = hz.r_p;
  for (int i = mid; i + 1 < npts; ++i) {
    r = rk4_step_r(p, r, 0.5 * g.h);
    g.r_half[i] = r;
    r = rk4_step_r(p, r, 0.5 * g.h);
    g.r[i + 1] = r;
  }
  r = hz.r_p;
  for (int i = mid; i - 1 >= 0; --i) {
    r = rk4_step_r(p, r, -0.5 * g.h);
    g.r_half[i - 1] = r;
    r = rk4_step_r(p, r, -0.5 * g.h);
    g.r[i - 1] = r;
  }
  for (int i = 0; i < npts; ++i) g.rstar[i] = -L + i * g.h;

  g.mu_node.resize(npts);
  g.mu_half.resize(npts - 1);
  for (int i = 0; i < npts; ++i) g.mu_node[i] = mu(p, g.r[i]);
  for (int i = 0; i < npts - 1; ++i) g.mu_half[i] = mu(p, g.r_half[i]);

  const double floor = 1e-10;
  if (g.mu_node.front() < floor || g.mu_node.back() < floor)
    throw NumericalError(
        "tortoise_grid: mu underflows at a boundary node; reduce L");
  if (g.r.front() <= hz.r_minus || g.r.back() >= hz.r_plus)
    throw NumericalError("tortoise_grid: march left the static region");
  return g;
}

std::vector<double> gaussian_pulse(const TortoiseGrid& g, double center,
                                   double width, double amplitude) {
  if (!(width > 0)) throw ConfigError("gaussian_pulse: width must be positive");
  std::vector<double> u(g.size());
  for (int i = 0; i < g.size(); ++i) {
    const double s = (g.rstar[i] - center) / width;
    u[i] = amplitude * std::exp(-s * s);
  }
  return u;
}

namespace {

struct ProbeSet {
  std::vector<int> idx;
  std::vector<double> rstar;
};

ProbeSet locate_probes(const TortoiseGrid& g,
                       const std::vector<double>& want) {
  ProbeSet ps;
  for (double w : want) {
    if (std::abs(w) > 0.9 * g.L)
      throw ConfigError("probe outside the interior of the domain");
    int i = (int)std::lround((w + g.L) / g.h);
    i = std::clamp(i, 1, g.size() - 2);
    ps.idx.push_back(i);
    ps.rstar.push_back(g.rstar[i]);
  }
  return ps;
}

void check_init(const char* who, const TortoiseGrid& g,
                std::initializer_list<const std::vector<double>*> arrs) {
  for (const auto* a : arrs)
    if ((int)a->size() != g.size())
      throw ConfigError(std::string(who) +
                        ": initial data size does not match the grid");
}

double checked_dt(const TortoiseGrid& g, const EvolveOptions& opt) {
  if (!(opt.cfl > 0) || opt.cfl > 0.9)
    throw CflViolation("cfl must lie in (0, 0.9]");
  return opt.cfl * g.h;
}

void check_finite(const std::vector<double>& a, const char* who) {
  for (double v : a)
    if (!std::isfinite(v)) throw NonfiniteField(who);
}

/* conservative operator  L y = a_i [ W_{i+1/2} d_{i+1/2} Y - W_{i-1/2}
 * d_{i-1/2} Y ] / h^2  with Y = c y; zeroth-order potential optional */
struct ConservativeOp {
  std::vector<double> a;    /* node prefactor */
  std::vector<double> c;    /* node inner scale */
  std::vector<double> w;    /* half-node weight, size N-1 */
  std::vector<double> pot;  /* optional zeroth-order, node (may be empty) */
  double h2 = 0;

  void apply(const std::vector<double>& y, std::vector<double>* out) const {
    const int N = (int)y.size();
    for (int i = 1; i + 1 < N; ++i) {
      const double Ym = c[i - 1] * y[i - 1];
      const double Y0 = c[i] * y[i];
      const double Yp = c[i + 1] * y[i + 1];
      double v = a[i] * (w[i] * (Yp - Y0) - w[i - 1] * (Y0 - Ym)) / h2;
      if (!pot.empty()) v -= pot[i] * y[i];
      (*out)[i] = v;
    }
  }
};

ConservativeOp make_scalar_op(const TortoiseGrid& g, int n, int ell) {
  ConservativeOp op;
  const int N = g.size();
  op.h2 = g.h * g.h;
  op.a.resize(N);
  op.c.assign(N, 1.0);
  op.w.resize(N - 1);
  for (int i = 0; i < N; ++i) op.a[i] = std::pow(g.r[i], 2 - n);
  for (int i = 0; i < N - 1; ++i) op.w[i] = std::pow(g.r_half[i], n - 2);
  if (ell > 0) {
    const double E = (double)ell * (ell + n - 3);
    op.pot.resize(N);
    for (int i = 0; i < N; ++i)
      op.pot[i] = E * g.mu_node[i] / (g.r[i] * g.r[i]);
  }
  return op;
}

ConservativeOp make_omega_op(const TortoiseGrid& g, int n) {
  ConservativeOp op;
  const int N = g.size();
  op.h2 = g.h * g.h;
  op.a.resize(N);
  op.c.assign(N, 1.0);
  op.w.resize(N - 1);
  for (int i = 0; i < N; ++i) op.a[i] = std::pow(g.r[i], n - 2);
  for (int i = 0; i < N - 1; ++i) op.w[i] = std::pow(g.r_half[i], 2 - n);
  return op;
}

ConservativeOp make_dtdr_op(const TortoiseGrid& g, int n) {
  ConservativeOp op;
  const int N = g.size();
  op.h2 = g.h * g.h;
  op.a.assign(N, 1.0);
  op.c.resize(N);
  op.w.resize(N - 1);
  for (int i = 0; i < N; ++i) op.c[i] = std::pow(g.r[i], n - 2);
  for (int i = 0; i < N - 1; ++i) op.w[i] = std::pow(g.r_half[i], 2 - n);
  return op;
}

ConservativeOp make_f1_op(const TortoiseGrid& g, int n) {
  ConservativeOp op;
  const int N = g.size();
  op.h2 = g.h * g.h;
  op.a.resize(N);
  op.c.resize(N);
  op.w.resize(N - 1);
  for (int i = 0; i < N; ++i) {
    op.a[i] = g.mu_node[i];
    op.c[i] = std::pow(g.r[i], n - 2);
  }
  for (int i = 0; i < N - 1; ++i)
    op.w[i] = std::pow(g.r_half[i], 2 - n) / g.mu_half[i];
  return op;
}

ConservativeOp make_f2_op(const TortoiseGrid& g, int n) {
  ConservativeOp op;
  const int N = g.size();
  op.h2 = g.h * g.h;
  op.a.resize(N);
  op.c.assign(N, 1.0);
  op.w.resize(N - 1);
  for (int i = 0; i < N; ++i)
    op.a[i] = g.mu_node[i] * std::pow(g.r[i], 2 - n);
  for (int i = 0; i < N - 1; ++i)
    op.w[i] = std::pow(g.r_half[i], n - 2) / g.mu_half[i];
  return op;
}

/* outgoing-characteristic boundary advection of the step difference.
 * damping: extra dt*q*v term at the boundary node (q <= 0 damps). */
double advect_left(double v0, double v1, double lam, double dtq = 0) {
  return v0 + lam * (v1 - v0) + dtq * v0;
}
double advect_right(double vN, double vNm1, double lam, double dtq = 0) {
  return vN - lam * (vN - vNm1) + dtq * vN;
}

/* interior leapfrog step of the coupled pair; l1/l2 are caller scratch
 * so the evolution loop does not reallocate */
void pair_step_interior(const ConservativeOp& op1, const ConservativeOp& op2,
                        const std::vector<double>& dmu_node, double dt,
                        const std::vector<double>& p1,
                        const std::vector<double>& p2,
                        const std::vector<double>& c1,
                        const std::vector<double>& c2, std::vector<double>* n1,
                        std::vector<double>* n2, std::vector<double>* l1,
                        std::vector<double>* l2) {
  const int N = (int)c1.size();
  op1.apply(c1, l1);
  op2.apply(c2, l2);
  for (int i = 1; i + 1 < N; ++i) {
    const double cc = 0.5 * dt * dmu_node[i];
    const double A = 2 * c1[i] - p1[i] + dt * dt * (*l1)[i] - cc * p2[i];
    const double B = 2 * c2[i] - p2[i] + dt * dt * (*l2)[i] - cc * p1[i];
    const double det = 1.0 - cc * cc;
    (*n1)[i] = (A + cc * B) / det;
    (*n2)[i] = (B + cc * A) / det;
  }
}

}  // namespace

ScalarEvolution evolve_scalar(const SdsParams& p, int ell,
                              const ScalarInit& init, double t_max,
                              const EvolveOptions& opt) {
  if (ell < 0) throw ConfigError("evolve_scalar: ell must be >= 0");
  if (!(t_max > 0)) throw ConfigError("evolve_scalar: t_max must be positive");
  ScalarEvolution ev;
  ev.grid = tortoise_grid(p, opt.L, opt.npts);
  const TortoiseGrid& g = ev.grid;
  check_init("evolve_scalar", g, {&init.u0, &init.v0});
  const double dt = checked_dt(g, opt);
  ev.dt = dt;
  const double lam = dt / g.h;
  const int N = g.size();
  const int nsteps = (int)std::ceil(t_max / dt);

  const ConservativeOp op = make_scalar_op(g, p.n, ell);
  const ProbeSet probes = locate_probes(g, opt.probe_rstar);
  ev.u.probe_rstar = probes.rstar;
  ev.u.value.resize(probes.idx.size());

  /* energy density weight r^{n-2} at nodes */
  std::vector<double> ew(N);
  for (int i = 0; i < N; ++i) ew[i] = std::pow(g.r[i], p.n - 2);

  std::vector<double> prev = init.u0, cur(N), next(N), lap(N, 0.0);

  /* first step: u^1 = u^0 + dt v^0 + dt^2/2 L u^0 in the interior,
   * advected difference at the ends */
  op.apply(prev, &lap);
  for (int i = 1; i + 1 < N; ++i)
    cur[i] = prev[i] + dt * init.v0[i] + 0.5 * dt * dt * lap[i];
  cur[0] = prev[0] + advect_left(dt * init.v0[0], dt * init.v0[1], lam);
  cur[N - 1] = prev[N - 1] +
               advect_right(dt * init.v0[N - 1], dt * init.v0[N - 2], lam);

  auto sample = [&](int k, const std::vector<double>& u,
                    const std::vector<double>& um1) {
    ev.u.t.push_back(k * dt);
    for (size_t j = 0; j < probes.idx.size(); ++j)
      ev.u.value[j].push_back(u[probes.idx[j]]);
    double acc = 0;
    for (int i = 1; i + 1 < N; ++i) {
      const double v = (u[i] - um1[i]) / dt;
      const double du = (u[i + 1] - u[i - 1]) / (2 * g.h);
      double dens = v * v + du * du;
      if (!op.pot.empty()) dens += op.pot[i] * u[i] * u[i];
      acc += ew[i] * dens;
    }
    ev.energy.push_back(0.5 * g.h * acc);
  };
  sample(1, cur, prev);

  for (int k = 1; k < nsteps; ++k) {
    op.apply(cur, &lap);
    for (int i = 1; i + 1 < N; ++i)
      next[i] = 2 * cur[i] - prev[i] + dt * dt * lap[i];
    next[0] = cur[0] + advect_left(cur[0] - prev[0], cur[1] - prev[1], lam);
    next[N - 1] = cur[N - 1] + advect_right(cur[N - 1] - prev[N - 1],
                                            cur[N - 2] - prev[N - 2], lam);
    prev.swap(cur);
    cur.swap(next);
    if ((k + 1) % opt.sample_stride == 0) sample(k + 1, cur, prev);
    if ((k & 63) == 0) check_finite(cur, "evolve_scalar: field blew up");
  }
  check_finite(cur, "evolve_scalar: field blew up");
  ev.u_final = cur;
  ev.v_final.resize(N);
  for (int i = 0; i < N; ++i) ev.v_final[i] = (cur[i] - prev[i]) / dt;
  return ev;
}

OneFormEvolution evolve_oneform(const SdsParams& p, const OneFormInit& init,
                                double t_max, const EvolveOptions& opt) {
  if (!(t_max > 0)) throw ConfigError("evolve_oneform: t_max must be positive");
  OneFormEvolution ev;
  ev.grid = tortoise_grid(p, opt.L, opt.npts);
  const TortoiseGrid& g = ev.grid;
  check_init("evolve_oneform", g, {&init.f1, &init.f2, &init.v1, &init.v2});
  const double dt = checked_dt(g, opt);
  ev.dt = dt;
  const double lam = dt / g.h;
  const int N = g.size();
  const int nsteps = (int)std::ceil(t_max / dt);

  const ConservativeOp op1 = make_f1_op(g, p.n);
  const ConservativeOp op2 = make_f2_op(g, p.n);
  std::vector<double> dmu_node(N);
  for (int i = 0; i < N; ++i) dmu_node[i] = dmu(p, g.r[i]);

  const ProbeSet probes = locate_probes(g, opt.probe_rstar);
  ev.f1.probe_rstar = ev.f2.probe_rstar = probes.rstar;
  ev.f1.value.resize(probes.idx.size());
  ev.f2.value.resize(probes.idx.size());

  std::vector<double> p1 = init.f1, p2 = init.f2;
  std::vector<double> c1(N), c2(N), n1(N), n2(N), l1(N, 0.0), l2(N, 0.0);

  op1.apply(p1, &l1);
  op2.apply(p2, &l2);
  for (int i = 1; i + 1 < N; ++i) {
    c1[i] = p1[i] + dt * init.v1[i] +
            0.5 * dt * dt * (l1[i] + dmu_node[i] * init.v2[i]);
    c2[i] = p2[i] + dt * init.v2[i] +
            0.5 * dt * dt * (l2[i] + dmu_node[i] * init.v1[i]);
  }
  /* boundary first step through the characteristic variables */
  {
    const double dtqL = dt * dmu_node[0], dtqR = dt * dmu_node[N - 1];
    double vp0 = dt * (init.v1[0] + init.v2[0]);
    double vp1 = dt * (init.v1[1] + init.v2[1]);
    double vm0 = dt * (init.v1[0] - init.v2[0]);
    double vm1 = dt * (init.v1[1] - init.v2[1]);
    const double np0 = advect_left(vp0, vp1, lam);
    const double nm0 = advect_left(vm0, vm1, lam, -dtqL);
    c1[0] = p1[0] + 0.5 * (np0 + nm0);
    c2[0] = p2[0] + 0.5 * (np0 - nm0);
    double vpN = dt * (init.v1[N - 1] + init.v2[N - 1]);
    double vpM = dt * (init.v1[N - 2] + init.v2[N - 2]);
    double vmN = dt * (init.v1[N - 1] - init.v2[N - 1]);
    double vmM = dt * (init.v1[N - 2] - init.v2[N - 2]);
    const double npN = advect_right(vpN, vpM, lam, dtqR);
    const double nmN = advect_right(vmN, vmM, lam);
    c1[N - 1] = p1[N - 1] + 0.5 * (npN + nmN);
    c2[N - 1] = p2[N - 1] + 0.5 * (npN - nmN);
  }

  auto sample = [&](int k, const std::vector<double>& a1,
                    const std::vector<double>& a2) {
    ev.f1.t.push_back(k * dt);
    ev.f2.t.push_back(k * dt);
    for (size_t j = 0; j < probes.idx.size(); ++j) {
      ev.f1.value[j].push_back(a1[probes.idx[j]]);
      ev.f2.value[j].push_back(a2[probes.idx[j]]);
    }
  };
  sample(1, c1, c2);

  for (int k = 1; k < nsteps; ++k) {
    pair_step_interior(op1, op2, dmu_node, dt, p1, p2, c1, c2, &n1, &n2, &l1,
                       &l2);
    {
      const double dtqL = dt * dmu_node[0], dtqR = dt * dmu_node[N - 1];
      const double vp0 = (c1[0] - p1[0]) + (c2[0] - p2[0]);
      const double vp1 = (c1[1] - p1[1]) + (c2[1] - p2[1]);
      const double vm0 = (c1[0] - p1[0]) - (c2[0] - p2[0]);
      const double vm1 = (c1[1] - p1[1]) - (c2[1] - p2[1]);
      const double np0 = advect_left(vp0, vp1, lam);
      const double nm0 = advect_left(vm0, vm1, lam, -dtqL);
      n1[0] = c1[0] + 0.5 * (np0 + nm0);
      n2[0] = c2[0] + 0.5 * (np0 - nm0);
      const double vpN = (c1[N - 1] - p1[N - 1]) + (c2[N - 1] - p2[N - 1]);
      const double vpM = (c1[N - 2] - p1[N - 2]) + (c2[N - 2] - p2[N - 2]);
      const double vmN = (c1[N - 1] - p1[N - 1]) - (c2[N - 1] - p2[N - 1]);
      const double vmM = (c1[N - 2] - p1[N - 2]) - (c2[N - 2] - p2[N - 2]);
      const double npN = advect_right(vpN, vpM, lam, dtqR);
      const double nmN = advect_right(vmN, vmM, lam);
      n1[N - 1] = c1[N - 1] + 0.5 * (npN + nmN);
      n2[N - 1] = c2[N - 1] + 0.5 * (npN - nmN);
    }
    p1.swap(c1);
    c1.swap(n1);
    p2.swap(c2);
    c2.swap(n2);
    if ((k + 1) % opt.sample_stride == 0) sample(k + 1, c1, c2);
    if ((k & 63) == 0) check_finite(c1, "evolve_oneform: field blew up");
  }
  check_finite(c1, "evolve_oneform: field blew up");
  check_finite(c2, "evolve_oneform: field blew up");
  ev.f1_final = c1;
  ev.f2_final = c2;
  return ev;
}

TwoFormEvolution evolve_twoform(const SdsParams& p, const TwoFormInit& init,
                                double t_max, const EvolveOptions& opt) {
  if (!(t_max > 0)) throw ConfigError("evolve_twoform: t_max must be positive");
  TwoFormEvolution ev;
  ev.grid = tortoise_grid(p, opt.L, opt.npts);
  const TortoiseGrid& g = ev.grid;
  check_init("evolve_twoform", g, {&init.x, &init.w, &init.vx, &init.vw});
  const double dt = checked_dt(g, opt);
  ev.dt = dt;
  const double lam = dt / g.h;
  const int N = g.size();
  const int nsteps = (int)std::ceil(t_max / dt);

  const ConservativeOp opx = make_omega_op(g, p.n);
  const ConservativeOp opw = make_dtdr_op(g, p.n);
  const ProbeSet probes = locate_probes(g, opt.probe_rstar);
  ev.x.probe_rstar = ev.w.probe_rstar = probes.rstar;
  ev.x.value.resize(probes.idx.size());
  ev.w.value.resize(probes.idx.size());

  std::vector<double> px = init.x, pw = init.w;
  std::vector<double> cx(N), cw(N), nx(N), nw(N), lx(N, 0.0), lw(N, 0.0);

  opx.apply(px, &lx);
  opw.apply(pw, &lw);
  for (int i = 1; i + 1 < N; ++i) {
    cx[i] = px[i] + dt * init.vx[i] + 0.5 * dt * dt * lx[i];
    cw[i] = pw[i] + dt * init.vw[i] + 0.5 * dt * dt * lw[i];
  }
  cx[0] = px[0] + advect_left(dt * init.vx[0], dt * init.vx[1], lam);
  cw[0] = pw[0] + advect_left(dt * init.vw[0], dt * init.vw[1], lam);
  cx[N - 1] = px[N - 1] +
              advect_right(dt * init.vx[N - 1], dt * init.vx[N - 2], lam);
  cw[N - 1] = pw[N - 1] +
              advect_right(dt * init.vw[N - 1], dt * init.vw[N - 2], lam);

  auto sample = [&](int k, const std::vector<double>& ax,
                    const std::vector<double>& aw) {
    ev.x.t.push_back(k * dt);
    ev.w.t.push_back(k * dt);
    for (size_t j = 0; j < probes.idx.size(); ++j) {
      ev.x.value[j].push_back(ax[probes.idx[j]]);
      ev.w.value[j].push_back(aw[probes.idx[j]]);
    }
  };
  sample(1, cx, cw);

  for (int k = 1; k < nsteps; ++k) {
    opx.apply(cx, &lx);
    opw.apply(cw, &lw);
    for (int i = 1; i + 1 < N; ++i) {
      nx[i] = 2 * cx[i] - px[i] + dt * dt * lx[i];
      nw[i] = 2 * cw[i] - pw[i] + dt * dt * lw[i];
    }
    nx[0] = cx[0] + advect_left(cx[0] - px[0], cx[1] - px[1], lam);
    nw[0] = cw[0] + advect_left(cw[0] - pw[0], cw[1] - pw[1], lam);
    nx[N - 1] = cx[N - 1] + advect_right(cx[N - 1] - px[N - 1],
                                         cx[N - 2] - px[N - 2], lam);
    nw[N - 1] = cw[N - 1] + advect_right(cw[N - 1] - pw[N - 1],
                                         cw[N - 2] - pw[N - 2], lam);
    px.swap(cx);
    cx.swap(nx);
    pw.swap(cw);
    cw.swap(nw);
    if ((k + 1) % opt.sample_stride == 0) sample(k + 1, cx, cw);
    if ((k & 63) == 0) check_finite(cx, "evolve_twoform: field blew up");
  }
  check_finite(cx, "evolve_twoform: field blew up");
  check_finite(cw, "evolve_twoform: field blew up");
  ev.x_final = cx;
  ev.w_final = cw;
  return ev;
}

void sample_zero_mode(const ZeroMode& zm, const TortoiseGrid& g,
                      std::vector<double>* f1, std::vector<double>* f2) {
  f1->resize(g.size());
  f2->resize(g.size());
  for (int i = 0; i < g.size(); ++i) {
    (*f1)[i] = zm.f1(g.r[i]);
    (*f2)[i] = zm.f2(g.r[i]);
  }
}

OneFormProjection project_oneform(const SdsParams& p, const TortoiseGrid& g,
                                  const std::vector<double>& f1,
                                  const std::vector<double>& f2,
                                  double window_frac) {
  if ((int)f1.size() != g.size() || (int)f2.size() != g.size())
    throw ConfigError("project_oneform: field size does not match the grid");
  const ZeroModeBasis basis = basis_u_pm(p);
  std::vector<double> a1, a2, b1, b2;
  sample_zero_mode(basis.u_plus, g, &a1, &a2);
  sample_zero_mode(basis.u_minus, g, &b1, &b2);

  const double win = window_frac * g.L;
  double gaa = 0, gab = 0, gbb = 0, ra = 0, rb = 0, ff = 0;
  for (int i = 0; i < g.size(); ++i) {
    if (std::abs(g.rstar[i]) > win) continue;
    gaa += a1[i] * a1[i] + a2[i] * a2[i];
    gab += a1[i] * b1[i] + a2[i] * b2[i];
    gbb += b1[i] * b1[i] + b2[i] * b2[i];
    ra += f1[i] * a1[i] + f2[i] * a2[i];
    rb += f1[i] * b1[i] + f2[i] * b2[i];
    ff += f1[i] * f1[i] + f2[i] * f2[i];
  }
  const double det = gaa * gbb - gab * gab;
  if (!(det > 1e-12 * gaa * gbb))
    throw NumericalError("project_oneform: near-singular Gram matrix");
  OneFormProjection pr;
  pr.c_plus = (gbb * ra - gab * rb) / det;
  pr.c_minus = (gaa * rb - gab * ra) / det;
  double rr = 0;
  for (int i = 0; i < g.size(); ++i) {
    if (std::abs(g.rstar[i]) > win) continue;
    const double d1 = f1[i] - pr.c_plus * a1[i] - pr.c_minus * b1[i];
    const double d2 = f2[i] - pr.c_plus * a2[i] - pr.c_minus * b2[i];
    rr += d1 * d1 + d2 * d2;
  }
  pr.rel_residual = ff > 0 ? std::sqrt(rr / ff) : 0.0;
  return pr;
}

TwoFormProjection project_twoform(const SdsParams& p, const TortoiseGrid& g,
                                  const std::vector<double>& x,
                                  const std::vector<double>& w,
                                  double window_frac) {
  if ((int)x.size() != g.size() || (int)w.size() != g.size())
    throw ConfigError("project_twoform: field size does not match the grid");
  const double win = window_frac * g.L;
  double gxx = 0, gww = 0, rx = 0, rw = 0, ff = 0;
  for (int i = 0; i < g.size(); ++i) {
    if (std::abs(g.rstar[i]) > win) continue;
    const double q = std::pow(g.r[i], 2 - p.n);
    gxx += 1.0;
    gww += q * q;
    rx += x[i];
    rw += w[i] * q;
    ff += x[i] * x[i] + w[i] * w[i];
  }
  if (!(gxx > 0 && gww > 0))
    throw NumericalError("project_twoform: empty projection window");
  TwoFormProjection pr;
  pr.c_omega = rx / gxx;
  pr.c_dtdr = rw / gww;
  double rr = 0;
  for (int i = 0; i < g.size(); ++i) {
    if (std::abs(g.rstar[i]) > win) continue;
    const double q = std::pow(g.r[i], 2 - p.n);
    const double dx = x[i] - pr.c_omega;
    const double dw = w[i] - pr.c_dtdr * q;
    rr += dx * dx + dw * dw;
  }
  pr.rel_residual = ff > 0 ? std::sqrt(rr / ff) : 0.0;
  return pr;
}

void oneform_step(const SdsParams& p, const TortoiseGrid& g, double dt,
                  const std::vector<double>& p1, const std::vector<double>& p2,
                  const std::vector<double>& c1, const std::vector<double>& c2,
                  std::vector<double>* n1, std::vector<double>* n2) {
  const int N = g.size();
  for (const std::vector<double>* f : {&p1, &p2, &c1, &c2})
    if ((int)f->size() != N)
      throw ConfigError("oneform_step: level size does not match the grid");
  const ConservativeOp op1 = make_f1_op(g, p.n);
  const ConservativeOp op2 = make_f2_op(g, p.n);
  std::vector<double> dmu_node(N);
  for (int i = 0; i < N; ++i) dmu_node[i] = dmu(p, g.r[i]);
  n1->resize(N);
  n2->resize(N);
  std::vector<double> l1(N, 0.0), l2(N, 0.0);
  pair_step_interior(op1, op2, dmu_node, dt, p1, p2, c1, c2, n1, n2, &l1, &l2);
  (*n1)[0] = c1[0];
  (*n2)[0] = c2[0];
  (*n1)[N - 1] = c1[N - 1];
  (*n2)[N - 1] = c2[N - 1];
}

}  // namespace sdsform
