/* evolve.hpp
 *
 * Time-domain evolution of the spherically reduced wave equations on
 * the static region, written in tortoise coordinates r_* with
 * dr_star/dr = 1/mu.  Three families:
 *
 *   scalar (angular number ell >= 0)
 *     d_tt u = r^{2-n} D(r^{n-2} D u) - ell(ell+n-3) mu r^{-2} u
 *   1-form constant sector, radial profiles (f1, f2)
 *     d_tt f1 = mu D(r^{2-n} mu^{-1} D(r^{n-2} f1)) + mu' d_t f2
 *     d_tt f2 = mu r^{2-n} D((r^{n-2}/mu) D f2)    + mu' d_t f1
 *   2-form pair: x carried by the sphere volume form and w by
 *   dt wedge dr,
 *     d_tt x = r^{n-2} D(r^{2-n} D x)
 *     d_tt w = D(r^{2-n} D(r^{n-2} w))
 *
 * with D = d/dr_*.  The conservative forms are kept verbatim in the
 * discretization so that the stationary solutions lie in (or within
 * O(h^2) of) the kernel of the discrete spatial operator.
 *
 * Boundaries use characteristic outflow applied to the per-step
 * difference v = u^k - u^{k-1}: pure upwind advection, plus for the
 * 1-form pair a zeroth-order term obtained by diagonalizing the
 * near-horizon system in g_pm = f1 +- f2.  Stationary data has v = 0
 * and is therefore preserved exactly at the boundary nodes.
 */
#ifndef SDSFORM_EVOLVE_HPP
#define SDSFORM_EVOLVE_HPP

#include <vector>

#include "sdsform/geometry.hpp"
#include "sdsform/zero_modes.hpp"

namespace sdsform {

struct TortoiseGrid {
  std::vector<double> rstar;  /* uniform nodes on [-L, L] */
  std::vector<double> r;      /* r(rstar) at nodes */
  std::vector<double> r_half; /* r at half nodes, size N-1 */
  std::vector<double> mu_node;
  std::vector<double> mu_half;
  double h = 0;
  double L = 0;
  int size() const { return (int)rstar.size(); }
};

/* RK4 march of dr/dr_* = mu(r) outward from the photon radius, step
 * h/2 so half nodes are sampled too.  npts must be odd.  Throws
 * NumericalError if mu at either end node falls below 1e-10 (the
 * requested L reaches too deep into a horizon for double precision). */
TortoiseGrid tortoise_grid(const SdsParams& p, double L, int npts);

struct EvolveOptions {
  double L = 40;
  int npts = 2049;
  double cfl = 0.8; /* dt = cfl * h, must lie in (0, 0.9] */
  std::vector<double> probe_rstar = {-6, 0, 6};
  int sample_stride = 4;
};

struct ScalarInit {
  std::vector<double> u0, v0;
};
struct OneFormInit {
  std::vector<double> f1, f2, v1, v2;
};
struct TwoFormInit {
  std::vector<double> x, w, vx, vw;
};

/* Gaussian in r_*; tails must clear the boundary nodes */
std::vector<double> gaussian_pulse(const TortoiseGrid& g, double center,
                                   double width, double amplitude = 1);

struct ProbeSeries {
  std::vector<double> t;                       /* sample times */
  std::vector<double> probe_rstar;             /* actual node positions */
  std::vector<std::vector<double>> value;      /* [probe][sample] */
};

struct ScalarEvolution {
  TortoiseGrid grid;
  ProbeSeries u;
  std::vector<double> energy; /* discrete energy at sample times */
  std::vector<double> u_final, v_final;
  double dt = 0;
};

struct OneFormEvolution {
  TortoiseGrid grid;
  ProbeSeries f1, f2;
  std::vector<double> f1_final, f2_final;
  double dt = 0;
};

struct TwoFormEvolution {
  TortoiseGrid grid;
  ProbeSeries x, w;
  std::vector<double> x_final, w_final;
  double dt = 0;
};

ScalarEvolution evolve_scalar(const SdsParams& p, int ell,
                              const ScalarInit& init, double t_max,
                              const EvolveOptions& opt = {});

OneFormEvolution evolve_oneform(const SdsParams& p, const OneFormInit& init,
                                double t_max, const EvolveOptions& opt = {});

TwoFormEvolution evolve_twoform(const SdsParams& p, const TwoFormInit& init,
                                double t_max, const EvolveOptions& opt = {});

/* L2 projection of (f1, f2) onto the span of the two stationary
 * 1-forms over the central window |r_*| <= window_frac * L. */
struct OneFormProjection {
  double c_plus = 0;
  double c_minus = 0;
  double rel_residual = 0; /* | field - projection | / | field | */
};
OneFormProjection project_oneform(const SdsParams& p, const TortoiseGrid& g,
                                  const std::vector<double>& f1,
                                  const std::vector<double>& f2,
                                  double window_frac = 0.5);

/* L2 projection of (x, w) onto the stationary 2-form pair, x-profile 1
 * and w-profile r^{2-n}, over the same central window.  The two target
 * states live in different components, so the projection decouples. */
struct TwoFormProjection {
  double c_omega = 0;
  double c_dtdr = 0;
  double rel_residual = 0;
};
TwoFormProjection project_twoform(const SdsParams& p, const TortoiseGrid& g,
                                  const std::vector<double>& x,
                                  const std::vector<double>& w,
                                  double window_frac = 0.5);

/* One interior leapfrog step of the coupled 1-form pair: (p1, p2) is
 * the level at t - dt, (c1, c2) at t; the interior nodes of the t + dt
 * level are written to (n1, n2) and the boundary nodes are copied from
 * (c1, c2).  Exposed for scheme property tests: the interior step is
 * exactly time-reversible, in the sense that swapping the two input
 * levels and negating the f2 component reproduces the earlier level. */
void oneform_step(const SdsParams& p, const TortoiseGrid& g, double dt,
                  const std::vector<double>& p1, const std::vector<double>& p2,
                  const std::vector<double>& c1, const std::vector<double>& c2,
                  std::vector<double>* n1, std::vector<double>* n2);

/* stationary 1-form profiles sampled on the tortoise grid */
void sample_zero_mode(const ZeroMode& zm, const TortoiseGrid& g,
                      std::vector<double>* f1, std::vector<double>* f2);

}  // namespace sdsform

#endif
