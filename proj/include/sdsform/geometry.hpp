/* geometry.hpp
 *
 * Schwarzschild-de Sitter metric function mu(r) = 1 - 2M/r^{n-3} - lambda r^2
 * with lambda = 2 Lambda / ((n-2)(n-1)), horizon root finding, photon-sphere
 * radius, and the surface-gravity constants beta_pm = -/+ 2/mu'(r_pm).
 *
 * RadialMetric is the small abstraction shared with the static de Sitter
 * case (mu = 1 - r^2): everything downstream that only needs n, mu, mu'
 * takes a RadialMetric.
 */
#ifndef SDSFORM_GEOMETRY_HPP
#define SDSFORM_GEOMETRY_HPP

#include <cstdint>
#include <random>

#include "sdsform/errors.hpp"

namespace sdsform {

struct SdsParams {
  int n = 4;        /* spacetime dimension, >= 4 */
  double mass = 1;  /* M, > 0 */
  double cosmo = 0; /* Lambda, > 0 */
};

struct HorizonData {
  double r_minus = 0;
  double r_plus = 0;
  double r_p = 0; /* photon sphere */
  double beta_minus = 0;
  double beta_plus = 0;
};

double lambda_small(const SdsParams& p);
double mu(const SdsParams& p, double r);
double dmu(const SdsParams& p, double r);
double d2mu(const SdsParams& p, double r);
double mu_tilde(const SdsParams& p, double r);      /* mu / r^2 */
double dmu_tilde(const SdsParams& p, double r);
double photon_radius(const SdsParams& p);           /* ((n-1)M)^{1/(n-3)} */

/* strict inequality M^2 lambda^{n-3} < (n-3)^{n-3}/(n-1)^{n-1} */
bool check_nondegeneracy(const SdsParams& p);

/* Horizon roots of mu on (0, r_p) and (r_p, sqrt(2/lambda)).
 * Throws DegenerateSpacetime / RootBracketFailure. */
HorizonData horizons(const SdsParams& p);

/* Draw a random nondegenerate parameter set for the given dimension:
 * M in [0.5, 2], lambda a fraction in [0.05, 0.95] of the degeneracy
 * threshold. */
SdsParams random_nondegenerate(int n, std::mt19937_64& rng);

/* ---- shared radial-metric abstraction (SdS or static dS) ---- */

struct RadialMetric {
  int n = 4;
  bool is_ds = false; /* true: mu = 1 - r^2 on (0,1) */
  SdsParams sds;      /* used when !is_ds */

  double mu(double r) const;
  double dmu(double r) const;
  double alpha(double r) const; /* sqrt(mu) */

  static RadialMetric from_sds(const SdsParams& p);
  static RadialMetric desitter(int n);
};

}  // namespace sdsform

#endif
