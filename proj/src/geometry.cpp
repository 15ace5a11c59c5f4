/* geometry.cpp
 *
 * Metric function, nondegeneracy test, horizon roots, derived constants.
 * Roots are found by bracketed Brent iteration (relative tolerance 1e-13)
 * followed by one Newton polish step with the analytic mu'.
 */
#include "sdsform/geometry.hpp"

#include <cmath>

#include "sdsform/roots.hpp"

namespace sdsform {

double lambda_small(const SdsParams& p) {
  return 2.0 * p.cosmo / ((p.n - 2.0) * (p.n - 1.0));
}

double mu(const SdsParams& p, double r) {
  const double lam = lambda_small(p);
  return 1.0 - 2.0 * p.mass / std::pow(r, p.n - 3) - lam * r * r;
}

double dmu(const SdsParams& p, double r) {
  const double lam = lambda_small(p);
  return 2.0 * (p.n - 3) * p.mass / std::pow(r, p.n - 2) - 2.0 * lam * r;
}

double d2mu(const SdsParams& p, double r) {
  const double lam = lambda_small(p);
  return -2.0 * (p.n - 3) * (p.n - 2) * p.mass / std::pow(r, p.n - 1) -
         2.0 * lam;
}

double mu_tilde(const SdsParams& p, double r) { return mu(p, r) / (r * r); }

double dmu_tilde(const SdsParams& p, double r) {
  return (dmu(p, r) - 2.0 * mu(p, r) / r) / (r * r);
}

double photon_radius(const SdsParams& p) {
  return std::pow((p.n - 1.0) * p.mass, 1.0 / (p.n - 3.0));
}

bool check_nondegeneracy(const SdsParams& p) {
  if (p.n < 4 || p.mass <= 0.0 || p.cosmo <= 0.0) return false;
  const double lam = lambda_small(p);
  const double lhs = p.mass * p.mass * std::pow(lam, p.n - 3);
  const double rhs =
      std::pow(p.n - 3.0, p.n - 3) / std::pow(p.n - 1.0, p.n - 1);
  return lhs < rhs;
}

HorizonData horizons(const SdsParams& p) {
  if (!check_nondegeneracy(p))
    throw DegenerateSpacetime(
        "horizons: parameters violate M^2 lambda^{n-3} < "
        "(n-3)^{n-3}/(n-1)^{n-1}");
  HorizonData hd;
  hd.r_p = photon_radius(p);
  const double lam = lambda_small(p);
  /* mu(r_p) > 0 under nondegeneracy; mu -> -inf at both ends of (0, inf) */
  if (mu(p, hd.r_p) <= 0.0)
    throw DegenerateSpacetime("horizons: mu(r_p) <= 0, degenerate spacetime");
  auto f = [&](double r) { return mu(p, r); };
  /* inner bracket: mu < 0 for small r (the mass term dominates) */
  double a = hd.r_p;
  while (mu(p, a) > 0.0) {
    a *= 0.5;
    if (a < 1e-12) throw RootBracketFailure("horizons: no inner sign change");
  }
  hd.r_minus = brent(f, a, hd.r_p);
  /* outer bracket: mu(R) <= 1 - lam R^2 = -1 at R = sqrt(2/lam) */
  const double R = std::sqrt(2.0 / lam);
  hd.r_plus = brent(f, hd.r_p, R);
  /* one Newton polish with the analytic derivative */
  hd.r_minus -= mu(p, hd.r_minus) / dmu(p, hd.r_minus);
  hd.r_plus -= mu(p, hd.r_plus) / dmu(p, hd.r_plus);
  hd.beta_minus = 2.0 / dmu(p, hd.r_minus);
  hd.beta_plus = -2.0 / dmu(p, hd.r_plus);
  if (!(hd.beta_minus > 0.0) || !(hd.beta_plus > 0.0))
    throw RootBracketFailure("horizons: beta_pm not positive");
  if (!(0.0 < hd.r_minus && hd.r_minus < hd.r_p && hd.r_p < hd.r_plus))
    throw RootBracketFailure("horizons: ordering 0 < r- < r_p < r+ violated");
  return hd;
}

SdsParams random_nondegenerate(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> um(0.5, 2.0), uf(0.05, 0.95);
  SdsParams p;
  p.n = n;
  p.mass = um(rng);
  const double rhs = std::pow(n - 3.0, n - 3) / std::pow(n - 1.0, n - 1);
  const double lam_max = std::pow(rhs / (p.mass * p.mass), 1.0 / (n - 3.0));
  const double lam = uf(rng) * lam_max;
  p.cosmo = lam * (n - 2.0) * (n - 1.0) / 2.0;
  return p;
}

double RadialMetric::mu(double r) const {
  return is_ds ? 1.0 - r * r : sdsform::mu(sds, r);
}

double RadialMetric::dmu(double r) const {
  return is_ds ? -2.0 * r : sdsform::dmu(sds, r);
}

double RadialMetric::alpha(double r) const { return std::sqrt(mu(r)); }

RadialMetric RadialMetric::from_sds(const SdsParams& p) {
  RadialMetric m;
  m.n = p.n;
  m.is_ds = false;
  m.sds = p;
  return m;
}

RadialMetric RadialMetric::desitter(int n) {
  RadialMetric m;
  m.n = n;
  m.is_ds = true;
  return m;
}

}  // namespace sdsform
