/* zero_modes.cpp
 *
 * Matching linear algebra for the stationary 1-form modes, closed-form
 * 2-form states, grid discretizations, and the symbolic dual table.
 */
#include "sdsform/zero_modes.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace sdsform {

RadialOdeBasis radial_ode_basis(int n) {
  if (n < 4) throw ConfigError("radial_ode_basis: need n >= 4");
  RadialOdeBasis b;
  b.f1_exponents[0] = 1;
  b.f1_exponents[1] = 2 - n;
  b.f2_exponents[0] = 0;
  b.f2_exponents[1] = 3 - n;
  return b;
}

Eigen::Matrix<double, 2, 4> matching_system(const SdsParams& params) {
  const HorizonData hor = horizons(params);
  const int n = params.n;
  const double rm = hor.r_minus, rp = hor.r_plus;
  Eigen::Matrix<double, 2, 4> m;
  m << rm, std::pow(rm, 2 - n), -1.0, -std::pow(rm, 3 - n),
       rp, std::pow(rp, 2 - n),  1.0,  std::pow(rp, 3 - n);
  Eigen::JacobiSVD<Eigen::Matrix<double, 2, 4>> svd(m);
  const auto& sv = svd.singularValues();
  if (!(sv(1) > 1e-12 * sv(0)))
    throw RankDeficiency("matching_system: numerical rank < 2");
  return m;
}

namespace {

ZeroMode solve_mode(const SdsParams& params, const HorizonData& hor,
                    double f1_at_rm, double f1_at_rp) {
  const int n = params.n;
  const double rm = hor.r_minus, rp = hor.r_plus;
  /* rows: f1(r-) = a, f1(r+) = b, f2(r-) = a, f2(r+) = -b */
  Eigen::Matrix4d A;
  A << rm, std::pow(rm, 2 - n), 0, 0,
       rp, std::pow(rp, 2 - n), 0, 0,
       0, 0, 1, std::pow(rm, 3 - n),
       0, 0, 1, std::pow(rp, 3 - n);
  Eigen::Vector4d rhs(f1_at_rm, f1_at_rp, f1_at_rm, -f1_at_rp);
  Eigen::Vector4d x = A.fullPivLu().solve(rhs);
  ZeroMode mode;
  mode.n = n;
  mode.f11 = x(0);
  mode.f12 = x(1);
  mode.f21 = x(2);
  mode.f22 = x(3);
  return mode;
}

}  // namespace

ZeroModeBasis basis_u_pm(const SdsParams& params) {
  matching_system(params); /* rank gate */
  ZeroModeBasis basis;
  basis.params = params;
  basis.hor = horizons(params);
  basis.u_plus = solve_mode(params, basis.hor, 0.0, 1.0);
  basis.u_minus = solve_mode(params, basis.hor, 1.0, 0.0);
  const double tol = 1e-10;
  for (const ZeroMode* m : {&basis.u_plus, &basis.u_minus}) {
    if (std::abs(m->f2(basis.hor.r_minus) - m->f1(basis.hor.r_minus)) > tol ||
        std::abs(m->f2(basis.hor.r_plus) + m->f1(basis.hor.r_plus)) > tol)
      throw NumericalError("basis_u_pm: matching residual above tolerance");
  }
  return basis;
}

H1Certificate h1_triviality_certificate(const SdsParams& params) {
  const HorizonData hor = horizons(params);
  const int n = params.n;
  /* delta-closed: f1 = f1(r-) (r/r-)^{2-n}; d-closed: f2 = k constant.
   * Matching: f1(r-) - k = 0 and (r+/r-)^{2-n} f1(r-) + k = 0. */
  const double ratio = std::pow(hor.r_plus / hor.r_minus, 2 - n);
  H1Certificate cert;
  cert.n = n;
  cert.reduced << 1.0, -1.0, ratio, 1.0;
  cert.determinant = 1.0 + ratio;
  cert.trivial = cert.determinant != 0.0;
  return cert;
}

FormSection4 section_u_pm(const ZeroMode& mode, const SdsParams& params,
                          const RadialGrid& g) {
  const RadialMetric m = RadialMetric::from_sds(params);
  FormSection4 u =
      FormSection4::zeros(AngularSector::constant(params.n), 1, g);
  for (int i = 0; i < g.size(); ++i) {
    const double r = g.r[i];
    const double a = m.alpha(r);
    u.tn()[i] = mode.f1(r) / a;
    u.nt()[i] = mode.f2(r) / a;
  }
  return u;
}

FormSection4 section_constant_one(int n, const RadialGrid& g) {
  FormSection4 u = FormSection4::zeros(AngularSector::constant(n), 0, g);
  u.tt().setOnes();
  return u;
}

FormSection4 section_volume_top(int n, const RadialGrid& g) {
  /* alpha dt ^ alpha^{-1} dr ^ (r^{n-2} omega): the alpha weights cancel,
   * leaving nn-profile r^{n-2} on the omega carrier */
  FormSection4 u = FormSection4::zeros(AngularSector::volume(n), n, g);
  for (int i = 0; i < g.size(); ++i)
    u.nn()[i] = std::pow(g.r[i], n - 2);
  return u;
}

std::vector<StationaryForm> stationary_2forms(const SdsParams& params,
                                              const RadialGrid& g) {
  const int n = params.n;
  std::vector<StationaryForm> out;

  StationaryForm dtdr;
  dtdr.label = "r^{2-n} dt^dr";
  dtdr.degree = 2;
  dtdr.state = FormSection4::zeros(AngularSector::constant(n), 2, g);
  for (int i = 0; i < g.size(); ++i)
    dtdr.state.nn()[i] = std::pow(g.r[i], 2 - n);

  StationaryForm omega;
  omega.label = "omega";
  omega.degree = n - 2;
  omega.state = FormSection4::zeros(AngularSector::volume(n), n - 2, g);
  omega.state.tt().setOnes();

  if (n == 4) { /* both live in degree 2 */
    out.push_back(omega);
    out.push_back(dtdr);
  } else {
    out.push_back(dtdr);
    out.push_back(omega);
  }
  return out;
}

DualStateTable dual_state_table(int n) {
  if (n < 4) throw ConfigError("dual_state_table: need n >= 4");
  DualStateTable t;
  t.n = n;
  t.dim_K_star.assign(n + 1, 0);
  t.dim_H_star.assign(n + 1, 0);

  auto add = [&](const std::string& label, int deg, const std::string& sup,
                 bool k, bool h) {
    t.states.push_back({label, deg, sup, k, h});
    if (k) t.dim_K_star[deg] += 1;
    if (h) t.dim_H_star[deg] += 1;
  };

  add("1_X", 0, "bulk", true, false);
  add("delta_{r-} dr", 1, "horizon r-", true, true);
  add("delta_{r+} dr", 1, "horizon r+", true, true);
  if (n == 4) {
    add("1_X omega", 2, "bulk", true, false);
    add("1_X r^{-2} dt^dr", 2, "bulk", true, false);
  } else {
    add("1_X r^{2-n} dt^dr", 2, "bulk", true, false);
    add("1_X omega", n - 2, "bulk", true, false);
  }
  add("delta_{r-} dr^omega", n - 1, "horizon r-", true, true);
  add("delta_{r+} dr^omega", n - 1, "horizon r+", true, true);
  add("1_X r^{n-2} dt^dr^omega", n, "bulk", true, false);

  for (const DualState& s : t.states)
    if (s.in_H_star) t.h_star_degrees.push_back(s.degree);
  std::sort(t.h_star_degrees.begin(), t.h_star_degrees.end());
  t.h_star_degrees.erase(
      std::unique(t.h_star_degrees.begin(), t.h_star_degrees.end()),
      t.h_star_degrees.end());

  t.h_degrees = {0, 2, n - 2, n};
  std::sort(t.h_degrees.begin(), t.h_degrees.end());
  t.h_degrees.erase(std::unique(t.h_degrees.begin(), t.h_degrees.end()),
                    t.h_degrees.end());

  t.orthogonal_by_degree = true;
  for (int d : t.h_star_degrees)
    if (std::find(t.h_degrees.begin(), t.h_degrees.end(), d) !=
        t.h_degrees.end())
      t.orthogonal_by_degree = false;
  return t;
}

}  // namespace sdsform
