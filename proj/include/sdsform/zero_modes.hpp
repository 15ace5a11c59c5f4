/* zero_modes.hpp
 *
 * Closed-form stationary (frequency-zero) states annihilated by the
 * wave operator on 1-forms and 2-forms, the horizon matching linear
 * algebra that selects them, and the symbolic dual-state table.
 *
 * The 1-form radial profiles solve
 *   d/dr r^{-(n-2)} d/dr r^{n-2} f1 = 0  ->  f1 = f11 r + f12 r^{2-n}
 *   r^{-(n-2)} d/dr r^{n-2} d/dr f2 = 0  ->  f2 = f21 + f22 r^{3-n}
 * and the horizon matching conditions are f2(r-) = f1(r-),
 * f2(r+) = -f1(r+).
 */
#ifndef SDSFORM_ZERO_MODES_HPP
#define SDSFORM_ZERO_MODES_HPP

#include <string>
#include <vector>

#include "sdsform/block_ops.hpp"
#include "sdsform/geometry.hpp"
#include "sdsform/section.hpp"

namespace sdsform {

/* exponent pairs of the two fundamental systems */
struct RadialOdeBasis {
  double f1_exponents[2]; /* {1, 2-n} */
  double f2_exponents[2]; /* {0, 3-n} */
};

RadialOdeBasis radial_ode_basis(int n);

/* one 1-form zero mode: f1 = f11 r + f12 r^{2-n}, f2 = f21 + f22 r^{3-n} */
struct ZeroMode {
  int n = 4;
  double f11 = 0, f12 = 0, f21 = 0, f22 = 0;

  double f1(double r) const { return f11 * r + f12 * std::pow(r, 2 - n); }
  double f2(double r) const { return f21 + f22 * std::pow(r, 3 - n); }
  double df1(double r) const {
    return f11 + (2 - n) * f12 * std::pow(r, 1 - n);
  }
  double df2(double r) const { return (3 - n) * f22 * std::pow(r, 2 - n); }
};

struct ZeroModeBasis {
  SdsParams params;
  HorizonData hor;
  ZeroMode u_plus;  /* f1(r-) = 0, f1(r+) = 1 */
  ZeroMode u_minus; /* f1(r-) = 1, f1(r+) = 0 */
  /* Hodge-dual labels spanning the degree n-1 space */
  std::string dual_labels[2] = {"star u_plus", "star u_minus"};
};

/* 2x4 horizon matching matrix acting on (f11, f12, f21, f22); rows are
 * the conditions f2(r-) - f1(r-) = 0 and f2(r+) + f1(r+) = 0 written as
 * (r-, r-^{2-n}, -1, -r-^{3-n}) and (r+, r+^{2-n}, +1, +r+^{3-n}).
 * Throws RankDeficiency if the numerical rank is not 2. */
Eigen::Matrix<double, 2, 4> matching_system(const SdsParams& params);

ZeroModeBasis basis_u_pm(const SdsParams& params);

/* matching + closedness both ways force the zero solution in degree 1:
 * the reduced 2x2 system on (f1(r-), f2-constant) has determinant
 * 1 + (r-/r+)^{n-2} > 0 */
struct H1Certificate {
  int n = 4;
  Eigen::Matrix2d reduced;
  double determinant = 0;
  bool trivial = false; /* determinant != 0 */
};

H1Certificate h1_triviality_certificate(const SdsParams& params);

/* stationary 2-form (and companion degree n-2) descriptors */
struct StationaryForm {
  std::string label;
  int degree = 0;
  FormSection4 state;
};

/* n = 4: omega and r^{-2} dt^dr, both degree 2.
 * n > 4: r^{2-n} dt^dr in degree 2, omega in degree n-2. */
std::vector<StationaryForm> stationary_2forms(const SdsParams& params,
                                              const RadialGrid& g);

/* grid representations of the remaining explicit states */
FormSection4 section_u_pm(const ZeroMode& mode, const SdsParams& params,
                          const RadialGrid& g);
FormSection4 section_constant_one(int n, const RadialGrid& g);
/* r^{n-2} dt^dr^omega, the degree-n state */
FormSection4 section_volume_top(int n, const RadialGrid& g);

/* ---- symbolic dual states ---- */

struct DualState {
  std::string label;
  int degree = 0;
  std::string support; /* "bulk", "horizon r-", "horizon r+" */
  bool in_K_star = false;
  bool in_H_star = false;
};

struct DualStateTable {
  int n = 4;
  std::vector<DualState> states;
  std::vector<int> dim_K_star; /* index k = 0..n */
  std::vector<int> dim_H_star;
  std::vector<int> h_star_degrees; /* degrees carrying H_* states */
  std::vector<int> h_degrees;      /* degrees carrying resonant states */
  bool orthogonal_by_degree = false;
};

DualStateTable dual_state_table(int n);

}  // namespace sdsform

#endif
