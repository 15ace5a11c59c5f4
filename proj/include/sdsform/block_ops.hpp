/* block_ops.hpp
 *
 * Block operators on FormSection4 profiles in the (TT, TN, NT, NN)
 * splitting over a radial metric: exterior derivative d_p,
 * codifferential delta_p, and the wave operator box_p (assembled as
 * -r^{-2} times the sum of its three displayed matrix summands; the
 * overall sign convention is recorded in the operator metadata).  Time
 * derivatives are replaced by multiplication with -i*sigma, sigma a
 * complex parameter (default 0 for stationary states).
 *
 * Also here: the first-order weighted radial derivative
 *   partial*_{r,q} f = -alpha r^{-(n-2)} r^{2q} d/dr ( r^{-2q} r^{n-2} f )
 *                    = -alpha ( f' + (n-2-2q) f / r ),
 * the horizon matching matrices C_pm, the buffered annihilation
 * residual, and the graded bilinear pairing under which d and delta are
 * exactly adjoint.
 */
#ifndef SDSFORM_BLOCK_OPS_HPP
#define SDSFORM_BLOCK_OPS_HPP

#include <complex>

#include "sdsform/geometry.hpp"
#include "sdsform/grid.hpp"
#include "sdsform/section.hpp"

namespace sdsform {

using Cplx = std::complex<double>;

/* ---- partial*_{r,q} as a reusable radial operator ---- */

class PartialRStar {
 public:
  PartialRStar(int q, const RadialMetric& m) : q_(q), m_(m) {}
  VecC operator()(const VecC& f, const RadialGrid& g, int order = 2) const;

 private:
  int q_;
  RadialMetric m_;
};

inline PartialRStar partial_r_star(int q, const RadialMetric& m) {
  return PartialRStar(q, m);
}
inline PartialRStar partial_r_star(int q, const SdsParams& p) {
  return PartialRStar(q, RadialMetric::from_sds(p));
}

/* ---- the three block operators ---- */

enum class OpKind { ExteriorD, Codifferential, WaveBox };

struct BlockRadialOperator {
  OpKind kind = OpKind::ExteriorD;
  int p = 0; /* input form degree */
  AngularSector sector;
  RadialGrid grid;
  RadialMetric metric;
  Cplx sigma = 0.0;
  int order = 2; /* stencil order, 2 or 4 */

  /* metadata: bit mask per 4x4 block entry naming which displayed
     summand(s) feed it (bit0 first, bit1 second, bit2 third), and the
     relation of the assembled operator to the display */
  int summand_mask[4][4] = {{0}};
  const char* display_relation = "";

  int out_degree() const {
    switch (kind) {
      case OpKind::ExteriorD: return p + 1;
      case OpKind::Codifferential: return p - 1;
      default: return p;
    }
  }

  FormSection4 apply(const FormSection4& u) const;
};

BlockRadialOperator assemble_d(int p, const AngularSector& sector,
                               const RadialMetric& m, const RadialGrid& g,
                               Cplx sigma = 0.0, int order = 2);
BlockRadialOperator assemble_delta(int p, const AngularSector& sector,
                                   const RadialMetric& m, const RadialGrid& g,
                                   Cplx sigma = 0.0, int order = 2);
BlockRadialOperator assemble_box(int p, const AngularSector& sector,
                                 const RadialMetric& m, const RadialGrid& g,
                                 Cplx sigma = 0.0, int order = 2);

BlockRadialOperator assemble_d(int p, const AngularSector& sector,
                               const SdsParams& params, const RadialGrid& g,
                               Cplx sigma = 0.0, int order = 2);
BlockRadialOperator assemble_delta(int p, const AngularSector& sector,
                                   const SdsParams& params, const RadialGrid& g,
                                   Cplx sigma = 0.0, int order = 2);
BlockRadialOperator assemble_box(int p, const AngularSector& sector,
                                 const SdsParams& params, const RadialGrid& g,
                                 Cplx sigma = 0.0, int order = 2);

/* ---- horizon matching matrices C_pm ---- */

enum class Side { minus, plus };

/* Entries are coeff * alpha^pow; structurally
 *   diag(1, alpha, alpha^{-1}, 1) with (2,3) entry -/+ alpha^{-1}
 * ((1-indexed), upper sign for side=minus). */
struct MatchingMatrix {
  double coeff[4][4] = {{0}};
  int alpha_pow[4][4] = {{0}};

  Eigen::Matrix4d eval(double alpha) const {
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (coeff[i][j] != 0.0)
          m(i, j) = coeff[i][j] * std::pow(alpha, alpha_pow[i][j]);
    return m;
  }
};

MatchingMatrix matching_matrix(Side side, const SdsParams& params);

/* ---- residual norm and pairing ---- */

/* Discrete L^2 norm of op(state) with volume weight alpha^{-1} r^{n-2}
 * and fiber weight r^{-2 deg} * carrier_norm per slot, excluding a
 * fraction buffer_frac of the grid points at each end. */
double annihilation_residual(const BlockRadialOperator& op,
                             const FormSection4& state,
                             double buffer_frac = 0.05);

/* Plain weighted norm of a section (same weights, same buffer). */
double section_norm(const FormSection4& u, const RadialMetric& m,
                    double buffer_frac = 0.05);

/* Graded bilinear pairing
 *   <u,v>_p = (-1)^p sum_i w_i r^{n-2}
 *             sum_slots s_slot r^{-2 deg} carrier_norm u_slot v_slot,
 * slot signs (+,+,-,-), trapezoid weights w_i, no conjugation.  For
 * sections supported away from the grid ends,
 *   <d u, v>_{p+1} = <u, delta v>_p
 * up to finite-difference truncation.  (Pair a sigma mode against a
 * -sigma mode; the dt substitution is bilinear, not sesquilinear.) */
Cplx graded_pairing(const FormSection4& u, const FormSection4& v);

}  // namespace sdsform

#endif
