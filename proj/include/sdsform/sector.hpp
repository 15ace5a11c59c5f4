/* sector.hpp
 *
 * Closed angular sectors on S^{n-2}.  Within one sector every sphere
 * degree carries at most one fixed form (the "carrier"), so the actions
 * of d_S, delta_S and the Hodge Laplacian Delta_S reduce to scalar
 * multipliers between carriers:
 *
 *   ConstantScalar : carrier 1 at degree 0, all actions vanish
 *   ScalarHarmonic : carriers Y (degree 0) and dY (degree 1),
 *                    d_S Y = dY, delta_S dY = E Y, Delta_S = E = l(l+n-3)
 *   VolumeForm     : carrier omega at degree n-2, all actions vanish
 *
 * carrier_norm(q) is the L^2 normalization of the carrier relative to Y
 * (int |dY|^2 = E int |Y|^2); it feeds the weighted inner products.
 */
#ifndef SDSFORM_SECTOR_HPP
#define SDSFORM_SECTOR_HPP

#include "sdsform/errors.hpp"

namespace sdsform {

struct AngularSector {
  enum class Kind { ConstantScalar, ScalarHarmonic, VolumeForm };

  Kind kind = Kind::ConstantScalar;
  int sphere_dim = 2; /* n - 2 */
  int ell = 0;        /* harmonic index, ScalarHarmonic only */

  static AngularSector constant(int n) {
    AngularSector s;
    s.kind = Kind::ConstantScalar;
    s.sphere_dim = n - 2;
    return s;
  }
  static AngularSector harmonic(int n, int l) {
    AngularSector s;
    s.kind = Kind::ScalarHarmonic;
    s.sphere_dim = n - 2;
    s.ell = l;
    return s;
  }
  static AngularSector volume(int n) {
    AngularSector s;
    s.kind = Kind::VolumeForm;
    s.sphere_dim = n - 2;
    return s;
  }

  int n() const { return sphere_dim + 2; }

  double eigenvalue() const { /* Delta_S eigenvalue on the carriers */
    if (kind == Kind::ScalarHarmonic) return ell * (ell + sphere_dim - 1.0);
    return 0.0;
  }

  bool has(int q) const { /* does a carrier exist at sphere degree q */
    if (q < 0 || q > sphere_dim) return false;
    switch (kind) {
      case Kind::ConstantScalar: return q == 0;
      case Kind::ScalarHarmonic:
        if (ell == 0) return q == 0; /* dY = 0, degenerate to constant */
        return q == 0 || q == 1;
      case Kind::VolumeForm: return q == sphere_dim;
    }
    return false;
  }

  double dS(int q) const { /* multiplier: carrier_q -> carrier_{q+1} */
    if (kind == Kind::ScalarHarmonic && ell > 0 && q == 0) return 1.0;
    return 0.0;
  }

  double delS(int q) const { /* multiplier: carrier_q -> carrier_{q-1} */
    if (kind == Kind::ScalarHarmonic && ell > 0 && q == 1)
      return eigenvalue();
    return 0.0;
  }

  double lap(int q) const { /* Delta_S eigenvalue at carrier_q */
    if (kind == Kind::ScalarHarmonic && has(q)) return eigenvalue();
    return 0.0;
  }

  double carrier_norm(int q) const { /* |carrier_q|^2 relative to |Y|^2=1 */
    if (!has(q)) return 0.0;
    if (kind == Kind::ScalarHarmonic && q == 1) return eigenvalue();
    return 1.0;
  }

  bool same(const AngularSector& o) const {
    return kind == o.kind && sphere_dim == o.sphere_dim &&
           (kind != Kind::ScalarHarmonic || ell == o.ell);
  }
};

}  // namespace sdsform

#endif
