/* grid.hpp
 *
 * Uniform radial grid plus finite-difference first derivatives of order
 * 2 or 4 (centered in the interior, one-sided at the edges).
 */
#ifndef SDSFORM_GRID_HPP
#define SDSFORM_GRID_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "sdsform/errors.hpp"

namespace sdsform {

using VecC = Eigen::VectorXcd;
using VecR = Eigen::VectorXd;

struct RadialGrid {
  std::vector<double> r; /* strictly increasing, uniform */
  double h = 0;

  int size() const { return static_cast<int>(r.size()); }

  static RadialGrid uniform(double a, double b, int npts) {
    if (npts < 16)
      throw NumericalError("RadialGrid: need at least 16 points");
    if (!(a < b)) throw NumericalError("RadialGrid: empty interval");
    RadialGrid g;
    g.r.resize(npts);
    g.h = (b - a) / (npts - 1);
    for (int i = 0; i < npts; ++i) g.r[i] = a + g.h * i;
    g.r.back() = b;
    return g;
  }
};

/* d/dx of a sampled function, stencil order 2 or 4 */
VecC deriv(const VecC& f, double h, int order);
VecR deriv(const VecR& f, double h, int order);

}  // namespace sdsform

#endif
