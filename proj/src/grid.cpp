/* grid.cpp
 *
 * Finite-difference first derivative, order 2 or 4, one-sided stencils
 * at the boundary rows so every node gets the full order.
 */
#include "sdsform/grid.hpp"

namespace sdsform {

template <typename Vec>
static Vec deriv_impl(const Vec& f, double h, int order) {
  const int n = static_cast<int>(f.size());
  Vec out(n);
  if (n == 0) return out;
  if (order != 2 && order != 4)
    throw NumericalError("deriv: stencil order must be 2 or 4");
  if (order == 2) {
    if (n < 3) throw NumericalError("deriv: grid too small for order 2");
    out(0) = (-3.0 * f(0) + 4.0 * f(1) - f(2)) / (2.0 * h);
    for (int i = 1; i < n - 1; ++i) out(i) = (f(i + 1) - f(i - 1)) / (2.0 * h);
    out(n - 1) =
        (3.0 * f(n - 1) - 4.0 * f(n - 2) + f(n - 3)) / (2.0 * h);
  } else {
    if (n < 6) throw NumericalError("deriv: grid too small for order 4");
    out(0) = (-25.0 * f(0) + 48.0 * f(1) - 36.0 * f(2) + 16.0 * f(3) -
              3.0 * f(4)) /
             (12.0 * h);
    out(1) = (-3.0 * f(0) - 10.0 * f(1) + 18.0 * f(2) - 6.0 * f(3) + f(4)) /
             (12.0 * h);
    for (int i = 2; i < n - 2; ++i)
      out(i) = (-f(i + 2) + 8.0 * f(i + 1) - 8.0 * f(i - 1) + f(i - 2)) /
               (12.0 * h);
    out(n - 2) = (3.0 * f(n - 1) + 10.0 * f(n - 2) - 18.0 * f(n - 3) +
                  6.0 * f(n - 4) - f(n - 5)) /
                 (12.0 * h);
    out(n - 1) = (25.0 * f(n - 1) - 48.0 * f(n - 2) + 36.0 * f(n - 3) -
                  16.0 * f(n - 4) + 3.0 * f(n - 5)) /
                 (12.0 * h);
  }
  return out;
}

VecC deriv(const VecC& f, double h, int order) { return deriv_impl(f, h, order); }
VecR deriv(const VecR& f, double h, int order) { return deriv_impl(f, h, order); }

}  // namespace sdsform
