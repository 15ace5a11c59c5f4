/* roots.hpp
 *
 * Bracketed scalar root finding (Brent's method).  Used for horizon
 * radii, threshold bisection, and tortoise-coordinate inversion.
 */
#ifndef SDSFORM_ROOTS_HPP
#define SDSFORM_ROOTS_HPP

#include <cmath>
#include <functional>

#include "sdsform/errors.hpp"

namespace sdsform {

/* Find x in [a,b] with f(x)=0, assuming f(a)*f(b) <= 0.  Relative
 * tolerance rel_tol on x (plus a small absolute floor).  Standard
 * Brent: bisection / secant / inverse quadratic interpolation. */
inline double brent(const std::function<double(double)>& f, double a, double b,
                    double rel_tol = 1e-13, int max_iter = 200) {
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0)
    throw RootBracketFailure("brent: endpoints do not bracket a root");
  if (std::fabs(fa) < std::fabs(fb)) {
    std::swap(a, b);
    std::swap(fa, fb);
  }
  double c = a, fc = fa, d = b - a, s = b;
  bool mflag = true;
  for (int it = 0; it < max_iter; ++it) {
    double tol = rel_tol * (std::fabs(b) + 1e-300) + 1e-300;
    if (fb == 0.0 || std::fabs(b - a) < tol) return b;
    if (fa != fc && fb != fc) {
      /* inverse quadratic interpolation */
      s = a * fb * fc / ((fa - fb) * (fa - fc)) +
          b * fa * fc / ((fb - fa) * (fb - fc)) +
          c * fa * fb / ((fc - fa) * (fc - fb));
    } else {
      s = b - fb * (b - a) / (fb - fa); /* secant */
    }
    double lo = (3.0 * a + b) / 4.0, hi = b;
    if (lo > hi) std::swap(lo, hi);
    bool bad = (s < lo || s > hi) ||
               (mflag && std::fabs(s - b) >= std::fabs(b - c) / 2.0) ||
               (!mflag && std::fabs(s - b) >= std::fabs(c - d) / 2.0) ||
               (mflag && std::fabs(b - c) < tol) ||
               (!mflag && std::fabs(c - d) < tol);
    if (bad) {
      s = (a + b) / 2.0;
      mflag = true;
    } else {
      mflag = false;
    }
    double fs = f(s);
    d = c;
    c = b;
    fc = fb;
    if (fa * fs < 0.0) {
      b = s;
      fb = fs;
    } else {
      a = s;
      fa = fs;
    }
    if (std::fabs(fa) < std::fabs(fb)) {
      std::swap(a, b);
      std::swap(fa, fb);
    }
  }
  return b;
}

}  // namespace sdsform

#endif
