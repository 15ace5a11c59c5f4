/* desitter.hpp
 *
 * Static de Sitter patch: mu = 1 - r^2 on (0,1).  Two independent
 * pieces live here:
 *
 *  - the indicial algebra of the asymptotic regularity analysis: for
 *    each form degree k the tangential quadratic
 *       s^2 - (n-1) s + k(n-k-1)      roots {k, n-1-k}
 *    and the normal quadratic
 *       s^2 - (n-1) s + (k-1)(n-k)    roots {k-1, n-k},
 *    plus the first-order roots {k, n-k} of d+delta;
 *
 *  - the stationary states on the static patch: the constant 1, its
 *    Hodge dual r^{n-2} dt^dr^omega, and the degree-1 generator.
 *
 * The degree-1 space is spanned by dt - r alpha^{-2} dr = d(t + log alpha),
 * which is exact (hence wave-annihilated, since delta of it is constant)
 * but not coclosed, matching dim K^1 = 1 with dim H^1 = 0.
 */
#ifndef SDSFORM_DESITTER_HPP
#define SDSFORM_DESITTER_HPP

#include <array>
#include <utility>
#include <vector>

#include "sdsform/section.hpp"

namespace sdsform {

struct Quadratic { /* monic: s^2 + b s + c */
  double b = 0, c = 0;
  std::array<double, 2> roots() const; /* sorted ascending */
};

/* (tangential, normal) quadratics of the degree-k wave operator */
std::pair<Quadratic, Quadratic> indicial_polynomial_box(int k, int n);

std::array<double, 2> indicial_roots_ddelta(int k, int n); /* {k, n-k} */

struct IndicialRow {
  int k = 0;
  bool has_tangential = true; /* absent at k = n */
  bool has_normal = true;     /* absent at k = 0 */
  std::array<double, 2> tangential_roots = {0, 0};
  std::array<double, 2> normal_roots = {0, 0};
  std::array<double, 2> ddelta_roots = {0, 0};
};

struct IndicialTable {
  int n = 4;
  std::vector<IndicialRow> rows; /* k = 0..n */
};

IndicialTable table_41(int n);

/* stationary states on the static patch */
struct DsStaticStates {
  int n = 4;
  RadialGrid grid;
  FormSection4 one;          /* degree 0 */
  FormSection4 k1_generator; /* degree 1: dt - r alpha^{-2} dr */
  FormSection4 star_one;     /* degree n: r^{n-2} dt^dr^omega */
  std::vector<int> dims;     /* dim K^k, k = 0..n */
};

DsStaticStates ds_static_states(int n, int npts = 257, double r_lo = 0.04,
                                double r_hi = 0.96);

}  // namespace sdsform

#endif
