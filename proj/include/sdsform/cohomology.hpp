/* cohomology.hpp
 *
 * Dimension counts of the stationary resonance spaces from Betti data
 * of the spatial slice X bar (an (n-1)-manifold with boundary):
 *
 *   dim K^k        = b_abs[k] + b_rel[k-1] + b_bnd[k-1]
 *   dim H^k bounds: lower = b_abs[k] + b_rel[k-1], upper = lower + b_bnd[k-1]
 *
 * (out-of-range indices contribute 0).  Arrays are indexed by degree
 * 0..n-1 on X bar; relative Betti numbers are determined by duality,
 * b_rel[k] = b_abs[(n-1)-k].  Exact H^k values are provided only for
 * the two resolved geometries (black-hole slice: annulus x sphere;
 * global static slice: ball).
 */
#ifndef SDSFORM_COHOMOLOGY_HPP
#define SDSFORM_COHOMOLOGY_HPP

#include <vector>

#include "sdsform/errors.hpp"

namespace sdsform {

struct BettiData {
  int n = 4; /* spacetime dimension; X bar has dimension n-1 */
  std::vector<int> b_absolute; /* length n, degrees 0..n-1 */
  std::vector<int> b_boundary;
  std::vector<int> b_relative;

  /* throws ConfigError on negative entries, wrong lengths, or broken
   * duality b_relative[k] == b_absolute[(n-1)-k] */
  void validate() const;

  /* fill b_relative from b_absolute by duality */
  static BettiData from_absolute(int n, std::vector<int> b_abs,
                                 std::vector<int> b_bnd);
};

BettiData betti_sds(int n);
BettiData betti_ds(int n);

int dim_K(int k, const BettiData& betti);

struct HBounds {
  int lower = 0;
  int upper = 0;
  bool exact = false; /* true when lower == upper */
};

HBounds dim_H_bounds(int k, const BettiData& betti);

/* exact values resolved beyond the bounds */
int exact_h_sds(int n, int k);
int exact_h_ds(int n, int k);

}  // namespace sdsform

#endif
