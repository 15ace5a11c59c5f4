/* cohomology.cpp */
#include "sdsform/cohomology.hpp"

#include <string>

namespace sdsform {

void BettiData::validate() const {
  if (n < 4) throw ConfigError("BettiData: need n >= 4");
  const size_t len = static_cast<size_t>(n);
  if (b_absolute.size() != len || b_boundary.size() != len ||
      b_relative.size() != len)
    throw ConfigError("BettiData: arrays must have length n (degrees 0..n-1)");
  for (int k = 0; k < n; ++k) {
    if (b_absolute[k] < 0 || b_boundary[k] < 0 || b_relative[k] < 0)
      throw ConfigError("BettiData: negative Betti number at degree " +
                        std::to_string(k));
    if (b_relative[k] != b_absolute[(n - 1) - k])
      throw ConfigError(
          "BettiData: duality b_relative[k] = b_absolute[n-1-k] violated at "
          "degree " +
          std::to_string(k));
  }
}

BettiData BettiData::from_absolute(int n, std::vector<int> b_abs,
                                   std::vector<int> b_bnd) {
  BettiData b;
  b.n = n;
  b.b_absolute = std::move(b_abs);
  b.b_boundary = std::move(b_bnd);
  b.b_relative.assign(n, 0);
  if (b.b_absolute.size() == static_cast<size_t>(n))
    for (int k = 0; k < n; ++k) b.b_relative[k] = b.b_absolute[(n - 1) - k];
  b.validate();
  return b;
}

BettiData betti_sds(int n) {
  if (n < 4) throw ConfigError("betti_sds: need n >= 4");
  /* X bar = [r-, r+] x S^{n-2}: absolute Betti = sphere Betti,
   * boundary = two spheres */
  std::vector<int> abs(n, 0), bnd(n, 0);
  abs[0] = 1;
  abs[n - 2] += 1; /* n = 4: degree 2 still distinct from 0 */
  bnd[0] = 2;
  bnd[n - 2] += 2;
  return BettiData::from_absolute(n, std::move(abs), std::move(bnd));
}

BettiData betti_ds(int n) {
  if (n < 4) throw ConfigError("betti_ds: need n >= 4");
  /* X bar = closed ball B^{n-1}, boundary one sphere */
  std::vector<int> abs(n, 0), bnd(n, 0);
  abs[0] = 1;
  bnd[0] = 1;
  bnd[n - 2] += 1;
  return BettiData::from_absolute(n, std::move(abs), std::move(bnd));
}

namespace {

int at(const std::vector<int>& v, int k) {
  if (k < 0 || k >= static_cast<int>(v.size())) return 0;
  return v[k];
}

}  // namespace

int dim_K(int k, const BettiData& betti) {
  betti.validate();
  if (k < 0 || k > betti.n)
    throw ConfigError("dim_K: degree outside [0, n]");
  return at(betti.b_absolute, k) + at(betti.b_relative, k - 1) +
         at(betti.b_boundary, k - 1);
}

HBounds dim_H_bounds(int k, const BettiData& betti) {
  betti.validate();
  if (k < 0 || k > betti.n)
    throw ConfigError("dim_H_bounds: degree outside [0, n]");
  HBounds h;
  h.lower = at(betti.b_absolute, k) + at(betti.b_relative, k - 1);
  h.upper = h.lower + at(betti.b_boundary, k - 1);
  h.exact = h.lower == h.upper;
  return h;
}

int exact_h_sds(int n, int k) {
  if (n < 4) throw ConfigError("exact_h_sds: need n >= 4");
  if (k < 0 || k > n) throw ConfigError("exact_h_sds: degree outside [0, n]");
  if (k == 0 || k == n) return 1;
  if (n == 4) return k == 2 ? 2 : 0;
  if (k == 2 || k == n - 2) return 1;
  return 0;
}

int exact_h_ds(int n, int k) {
  if (n < 4) throw ConfigError("exact_h_ds: need n >= 4");
  if (k < 0 || k > n) throw ConfigError("exact_h_ds: degree outside [0, n]");
  return (k == 0 || k == n) ? 1 : 0;
}

}  // namespace sdsform
