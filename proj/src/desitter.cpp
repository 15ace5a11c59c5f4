/* desitter.cpp */
#include "sdsform/desitter.hpp"

#include <cmath>

#include "sdsform/geometry.hpp"

namespace sdsform {

std::array<double, 2> Quadratic::roots() const {
  const double disc = b * b - 4 * c;
  if (disc < 0)
    throw NumericalError("Quadratic::roots: complex pair not representable");
  const double s = std::sqrt(disc);
  return {(-b - s) / 2, (-b + s) / 2};
}

std::pair<Quadratic, Quadratic> indicial_polynomial_box(int k, int n) {
  if (n < 4 || k < 0 || k > n)
    throw ConfigError("indicial_polynomial_box: need n >= 4, 0 <= k <= n");
  Quadratic tangential{-(n - 1.0), double(k) * (n - k - 1.0)};
  Quadratic normal{-(n - 1.0), double(k - 1) * (n - k)};
  return {tangential, normal};
}

std::array<double, 2> indicial_roots_ddelta(int k, int n) {
  if (n < 4 || k < 0 || k > n)
    throw ConfigError("indicial_roots_ddelta: need n >= 4, 0 <= k <= n");
  double a = k, b = double(n - k);
  if (a > b) std::swap(a, b);
  return {a, b};
}

IndicialTable table_41(int n) {
  if (n < 4) throw ConfigError("table_41: need n >= 4");
  IndicialTable t;
  t.n = n;
  for (int k = 0; k <= n; ++k) {
    IndicialRow row;
    row.k = k;
    row.has_tangential = k <= n - 1;
    row.has_normal = k >= 1;
    const auto pq = indicial_polynomial_box(k, n);
    if (row.has_tangential) {
      row.tangential_roots = pq.first.roots();
      if (row.tangential_roots[0] < 0 ||
          (row.tangential_roots[0] == 0 && row.tangential_roots[1] == 0))
        throw NumericalError("table_41: tangential root bookkeeping broken");
    }
    if (row.has_normal) {
      row.normal_roots = pq.second.roots();
      if (row.normal_roots[0] < 0 ||
          (row.normal_roots[0] == 0 && row.normal_roots[1] == 0))
        throw NumericalError("table_41: normal root bookkeeping broken");
    }
    row.ddelta_roots = indicial_roots_ddelta(k, n);
    t.rows.push_back(row);
  }
  return t;
}

DsStaticStates ds_static_states(int n, int npts, double r_lo, double r_hi) {
  if (n < 4) throw ConfigError("ds_static_states: need n >= 4");
  if (!(0 < r_lo && r_lo < r_hi && r_hi < 1))
    throw ConfigError("ds_static_states: grid must sit inside (0, 1)");
  DsStaticStates s;
  s.n = n;
  s.grid = RadialGrid::uniform(r_lo, r_hi, npts);

  s.one = FormSection4::zeros(AngularSector::constant(n), 0, s.grid);
  s.one.tt().setOnes();

  /* dt - r alpha^{-2} dr in the slot encoding
     u = alpha^{-1} dr (f1/alpha) + alpha dt (f2/alpha): f1 = -r, f2 = 1 */
  s.k1_generator = FormSection4::zeros(AngularSector::constant(n), 1, s.grid);
  for (int i = 0; i < s.grid.size(); ++i) {
    const double r = s.grid.r[i];
    const double a = std::sqrt(1 - r * r);
    s.k1_generator.tn()[i] = -r / a;
    s.k1_generator.nt()[i] = 1.0 / a;
  }

  s.star_one = FormSection4::zeros(AngularSector::volume(n), n, s.grid);
  for (int i = 0; i < s.grid.size(); ++i)
    s.star_one.nn()[i] = std::pow(s.grid.r[i], n - 2);

  s.dims.assign(n + 1, 0);
  s.dims[0] = 1;
  s.dims[1] = 1;
  s.dims[n - 1] = 1;
  s.dims[n] = 1;
  return s;
}

}  // namespace sdsform
