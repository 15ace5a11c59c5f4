/* block_ops.cpp
 *
 * Assembly and application of the d / delta / box block operators.
 * Radial weights (alpha, r, mu, mu') are evaluated analytically at the
 * grid nodes; derivatives of profiles use the finite-difference
 * stencils from grid.cpp.  Angular actions are the scalar multipliers
 * of the active sector, which vanish automatically whenever the target
 * carrier does not exist, so every formula below can be written without
 * per-sector case distinctions.
 */
#include "sdsform/block_ops.hpp"

#include <cmath>

namespace sdsform {

namespace {

using Arr = Eigen::ArrayXcd;

/* pointwise weights of the metric on the grid, pre-cast to complex */
struct Weights {
  int n = 4;
  double h = 0;
  int order = 2;
  Cplx sigma = 0.0;
  Arr r, a, mu, dmu; /* radius, alpha, mu, mu' */

  static Weights build(const RadialMetric& m, const RadialGrid& g, Cplx sigma,
                       int order) {
    Weights w;
    w.n = m.n;
    w.h = g.h;
    w.order = order;
    w.sigma = sigma;
    const int N = g.size();
    w.r.resize(N);
    w.a.resize(N);
    w.mu.resize(N);
    w.dmu.resize(N);
    for (int i = 0; i < N; ++i) {
      const double ri = g.r[i];
      w.r[i] = ri;
      w.mu[i] = m.mu(ri);
      w.dmu[i] = m.dmu(ri);
      w.a[i] = m.alpha(ri);
    }
    return w;
  }

  Arr D(const Arr& f) const { /* d/dr */
    return deriv(VecC(f.matrix()), h, order).array();
  }

  Arr prs(const Arr& f, int q) const { /* partial*_{r,q} */
    return -a * (D(f) + double(n - 2 - 2 * q) * f / r);
  }

  Arr dt(const Arr& f) const { /* d/dt -> -i sigma */
    return Cplx(0, -1) * sigma * f;
  }
};

Arr slot_or_zero(const FormSection4& u, int i, int N) {
  if (u.slot[i].size() > 0) return u.slot[i].array();
  return Arr::Zero(N);
}

void store(FormSection4& out, int i, const Arr& val) {
  if (out.present(i)) out.slot[i] = val.matrix();
}

FormSection4 apply_d(const BlockRadialOperator& op, const FormSection4& u) {
  const int N = op.grid.size();
  const int p = op.p;
  const AngularSector& s = op.sector;
  const Weights w = Weights::build(op.metric, op.grid, op.sigma, op.order);
  const Arr u1 = slot_or_zero(u, 0, N), u2 = slot_or_zero(u, 1, N),
            u3 = slot_or_zero(u, 2, N), u4 = slot_or_zero(u, 3, N);

  FormSection4 out = FormSection4::zeros(s, p + 1, op.grid);
  store(out, 0, s.dS(p) * u1);
  store(out, 1, w.a * w.D(u1) - s.dS(p - 1) * u2);
  store(out, 2, w.dt(u1) / w.a - s.dS(p - 1) * u3);
  store(out, 3, w.dt(u2) / w.a - w.D(w.a * u3) + s.dS(p - 2) * u4);
  return out;
}

FormSection4 apply_delta(const BlockRadialOperator& op,
                         const FormSection4& u) {
  const int N = op.grid.size();
  const int p = op.p;
  const AngularSector& s = op.sector;
  const Weights w = Weights::build(op.metric, op.grid, op.sigma, op.order);
  const Arr u1 = slot_or_zero(u, 0, N), u2 = slot_or_zero(u, 1, N),
            u3 = slot_or_zero(u, 2, N), u4 = slot_or_zero(u, 3, N);
  const Arr r2 = w.r * w.r;

  FormSection4 out = FormSection4::zeros(s, p - 1, op.grid);
  store(out, 0,
        -s.delS(p) * u1 / r2 - w.prs(w.a * u2, p - 1) / w.a - w.dt(u3) / w.a);
  store(out, 1, s.delS(p - 1) * u2 / r2 - w.dt(u4) / w.a);
  store(out, 2, s.delS(p - 1) * u3 / r2 + w.prs(u4, p - 2));
  store(out, 3, -s.delS(p - 2) * u4 / r2);
  return out;
}

FormSection4 apply_box(const BlockRadialOperator& op, const FormSection4& u) {
  const int N = op.grid.size();
  const int p = op.p;
  const AngularSector& s = op.sector;
  const Weights w = Weights::build(op.metric, op.grid, op.sigma, op.order);
  const Arr u1 = slot_or_zero(u, 0, N), u2 = slot_or_zero(u, 1, N),
            u3 = slot_or_zero(u, 2, N), u4 = slot_or_zero(u, 3, N);
  const Arr r2 = w.r * w.r;
  const Arr q = r2 * w.dmu / w.mu; /* r^2 mu'/mu, multiplies the dt cross terms */

  /* first summand: angular Laplacians and the d_S / delta_S couplings */
  const Arr m1_1 = s.lap(p) * u1 - 2.0 * w.a * w.r * s.dS(p - 1) * u2;
  const Arr m1_2 = -2.0 * (w.a / w.r) * s.delS(p) * u1 + s.lap(p - 1) * u2 -
                   q * w.dt(u3);
  const Arr m1_3 = -q * w.dt(u2) + s.lap(p - 1) * u3 -
                   2.0 * w.a * w.r * s.dS(p - 2) * u4;
  const Arr m1_4 = -2.0 * (w.a / w.r) * s.delS(p - 1) * u3 + s.lap(p - 2) * u4;

  /* second summand: radial second-order parts */
  const Arr m2_1 = (r2 / w.a) * w.prs(w.a * w.a * w.D(u1), p);
  const Arr m2_2 = r2 * w.a * w.D(w.prs(w.a * u2, p - 1) / w.a);
  const Arr m2_3 = r2 * w.prs(w.D(w.a * u3), p - 1);
  const Arr m2_4 = r2 * w.D(w.a * w.prs(u4, p - 2));

  /* third summand: (r^2/mu) dt^2 on every slot */
  const Arr s2 = (r2 / w.mu) * (-w.sigma * w.sigma);

  FormSection4 out = FormSection4::zeros(s, p, op.grid);
  store(out, 0, -(m1_1 + m2_1 + s2 * u1) / r2);
  store(out, 1, -(m1_2 + m2_2 + s2 * u2) / r2);
  store(out, 2, -(m1_3 + m2_3 + s2 * u3) / r2);
  store(out, 3, -(m1_4 + m2_4 + s2 * u4) / r2);
  return out;
}

BlockRadialOperator assemble(OpKind kind, int p, const AngularSector& sector,
                             const RadialMetric& m, const RadialGrid& g,
                             Cplx sigma, int order) {
  if (sector.n() != m.n)
    throw SectorMismatch("operator assembly: sector dimension " +
                         std::to_string(sector.n()) + " vs metric dimension " +
                         std::to_string(m.n));
  if (p < 0 || p > m.n)
    throw SectorMismatch("operator assembly: form degree " +
                         std::to_string(p) + " outside [0," +
                         std::to_string(m.n) + "]");
  if (order != 2 && order != 4)
    throw ConfigError("operator assembly: stencil order must be 2 or 4");
  BlockRadialOperator op;
  op.kind = kind;
  op.p = p;
  op.sector = sector;
  op.grid = g;
  op.metric = m;
  op.sigma = sigma;
  op.order = order;
  switch (kind) {
    case OpKind::ExteriorD: {
      op.display_relation = "exterior derivative as displayed";
      const int entries[][2] = {{0, 0}, {1, 0}, {1, 1}, {2, 0},
                                {2, 2}, {3, 1}, {3, 2}, {3, 3}};
      for (auto& e : entries) op.summand_mask[e[0]][e[1]] = 1;
      break;
    }
    case OpKind::Codifferential: {
      op.display_relation = "codifferential as displayed";
      const int entries[][2] = {{0, 0}, {0, 1}, {0, 2}, {1, 1},
                                {1, 3}, {2, 2}, {2, 3}, {3, 3}};
      for (auto& e : entries) op.summand_mask[e[0]][e[1]] = 1;
      break;
    }
    case OpKind::WaveBox: {
      /* the display gives -r^2 box as a sum of three matrices; the
         assembled operator is box itself, i.e. -r^{-2} times that sum */
      op.display_relation = "box = -r^{-2} (summand1 + summand2 + summand3)";
      const int off[][2] = {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}};
      for (auto& e : off) op.summand_mask[e[0]][e[1]] = 1;
      for (int i = 0; i < 4; ++i) op.summand_mask[i][i] = 1 | 2 | 4;
      break;
    }
  }
  return op;
}

}  // namespace

VecC PartialRStar::operator()(const VecC& f, const RadialGrid& g,
                              int order) const {
  const int N = g.size();
  VecC out = deriv(f, g.h, order);
  for (int i = 0; i < N; ++i) {
    const double ri = g.r[i];
    out[i] = -m_.alpha(ri) * (out[i] + double(m_.n - 2 - 2 * q_) * f[i] / ri);
  }
  return out;
}

FormSection4 BlockRadialOperator::apply(const FormSection4& u) const {
  if (u.p != p)
    throw SectorMismatch("apply: section degree " + std::to_string(u.p) +
                         " does not match operator degree " +
                         std::to_string(p));
  if (!u.sector.same(sector))
    throw SectorMismatch("apply: section sector differs from operator sector");
  if (u.grid.size() != grid.size())
    throw SectorMismatch("apply: grid length mismatch");
  for (int i = 0; i < 4; ++i) {
    const bool want = u.present(i);
    const bool have = u.slot[i].size() > 0;
    if (want != have || (have && u.slot[i].size() != grid.size()))
      throw SectorMismatch("apply: slot " + std::to_string(i) +
                           " inconsistent with sector/degree");
  }
  switch (kind) {
    case OpKind::ExteriorD: return apply_d(*this, u);
    case OpKind::Codifferential: return apply_delta(*this, u);
    default: return apply_box(*this, u);
  }
}

BlockRadialOperator assemble_d(int p, const AngularSector& sector,
                               const RadialMetric& m, const RadialGrid& g,
                               Cplx sigma, int order) {
  return assemble(OpKind::ExteriorD, p, sector, m, g, sigma, order);
}
BlockRadialOperator assemble_delta(int p, const AngularSector& sector,
                                   const RadialMetric& m, const RadialGrid& g,
                                   Cplx sigma, int order) {
  return assemble(OpKind::Codifferential, p, sector, m, g, sigma, order);
}
BlockRadialOperator assemble_box(int p, const AngularSector& sector,
                                 const RadialMetric& m, const RadialGrid& g,
                                 Cplx sigma, int order) {
  return assemble(OpKind::WaveBox, p, sector, m, g, sigma, order);
}
BlockRadialOperator assemble_d(int p, const AngularSector& sector,
                               const SdsParams& params, const RadialGrid& g,
                               Cplx sigma, int order) {
  return assemble_d(p, sector, RadialMetric::from_sds(params), g, sigma,
                    order);
}
BlockRadialOperator assemble_delta(int p, const AngularSector& sector,
                                   const SdsParams& params, const RadialGrid& g,
                                   Cplx sigma, int order) {
  return assemble_delta(p, sector, RadialMetric::from_sds(params), g, sigma,
                        order);
}
BlockRadialOperator assemble_box(int p, const AngularSector& sector,
                                 const SdsParams& params, const RadialGrid& g,
                                 Cplx sigma, int order) {
  return assemble_box(p, sector, RadialMetric::from_sds(params), g, sigma,
                      order);
}

MatchingMatrix matching_matrix(Side side, const SdsParams& params) {
  (void)params; /* the weights are universal; params fixes only alpha(r) */
  MatchingMatrix m;
  m.coeff[0][0] = 1.0;
  m.alpha_pow[0][0] = 0;
  m.coeff[1][1] = 1.0;
  m.alpha_pow[1][1] = 1;
  m.coeff[1][2] = (side == Side::minus) ? 1.0 : -1.0;
  m.alpha_pow[1][2] = -1;
  m.coeff[2][2] = 1.0;
  m.alpha_pow[2][2] = -1;
  m.coeff[3][3] = 1.0;
  m.alpha_pow[3][3] = 0;
  return m;
}

namespace {

/* weighted squared norm accumulator shared by residual and norm */
double weighted_norm(const FormSection4& u, const RadialMetric& m,
                     double buffer_frac) {
  const int N = u.grid.size();
  int skip = static_cast<int>(buffer_frac * N);
  if (skip < 0) skip = 0;
  if (2 * skip >= N) throw ConfigError("residual buffer swallows the grid");
  double acc = 0;
  for (int i = skip; i < N - skip; ++i) {
    const double r = u.grid.r[i];
    const double a = m.alpha(r);
    const double vol = std::pow(r, m.n - 2) / a;
    double fib = 0;
    for (int s = 0; s < 4; ++s) {
      if (u.slot[s].size() == 0) continue;
      const int deg = FormSection4::slot_degree(u.p, s);
      const double wf = std::pow(r, -2 * deg) * u.sector.carrier_norm(deg);
      fib += wf * std::norm(u.slot[s][i]);
    }
    acc += u.grid.h * vol * fib;
  }
  return std::sqrt(acc);
}

}  // namespace

double annihilation_residual(const BlockRadialOperator& op,
                             const FormSection4& state, double buffer_frac) {
  return weighted_norm(op.apply(state), op.metric, buffer_frac);
}

double section_norm(const FormSection4& u, const RadialMetric& m,
                    double buffer_frac) {
  return weighted_norm(u, m, buffer_frac);
}

Cplx graded_pairing(const FormSection4& u, const FormSection4& v) {
  if (u.p != v.p || !u.sector.same(v.sector) ||
      u.grid.size() != v.grid.size())
    throw SectorMismatch("pairing: incompatible sections");
  const int N = u.grid.size();
  const int n = u.sector.n();
  static const double slot_sign[4] = {1, 1, -1, -1};
  Cplx acc = 0;
  for (int i = 0; i < N; ++i) {
    const double r = u.grid.r[i];
    const double quad = (i == 0 || i == N - 1) ? u.grid.h / 2 : u.grid.h;
    Cplx fib = 0;
    for (int s = 0; s < 4; ++s) {
      if (u.slot[s].size() == 0 || v.slot[s].size() == 0) continue;
      const int deg = FormSection4::slot_degree(u.p, s);
      const double wf =
          slot_sign[s] * std::pow(r, -2 * deg) * u.sector.carrier_norm(deg);
      fib += wf * u.slot[s][i] * v.slot[s][i];
    }
    acc += quad * std::pow(r, n - 2) * fib;
  }
  return (u.p % 2 == 0 ? 1.0 : -1.0) * acc;
}

}  // namespace sdsform

