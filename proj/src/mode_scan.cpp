/* mode_scan.cpp
 *
 * Frobenius series at each horizon, RK4 transport to the midpoint,
 * weighted Wronskian.  Everything evaluated here is a polynomial,
 * rational, power, or exp expression in sigma, so the computed map
 * sigma -> W is analytic to roundoff even at finite resolution; the
 * Cauchy-Riemann check therefore probes the construction itself, not
 * the discretization error.
 *
 * Local variable at a horizon: x = delta (r - r0) with delta = +1 at
 * r_minus, -1 at r_plus, so x > 0 points into the static region.  The
 * resonant branch is u = x^s sum a_k x^k with s = -i (beta/2) sigma,
 * beta = 2 delta / mu'(r0).  The recurrence divisor is
 * mu'(r0)^2 k (k + 2s), which cannot vanish for Im sigma >= 0 and
 * k >= 1; near-vanishing is still guarded (IndicialCollision).
 */
#include "sdsform/mode_scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <thread>

#include "sdsform/errors.hpp"

namespace sdsform {

namespace {

using RS = std::vector<double>; /* real power series coefficients */

RS conv(const RS& a, const RS& b, int len) {
  RS out(len, 0.0);
  for (int i = 0; i < (int)a.size() && i < len; ++i) {
    if (a[i] == 0) continue;
    const int jmax = std::min((int)b.size(), len - i);
    for (int j = 0; j < jmax; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

struct SideSeries {
  double r0 = 0;     /* horizon radius */
  double delta = 1;  /* +1 at r_minus, -1 at r_plus */
  double mup = 0;    /* mu'(r0) */
  RS ahat, bhat;     /* x^2 Ahat = A, x Bhat = delta B */
  RS chat;           /* sigma-independent part of C */
};

/* Taylor coefficients of mu(r) = 1 - 2M r^{3-n} - lambda r^2 about r0,
 * j >= 1 (c_0 = mu(r0) = 0 at a horizon) */
RS mu_taylor(const SdsParams& p, double r0, int len) {
  const double lam = lambda_small(p);
  RS c(len, 0.0);
  c[0] = mu(p, r0);
  double binom = 1.0; /* binomial(3-n, j), built iteratively */
  double rpow = std::pow(r0, 3 - p.n);
  for (int j = 1; j < len; ++j) {
    binom *= (double)(3 - p.n - (j - 1)) / j;
    rpow /= r0;
    c[j] = -2.0 * p.mass * binom * rpow;
  }
  if (len > 1) c[1] -= 2.0 * lam * r0;
  if (len > 2) c[2] -= lam;
  return c;
}

SideSeries build_side(const SdsParams& p, ScanSector sector, int ell,
                      double r0, double delta, int len) {
  SideSeries S;
  S.r0 = r0;
  S.delta = delta;
  S.mup = dmu(p, r0);
  const int n = p.n;

  const RS c = mu_taylor(p, r0, len + 3);
  RS m(len + 3, 0.0), mp(len + 3, 0.0), rinv(len + 3, 0.0);
  double dpow = 1.0;
  for (int k = 0; k < len + 3; ++k) {
    m[k] = c[k] * dpow;                               /* mu as x-series */
    if (k + 1 < len + 3) mp[k] = (k + 1) * c[k + 1] * dpow; /* mu'(r(x)) */
    rinv[k] = std::pow(-delta / r0, k) / r0;          /* 1/r as x-series */
    dpow *= delta;
  }

  const RS mm = conv(m, m, len + 3);
  S.ahat.assign(len, 0.0);
  for (int k = 0; k < len; ++k) S.ahat[k] = mm[k + 2];

  const double sgn = (sector == ScanSector::OmegaProfile) ? -1.0 : 1.0;
  RS b = conv(m, mp, len + 3);
  const RS mmr = conv(mm, rinv, len + 3);
  for (int k = 0; k < len + 3; ++k) b[k] += sgn * (n - 2) * mmr[k];
  S.bhat.assign(len, 0.0);
  for (int k = 0; k < len; ++k) S.bhat[k] = delta * b[k + 1];

  S.chat.assign(len, 0.0);
  if (sector == ScanSector::Scalar && ell > 0) {
    const double E = (double)ell * (ell + n - 3);
    const RS mr2 = conv(conv(m, rinv, len + 3), rinv, len + 3);
    for (int k = 0; k < len; ++k) S.chat[k] = -E * mr2[k];
  } else if (sector == ScanSector::DtDrProfile) {
    const RS mvr = conv(conv(m, mp, len + 3), rinv, len + 3);
    const RS mmr2 = conv(mmr, rinv, len + 3);
    for (int k = 0; k < len; ++k)
      S.chat[k] = (n - 2) * (mvr[k] - mmr2[k]);
  }
  return S;
}

struct LocalData {
  Cplx u, du; /* value and d/dr at r0 + delta x0 */
};

LocalData frobenius(const SideSeries& S, Cplx sigma, double x0, int cap) {
  const Cplx s = Cplx(0, -1) * (S.delta / S.mup) * sigma;
  const double mup2 = S.mup * S.mup;

  std::vector<Cplx> a(cap + 1);
  a[0] = 1.0;
  Cplx su = a[0], sd = 0.0; /* sums of a_k x^k and k a_k x^{k-1} */
  double xp = 1.0;          /* x0^k */
  int small_run = 0;
  bool converged = false;

  for (int k = 1; k <= cap; ++k) {
    const Cplx denom_factor = (double)k + 2.0 * s;
    if (std::abs(denom_factor) < 1e-8)
      throw IndicialCollision(
          "mode_scan: local exponents differ by a near-integer");
    Cplx rhs = 0.0;
    for (int j = 1; j <= k; ++j) {
      const Cplx e = s + (double)(k - j);
      Cplx t = S.chat[j];
      t += S.bhat[j] * e;
      t += S.ahat[j] * e * (e - 1.0);
      rhs -= t * a[k - j];
    }
    a[k] = rhs / (mup2 * (double)k * denom_factor);
    xp *= x0;
    const Cplx tu = a[k] * xp;
    su += tu;
    sd += (double)k * a[k] * xp / x0;
    const double mag = std::abs(tu);
    if (mag < 1e-16 * std::max(std::abs(su), 1e-30)) {
      if (++small_run >= 3) {
        converged = true;
        break;
      }
    } else {
      small_run = 0;
      if (mag > 1e8 * (1.0 + std::abs(su)))
        throw SeriesDivergence("mode_scan: Frobenius series diverges");
    }
  }
  if (!converged)
    throw SeriesDivergence(
        "mode_scan: Frobenius truncation error exceeds tolerance");

  const Cplx head = std::exp(s * std::log(x0)); /* x0^s, x0 > 0 */
  LocalData out;
  out.u = head * su;
  const Cplx dudx = head * (sd + s * su / x0);
  out.du = S.delta * dudx; /* d/dr = delta d/dx */
  return out;
}

struct OdeCoefs {
  const SdsParams* p;
  ScanSector sector;
  int ell;
  Cplx sigma2;

  void eval(double r, Cplx* BoverA, Cplx* CoverA) const {
    const double m = mu(*p, r);
    const double dm = dmu(*p, r);
    const int n = p->n;
    const double A = m * m;
    double B = m * dm;
    Cplx C = sigma2;
    switch (sector) {
      case ScanSector::Scalar:
        B += (n - 2) * A / r;
        if (ell > 0) C -= (double)ell * (ell + n - 3) * m / (r * r);
        break;
      case ScanSector::OmegaProfile:
        B -= (n - 2) * A / r;
        break;
      case ScanSector::DtDrProfile:
        B += (n - 2) * A / r;
        C += (n - 2) * m * (dm / r - m / (r * r));
        break;
    }
    *BoverA = B / A;
    *CoverA = C / A;
  }
};

/* RK4 on u' = v, v' = -(B v + C u)/A from ra to rb */
LocalData transport(const OdeCoefs& co, LocalData y, double ra, double rb,
                    int steps) {
  const double h = (rb - ra) / steps;
  Cplx u = y.u, v = y.du;
  auto f = [&co](double r, Cplx u_, Cplx v_, Cplx* du_, Cplx* dv_) {
    Cplx ba, ca;
    co.eval(r, &ba, &ca);
    *du_ = v_;
    *dv_ = -(ba * v_ + ca * u_);
  };
  for (int i = 0; i < steps; ++i) {
    const double r = ra + i * h;
    Cplx k1u, k1v, k2u, k2v, k3u, k3v, k4u, k4v;
    f(r, u, v, &k1u, &k1v);
    f(r + 0.5 * h, u + 0.5 * h * k1u, v + 0.5 * h * k1v, &k2u, &k2v);
    f(r + 0.5 * h, u + 0.5 * h * k2u, v + 0.5 * h * k2v, &k3u, &k3v);
    f(r + h, u + h * k3u, v + h * k3v, &k4u, &k4v);
    u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
  }
  return {u, v};
}

struct ScanContext {
  SdsParams p;
  ScanSector sector;
  ScanOptions opt;
  HorizonData hz;
  SideSeries left, right;
  double x0 = 0, r_mid = 0, span = 0;

  static ScanContext make(const SdsParams& p, ScanSector sector,
                          const ScanOptions& opt) {
    if (opt.ell < 0) throw ConfigError("mode_scan: ell must be >= 0");
    if (!(opt.x0_frac > 0) || opt.x0_frac > 0.2)
      throw ConfigError("mode_scan: x0_frac must lie in (0, 0.2]");
    if (opt.series_cap < 16)
      throw ConfigError("mode_scan: series_cap must be at least 16");
    if (opt.rk_steps < 16)
      throw ConfigError("mode_scan: rk_steps must be at least 16");
    ScanContext cx;
    cx.p = p;
    cx.sector = sector;
    cx.opt = opt;
    cx.hz = horizons(p);
    const int len = opt.series_cap + 1;
    cx.left = build_side(p, sector, opt.ell, cx.hz.r_minus, +1.0, len);
    cx.right = build_side(p, sector, opt.ell, cx.hz.r_plus, -1.0, len);
    cx.span = cx.hz.r_plus - cx.hz.r_minus;
    cx.x0 = opt.x0_frac * cx.span;
    cx.r_mid = 0.5 * (cx.hz.r_minus + cx.hz.r_plus);
    return cx;
  }

  ConnectionResult eval(Cplx sigma) const {
    OdeCoefs co{&p, sector, opt.ell, sigma * sigma};
    LocalData lm = frobenius(left, sigma, x0, opt.series_cap);
    LocalData lp = frobenius(right, sigma, x0, opt.series_cap);
    lm = transport(co, lm, hz.r_minus + x0, r_mid, opt.rk_steps);
    lp = transport(co, lp, hz.r_plus - x0, r_mid, opt.rk_steps);

    const int wexp = (sector == ScanSector::OmegaProfile) ? 2 - p.n : p.n - 2;
    const double weight = mu(p, r_mid) * std::pow(r_mid, wexp);

    ConnectionResult out;
    out.sigma = sigma;
    out.w_raw = weight * (lm.u * lp.du - lm.du * lp.u);
    out.n_minus = std::sqrt(std::norm(lm.u) + span * span * std::norm(lm.du));
    out.n_plus = std::sqrt(std::norm(lp.u) + span * span * std::norm(lp.du));
    const double nn = out.n_minus * out.n_plus;
    out.det_norm = nn > 0 ? std::abs(out.w_raw) / nn : 0.0;
    return out;
  }
};

}  // namespace

ConnectionResult connection_determinant(const SdsParams& p, ScanSector sector,
                                        Cplx sigma, const ScanOptions& opt) {
  return ScanContext::make(p, sector, opt).eval(sigma);
}

double cauchy_riemann_residual(const SdsParams& p, ScanSector sector,
                               Cplx sigma, double step,
                               const ScanOptions& opt) {
  if (!(step > 0)) throw ConfigError("cauchy_riemann_residual: step > 0");
  const ScanContext cx = ScanContext::make(p, sector, opt);
  const Cplx wxp = cx.eval(sigma + step).w_raw;
  const Cplx wxm = cx.eval(sigma - step).w_raw;
  const Cplx wyp = cx.eval(sigma + Cplx(0, step)).w_raw;
  const Cplx wym = cx.eval(sigma - Cplx(0, step)).w_raw;
  const Cplx wx = (wxp - wxm) / (2 * step);
  const Cplx wy = (wyp - wym) / (2 * step);
  return std::abs(wy - Cplx(0, 1) * wx) /
         (std::abs(wx) + std::abs(wy) + 1e-300);
}

ModeScanResult mode_scan(const SdsParams& p, ScanSector sector,
                         const SigmaBox& box, const ScanOptions& opt) {
  if (!(box.re_step > 0) || !(box.im_step > 0) || box.re_max < box.re_min ||
      box.im_max < box.im_min)
    throw ConfigError("mode_scan: malformed sigma box");
  const ScanContext cx = ScanContext::make(p, sector, opt);

  ModeScanResult res;
  const int nx = (int)std::lround((box.re_max - box.re_min) / box.re_step) + 1;
  const int ny = (int)std::lround((box.im_max - box.im_min) / box.im_step) + 1;
  for (int i = 0; i < nx; ++i) res.re_axis.push_back(box.re_min + i * box.re_step);
  for (int j = 0; j < ny; ++j) res.im_axis.push_back(box.im_min + j * box.im_step);
  res.samples.resize((size_t)nx * ny);

  std::atomic<int> collisions{0};
  const int nthreads =
      std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
  std::vector<std::future<void>> futs;
  std::atomic<int> next_row{0};
  for (int t = 0; t < nthreads; ++t) {
    futs.push_back(std::async(std::launch::async, [&]() {
      for (;;) {
        const int j = next_row.fetch_add(1);
        if (j >= ny) return;
        for (int i = 0; i < nx; ++i) {
          const Cplx sigma(res.re_axis[i], res.im_axis[j]);
          ConnectionResult& slot = res.samples[(size_t)j * nx + i];
          try {
            slot = cx.eval(sigma);
          } catch (const IndicialCollision&) {
            slot.sigma = sigma;
            slot.det_norm = std::nan("");
            collisions.fetch_add(1);
          }
        }
      }
    }));
  }
  for (auto& f : futs) f.get();
  res.collisions_skipped = collisions.load();

  std::vector<double> mags;
  mags.reserve(res.samples.size());
  for (const auto& s : res.samples)
    if (std::isfinite(s.det_norm)) mags.push_back(s.det_norm);
  if (mags.empty()) throw NumericalError("mode_scan: no valid samples");
  std::nth_element(mags.begin(), mags.begin() + mags.size() / 2, mags.end());
  res.median_det = mags[mags.size() / 2];

  for (const auto& s : res.samples)
    if (std::isfinite(s.det_norm) && s.det_norm < 1e-3 * res.median_det)
      res.zeros.push_back(s.sigma);

  /* analyticity spot checks on a subsampled lattice */
  double worst = 0;
  for (int j = 0; j < ny; j += 7) {
    for (int i = 0; i < nx; i += 23) {
      const Cplx sigma(res.re_axis[i], res.im_axis[j]);
      const Cplx wxp = cx.eval(sigma + 3e-4).w_raw;
      const Cplx wxm = cx.eval(sigma - 3e-4).w_raw;
      const Cplx wyp = cx.eval(sigma + Cplx(0, 3e-4)).w_raw;
      const Cplx wym = cx.eval(sigma - Cplx(0, 3e-4)).w_raw;
      const Cplx wx = (wxp - wxm) / 6e-4;
      const Cplx wy = (wyp - wym) / 6e-4;
      const double rel = std::abs(wy - Cplx(0, 1) * wx) /
                         (std::abs(wx) + std::abs(wy) + 1e-300);
      worst = std::max(worst, rel);
    }
  }
  res.max_cr_residual = worst;
  return res;
}

}  // namespace sdsform
