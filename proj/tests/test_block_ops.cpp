/* test_block_ops.cpp
 *
 * Block operators d, delta, box on split form sections: the weighted
 * radial derivative, the cochain identities d^2 = 0 and delta^2 = 0,
 * the composition identity d delta + delta d = box, adjointness of d
 * and delta under the graded pairing, horizon matching matrices, and
 * annihilation of the closed-form stationary states.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "sdsform/block_ops.hpp"
#include "sdsform/fit.hpp"
#include "sdsform/zero_modes.hpp"

using namespace sdsform;

namespace {

/* smooth field with compact support in (a,b), deterministic per seed */
VecC smooth_field(const RadialGrid& g, double a, double b, int seed) {
  VecC f(g.size());
  for (int i = 0; i < g.size(); ++i) {
    double x = (g.r[i] - a) / (b - a);
    double w = std::sin(M_PI * x);
    w = w * w;
    f[i] = w * (std::sin((2 + seed % 3) * M_PI * x + 0.3 * seed) +
                0.5 * std::cos((1 + seed % 2) * 2 * M_PI * x));
  }
  return f;
}

FormSection4 random_section(const AngularSector& sec, int p,
                            const RadialGrid& g, double a, double b,
                            int seed) {
  FormSection4 u = FormSection4::zeros(sec, p, g);
  for (int i = 0; i < 4; ++i)
    if (u.present(i)) u.slot[i] = smooth_field(g, a, b, seed + 3 * i);
  return u;
}

struct Domain {
  SdsParams p;
  double a, b;
};

Domain interior_domain(int n, double mass, double cosmo, double margin) {
  SdsParams p{n, mass, cosmo};
  HorizonData h = horizons(p);
  double gap = h.r_plus - h.r_minus;
  return {p, h.r_minus + margin * gap, h.r_plus - margin * gap};
}

}  // namespace

TEST_CASE("weighted radial derivative on closed-form inputs") {
  Domain dom = interior_domain(4, 1.0, 0.03, 0.15);
  RadialGrid g = RadialGrid::uniform(dom.a, dom.b, 129);
  RadialMetric m = RadialMetric::from_sds(dom.p);

  /* q=0, f=1 (n=4): result is exactly -2 alpha / r, because the finite
     difference of a constant vanishes identically */
  VecC ones = VecC::Ones(g.size());
  VecC out = partial_r_star(0, dom.p)(ones, g);
  for (int i = 0; i < g.size(); ++i) {
    double want = -2.0 * m.alpha(g.r[i]) / g.r[i];
    CHECK(std::abs(out[i] - want) < 1e-14);
  }

  /* q=0, f=r^{-2} (n=4): in the kernel of the continuum operator */
  VecC f(g.size());
  for (int i = 0; i < g.size(); ++i) f[i] = 1.0 / (g.r[i] * g.r[i]);
  VecC out2 = partial_r_star(0, dom.p)(f, g);
  double mx = 0;
  for (int i = 4; i < g.size() - 4; ++i) mx = std::max(mx, std::abs(out2[i]));
  CHECK(mx < 1e-5); /* h^2 truncation only */

  /* q=1, f=r (any n): f' + (n-4) f / r, check against closed form */
  VecC fr(g.size());
  for (int i = 0; i < g.size(); ++i) fr[i] = g.r[i];
  VecC out3 = partial_r_star(1, dom.p)(fr, g);
  for (int i = 4; i < g.size() - 4; ++i) {
    double want = -m.alpha(g.r[i]) * 1.0; /* n=4: -(f') = -1 times alpha */
    CHECK(std::abs(out3[i] - want) < 1e-10);
  }
}

TEST_CASE("horizon matching matrices") {
  SdsParams p{4, 1.0, 0.03};
  MatchingMatrix cm = matching_matrix(Side::minus, p);
  MatchingMatrix cp = matching_matrix(Side::plus, p);

  for (const MatchingMatrix* c : {&cm, &cp}) {
    CHECK(c->coeff[0][0] == 1.0);
    CHECK(c->alpha_pow[0][0] == 0);
    CHECK(c->coeff[1][1] == 1.0);
    CHECK(c->alpha_pow[1][1] == 1);
    CHECK(c->coeff[2][2] == 1.0);
    CHECK(c->alpha_pow[2][2] == -1);
    CHECK(c->coeff[3][3] == 1.0);
    CHECK(c->alpha_pow[3][3] == 0);
  }
  /* the off-diagonal entry carries the side-dependent sign */
  CHECK(cm.coeff[1][2] == 1.0);
  CHECK(cm.alpha_pow[1][2] == -1);
  CHECK(cp.coeff[1][2] == -1.0);
  CHECK(cp.alpha_pow[1][2] == -1);

  Eigen::Matrix4d e = cm.eval(0.5);
  CHECK(e(1, 1) == doctest::Approx(0.5));
  CHECK(e(2, 2) == doctest::Approx(2.0));
  CHECK(e(1, 2) == doctest::Approx(2.0));
  CHECK(e(0, 1) == 0.0);
}

TEST_CASE("cochain identities and the composition identity") {
  /* d^2 = 0 holds exactly in the discretization (the radial derivative
     entries cancel algebraically); delta^2 and d delta + delta d - box
     converge at the stencil order. */
  std::vector<int> dims = {4, 5, 6};
  std::vector<Cplx> sigmas = {Cplx(0, 0), Cplx(0.3, 0.4)};
  double cosmo[3] = {0.03, 0.3, 0.02};

  for (size_t di = 0; di < dims.size(); ++di) {
    int n = dims[di];
    Domain dom = interior_domain(n, 1.0, cosmo[di], 0.15);
    AngularSector sec = AngularSector::harmonic(n, 2);

    for (Cplx sig : sigmas) {
      for (int order : {2, 4}) {
        std::vector<double> hs, e_box, e_del;
        double dd_max = 0;
        for (int npts : {65, 129, 257}) {
          RadialGrid g = RadialGrid::uniform(dom.a, dom.b, npts);
          FormSection4 u =
              random_section(sec, 1, g, dom.a, dom.b, 7 * n + order);

          auto d0 = assemble_d(0, sec, dom.p, g, sig, order);
          auto d1 = assemble_d(1, sec, dom.p, g, sig, order);
          auto d2 = assemble_d(2, sec, dom.p, g, sig, order);
          auto del1 = assemble_delta(1, sec, dom.p, g, sig, order);
          auto del2 = assemble_delta(2, sec, dom.p, g, sig, order);
          auto box1 = assemble_box(1, sec, dom.p, g, sig, order);

          FormSection4 du = d1.apply(u);
          FormSection4 delu = del1.apply(u);
          dd_max = std::max(dd_max, annihilation_residual(d2, du));

          FormSection4 v =
              random_section(sec, 2, g, dom.a, dom.b, 11 * n + order);
          e_del.push_back(annihilation_residual(del1, del2.apply(v)));

          FormSection4 t1 = del2.apply(du);
          FormSection4 t2 = d0.apply(delu);
          FormSection4 bx = box1.apply(u);
          FormSection4 diff = FormSection4::zeros(sec, 1, g);
          for (int i = 0; i < 4; ++i)
            if (diff.present(i))
              diff.slot[i] = t1.slot[i] + t2.slot[i] - bx.slot[i];
          e_box.push_back(
              section_norm(diff, RadialMetric::from_sds(dom.p)));
          hs.push_back(g.h);
        }
        CHECK(dd_max < 1e-12);
        double want = order - 0.2;
        CHECK(loglog_slope(hs, e_box) > want);
        CHECK(loglog_slope(hs, e_del) > want);
      }
    }
  }
}

TEST_CASE("d and delta are adjoint under the graded pairing") {
  /* <d_sigma u, v> = <u, delta_{-sigma} v> up to truncation; the
     pairing is bilinear, so the time frequency flips sign across it */
  Domain dom = interior_domain(4, 1.0, 0.03, 0.15);
  AngularSector sec = AngularSector::harmonic(4, 2);
  Cplx sig(0.3, 0.4);

  std::vector<double> hs, errs;
  for (int npts : {65, 129, 257}) {
    RadialGrid g = RadialGrid::uniform(dom.a, dom.b, npts);
    FormSection4 u = random_section(sec, 1, g, dom.a, dom.b, 5);
    FormSection4 v = random_section(sec, 2, g, dom.a, dom.b, 13);

    auto d1 = assemble_d(1, sec, dom.p, g, sig);
    auto del2m = assemble_delta(2, sec, dom.p, g, -sig);

    Cplx lhs = graded_pairing(d1.apply(u), v);
    Cplx rhs = graded_pairing(u, del2m.apply(v));
    CHECK(std::abs(lhs) > 0.1); /* the pairing itself is not trivial */
    errs.push_back(std::abs(lhs - rhs));
    hs.push_back(g.h);
  }
  CHECK(loglog_slope(hs, errs) > 1.8);

  /* flipping to +sigma on the right breaks the identity at O(1) */
  RadialGrid g = RadialGrid::uniform(dom.a, dom.b, 129);
  FormSection4 u = random_section(sec, 1, g, dom.a, dom.b, 5);
  FormSection4 v = random_section(sec, 2, g, dom.a, dom.b, 13);
  auto d1 = assemble_d(1, sec, dom.p, g, sig);
  auto del2p = assemble_delta(2, sec, dom.p, g, sig);
  CHECK(std::abs(graded_pairing(d1.apply(u), v) -
                 graded_pairing(u, del2p.apply(v))) > 1e-2);
}

TEST_CASE("graded pairing sign structure") {
  /* degree parity prefactor (-1)^p and slot signs (+,+,-,-) */
  Domain dom = interior_domain(4, 1.0, 0.03, 0.15);
  RadialGrid g = RadialGrid::uniform(dom.a, dom.b, 65);
  AngularSector cs = AngularSector::constant(4);

  FormSection4 u0 = FormSection4::zeros(cs, 0, g);
  u0.tt().setOnes();
  Cplx p0 = graded_pairing(u0, u0);
  CHECK(p0.real() > 0); /* (+) slot, even degree */

  FormSection4 u1 = FormSection4::zeros(cs, 1, g);
  u1.tn().setOnes();
  Cplx p1tn = graded_pairing(u1, u1);
  CHECK(p1tn.real() < 0); /* odd degree flips the tn (+) slot */

  FormSection4 v1 = FormSection4::zeros(cs, 1, g);
  v1.nt().setOnes();
  Cplx p1nt = graded_pairing(v1, v1);
  CHECK(p1nt.real() > 0); /* nt slot sign (-) times (-1)^1 */
}

TEST_CASE("operator metadata") {
  Domain dom = interior_domain(4, 1.0, 0.03, 0.15);
  RadialGrid g = RadialGrid::uniform(dom.a, dom.b, 65);
  AngularSector sec = AngularSector::harmonic(4, 1);
  auto box1 = assemble_box(1, sec, dom.p, g);

  CHECK(std::string(box1.display_relation).find("-r^{-2}") !=
        std::string::npos);
  /* at least one block entry is fed by more than one displayed summand */
  bool multi = false;
  int any = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int m = box1.summand_mask[i][j];
      any |= m;
      if (m & (m - 1)) multi = true;
    }
  CHECK(any != 0);
  CHECK(multi);
  CHECK(box1.out_degree() == 1);
  auto d1 = assemble_d(1, sec, dom.p, g);
  auto del1 = assemble_delta(1, sec, dom.p, g);
  CHECK(d1.out_degree() == 2);
  CHECK(del1.out_degree() == 0);
}

TEST_CASE("annihilation of closed-form stationary states") {
  SdsParams p{4, 1.0, 0.03};
  HorizonData h = horizons(p);
  double pad = 0.02 * (h.r_plus - h.r_minus);
  RadialMetric m = RadialMetric::from_sds(p);

  /* the constant 0-form is exactly in the discrete kernel */
  RadialGrid g = RadialGrid::uniform(h.r_minus + pad, h.r_plus - pad, 129);
  FormSection4 one = section_constant_one(4, g);
  auto box0 = assemble_box(0, one.sector, p, g);
  CHECK(annihilation_residual(box0, one) < 1e-13);

  /* omega exactly, r^{-2} dt^dr at truncation order */
  auto st = stationary_2forms(p, g);
  REQUIRE(st.size() == 2);
  for (const auto& s : st) {
    auto box = assemble_box(s.state.p, s.state.sector, p, g);
    double res = annihilation_residual(box, s.state) /
                 section_norm(s.state, m);
    if (s.label == "omega")
      CHECK(res < 1e-14);
    else
      CHECK(res < 2e-4); /* 5.8e-5 measured at this resolution */
  }

  /* u_pm at truncation order, converging at h^2 */
  ZeroModeBasis zb = basis_u_pm(p);
  std::vector<double> hs, ep, em;
  for (int npts : {65, 129, 257, 513}) {
    RadialGrid gg =
        RadialGrid::uniform(h.r_minus + pad, h.r_plus - pad, npts);
    auto box1 = assemble_box(1, AngularSector::constant(4), p, gg);
    FormSection4 sp = section_u_pm(zb.u_plus, p, gg);
    FormSection4 sm = section_u_pm(zb.u_minus, p, gg);
    ep.push_back(annihilation_residual(box1, sp) / section_norm(sp, m));
    em.push_back(annihilation_residual(box1, sm) / section_norm(sm, m));
    hs.push_back(gg.h);
  }
  CHECK(ep.back() < 1e-6);
  CHECK(em.back() < 1e-4);
  CHECK(loglog_slope(hs, ep) > 1.8);
  CHECK(loglog_slope(hs, em) > 1.8);
}
