#!/usr/bin/env python3
"""Symbolic consistency check for the 4x4 block operators on warped products
g = mu dt^2 - (mu^{-1} dr^2 + r^2 dOmega^2).

Forms are decomposed as
    u = u_TT + alpha^{-1} dr ^ u_TN + alpha dt ^ u_NT + alpha dt ^ alpha^{-1} dr ^ u_NN,
alpha = sqrt(mu), and within a closed angular sector every slot is a radial
profile times a fixed carrier form on S^{n-2}.  This script verifies, with
mu(r) kept generic,

  1. delta_{p+1} d_p + d_{p-1} delta_p  ==  box_p   (box_p = -r^{-2} * displayed sum)
  2. d_{p+1} d_p == 0 and delta_{p-1} delta_p == 0
  3. annihilation of the closed-form stationary states (1-form family
     f1 in {r, r^{2-n}}, f2 in {1, r^{3-n}}; omega; r^{-(n-2)} dt^dr;
     r^{n-2} dt^dr^omega)
  4. the static de Sitter K^1 generator: which of the two candidate
     dt-coefficients (1 vs alpha^{-1}) is annihilated by box_1 when
     mu = 1 - r^2.

Run:  python3 blockops_identity.py
"""

import sympy as sp

r, t, E, sig = sp.symbols('r t E sigma', positive=True)
I = sp.I


def make_ops(n, mu):
    alpha = sp.sqrt(mu)

    def pstar(q, f):
        # partial^*_{r,q} = -alpha r^{-(n-2)} r^{2q} d/dr r^{-2q} r^{n-2}
        return sp.simplify(-alpha * r**(-(n - 2)) * r**(2 * q)
                           * sp.diff(r**(-2 * q) * r**(n - 2) * f, r))

    def dt_act(f):
        return -I * sig * f

    return alpha, pstar, dt_act


class Sector:
    """Scalar actions of d_S, delta_S, Delta_S on the sector carriers.

    carriers: dict degree -> True for representable sphere degrees.
    d[k]: multiplier carrier_k -> carrier_{k+1}; dl[k]: carrier_k -> carrier_{k-1};
    lap[k]: Hodge Laplacian eigenvalue on carrier_k.
    """

    def __init__(self, carriers, d, dl, lap):
        self.carriers = carriers
        self._d, self._dl, self._lap = d, dl, lap

    def has(self, k):
        return k in self.carriers

    def dS(self, k):
        return self._d.get(k, 0)

    def delS(self, k):
        return self._dl.get(k, 0)

    def lap(self, k):
        return self._lap.get(k, 0)


def sector_constant():
    return Sector({0: True}, {}, {}, {})


def sector_harmonic():
    # carriers Y (deg 0) and dY (deg 1); Delta_S Y = E Y
    return Sector({0: True, 1: True}, {0: 1}, {1: E}, {0: E, 1: E})


def sector_omega(n):
    return Sector({n - 2: True}, {}, {}, {})


def slot_degrees(p):
    return (p, p - 1, p - 1, p - 2)


def valid_section(sec, n, p):
    """A section with generic radial profiles in every representable slot."""
    out = []
    for i, q in enumerate(slot_degrees(p)):
        if 0 <= q <= n - 2 and sec.has(q):
            out.append(sp.Function(f'f{i+1}')(r))
        else:
            out.append(sp.Integer(0))
    return out


def apply_d(sec, n, mu, p, u):
    alpha, pstar, dt = make_ops(n, mu)
    u1, u2, u3, u4 = u
    return [
        sp.Integer(0) + sec.dS(p) * u1,
        alpha * sp.diff(u1, r) - sec.dS(p - 1) * u2,
        dt(u1) / alpha - sec.dS(p - 1) * u3,
        dt(u2) / alpha - sp.diff(alpha * u3, r) + sec.dS(p - 2) * u4,
    ]


def apply_delta(sec, n, mu, p, u):
    alpha, pstar, dt = make_ops(n, mu)
    u1, u2, u3, u4 = u
    return [
        -r**-2 * sec.delS(p) * u1 - pstar(p - 1, alpha * u2) / alpha - dt(u3) / alpha,
        r**-2 * sec.delS(p - 1) * u2 - dt(u4) / alpha,
        r**-2 * sec.delS(p - 1) * u3 + pstar(p - 2, u4),
        -r**-2 * sec.delS(p - 2) * u4,
    ]


def apply_box(sec, n, mu, p, u):
    """box_p = -r^{-2} (M1 + M2 + M3), the displayed three-summand form."""
    alpha, pstar, dt = make_ops(n, mu)
    mup = sp.diff(mu, r)
    u1, u2, u3, u4 = u
    m1 = [
        sec.lap(p) * u1 - 2 * alpha * r * sec.dS(p - 1) * u2,
        -2 * alpha / r * sec.delS(p) * u1 + sec.lap(p - 1) * u2
        - r**2 / mu * mup * dt(u3),
        -r**2 / mu * mup * dt(u2) + sec.lap(p - 1) * u3
        - 2 * alpha * r * sec.dS(p - 2) * u4,
        -2 * alpha / r * sec.delS(p - 1) * u3 + sec.lap(p - 2) * u4,
    ]
    m2 = [
        r**2 / alpha * pstar(p, alpha**2 * sp.diff(u1, r)),
        r**2 * alpha * sp.diff(pstar(p - 1, alpha * u2) / alpha, r),
        r**2 * pstar(p - 1, sp.diff(alpha * u3, r)),
        r**2 * sp.diff(alpha * pstar(p - 2, u4), r),
    ]
    m3 = [r**2 / mu * dt(dt(ui)) for ui in (u1, u2, u3, u4)]
    return [sp.simplify(-(a + b + c) / r**2) for a, b, c in zip(m1, m2, m3)]


def check_zero(label, vec):
    bad = [sp.simplify(sp.expand(v)) for v in vec]
    ok = all(v == 0 for v in bad)
    print(f'  {label}: {"OK" if ok else "FAIL " + str(bad)}')
    return ok


def main():
    mu_gen = sp.Function('mu')(r)
    all_ok = True

    for n in (4, 5, 6):
        sectors = {
            'const': sector_constant(),
            'harm': sector_harmonic(),
            'omega': sector_omega(n),
        }
        print(f'n = {n}')
        for name, sec in sectors.items():
            for p in range(0, n + 1):
                u = valid_section(sec, n, p)
                if all(x == 0 for x in u):
                    continue
                du = apply_d(sec, n, mu_gen, p, u)
                ddu = apply_d(sec, n, mu_gen, p + 1, du)
                all_ok &= check_zero(f'{name} p={p} d.d', ddu)
                su = apply_delta(sec, n, mu_gen, p, u)
                ssu = apply_delta(sec, n, mu_gen, p - 1, su)
                all_ok &= check_zero(f'{name} p={p} del.del', ssu)
                comp = [a + b for a, b in zip(
                    apply_delta(sec, n, mu_gen, p + 1, du),
                    apply_d(sec, n, mu_gen, p - 1, su))]
                box = apply_box(sec, n, mu_gen, p, u)
                all_ok &= check_zero(f'{name} p={p} d.del+del.d-box',
                                     [a - b for a, b in zip(comp, box)])

    # stationary states, sigma = 0 (substitute sig -> 0)
    print('stationary states (generic mu)')
    for n in (4, 5, 6):
        alpha = sp.sqrt(mu_gen)
        sec = sector_constant()
        for f1 in (r, r**(2 - n)):
            for f2 in (1, r**(3 - n)):
                u = [0, f1 / alpha, f2 / alpha, 0]
                box = [b.subs(sig, 0) for b in apply_box(sec, n, mu_gen, 1, u)]
                all_ok &= check_zero(f'n={n} oneform f1={f1} f2={f2}', box)
        # omega with constant profile, degree n-2
        so = sector_omega(n)
        u = [sp.Integer(1), 0, 0, 0]
        box = [b.subs(sig, 0) for b in apply_box(so, n, mu_gen, n - 2, u)]
        all_ok &= check_zero(f'n={n} omega const', box)
        dres = apply_d(so, n, mu_gen, n - 2, u)
        sres = apply_delta(so, n, mu_gen, n - 2, u)
        all_ok &= check_zero(f'n={n} omega d', [x.subs(sig, 0) for x in dres])
        all_ok &= check_zero(f'n={n} omega del', [x.subs(sig, 0) for x in sres])
        # r^{-(n-2)} dt^dr: NN slot of a 2-form, constant sector
        u = [0, 0, 0, r**(-(n - 2))]
        box = [b.subs(sig, 0) for b in apply_box(sec, n, mu_gen, 2, u)]
        all_ok &= check_zero(f'n={n} dt^dr 2-form', box)
        dres = [x.subs(sig, 0) for x in apply_d(sec, n, mu_gen, 2, u)]
        sres = [x.subs(sig, 0) for x in apply_delta(sec, n, mu_gen, 2, u)]
        all_ok &= check_zero(f'n={n} dt^dr d', dres)
        all_ok &= check_zero(f'n={n} dt^dr del', sres)
        # volume-type n-form r^{n-2} dt^dr^omega: NN slot degree n-2
        u = [0, 0, 0, r**(n - 2)]
        box = [b.subs(sig, 0) for b in apply_box(so, n, mu_gen, n, u)]
        all_ok &= check_zero(f'n={n} volume n-form', box)

    # static de Sitter K^1 candidates: mu = 1 - r^2, n = 4
    print('de Sitter K^1 candidates (mu = 1 - r^2, n = 4)')
    mu_ds = 1 - r**2
    alpha = sp.sqrt(mu_ds)
    sec = sector_constant()
    for label, f2 in (('f2 = 1 (dt coeff 1)', sp.Integer(1)),
                      ('f2 = alpha^{-1} (dt coeff alpha^{-1})', 1 / alpha)):
        u = [0, -r / alpha, f2 / alpha, 0]
        box = [sp.simplify(b.subs(sig, 0)) for b in apply_box(sec, 4, mu_ds, 1, u)]
        print(f'  candidate -alpha^-2 r dr + ..., {label}:',
              ['0' if sp.simplify(b) == 0 else sp.sstr(sp.simplify(b)) for b in box])

    print('ALL OK' if all_ok else 'FAILURES PRESENT')


if __name__ == '__main__':
    main()
