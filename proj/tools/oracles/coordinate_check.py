#!/usr/bin/env python3
"""Coordinate tensor check of the block operator displays at n = 4.

Builds g = mu dt^2 - (mu^{-1} dr^2 + r^2 dS^2) on (t, r, theta, phi) with
generic mu(r), implements d, delta (via the divergence of the raised
tensor) and the Hodge star from scratch, and compares them against the 4x4
block displays (imported from blockops_identity.py) on sector states in
every representable degree.  Also:

  * fixes the sign of the displayed delta relative to the divergence form,
  * applies the true coordinate box = d delta + delta d to the two static
    de Sitter K^1 candidates (mu = 1 - r^2),
  * prints Hodge star factors for 1, omega, dt^dr and friends,
  * determines the slot sign pattern making <d u, v> = <u, delta v> for the
    r^{n-2} dr pairing with fiber weights r^{-2 deg} (bilinear, sigma vs
    -sigma so the time factors cancel).

Run:  python3 coordinate_check.py
"""

import itertools
import sympy as sp

import blockops_identity as bi

th, ph = sp.symbols('theta phi')
t, r, sig = bi.t, bi.r, bi.sig  # share symbols with the block module
X = (t, r, th, ph)
mu = sp.Function('mu')(r)
alpha = sp.sqrt(mu)
Y = sp.cos(th)

g = sp.diag(mu, -1 / mu, -r**2, -r**2 * sp.sin(th)**2)
ginv = g.inv()
sqg = r**2 * sp.sin(th)  # sqrt|det g|, independent of mu


def norm_key(idx):
    """sorted tuple + permutation sign (sign 0 if an index repeats)."""
    if len(set(idx)) != len(idx):
        return None, 0
    s = 1
    idx = list(idx)
    for i in range(len(idx)):
        for j in range(len(idx) - 1 - i):
            if idx[j] > idx[j + 1]:
                idx[j], idx[j + 1] = idx[j + 1], idx[j]
                s = -s
    return tuple(idx), s


class Form:
    def __init__(self, p, comp=None):
        self.p = p
        self.c = dict(comp or {})

    def get(self, idx):
        k, s = norm_key(idx)
        if s == 0:
            return sp.Integer(0)
        return s * self.c.get(k, sp.Integer(0))

    def set(self, idx, val):
        k, s = norm_key(idx)
        if s == 0:
            return
        self.c[k] = s * val

    def add(self, idx, val):
        k, s = norm_key(idx)
        if s == 0:
            return
        self.c[k] = self.c.get(k, sp.Integer(0)) + s * val

    def simplify(self):
        self.c = {k: sp.simplify(v) for k, v in self.c.items()}
        self.c = {k: v for k, v in self.c.items() if v != 0}
        return self


def d(u):
    out = Form(u.p + 1)
    for k in itertools.combinations(range(4), u.p + 1):
        val = sp.Integer(0)
        for pos in range(u.p + 1):
            rest = k[:pos] + k[pos + 1:]
            val += (-1)**pos * sp.diff(u.get(rest), X[k[pos]])
        out.set(k, val)
    return out.simplify()


def raise_all(u):
    out = {}
    for k in itertools.combinations(range(4), u.p):
        val = sp.Integer(0)
        for kk in itertools.permutations(range(4), u.p):
            prod = sp.Integer(1)
            for a, b in zip(k, kk):
                prod *= ginv[a, b]
            val += prod * u.get(kk)
        out[k] = sp.simplify(val)
    return out


def delta_div(u):
    """(div u)^{nu...} = (1/sqg) d_mu (sqg u^{mu nu...}), then lower.

    The displayed delta equals MINUS this (checked below).
    """
    up = raise_all(u)
    raised = Form(u.p - 1)
    for k in itertools.combinations(range(4), u.p - 1):
        val = sp.Integer(0)
        for m in range(4):
            kk, s = norm_key((m,) + k)
            if s == 0:
                continue
            val += sp.diff(sqg * s * up[kk], X[m]) / sqg
        raised.set(k, val)
    low = Form(u.p - 1)
    for k in itertools.combinations(range(4), u.p - 1):
        val = sp.Integer(0)
        for kk in itertools.permutations(range(4), u.p - 1):
            prod = sp.Integer(1)
            for a, b in zip(k, kk):
                prod *= g[a, b]
            val += prod * raised.get(kk)
        low.set(k, val)
    return low.simplify()


def star(u):
    """(star u)_J = sqg * eps_{J A} u^A summed over increasing A."""
    up = raise_all(u)
    q = 4 - u.p
    out = Form(q)
    for J in itertools.combinations(range(4), q):
        val = sp.Integer(0)
        for A in itertools.combinations(range(4), u.p):
            _, s = norm_key(J + A)
            if s == 0:
                continue
            val += s * up[A]
        out.set(J, sqg * val)
    return out.simplify()


# ---- slot <-> coordinate translation, n = 4

def carrier_form(sec_name, k):
    if sec_name == 'const' and k == 0:
        return Form(0, {(): sp.Integer(1)})
    if sec_name == 'harm' and k == 0:
        return Form(0, {(): Y})
    if sec_name == 'harm' and k == 1:
        return Form(1, {(2,): sp.diff(Y, th)})
    if sec_name == 'omega' and k == 2:
        return Form(2, {(2, 3): sp.sin(th)})
    return None


def wedge_pre(pre, coeff, u):
    """coeff * dx^{pre} ^ u for a strictly increasing prefix tuple."""
    out = Form(u.p + len(pre))
    for k, v in u.c.items():
        out.add(pre + k, coeff * v)
    return out


def to_coord(sec_name, p, profiles):
    """profiles = [TT, TN, NT, NN] radial exprs; returns the coordinate form
    with the e^{-i sig t} time factor attached."""
    et = sp.exp(-sp.I * sig * t)
    degs = bi.slot_degrees(p)
    out = Form(p)
    parts = [((), sp.Integer(1)),           # TT
             ((1,), 1 / alpha),             # alpha^{-1} dr ^ .
             ((0,), alpha),                 # alpha dt ^ .
             ((0, 1), sp.Integer(1))]       # alpha dt ^ alpha^{-1} dr ^ .
    for prof, q, (pre, w) in zip(profiles, degs, parts):
        if prof == 0:
            continue
        car = carrier_form(sec_name, q)
        if car is None:
            raise ValueError(f'profile set on unrepresentable slot {sec_name} {q}')
        piece = wedge_pre(pre, w * prof * et, car)
        for k, v in piece.c.items():
            out.add(k, v)
    return out


def diff_forms(a, b, subs=None):
    out = Form(a.p)
    for k in set(a.c) | set(b.c):
        v = a.get(k) - b.get(k)
        if subs:
            v = v.subs(subs)
        out.c[k] = v
    return out.simplify()


def main():
    global g, ginv
    all_ok = True
    mu_gen = mu
    subE = [(bi.E, 2)]  # Y = cos theta has Delta_S Y = 2 Y on S^2

    sect = {'const': bi.sector_constant(),
            'harm': bi.sector_harmonic(),
            'omega': bi.sector_omega(4)}

    print('display vs coordinate operators (n = 4, generic mu):')
    for name, sec in sect.items():
        for p in range(0, 5):
            prof = bi.valid_section(sec, 4, p)
            if all(x == 0 for x in prof):
                continue
            uc = to_coord(name, p, prof)
            # d
            dprof = [sp.simplify(x.subs(subE)) for x in bi.apply_d(sec, 4, mu_gen, p, prof)]
            lhs = to_coord(name, p + 1, dprof) if p + 1 <= 4 else Form(p + 1)
            rhs = d(uc)
            res = diff_forms(lhs, rhs)
            okd = not res.c
            print(f'  {name} p={p} d  : {"OK" if okd else res.c}')
            all_ok &= okd
            # delta (display == -divergence)
            if p >= 1:
                sprof = [sp.simplify(x.subs(subE)) for x in bi.apply_delta(sec, 4, mu_gen, p, prof)]
                lhs = to_coord(name, p - 1, sprof)
                rhs = delta_div(uc)
                res = diff_forms(lhs, rhs, None)
                # expect lhs + rhs = 0
                ssum = Form(p - 1, {k: sp.simplify(lhs.get(k) + rhs.get(k))
                                    for k in set(lhs.c) | set(rhs.c)}).simplify()
                oks = not ssum.c
                print(f'  {name} p={p} del: {"OK (== -divergence)" if oks else ssum.c}')
                all_ok &= oks

    # ---- true coordinate box on the de Sitter K^1 candidates
    print('de Sitter K^1 via coordinate box (mu = 1 - r^2):')
    mu_ds = 1 - r**2
    g_bak, gi_bak = g, ginv
    g = sp.diag(mu_ds, -1 / mu_ds, -r**2, -r**2 * sp.sin(th)**2)
    ginv = g.inv()
    for lab, dtc in (('dt-coeff 1', sp.Integer(1)),
                     ('dt-coeff alpha^{-1}', (1 - r**2)**sp.Rational(-1, 2))):
        u = Form(1, {(0,): dtc, (1,): -r / (1 - r**2)})
        box = Form(1)
        dd_ = delta_div(d(u))
        sd_ = d(delta_div(u))
        for k in itertools.combinations(range(4), 1):
            box.set(k, dd_.get(k) + sd_.get(k))
        box.simplify()
        print(f'  box({lab}):', box.c if box.c else 'all zero')
    g, ginv = g_bak, gi_bak

    # ---- star factors
    print('Hodge star factors (eps_{t r th ph} = +1, sqrt|g| = r^2 sin th):')
    om = Form(2, {(2, 3): sp.sin(th)})
    dtdr = Form(2, {(0, 1): sp.Integer(1)})
    print('  star 1         :', star(Form(0, {(): sp.Integer(1)})).c)
    print('  star omega     :', star(om).c)
    print('  star dt^dr     :', star(dtdr).c)
    print('  star star omega:', star(star(om)).c)
    print('  star(r^-2 dt^dr):', star(Form(2, {(0, 1): r**-2})).c)

    # ---- pairing sign pattern for adjointness of the displayed d, delta
    print('adjointness pairing (weights r^{n-2-2 deg}, sigma vs -sigma):')
    mu_poly = (1 + r**2 / 5)**2  # alpha polynomial so integrals close
    bump = (r - 2)**2 * (3 - r)**2
    sec = bi.sector_harmonic()

    def pairing(p, a, b, signs):
        degs = bi.slot_degrees(p)
        cn = {0: 1, 1: 2}  # carrier norms: Y -> 1, dY -> E = 2
        tot = sp.Integer(0)
        for s_, ai, bi_, q in zip(signs, a, b, degs):
            if ai == 0 or bi_ == 0:
                continue
            tot += s_ * cn[q] * sp.integrate(
                sp.expand(r**2 * r**(-2 * q) * ai * bi_), (r, 2, 3))
        return sp.simplify(sp.Integer(-1)**p * tot)

    polys_u = [1, r, r + 1, r**2]
    polys_v = [2, r - 1, r**2 + 1, 3 * r]
    signs = (1, 1, -1, -1)
    for p in (0, 1, 2):
        degs = bi.slot_degrees(p)
        uprof = [bump * pu if (0 <= q <= 2 and sec.has(q)) else 0
                 for pu, q in zip(polys_u, degs)]
        degs1 = bi.slot_degrees(p + 1)
        vprof = [bump * pv if (0 <= q <= 2 and sec.has(q)) else 0
                 for pv, q in zip(polys_v, degs1)]
        duu = [sp.simplify(x.subs(bi.E, 2)) for x in bi.apply_d(sec, 4, mu_poly, p, uprof)]
        dv = [sp.simplify(x.subs(bi.E, 2).subs(sig, -sig))
              for x in bi.apply_delta(sec, 4, mu_poly, p + 1, vprof)]
        lhs = pairing(p + 1, duu, vprof, signs)
        rhs = pairing(p, uprof, dv, signs)
        res = sp.simplify(lhs - rhs)
        ok = res == 0
        print(f'  p={p}: <d u, v> - <u, del v> = {res} {"OK" if ok else "FAIL"}')
        all_ok &= ok

    print('ALL OK' if all_ok else 'FAILURES PRESENT')


if __name__ == '__main__':
    main()
