#!/usr/bin/env python3
"""Symbolic/numeric verification of the Kerr-de Sitter Maxwell pair.

Boyer-Lindquist chart (t, r, theta, phi), parameters (M, a, Lambda):

  Delta_r  = (r^2+a^2)(1 - Lambda r^2/3) - 2 M r
  Delta_th = 1 + (Lambda a^2/3) cos^2 th
  rho^2    = r^2 + a^2 cos^2 th
  chi      = 1 + Lambda a^2/3

  ds^2 = Delta_r/(chi^2 rho^2) (dt - a sin^2 th dphi)^2
       - Delta_th sin^2 th/(chi^2 rho^2) (a dt - (r^2+a^2) dphi)^2
       - rho^2/Delta_r dr^2 - rho^2/Delta_th dth^2

Checks (M, a, Lambda symbolic; zero tests by exact cancellation when cheap,
else 30-digit evaluation at random rational points):

  1. det g = -rho^4 sin^2 th / chi^4
  2. u1 = F_TR (dt - a sin^2 dphi)^dr + F_ThPh sin th dth^(a dt - (r^2+a^2) dphi),
     F_TR = (r^2 - a^2 cos^2)/rho^4, F_ThPh = 2 a r cos th/rho^4,
     satisfies d u1 = 0 and div u1 = 0
  3. u2 = star u1 satisfies the same
  4. frozen numeric values at (M=1, a=1/10, Lambda=3/100, r=4, th=1)

Run:  python3 kds_maxwell_check.py
"""

import itertools
import random

import sympy as sp

t, r, th, ph = sp.symbols('t r theta phi')
M, a, L = sp.symbols('M a Lambda', positive=True)
X = (t, r, th, ph)

ct, st = sp.cos(th), sp.sin(th)
Dr = (r**2 + a**2) * (1 - L * r**2 / 3) - 2 * M * r
Dth = 1 + (L * a**2 / 3) * ct**2
rho2 = r**2 + a**2 * ct**2
chi = 1 + L * a**2 / 3

e1 = [sp.Integer(1), 0, 0, -a * st**2]           # dt - a sin^2 dphi
e2 = [a, 0, 0, -(r**2 + a**2)]                   # a dt - (r^2+a^2) dphi

g = sp.zeros(4, 4)
for i in (0, 3):
    for j in (0, 3):
        g[i, j] = sp.together(Dr / (chi**2 * rho2) * e1[i] * e1[j]
                              - Dth * st**2 / (chi**2 * rho2) * e2[i] * e2[j])
g[1, 1] = -rho2 / Dr
g[2, 2] = -rho2 / Dth

sqg = rho2 * st / chi**2


def probe_points(k=8, seed=7):
    rng = random.Random(seed)
    for _ in range(k):
        yield {M: sp.Rational(rng.randint(2, 9), 7),
               a: sp.Rational(rng.randint(1, 9), 13),
               L: sp.Rational(rng.randint(1, 9), 97),
               r: sp.Rational(rng.randint(11, 39), 5),
               th: sp.Rational(rng.randint(2, 9), 7),
               t: 0, ph: 0}


def is_zero(expr):
    for P in probe_points():
        v = complex(sp.N(expr.subs(P), 30))
        if abs(v) > 1e-15:
            return False
    return True


def main():
    # block inverse: (t,phi) 2x2 plus diagonal r, theta
    detB = sp.cancel(sp.together(g[0, 0] * g[3, 3] - g[0, 3]**2))
    ginv = sp.zeros(4, 4)
    ginv[0, 0] = g[3, 3] / detB
    ginv[3, 3] = g[0, 0] / detB
    ginv[0, 3] = ginv[3, 0] = -g[0, 3] / detB
    ginv[1, 1] = -Dr / rho2
    ginv[2, 2] = -Dth / rho2

    detg = detB * g[1, 1] * g[2, 2]
    print('det check:')
    print('  det g + rho^4 sin^2/chi^4 == 0 :',
          is_zero(detg + rho2**2 * st**2 / chi**4))
    print('  block-inverse sanity (g.ginv == id):',
          all(is_zero(sum(g[i, k] * ginv[k, j] for k in range(4))
                      - (1 if i == j else 0))
              for i in range(4) for j in range(4)))

    F_TR = (r**2 - a**2 * ct**2) / rho2**2
    F_TP = 2 * a * r * ct / rho2**2
    comp1 = {
        (0, 1): F_TR,
        (1, 3): a * st**2 * F_TR,
        (0, 2): -a * st * F_TP,
        (2, 3): -(r**2 + a**2) * st * F_TP,
    }

    def getc(c, i, j):
        if i == j:
            return sp.Integer(0)
        if (i, j) in c:
            return c[(i, j)]
        if (j, i) in c:
            return -c[(j, i)]
        return sp.Integer(0)

    def d2(c):
        out = {}
        for i, j, k in itertools.combinations(range(4), 3):
            out[(i, j, k)] = (sp.diff(getc(c, j, k), X[i])
                              - sp.diff(getc(c, i, k), X[j])
                              + sp.diff(getc(c, i, j), X[k]))
        return out

    def raise2(c):
        out = {}
        for i, j in itertools.combinations(range(4), 2):
            val = sp.Integer(0)
            for aa in range(4):
                for bb in range(4):
                    if ginv[i, aa] == 0 or ginv[j, bb] == 0:
                        continue
                    val += ginv[i, aa] * ginv[j, bb] * getc(c, aa, bb)
            out[(i, j)] = val
        return out

    def div2(c):
        up = raise2(c)
        out = []
        for nu in range(4):
            val = sp.Integer(0)
            for m in range(4):
                val += sp.diff(sqg * getc(up, m, nu), X[m])
            out.append(val / sqg)
        return out

    def star2(c):
        up = raise2(c)
        out = {}
        for J in itertools.combinations(range(4), 2):
            val = sp.Integer(0)
            for A in itertools.combinations(range(4), 2):
                full = J + A
                if len(set(full)) != 4:
                    continue
                s = sp.LeviCivita(*full)
                val += s * getc(up, *A)
            out[J] = sp.cancel(sp.together(sqg * val))
        return out

    print('u1 closed:')
    for k3, v in d2(comp1).items():
        print(f'  (du1)_{k3} == 0 :', is_zero(v))
    print('u1 co-closed:')
    for nu, v in enumerate(div2(comp1)):
        print(f'  (div u1)^{X[nu]} == 0 :', is_zero(v))

    print('u2 = star u1 components (cancelled):')
    comp2 = star2(comp1)
    comp2 = {k: sp.simplify(v) for k, v in comp2.items()}
    for k, v in comp2.items():
        if v != 0:
            print(f'  u2_{k} = {sp.sstr(v)}')

    print('u2 closed:')
    for k3, v in d2(comp2).items():
        print(f'  (du2)_{k3} == 0 :', is_zero(v))
    print('u2 co-closed:')
    for nu, v in enumerate(div2(comp2)):
        print(f'  (div u2)^{X[nu]} == 0 :', is_zero(v))

    print('frozen values at (M=1, a=1/10, Lambda=3/100, r=4, th=1):')
    P = {M: 1, a: sp.Rational(1, 10), L: sp.Rational(3, 100),
         r: 4, th: 1, t: 0, ph: 0}
    for lbl, e in (('Delta_r', Dr), ('Delta_th', Dth), ('rho^2', rho2),
                   ('chi', chi), ('sq|g|', sqg),
                   ('F_TR', F_TR), ('F_ThPh', F_TP)):
        print(f'  {lbl:8s} = {sp.N(e.subs(P), 20)}')
    for k in ((0, 1), (1, 3), (0, 2), (2, 3)):
        print(f'  u1_{k} = {sp.N(comp1[k].subs(P), 20)}')
    for k, v in comp2.items():
        if v != 0:
            print(f'  u2_{k} = {sp.N(v.subs(P), 20)}')
    print('metric at the point:')
    for i in range(4):
        for j in range(i, 4):
            if g[i, j] != 0:
                print(f'  g[{i}{j}] = {sp.N(g[i, j].subs(P), 20)}')


if __name__ == '__main__':
    main()
