#!/usr/bin/env python3
"""High-precision reference values for the geometry / zero-mode / trapping
tests: horizon radii, surface-gravity scales, trapping frequencies, the
matched one-form coefficient vectors and the n = 4 gap threshold.

Everything is computed with mpmath at 50 digits and printed in a form that
can be pasted into C++ tests as frozen expected values.

Run:  python3 horizon_roots.py
"""

import mpmath as mp

mp.mp.dps = 50


def mu_fn(n, M, lam):
    return lambda r: 1 - 2 * M / r**(n - 3) - lam * r**2


def horizons(n, M, lam):
    """event horizon r-, cosmological horizon r+ (0 < r- < r+)."""
    mu = mu_fn(n, M, lam)
    rp_trap = ((n - 1) * M)**(mp.mpf(1) / (n - 3))
    # mu(rp_trap) > 0 in the nondegenerate range; bracket outward
    rminus = mp.findroot(mu, [mp.mpf('1e-8') + 0, rp_trap], solver='bisect')
    rupper = mp.sqrt(2 / lam)
    rplus = mp.findroot(mu, [rp_trap, rupper], solver='bisect')
    return rminus, rplus


def report(n, M, lam):
    mu = mu_fn(n, M, lam)
    rm, rp = horizons(n, M, lam)
    dmu = lambda r: mp.diff(mu, r)
    bplus = -2 / dmu(rp)
    bminus = 2 / dmu(rm)
    rtrap = ((n - 1) * M)**(mp.mpf(1) / (n - 3))
    mutil = mu(rtrap) / rtrap**2
    rad = (n - 1) / (1 - (n - 1) * rtrap**2 * lam / (n - 3))
    nu = 2 * rtrap * mp.sqrt(rad)
    print(f'n={n} M={M} lam={lam}')
    print(f'  r-      = {mp.nstr(rm, 30)}')
    print(f'  r+      = {mp.nstr(rp, 30)}')
    print(f'  mu(r-)  = {mp.nstr(mu(rm), 5)}   mu(r+) = {mp.nstr(mu(rp), 5)}')
    print(f'  beta-   = {mp.nstr(bminus, 30)}')
    print(f'  beta+   = {mp.nstr(bplus, 30)}')
    print(f'  r_p     = {mp.nstr(rtrap, 30)}')
    print(f'  mutil(r_p) = {mp.nstr(mutil, 30)}')
    print(f'  formula (n-3)/((n-1) r_p^2) - lam = '
          f'{mp.nstr((n - 3) / ((n - 1) * rtrap**2) - lam, 30)}')
    print(f'  nu_min  = {mp.nstr(nu, 30)}')
    return rm, rp


def matched_oneform(n, M, lam, f1_rm, f1_rp):
    """Solve for (f11, f12, f21, f22) with f1 = f11 r + f12 r^{2-n},
    f2 = f21 + f22 r^{3-n}, given boundary values of f1 and the horizon
    matching f2(r-) = f1(r-), f2(r+) = -f1(r+)."""
    rm, rp = horizons(n, M, lam)
    A = mp.matrix([
        [rm, rm**(2 - n), 0, 0],
        [rp, rp**(2 - n), 0, 0],
        [0, 0, 1, rm**(3 - n)],
        [0, 0, 1, rp**(3 - n)],
    ])
    b = mp.matrix([f1_rm, f1_rp, f1_rm, -f1_rp])
    x = mp.lu_solve(A, b)
    return x, rm, rp


def main():
    print('== horizons, surface gravity scales, trapping ==')
    rm4, rp4 = report(4, 1, mp.mpf('0.01'))
    report(5, 1, mp.mpf('0.05'))
    report(6, 1, mp.mpf('0.002'))

    print('== nondegeneracy boundary checks ==')
    for n, M, lam in ((4, 1, mp.mpf('0.01')), (5, 1, mp.mpf('0.05')),
                      (6, 1, mp.mpf('0.002'))):
        lhs = M**2 * lam**(n - 3)
        rhs = mp.mpf((n - 3))**(n - 3) / mp.mpf((n - 1))**(n - 1)
        print(f'  n={n}: M^2 lam^(n-3) = {mp.nstr(lhs, 12)} '
              f'< {mp.nstr(rhs, 12)} : {lhs < rhs}')

    print('== n=4 gap threshold (r_p^2 lam = 1/12 with M=1 -> lam = 1/108) ==')
    lam_star = mp.mpf(1) / 108
    rtrap = 3
    print(f'  lam* = {mp.nstr(lam_star, 30)}')
    print(f'  r_p^2 lam* = {mp.nstr(rtrap**2 * lam_star, 30)}')
    nu = 2 * rtrap * mp.sqrt(3 / (1 - 3 * rtrap**2 * lam_star))
    print(f'  nu_min(lam*) = {mp.nstr(nu, 30)}  vs 4 r_p = {4 * rtrap}')
    print(f'  nu_min/2 - 2 r_p at lam* = {mp.nstr(nu / 2 - 2 * rtrap, 8)}')

    print('== matched one-form coefficients, n=4 M=1 lam=0.01 ==')
    for name, f1m, f1p in (('u_plus  (f1: 0 at r-, 1 at r+)', 0, 1),
                           ('u_minus (f1: 1 at r-, 0 at r+)', 1, 0)):
        x, rm, rp = matched_oneform(4, 1, mp.mpf('0.01'), f1m, f1p)
        print(f'  {name}:')
        for lbl, v in zip(('f11', 'f12', 'f21', 'f22'), x):
            print(f'    {lbl} = {mp.nstr(v, 30)}')
    det = (rp4 / rm4)**(2 - 4) + 1
    print(f'  H1 determinant (r+/r-)^(2-n) + 1 = {mp.nstr(det, 30)}')

    print('== spec spot values ==')
    print(f'  lambda_small(4, 0.06) = {mp.nstr(mp.mpf("0.12") / 6, 12)}')
    mu = mu_fn(4, 1, mp.mpf('0.01'))
    print(f'  mu(n=4,M=1,lam=0.01; r=3) = {mp.nstr(mu(3), 20)}')
    print(f'  nu_min spec form 6*sqrt(3/0.73) = '
          f'{mp.nstr(6 * mp.sqrt(3 / mp.mpf("0.73")), 30)}')


if __name__ == '__main__':
    main()
