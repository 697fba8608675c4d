"""Independent reference implementations used only by the tests.

Everything here is deliberately built from first principles (Maclaurin
series in mpmath, bisection, eigenvalue quadrature nodes) so that the
package code under test shares no evaluation path with the oracles.
"""
import math

import mpmath as mp
import numpy as np

DPS = 30


def airy_series(z, derivative=False):
    """Ai and Bi at z from the Maclaurin series, 30-digit arithmetic.

    Ai = c1 f - c2 g, Bi = sqrt(3)(c1 f + c2 g) with
    f = sum z^{3k} / ((2*3)(5*6)...), g = sum z^{3k+1} / ((3*4)(6*7)...).
    Returns (Ai, Bi) or (Ai', Bi').
    """
    with mp.workdps(DPS):
        z = mp.mpc(z)
        c1 = mp.mpf(3) ** (-mp.mpf(2) / 3) / mp.gamma(mp.mpf(2) / 3)
        c2 = mp.mpf(3) ** (-mp.mpf(1) / 3) / mp.gamma(mp.mpf(1) / 3)
        z3 = z ** 3
        # f series and its derivative sum
        t = mp.mpc(1)
        f = t
        fp = mp.mpc(0)
        for k in range(0, 400):
            t = t * z3 / ((3 * k + 2) * (3 * k + 3))
            f += t
            fp += t * (3 * k + 3) / z if z != 0 else 0
            if abs(t) < mp.mpf(10) ** (-DPS - 5) * max(1, abs(f)):
                break
        # g series
        t = z
        g = t
        gp = mp.mpc(1)
        for k in range(0, 400):
            t = t * z3 / ((3 * k + 3) * (3 * k + 4))
            g += t
            gp += t * (3 * k + 4) / z if z != 0 else 0
            if abs(t) < mp.mpf(10) ** (-DPS - 5) * max(1, abs(g)):
                break
        if derivative:
            ai = c1 * fp - c2 * gp
            bi = mp.sqrt(3) * (c1 * fp + c2 * gp)
        else:
            ai = c1 * f - c2 * g
            bi = mp.sqrt(3) * (c1 * f + c2 * g)
        return complex(ai), complex(bi)


def ai_series(z):
    return airy_series(z)[0]


def bi_series(z):
    return airy_series(z)[1]


def airy_zero_bisect(lo, hi, tol=1e-13):
    """A zero of Ai in (lo, hi) by bisection on the series oracle."""
    flo = ai_series(lo).real
    fhi = ai_series(hi).real
    assert flo * fhi < 0, "bracket does not straddle a zero"
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = ai_series(mid).real
        if flo * fm <= 0:
            hi, fhi = mid, fm
        else:
            lo, flo = mid, fm
    return 0.5 * (lo + hi)


def genairy_series(u, x):
    """sin(u pi/2) Ai(x) + cos(u pi/2) Bi(x) from the series oracle."""
    ai, bi = airy_series(x)
    return math.sin(0.5 * u * math.pi) * ai.real \
        + math.cos(0.5 * u * math.pi) * bi.real


def genairy_zero_bisect(u, lo, hi, tol=1e-12):
    flo = genairy_series(u, lo)
    fhi = genairy_series(u, hi)
    assert flo * fhi < 0, f"no bracket on ({lo},{hi}) for u={u}"
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = genairy_series(u, mid)
        if flo * fm <= 0:
            hi, fhi = mid, fm
        else:
            lo, flo = mid, fm
    return 0.5 * (lo + hi)


def hermite_nodes(n):
    """Gauss-Hermite nodes (zeros of H_n) via the symmetric tridiagonal
    eigenvalue problem (Golub-Welsch)."""
    k = np.arange(1, n)
    off = np.sqrt(k / 2.0)
    T = np.diag(off, -1) + np.diag(off, 1)
    return np.sort(np.linalg.eigvalsh(T))


def mp_U(a, z, dps=40):
    """U(a,z) by mpmath's independent implementation."""
    with mp.workdps(dps):
        return complex(mp.pcfu(a, mp.mpc(z)))


def mp_U_prime(a, z, dps=40, h=1e-6):
    with mp.workdps(dps):
        zz = mp.mpc(z)
        d = (mp.pcfu(a, zz + h) - mp.pcfu(a, zz - h)) / (2 * h)
        return complex(d)


def sign_change_count(a, xs, eval_fn):
    """Number of sign changes of Re eval_fn(a,x) over the sorted grid xs."""
    vals = [eval_fn(a, x) for x in xs]
    signs = [1 if v > 0 else -1 for v in vals]
    return sum(1 for s1, s2 in zip(signs, signs[1:]) if s1 != s2)
