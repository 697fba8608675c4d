"""Turning-point change of variables.

zeta(zhat) is the Liouville-Green variable made analytic through the
turning point zhat = 1: (2/3) zeta^{3/2} = integral_1^zhat sqrt(t^2-1) dt,
evaluated through cancellation-safe recasts on |zhat| >= 1 and |zhat| < 1.
map_bundle adds beta, sigma = (zeta/(zhat^2-1))^{1/2} and the derivative
chain, with a high-precision fallback near the (removable) singularity at
zhat = 1.  invert_zeta solves zeta(zhat) = target by Newton.
"""
import cmath
import math
from dataclasses import dataclass

import mpmath as mp

from .errors import ConvergenceError, DomainError

# inside this distance from zhat=1 the double-precision recasts lose too
# many digits to cancellation; switch to 40-digit arithmetic
TP_GUARD = 1e-3

ZETA_AT_0 = -0.25 * (3.0 * math.pi) ** (2.0 / 3.0)


@dataclass(frozen=True)
class MapBundle:
    zhat: complex
    zeta: complex
    beta: complex
    sigma: complex
    zeta1: complex  # d zeta / d zhat
    zeta2: complex
    sigma1: complex
    sigma2: complex


def _check_cut(zh):
    if zh.imag == 0.0 and zh.real <= -1.0:
        raise DomainError(f"zhat={zh} lies on the cut (-inf,-1]")


def _zeta_raw(zh, m):
    """zeta via the two recast branches; m is the math/cmath-style module
    (cmath for doubles, mpmath context for the high-precision path)."""
    # the 2/3 exponent must match the working precision: a double 2/3
    # inside the mp path costs ~1e-15 relative error, which the near-1
    # cancellations amplify
    two3 = 2.0 / 3.0 if m is cmath else mp.mpf(2) / 3
    if abs(zh) >= 1.0:
        y = 1.0 / (zh * zh)
        s = m.sqrt(1.0 - y)
        br = 0.75 * (s - y * m.log(1.0 + s) - y * m.log(zh))
        return m.exp(2 * two3 * m.log(zh)) * br ** two3
    ac = -1j * m.log(zh + 1j * m.sqrt(1.0 - zh * zh))
    br = 0.75 * (ac - zh * m.sqrt(1.0 - zh * zh))
    return -(br ** two3)


def zeta(zh):
    """The turning-point variable; real for real zhat in (-1, inf), 0 at 1."""
    zh = complex(zh)
    _check_cut(zh)
    if zh == 1.0:
        return 0.0 + 0.0j
    if abs(zh - 1.0) < TP_GUARD:
        with mp.workdps(40):
            return complex(_zeta_raw(mp.mpc(zh), mp))
    z = _zeta_raw(zh, cmath)
    if zh.imag == 0.0 and zh.real > -1.0:
        z = complex(z.real, 0.0)
    return z


def _beta(zh):
    if abs(zh) >= 1.0:
        return (1.0 - 1.0 / (zh * zh)) ** -0.5
    # continuation through the upper/lower side of the cut [-1,1];
    # real zhat in (-1,1) uses the upper-side value
    sgn = -1.0 if zh.imag >= 0.0 else 1.0
    return sgn * 1j * zh * (1.0 - zh * zh) ** -0.5


def _bundle_exact_tp():
    # limits at zhat = 1 of sigma, zeta and their derivatives
    c = 2.0 ** (1.0 / 3.0)
    return MapBundle(zhat=1.0 + 0.0j, zeta=0.0 + 0.0j, beta=complex("inf"),
                     sigma=1.0 / c, zeta1=c, zeta2=c / 5.0,
                     sigma1=-1.0 / (5.0 * c),
                     sigma2=26.0 / (175.0 * c))


def _bundle_mp(zh):
    """map_bundle near the turning point: same rational chain, evaluated
    at 40 digits so the 0/0 cancellations still leave ~25 good digits."""
    with mp.workdps(40):
        z = mp.mpc(zh)
        zt = _zeta_raw(z, mp)
        sg = mp.sqrt(zt / (z * z - 1.0))
        zeta1 = 1.0 / sg
        sigma1 = (1.0 - 2.0 * z * sg ** 3) / (2.0 * zt)
        zeta2 = (2.0 * z * sg ** 3 - 1.0) / (2.0 * sg ** 2 * zt)
        sigma2 = ((6.0 * sg ** 6 + 4.0 * sg ** 4 * zt - z * sg ** 3 - 1.0)
                  / (2.0 * sg * zt ** 2))
        beta = z * sg / mp.sqrt(zt)
        return MapBundle(zhat=complex(zh), zeta=complex(zt),
                         beta=complex(beta), sigma=complex(sg),
                         zeta1=complex(zeta1), zeta2=complex(zeta2),
                         sigma1=complex(sigma1), sigma2=complex(sigma2))


def map_bundle(zh):
    """zeta, beta, sigma and derivatives at one point, mutually consistent."""
    zh = complex(zh)
    _check_cut(zh)
    if zh == 1.0:
        return _bundle_exact_tp()
    if abs(zh - 1.0) < TP_GUARD:
        return _bundle_mp(zh)
    zt = zeta(zh)
    sg = cmath.sqrt(zt / (zh * zh - 1.0))
    if zh.imag == 0.0 and -1.0 < zh.real:
        sg = complex(sg.real, 0.0)
    zeta1 = 1.0 / sg
    sigma1 = (1.0 - 2.0 * zh * sg ** 3) / (2.0 * zt)
    zeta2 = (2.0 * zh * sg ** 3 - 1.0) / (2.0 * sg * sg * zt)
    sigma2 = ((6.0 * sg ** 6 + 4.0 * sg ** 4 * zt - zh * sg ** 3 - 1.0)
              / (2.0 * sg * zt * zt))
    return MapBundle(zhat=zh, zeta=zt, beta=_beta(zh), sigma=sg,
                     zeta1=zeta1, zeta2=zeta2, sigma1=sigma1, sigma2=sigma2)


def sigma(zh):
    return map_bundle(zh).sigma


def invert_zeta(zt_target, tol=1e-14, max_iter=60):
    """Solve zeta(zhat) = zt_target for zhat by Newton.

    Initial guess: turning-point linearization for small targets,
    the iterated large-|zeta| form otherwise.  dzhat/dzeta = sigma.
    """
    zt_target = complex(zt_target)
    if zt_target.imag == 0.0 and zt_target.real < -0.5:
        # real target on the (-1,1) section: zeta is monotone there,
        # seed by bisection before the Newton polish
        if zt_target.real < ZETA_AT_0 - 1e-9:
            raise DomainError(
                f"real target {zt_target.real} below zeta(0): outside the "
                "principal-branch image of [0, 1]")
        lo, hi = 1e-12, 1.0
        for _ in range(50):
            mid = 0.5 * (lo + hi)
            if zeta(mid).real > zt_target.real:
                hi = mid
            else:
                lo = mid
        zh = complex(0.5 * (lo + hi))
    elif abs(zt_target) < 0.5:
        e = 2.0 ** (-1.0 / 3.0) * zt_target
        zh = 1.0 + e * (1.0 - e / 10.0)
    else:
        xi = (2.0 / 3.0) * zt_target ** 1.5
        zh = cmath.sqrt(2.0 * xi)
        for _ in range(4):
            zh = cmath.sqrt(2.0 * xi + 0.5 + cmath.log(2.0 * zh))
    f = None
    for _ in range(max_iter):
        f = zeta(zh) - zt_target
        if abs(f) <= tol * (1.0 + abs(zt_target)):
            if zt_target.imag == 0.0 and zh.imag != 0.0 and \
                    abs(zh.imag) < 1e-13 * (1.0 + abs(zh)):
                zh = complex(zh.real, 0.0)
            return zh
        zh = zh - sigma(zh) * f
    raise ConvergenceError("invert_zeta did not converge", last=zh,
                           residual=abs(f))
