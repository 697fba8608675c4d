"""Independent evaluation of U(a,z) and U'(a,z) for validation/refinement.

Three methods, chosen by region and requested accuracy:

  * series — Maclaurin expansion of the even/odd standard solutions with
    gamma-function connection coefficients; cancellation is tracked by
    the largest-term magnitude and the evaluation escalates to mpmath
    with extra digits whenever double precision cannot deliver the
    requested accuracy;
  * asymptotic — compound large-|z| expansion: the recessive series plus,
    beyond |arg z| = pi/2, the dominant series weighted by the connection
    constant i sqrt(2 pi) e^{-i pi a}/Gamma(a+1/2) (conjugated in the
    lower half-plane);
  * quadrature — adaptive integration of the real-integral representation
    (valid for a > -1/2), used as an independent cross-check.

Exponentially large/small results carry a real exponent so that
value * e^exponent is the true function value.
"""
import cmath
import math
from dataclasses import dataclass
from typing import Optional

import mpmath as mp
import scipy.integrate as integrate
import scipy.special as sp

from ._kernels import asym_pair, kummer_pair
from .errors import DomainError
from .genairy import identity_residual  # noqa: F401  (re-export convenience)

SQRT_PI = math.sqrt(math.pi)
# |exponent| below this is folded back into the mantissa
_UNSCALE_BOUND = 650.0


@dataclass(frozen=True)
class PcfValue:
    value: complex
    derivative: complex
    method: str  # series | asymptotic | quadrature
    est_accuracy: float
    # value * e**exponent is the true U; 0 unless out of double range
    exponent: float = 0.0

    def unscaled(self):
        if self.exponent == 0.0:
            return self.value, self.derivative
        f = math.exp(self.exponent)
        return self.value * f, self.derivative * f


@dataclass(frozen=True)
class ValidationRecord:
    m: int
    z_approx: complex
    z_ref: complex
    g1_approx: float
    g1_ref: float
    g2_approx: Optional[float]
    g2_ref: Optional[float]
    eps1: float
    eps2: Optional[float]


def _maybe_unscale(v):
    if v.exponent != 0.0 and abs(v.exponent) < _UNSCALE_BOUND:
        f = math.exp(v.exponent)
        return PcfValue(v.value * f, v.derivative * f, v.method,
                        v.est_accuracy, 0.0)
    return v


def _asym_sums(a, z):
    """(S, exponent, K-part mantissa...) building blocks for one a."""
    S1, S2, mn = asym_pair(a, 1.0 / (2.0 * z * z), 64)
    if mn > 1e-15:
        return None
    lg = cmath.log(z)
    e1 = -z * z / 4.0 - (a + 0.5) * lg
    arg = cmath.phase(z)
    K = 0.0
    if arg > math.pi / 2.0:
        K = 1j * math.sqrt(2.0 * math.pi) * cmath.exp(-1j * math.pi * a) \
            * sp.rgamma(0.5 + a)
    elif arg < -math.pi / 2.0:
        K = -1j * math.sqrt(2.0 * math.pi) * cmath.exp(1j * math.pi * a) \
            * sp.rgamma(0.5 + a)
    if K == 0.0:
        ecap = e1.real
        m1 = S1 * cmath.exp(1j * e1.imag)
        return m1, ecap, mn
    e2 = z * z / 4.0 + (a - 0.5) * lg
    ecap = max(e1.real, e2.real)
    m = S1 * cmath.exp(e1 - ecap) + K * S2 * cmath.exp(e2 - ecap)
    return m, ecap, mn


def _eval_asymptotic(a, z):
    r = _asym_sums(a, z)
    if r is None:
        return None
    m, ecap, mn = r
    r2 = _asym_sums(a + 1.0, z)
    if r2 is None:
        return None
    m2, ecap2, mn2 = r2
    # U'(a,z) = -z/2 U(a,z) - (a+1/2) U(a+1,z), in the common scale ecap
    dm = -z / 2.0 * m - (a + 0.5) * m2 * cmath.exp(ecap2 - ecap)
    denom = max(abs(m), 1e-300)
    est = (max(mn, mn2) + 4.4e-16) / denom
    return _maybe_unscale(PcfValue(m, dm, "asymptotic", est, ecap))


def _eval_series_double(a, z):
    w = z * z / 2.0
    M1, D1, mx1, M2, D2, mx2 = kummer_pair(0.5 * a + 0.25, 0.5 * a + 0.75,
                                           w, 4000)
    U0 = SQRT_PI * 2.0 ** (-0.5 * a - 0.25) * sp.rgamma(0.75 + 0.5 * a)
    Up0 = -SQRT_PI * 2.0 ** (-0.5 * a + 0.25) * sp.rgamma(0.25 + 0.5 * a)
    # factor e^{-w/2} out as exponent -Re(w)/2, keep the phase
    E = cmath.exp(-1j * w.imag / 2.0)
    u1 = E * M1
    u1p = E * z * (D1 - 0.5 * M1)
    u2 = z * E * M2
    u2p = E * (M2 + z * z * (D2 - 0.5 * M2))
    m = U0 * u1 + Up0 * u2
    dm = U0 * u1p + Up0 * u2p
    scale = abs(U0) * mx1 + abs(Up0 * z) * mx2 + 1e-300
    est = 2.22e-16 * scale / max(abs(m), 1e-300)
    return _maybe_unscale(PcfValue(m, dm, "series", est, -w.real / 2.0))


def _eval_series_mp(a, z, tol):
    """Arbitrary-precision fallback: same Maclaurin decomposition via
    mpmath's 1F1, at escalating precision until two runs agree to tol."""
    w_abs = abs(z) ** 2 / 2.0
    # crude cancellation estimate: largest term ~ e^{|w|}, result ~ e^{-|w|/2}
    dps = int(20 + 0.9 * w_abs / math.log(10.0))
    prev = None
    est = math.inf
    for _ in range(4):
        with mp.workdps(dps):
            zz = mp.mpc(z)
            w = zz * zz / 2.0
            b1 = 0.5 * a + 0.25
            b2 = 0.5 * a + 0.75
            M1 = mp.hyp1f1(b1, 0.5, w)
            M2 = mp.hyp1f1(b2, 1.5, w)
            D1 = mp.hyp1f1(b1 + 1.0, 1.5, w) * (b1 / 0.5)
            D2 = mp.hyp1f1(b2 + 1.0, 2.5, w) * (b2 / 1.5)
            U0 = mp.sqrt(mp.pi) * mp.mpf(2.0) ** (-0.5 * a - 0.25) \
                * mp.rgamma(0.75 + 0.5 * a)
            Up0 = -mp.sqrt(mp.pi) * mp.mpf(2.0) ** (-0.5 * a + 0.25) \
                * mp.rgamma(0.25 + 0.5 * a)
            E = mp.exp(-1j * mp.im(w) / 2.0)
            m = U0 * E * M1 + Up0 * zz * E * M2
            dm = (U0 * E * zz * (D1 - 0.5 * M1)
                  + Up0 * E * (M2 + zz * zz * (D2 - 0.5 * M2)))
            expo = -float(mp.re(w)) / 2.0
            cur = (complex(m), complex(dm), expo)
        if prev is not None:
            ref = max(abs(cur[0]), abs(cur[1]) / (1.0 + abs(z)), 1e-300)
            est = abs(cur[0] - prev[0]) / ref
            if est <= tol:
                break
        prev = cur
        dps += 15
    return _maybe_unscale(PcfValue(cur[0], cur[1], "series", max(est, 1e-15),
                                   cur[2]))


def eval_U(a, z, tol=1e-11):
    """U(a,z) and U'(a,z) with est_accuracy <= tol where attainable.

    Method selection: compound asymptotics when the divergent series
    truncates below 1e-15; otherwise the Maclaurin series in doubles,
    escalated to arbitrary precision when cancellation eats the budget.
    """
    z = complex(z)
    a = float(a)
    if z != 0.0:
        v = _eval_asymptotic(a, z)
        if v is not None and v.est_accuracy <= max(1e-13, tol * 1e-2):
            return v
    v = _eval_series_double(a, z)
    if v.est_accuracy <= tol:
        return v
    return _eval_series_mp(a, z, tol)


def eval_U_near_zero(a, z, tol=1e-12):
    """U and U' for use inside root refinement.

    Near a zero the *relative* accuracy of U is meaningless (|U| -> 0);
    what matters is the absolute error measured against |U'|.  The
    asymptotic path is accepted whenever its divergent series truncates,
    and the series path is judged by the derivative-scaled error.
    """
    z = complex(z)
    a = float(a)
    if z != 0.0:
        v = _eval_asymptotic(a, z)
        if v is not None:
            return v
    v = _eval_series_double(a, z)
    abs_err = v.est_accuracy * abs(v.value)
    ref = max(abs(v.value), abs(v.derivative) / (1.0 + abs(z)), 1e-300)
    if abs_err / ref <= tol:
        return v
    return _eval_series_mp(a, z, tol)


def eval_U_prime(a, z):
    """U'(a,z) via the recurrence U' = -z/2 U(a,z) - (a+1/2) U(a+1,z).

    Independent of the derivative bundled in eval_U; used as cross-check.
    """
    z = complex(z)
    va = eval_U(a, z)
    vb = eval_U(a + 1.0, z)
    u, _ = va.unscaled()
    ub, _ = vb.unscaled()
    if va.exponent != 0.0 or vb.exponent != 0.0:
        # combine in the scale of va
        ub = vb.value * math.exp(vb.exponent - va.exponent)
        return -z / 2.0 * va.value - (a + 0.5) * ub
    return -z / 2.0 * u - (a + 0.5) * ub


def eval_U_quadrature(a, z):
    """U(a,z) by adaptive quadrature of the real-integral representation;
    only valid for a > -1/2."""
    if a <= -0.5:
        raise DomainError("integral representation requires a > -1/2")
    z = complex(z)

    def f(t):
        return t ** (a - 0.5) * cmath.exp(-0.5 * t * t - z * t)

    def f1(t):
        return t ** (a + 0.5) * cmath.exp(-0.5 * t * t - z * t)

    # integrand decays like exp(-t^2/2 + |z| t); truncate well past the peak
    upper = max(10.0, abs(z) + 10.0)
    I, errI = integrate.quad(f, 0.0, upper, complex_func=True, limit=200)
    I1, errI1 = integrate.quad(f1, 0.0, upper, complex_func=True, limit=200)
    pref = cmath.exp(-z * z / 4.0) * sp.rgamma(a + 0.5)
    val = pref * I
    der = pref * (-z / 2.0 * I - I1)
    est = (abs(errI) + abs(errI1)) * abs(pref) / max(abs(val), 1e-300)
    return PcfValue(val, der, "quadrature", est)


def residual_eq319(a, w):
    """|1 + i e^{-u pi i/2} U(u/2, i sqrt(2u) w) / U(u/2, -i sqrt(2u) w)|
    with u = -2a; vanishes at the first-quadrant zero parameters w."""
    if a >= 0:
        raise DomainError("residual check applies to a < 0")
    u = -2.0 * a
    w = complex(w)
    s = math.sqrt(2.0 * u)
    v1 = eval_U(0.5 * u, 1j * s * w)
    v2 = eval_U(0.5 * u, -1j * s * w)
    if abs(v2.value) < 1e-280:
        raise DomainError("denominator underflow in residual_eq319")
    ratio = v1.value / v2.value * math.exp(v1.exponent - v2.exponent)
    return abs(1.0 + 1j * cmath.exp(-0.5 * u * math.pi * 1j) * ratio)


def metrics(z_approx, z_ref, m=0):
    """g1/g2 relative-error comparison of an approximate zero against a
    reference; eps2 is None when Re*Im of the reference vanishes."""
    z_approx = complex(z_approx)
    z_ref = complex(z_ref)
    if z_ref == 0.0:
        raise DomainError("metrics requires a nonzero reference")
    g1a = abs(z_approx)
    g1r = abs(z_ref)
    eps1 = abs(1.0 - g1a / g1r)
    if z_ref.real * z_ref.imag != 0.0 and z_approx.imag != 0.0:
        g2a = z_approx.real / z_approx.imag
        g2r = z_ref.real / z_ref.imag
        eps2 = abs(1.0 - g2a / g2r)
    else:
        g2a = g2r = eps2 = None
    return ValidationRecord(m=m, z_approx=z_approx, z_ref=z_ref,
                            g1_approx=g1a, g1_ref=g1r,
                            g2_approx=g2a, g2_ref=g2r,
                            eps1=eps1, eps2=eps2)


def winding_number(a, center, radius, npoints=24):
    """Winding of arg U(a, .) along a circle; +1 certifies a simple zero
    inside (the phase increases by 2 pi)."""
    total = 0.0
    prev = None
    for k in range(npoints + 1):
        ang = 2.0 * math.pi * k / npoints
        z = center + radius * cmath.exp(1j * ang)
        val = eval_U(a, z, tol=1e-8).value
        ph = cmath.phase(val)
        if prev is not None:
            d = ph - prev
            while d > math.pi:
                d -= 2.0 * math.pi
            while d < -math.pi:
                d += 2.0 * math.pi
            total += d
        prev = ph
    return round(total / (2.0 * math.pi))
