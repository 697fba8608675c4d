"""Zeros of the combination Ai_u(z) = e^{(3u-1)pi i/6} Ai_1(z)
+ e^{-(3u-1)pi i/6} Ai_{-1}(z).

Real negative zeros, the sole positive zero when it exists, and the
first-quadrant complex zeros, all from large-index asymptotics with an
identity-based Newton refinement.  On the real axis the zeros coincide
with the roots of sin(u pi/2) Ai(x) + cos(u pi/2) Bi(x) = 0.
"""
import cmath
import math
from dataclasses import dataclass
from typing import Optional

import scipy.optimize as opt

from .airy import eval_ai_rotated, eval_ai, eval_bi_real
from .errors import ConvergenceError, DomainError, PolynomialCaseError

# guard band around odd-integer u inside which the complex-zero formulas
# blow up (log of 2cos(u pi/2) diverges)
POLY_GUARD = 1e-8


@dataclass(frozen=True)
class GenAiryZero:
    index: int
    kind: str  # negative-real | sole-positive | complex-first-quadrant
    value: complex
    refined: bool
    residual: float
    reliable: bool = True


@dataclass(frozen=True)
class IndexShift:
    mu: float
    vartheta: int
    m_plus: int
    m_minus: int


def mu(u):
    """Periodic phase shift of period 2: 2u on [0,4/3) mod 2, else 2u-4."""
    if u < 0:
        raise DomainError("mu requires u >= 0")
    r = math.fmod(u, 2.0)
    return 2.0 * r if r < 4.0 / 3.0 else 2.0 * r - 4.0


def vartheta(u):
    """1 when u reduced mod 2 lies in (1, 4/3), else 0."""
    r = math.fmod(u, 2.0)
    return 1 if 1.0 < r < 4.0 / 3.0 else 0


def index_shift(u):
    return IndexShift(mu=mu(u), vartheta=vartheta(u),
                      m_plus=math.floor((u + 1.0) / 4.0),
                      m_minus=math.floor((u - 1.0) / 4.0))


def t_series(t):
    """Large-|t| expansion T(t) = t^(2/3)(1 + 5/(48 t^2) - ...).

    Returns (value, reliable); reliable is False for |t| < 2 where the
    truncated series is not trustworthy.
    """
    t = complex(t)
    t2 = t * t
    s = (1.0 + 5.0 / (48.0 * t2) - 5.0 / (36.0 * t2 * t2)
         + 77125.0 / (82944.0 * t2 ** 3)
         - 108056875.0 / (6967296.0 * t2 ** 4))
    val = t ** (2.0 / 3.0) * s
    return val, abs(t) >= 2.0


def eval_genairy_real(u, x):
    """sin(u pi/2) Ai(x) + cos(u pi/2) Bi(x), proportional to Ai_u on R."""
    ai = eval_ai(x)
    bi = eval_bi_real(x)
    # both unscaled: real zeros of interest are at moderate |x|
    return (math.sin(0.5 * u * math.pi) * ai.value.real
            + math.cos(0.5 * u * math.pi) * bi.value.real)


def _identity_parts(u, z):
    """Return (f, fp, residual) for f(z) = c Ai_1(z) + Ai_{-1}(z) with
    c = e^{(3u-1) pi i/3}, in a common scaling, plus the identity residual
    |1 + c Ai_1/Ai_{-1}|."""
    c = cmath.exp((3.0 * u - 1.0) * math.pi * 1j / 3.0)
    p = eval_ai_rotated(1, z)
    q = eval_ai_rotated(-1, z)
    scale = cmath.exp(p.exponent - q.exponent)
    f = c * p.value * scale + q.value
    fp = c * p.derivative * scale + q.derivative
    denom = abs(q.value)
    residual = abs(f) / denom if denom > 0 else math.inf
    return f, fp, residual


def identity_residual(u, z):
    """|1 + e^{(3u-1) pi i/3} Ai_1(z)/Ai_{-1}(z)| — zero at zeros of Ai_u."""
    return _identity_parts(u, complex(z))[2]


def refine_zero(u, approx, tol=1e-14, max_iter=30):
    """Newton-polish an approximate zero of Ai_u.

    Damped Newton on f(z) = e^{(3u-1) pi i/3} Ai_1(z) + Ai_{-1}(z);
    converges when |step| <= tol*(1+|z|).
    """
    z = complex(approx)
    delta = 0.0
    for _ in range(max_iter):
        f, fp, _ = _identity_parts(u, z)
        if fp == 0:
            raise ConvergenceError("vanishing derivative in refine_zero", last=z)
        step = f / fp
        # keep steps below the local zero spacing
        cap = 0.5 * (1.0 + abs(z))
        if abs(step) > cap:
            step *= cap / abs(step)
        z -= step
        delta += abs(step)
        if abs(step) <= tol * (1.0 + abs(z)):
            break
    else:
        raise ConvergenceError("refine_zero did not converge", last=z,
                               residual=identity_residual(u, z))
    res = identity_residual(u, z)
    kind = "complex-first-quadrant"
    if abs(z.imag) <= 1e-12 * (1.0 + abs(z)):
        z = complex(z.real, 0.0)
        kind = "negative-real" if z.real <= 0 else "sole-positive"
    return GenAiryZero(index=-1, kind=kind, value=z, refined=True,
                       residual=res)


def neg_zeros(u, m, refine=False):
    """m-th negative real zero of Ai_u: -T(3 pi tau_m / 8), tau_m = 4m-3+mu(u).

    The raw asymptotic holds for m >= 2; for m = 1 refinement by real
    root-finding is mandatory and applied automatically.
    """
    if u <= 0:
        raise DomainError("neg_zeros requires u > 0")
    if m < 1:
        raise DomainError("zero index must be >= 1")
    tau = 4.0 * m - 3.0 + mu(u)
    t = 3.0 * math.pi * tau / 8.0
    val, reliable = t_series(t)
    x = -val.real
    refined = False
    if refine or m == 1:
        # bracket around the asymptotic seed and solve eq. for Ai_u on R
        half = 0.45 * (8.0 / (3.0 * math.pi)) / max(tau, 1.0) * abs(x) if x != 0 else 0.5
        half = max(half, 0.2)
        lo, hi = x - half, min(x + half, -1e-12)
        flo = eval_genairy_real(u, lo)
        fhi = eval_genairy_real(u, hi)
        grow = 0
        while flo * fhi > 0 and grow < 8:
            half *= 1.6
            lo, hi = x - half, min(x + half, -1e-12)
            flo = eval_genairy_real(u, lo)
            fhi = eval_genairy_real(u, hi)
            grow += 1
        if flo * fhi > 0:
            raise ConvergenceError("could not bracket negative zero", last=x)
        x = opt.brentq(lambda s: eval_genairy_real(u, s), lo, hi, xtol=1e-14)
        refined = True
        reliable = True
    return GenAiryZero(index=m, kind="negative-real", value=complex(x),
                       refined=refined, residual=identity_residual(u, x),
                       reliable=reliable)


def sole_positive_zero(u) -> Optional[GenAiryZero]:
    """The unique positive zero of Ai_u when vartheta(u)=1, else None.

    At u = 4/3 (mod 2) the zero sits exactly at the origin.
    """
    if u <= 0:
        raise DomainError("sole_positive_zero requires u > 0")
    r = math.fmod(u, 2.0)
    if abs(r - 4.0 / 3.0) < 1e-12:
        return GenAiryZero(index=0, kind="sole-positive", value=0.0 + 0.0j,
                           refined=True, residual=identity_residual(u, 0.0))
    if vartheta(u) == 0:
        return None
    b = 0.5
    f0 = eval_genairy_real(u, 1e-12)
    while eval_genairy_real(u, b) * f0 > 0:
        b *= 2.0
        if b > 64.0:
            raise ConvergenceError("no sign change found for sole positive zero")
    x = opt.brentq(lambda s: eval_genairy_real(u, s), 1e-12, b, xtol=1e-14)
    return GenAiryZero(index=0, kind="sole-positive", value=complex(x),
                       refined=True, residual=identity_residual(u, x))


def _check_polynomial_case(u):
    n = round((u - 1.0) / 2.0)
    if n >= 0 and abs(u - (2 * n + 1)) < POLY_GUARD:
        raise PolynomialCaseError(
            f"u={u} is (within {POLY_GUARD:g} of) an odd integer: "
            "polynomial case, no complex zeros")


def complex_zeros(u, m, refine=False):
    """m-th complex zero of Ai_u in the first quadrant.

    tau is branch-selected by the sign of cos(u pi/2); the zero is
    e^{i pi/3} T(3 pi tau / 8) and arg -> pi/3 as m grows.
    """
    if u <= 0:
        raise DomainError("complex_zeros requires u > 0")
    if m < 1:
        raise DomainError("zero index must be >= 1")
    _check_polynomial_case(u)
    c = math.cos(0.5 * u * math.pi)
    if c > 0:
        mp = math.floor((u + 1.0) / 4.0)
        tau = 4.0 * m + 4.0 * mp - u - 1.0 + (2j / math.pi) * math.log(2.0 * c)
    else:
        mm = math.floor((u - 1.0) / 4.0)
        tau = 4.0 * m + 4.0 * mm - u + 1.0 + (2j / math.pi) * math.log(abs(2.0 * c))
    t = 3.0 * math.pi * tau / 8.0
    val, reliable = t_series(t)
    z = cmath.exp(1j * math.pi / 3.0) * val
    refined = False
    if refine:
        rz = refine_zero(u, z)
        z = rz.value
        refined = True
        reliable = True
    return GenAiryZero(index=m, kind="complex-first-quadrant", value=z,
                       refined=refined, residual=identity_residual(u, z),
                       reliable=reliable)
