import cmath
import math

import pytest

from pcfzeros.errors import PolynomialCaseError
from pcfzeros.genairy import (complex_zeros, identity_residual, index_shift,
                              mu, neg_zeros, refine_zero, sole_positive_zero,
                              t_series, vartheta)

import oracles


def test_mu_branches_and_periodicity():
    assert mu(1.2) == pytest.approx(2.4)
    assert mu(1.5) == pytest.approx(-1.0)
    assert mu(3.2) == pytest.approx(2.4)
    for u in (0.1, 0.9, 1.4, 1.9):
        assert mu(u) == pytest.approx(mu(u + 2.0), abs=1e-12)
        assert mu(u) == pytest.approx(mu(u + 6.0), abs=1e-12)


def test_mu_range():
    for k in range(200):
        u = 0.01 + k * 0.05
        assert -8.0 / 3.0 < mu(u) <= 8.0 / 3.0


def test_t_series_leading_term():
    for t in (50.0, 500.0, 5000.0):
        val, ok = t_series(t)
        assert ok
        assert abs(val / t ** (2.0 / 3.0) - 1.0) < 1.0 / t


def test_t_series_reliability_flag():
    assert t_series(1.0)[1] is False
    assert t_series(3.0)[1] is True


def test_t_series_against_bisected_zeros():
    # u even (mu=0): tau_m = 4m-3, and -T(3 pi tau/8) approximates the
    # m-th negative zero of the combination (here: of Bi).  At tau=5 the
    # truncated 5-term series is only good to ~1.5e-5 (small-argument
    # tail); from tau=9 on it is below 1e-6 as expected.
    u = 2.0
    t = 3.0 * math.pi * 5.0 / 8.0
    asym = -t_series(t)[0].real
    ref = oracles.genairy_zero_bisect(u, asym - 0.2, asym + 0.2)
    err_tau5 = abs(asym - ref)
    assert err_tau5 <= 2e-5
    t = 3.0 * math.pi * 9.0 / 8.0
    asym = -t_series(t)[0].real
    ref = oracles.genairy_zero_bisect(u, asym - 0.2, asym + 0.2)
    assert abs(asym - ref) <= 1e-6 < err_tau5


def test_neg_zeros_ordering_and_crosscheck():
    u = 12.4
    zs = [neg_zeros(u, m).value.real for m in range(1, 11)]
    assert all(b < a for a, b in zip(zs, zs[1:]))
    # cross-check a couple against the series-oracle root-finder
    for m in (2, 5):
        ref = oracles.genairy_zero_bisect(u, zs[m - 1] - 0.2, zs[m - 1] + 0.2)
        assert abs(zs[m - 1] - ref) < 1e-5


def test_neg_zero_m1_is_refined():
    z = neg_zeros(12.4, 1)
    assert z.refined
    assert z.residual < 1e-10
    ref = oracles.genairy_zero_bisect(12.4, z.value.real - 0.1,
                                      z.value.real + 0.1)
    assert abs(z.value.real - ref) < 1e-10


def test_index_shift_values():
    s = index_shift(12.4)
    assert s.m_plus == 3
    assert s.m_minus == 2
    assert s.vartheta == 0
    assert s.mu == pytest.approx(0.8)
    assert index_shift(16.6).m_plus == 4


def test_vartheta():
    assert vartheta(1.2) == 1
    assert vartheta(12.4) == 0
    assert vartheta(3.3) == 1


def test_sole_positive_zero_exists():
    z = sole_positive_zero(1.2)
    assert z is not None
    assert z.value.real > 0
    assert abs(oracles.genairy_series(1.2, z.value.real)) <= 1e-12


def test_sole_positive_zero_absent():
    assert sole_positive_zero(12.4) is None


def test_sole_positive_zero_at_four_thirds():
    z = sole_positive_zero(4.0 / 3.0)
    assert z is not None
    assert z.value == 0


def test_complex_zeros_argument_trend():
    u = 12.4
    a5 = complex_zeros(u, 5).value
    a50 = complex_zeros(u, 50).value
    tgt = math.pi / 3.0
    assert abs(cmath.phase(a50) - tgt) < abs(cmath.phase(a5) - tgt)
    assert a5.real > 0 and a5.imag > 0


def test_complex_zeros_polynomial_case_rejected():
    with pytest.raises(PolynomialCaseError):
        complex_zeros(13.0, 1)
    with pytest.raises(PolynomialCaseError):
        complex_zeros(5.0 + 1e-10, 1)


def test_complex_zeros_tau_branch_example():
    # u=16.6: cos(8.3 pi) > 0, m+ = 4
    u = 16.6
    assert math.cos(0.5 * u * math.pi) > 0
    assert index_shift(u).m_plus == 4
    z1 = complex_zeros(u, 1, refine=True)
    assert z1.residual <= 1e-12


def test_refine_zero_fixed_point():
    u = 12.4
    z = complex_zeros(u, 3, refine=True).value
    again = refine_zero(u, z)
    assert abs(again.value - z) <= 1e-12 * (1.0 + abs(z))
    assert again.residual <= 1e-12


def test_refinement_shift_decreases_with_m():
    u = 12.4
    d1 = abs(complex_zeros(u, 1, refine=True).value
             - complex_zeros(u, 1).value)
    d50 = abs(complex_zeros(u, 50, refine=True).value
              - complex_zeros(u, 50).value)
    assert d1 > d50


def test_zero_sets_periodic_in_u():
    for m in (1, 3):
        z1 = complex_zeros(12.4, m, refine=True).value
        z2 = complex_zeros(14.4, m, refine=True).value
        assert abs(z1 - z2) < 1e-12 * (1.0 + abs(z1))
    n1 = neg_zeros(12.4, 2, refine=True).value
    n2 = neg_zeros(14.4, 2, refine=True).value
    assert abs(n1 - n2) < 1e-12


def test_refined_real_zeros_stay_real():
    for m in (1, 2, 5):
        z = neg_zeros(16.6, m, refine=True).value
        assert abs(z.imag) <= 1e-13


def test_asymptotic_error_decreases_in_m():
    for u in (12.4, 16.6):
        errs = []
        for m in range(2, 21):
            raw = neg_zeros(u, m).value.real
            ref = neg_zeros(u, m, refine=True).value.real
            errs.append(abs(raw - ref))
        # monotone decay until the double-precision noise floor (~1e-14)
        assert all(b <= a * 1.01 + 1e-14 for a, b in zip(errs, errs[1:]))
