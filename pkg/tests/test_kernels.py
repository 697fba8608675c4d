import numpy as np
import pytest

from pcfzeros._kernels import BACKEND, asym_pair, kummer_pair, pure

try:
    from pcfzeros._kernels import _useries as compiled
except ImportError:
    compiled = None


def test_backend_identifies_itself():
    assert BACKEND in ("cython", "pure")


@pytest.mark.skipif(compiled is None, reason="compiled kernels not built")
def test_kummer_pair_backends_agree():
    rng = np.random.default_rng(5)
    for _ in range(50):
        a = rng.uniform(-12.0, 12.0)
        z = complex(rng.uniform(-8.0, 8.0), rng.uniform(-8.0, 8.0))
        args = (0.5 * a + 0.25, 0.5 * a + 0.75, z * z / 2.0, 4000)
        rp = pure.kummer_pair(*args)
        rc = compiled.kummer_pair(*args)
        for vp, vc in zip(rp, rc):
            assert vp == vc  # identical summation order: bit-for-bit


@pytest.mark.skipif(compiled is None, reason="compiled kernels not built")
def test_asym_pair_backends_agree():
    rng = np.random.default_rng(6)
    for _ in range(50):
        a = rng.uniform(-12.0, 12.0)
        z = complex(rng.uniform(8.0, 25.0), rng.uniform(-10.0, 10.0))
        args = (a, 1.0 / (2.0 * z * z), 64)
        rp = pure.asym_pair(*args)
        rc = compiled.asym_pair(*args)
        for vp, vc in zip(rp, rc):
            assert vp == vc
