"""Series kernel selection: compiled Cython extension when available,
pure-Python fallback otherwise.

Set PCFZEROS_PURE=1 to force the pure backend (used by the benchmark).
"""
import os

if os.environ.get("PCFZEROS_PURE"):
    from . import pure as _impl
else:
    try:
        from . import _useries as _impl
    except ImportError:
        from . import pure as _impl

BACKEND = _impl.BACKEND
kummer_pair = _impl.kummer_pair
asym_pair = _impl.asym_pair
