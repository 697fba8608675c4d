"""Benchmark the compiled series kernels against the pure-Python fallback.

Runs identical workloads through both implementations of kummer_pair and
asym_pair and reports per-call timings and the speedup.  Usage:

    python benchmarks/bench_kernels.py [repeats]
"""
import importlib
import sys
import time

import numpy as np

from pcfzeros._kernels import pure


def _load_compiled():
    try:
        mod = importlib.import_module("pcfzeros._kernels._useries")
        return mod
    except ImportError:
        return None


def _workload_kummer(rng, n):
    out = []
    for _ in range(n):
        a = rng.uniform(-12.0, 12.0)
        z = complex(rng.uniform(-8.0, 8.0), rng.uniform(-8.0, 8.0))
        out.append((0.5 * a + 0.25, 0.5 * a + 0.75, z * z / 2.0))
    return out

def _workload_asym(rng, n):
    out = []
    for _ in range(n):
        a = rng.uniform(-12.0, 12.0)
        z = complex(rng.uniform(8.0, 25.0), rng.uniform(-10.0, 10.0))
        out.append((a, 1.0 / (2.0 * z * z)))
    return out


def _time(fn, calls, repeats):
    best = float("inf")
    sink = 0.0
    for _ in range(repeats):
        t0 = time.perf_counter()
        for args in calls:
            r = fn(*args)
            sink += abs(r[0])
        best = min(best, time.perf_counter() - t0)
    return best, sink


def main():
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    compiled = _load_compiled()
    rng = np.random.default_rng(0)
    kum = [(b1, b2, w, 4000) for b1, b2, w in _workload_kummer(rng, 400)]
    asy = [(a, z2i, 64) for a, z2i in _workload_asym(rng, 2000)]

    print(f"workloads: kummer_pair x{len(kum)}, asym_pair x{len(asy)}, "
          f"best of {repeats}")
    for name, calls in (("kummer_pair", kum), ("asym_pair", asy)):
        tp, sp = _time(getattr(pure, name), calls, repeats)
        print(f"{name:12s} pure     {tp * 1e3:8.1f} ms "
              f"({tp / len(calls) * 1e6:7.1f} us/call)")
        if compiled is None:
            print(f"{name:12s} compiled    (not built)")
            continue
        tc, sc = _time(getattr(compiled, name), calls, repeats)
        print(f"{name:12s} compiled {tc * 1e3:8.1f} ms "
              f"({tc / len(calls) * 1e6:7.1f} us/call)  "
              f"speedup {tp / tc:.1f}x")
        # both paths must agree bit-for-bit on the checksum magnitude
        if abs(sp - sc) > 1e-9 * max(abs(sp), 1.0):
            print(f"  WARNING: checksum mismatch pure={sp!r} compiled={sc!r}")


if __name__ == "__main__":
    main()
