"""Compare the compiled and pure-Python rank kernels.

    python3 benchmarks/bench_kernels.py [--sizes 50 100 200] [--repeat 3]
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from scrollhankel import _fallback, kernels

P = 32003


def timed(fn, a, repeat):
    best = float("inf")
    for _ in range(repeat):
        b = a.copy()
        t0 = time.perf_counter()
        r = fn(b, P)
        best = min(best, time.perf_counter() - t0)
    return r, best


def betti_seconds(backend):
    code = (
        "import time;from scrollhankel.closed_graphs import line;"
        "from scrollhankel.hankel import pair_ideal;from scrollhankel.polynomial import PrimeField;"
        "from scrollhankel.resolution import graded_betti;t=time.perf_counter();"
        "graded_betti(pair_ideal(line(4), line(4), PrimeField(32003)));print(time.perf_counter()-t)"
    )
    env = dict(os.environ, SCROLLHANKEL_BACKEND=backend)
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[50, 100, 200])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    rng = np.random.default_rng(0)
    print(f"compiled backend: {kernels.BACKEND}")
    print(f"{'size':>6} {'compiled s':>12} {'python s':>12} {'speedup':>8}")
    for n in args.sizes:
        a = rng.integers(0, P, size=(n, n), dtype=np.int64)
        r1, t1 = timed(kernels.rank_mod_p, a, args.repeat)
        r2, t2 = timed(_fallback.rank_mod_p, a, args.repeat)
        assert r1 == r2
        print(f"{n:>6} {t1:>12.5f} {t2:>12.5f} {t2 / t1:>8.1f}")
    fast, slow = betti_seconds("auto"), betti_seconds("python")
    print(f"betti (L4,L4) over GF(32003): compiled {fast:.2f} s, python {slow:.2f} s")


if __name__ == "__main__":
    main()
