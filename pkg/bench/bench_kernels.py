"""Compare the compiled kernels with the numpy fallback.

Usage: python3 bench/bench_kernels.py [--repeat N] [--end-to-end TABLE]
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from terminvar import _kernels_py
from terminvar.groups import ambient_group

try:
    from terminvar import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def _best(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def cases():
    amb = ambient_group("quaternionic", "BT24", 2)
    ctx = amb.context
    gens = np.array(amb.generators(), dtype=np.int64)
    yield "closure_bfs (order 1944)", "closure_bfs", (ctx.table, gens, ctx.identity_code)

    small = ambient_group("e2-zeta6", "C6", 2).context
    codes = np.arange(small.size)
    conj = small.conj(codes[:, None], codes[None, :])
    yield "class_labels (order 486)", "class_labels", (np.ascontiguousarray(conj),)

    rng = np.random.default_rng(0)
    perms = np.array([rng.permutation(5000) for _ in range(8)], dtype=np.int64)
    yield "orbit_labels (8 x 5000)", "orbit_labels", (perms,)


def end_to_end(table: str) -> None:
    """Wall time of a full table verification under each backend, in fresh interpreters."""
    code = "from terminvar import kernels; from terminvar.reports import verify; verify(%r)" % table
    for label, flag in (("python", "1"), ("cython", "0")):
        env = {**os.environ, "TERMINVAR_PURE_PYTHON": flag}
        t = time.perf_counter()
        subprocess.run([sys.executable, "-c", code], env=env, check=True)
        print(f"verify {table} [{label}]: {time.perf_counter() - t:.1f}s")


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--end-to-end", metavar="TABLE", help="also time a full table verification")
    args = ap.parse_args()
    print(f"{'kernel':28s} {'python [ms]':>12s} {'cython [ms]':>12s} {'speedup':>8s}")
    for label, name, fargs in cases():
        tp = _best(lambda: getattr(_kernels_py, name)(*fargs), args.repeat)
        if _kernels_c is None:
            print(f"{label:28s} {tp * 1e3:12.2f} {'n/a':>12s} {'':>8s}")
            continue
        a = np.asarray(getattr(_kernels_py, name)(*fargs))
        b = np.asarray(getattr(_kernels_c, name)(*fargs))
        assert np.array_equal(a.astype(np.int64), b.astype(np.int64)), name
        tc = _best(lambda: getattr(_kernels_c, name)(*fargs), args.repeat)
        print(f"{label:28s} {tp * 1e3:12.2f} {tc * 1e3:12.2f} {tp / tc:7.1f}x")
    if args.end_to_end:
        end_to_end(args.end_to_end)


if __name__ == "__main__":
    main()
