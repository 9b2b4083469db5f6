"""Compare the compiled and pure-Python subspace sweep kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Each case times a full subalgebra sweep (all dimensions) of one structure
tensor with both backends, checks that the outputs agree, and prints the
best-of-N wall time and the speedup.
"""
from __future__ import annotations

import argparse
import time

from leibkit import kernels
from leibkit.constructions import counterexample, heisenberg_example, sl2
from leibkit.corpus import cross_product
from leibkit.enumeration import estimated_sweep
from leibkit.exactla import GF

CASES = [
    ("CounterEx(2)", lambda: counterexample(2)),
    ("HeisEx(2)", lambda: heisenberg_example(2)),
    ("sl2(GF(5))", lambda: sl2(GF(5))),
    ("cross(GF(3))", lambda: cross_product(GF(3))),
    ("CounterEx(3)", lambda: counterexample(3)),
    ("HeisEx(3)", lambda: heisenberg_example(3)),
]


def full_sweep(A, mode, backend):
    sc, p, n = A.flat_residues(), A.field.p, A.dim
    return [kernels.sweep(sc, p, n, k, mode, backend=backend) for k in range(n + 1)]


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernel not available; only the Python backend can be timed")
    header = f"{'algebra':<14}{'subspaces':>11}{'accepted':>10}{'python s':>11}"
    if "cython" in backends:
        header += f"{'cython s':>11}{'speedup':>9}"
    print(header)
    for name, build in CASES:
        A = build()
        t_py, out_py = best_of(lambda: full_sweep(A, kernels.MODE_SUBALGEBRA, "python"), args.repeat)
        accepted = sum(len(x) for x in out_py)
        total = estimated_sweep(A)
        row = f"{name:<14}{total:>11}{accepted:>10}{t_py:>11.4f}"
        if "cython" in backends:
            t_cy, out_cy = best_of(lambda: full_sweep(A, kernels.MODE_SUBALGEBRA, "cython"), args.repeat)
            if out_cy != out_py:
                raise SystemExit(f"backends disagree on {name}")
            row += f"{t_cy:>11.4f}{t_py / t_cy:>8.1f}x"
        print(row)


if __name__ == "__main__":
    main()
