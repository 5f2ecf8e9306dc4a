"""Compare the compiled kernels with the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Inputs are taken from real rings so that the timings reflect actual use:
F_2[D_12] (4096 elements) for the ring kernels and its unit group for the
group kernels.
"""

import argparse
import sys
import timeit

import numpy as np

from unitgroups import _kernels_py as py
from unitgroups.dsl import evaluate
from unitgroups.units import unit_group

try:
    from unitgroups import _ckernels as ck
except ImportError:
    sys.exit("the compiled extension is not built; run `pip install -e . --no-build-isolation` first")


def cases():
    R = evaluate("GA(GF(2), D(12))")
    t = R.mul_table
    units = py.unit_mask(t, R.one)
    om = R.one_minus
    n = R.order
    basis = np.cumprod((1,) + R.radix[:-1])
    rows = np.stack([t[w] for w in basis]).astype(np.int64)
    rng = np.random.default_rng(0)
    xs = rng.integers(0, n, size=1_000_000)
    ys = rng.integers(0, n, size=1_000_000)
    tern = (3,) * 10
    us = rng.integers(0, 3**10, size=1_000_000)
    vs = rng.integers(0, 3**10, size=1_000_000)
    G = unit_group(evaluate("GA(GF(2), D(6))")).group
    big = unit_group(evaluate("M(2, GF(5))")).group  # 480 elements
    return {
        "digit_add binary (1e6)": lambda k: k.digit_add(xs, ys, R.radix),
        "digit_add base 3 (1e6)": lambda k: k.digit_add(us, vs, tern),
        "distributive_table (4096)": lambda k: k.distributive_table(R.radix, rows),
        "unit_mask (4096)": lambda k: k.unit_mask(t, R.one),
        "radical_mask (4096)": lambda k: k.radical_mask(t, units, om),
        "element_orders (480)": lambda k: k.element_orders(big.mul, big.identity),
        "closure (12, all gens)": lambda k: k.closure(G.mul, list(range(G.order)), G.identity),
    }


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    print(f"{'kernel':<28} {'numpy (ms)':>11} {'cython (ms)':>12} {'speedup':>8}")
    for name, fn in cases().items():
        # best of N, one call per measurement
        t_py = min(timeit.repeat(lambda: fn(py), number=1, repeat=args.repeat))
        t_c = min(timeit.repeat(lambda: fn(ck), number=1, repeat=args.repeat))
        print(f"{name:<28} {1000 * t_py:>11.2f} {1000 * t_c:>12.2f} {t_py / t_c:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
