#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy fallback.

Usage: python benchmarks/bench_kernels.py [--repeat K]

Runs each hot kernel on representative sizes under both backends and
prints a timing table.  When the extension is not built, only the
fallback column is filled.
"""

import argparse
import time

import numpy as np

from bentbin import make_field
from bentbin._kernels import py as kpy
from bentbin.boolfun import VectorialFn
from bentbin.ellmap import _sigma_columns
from bentbin.quadratic import quad_contributions
from bentbin.stickelberger import weight_table
from bentbin import gf2poly

try:
    from bentbin._kernels import _core as kc
except ImportError:
    kc = None


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cases():
    ctx10 = make_field(10)
    f10 = VectorialFn.binomial(ctx10, 5, 36)
    ctx12 = make_field(12)
    f12 = VectorialFn.binomial(ctx12, 5, 68)
    w12 = weight_table(12)
    s12, a12 = quad_contributions(ctx12, (5, 68))
    ctx16 = make_field(16)
    sigma16 = _sigma_columns(ctx16)
    steps = np.array([16 // p for p in gf2poly.prime_factors(16)], np.int64)

    buf = np.random.default_rng(0).integers(-3, 3, 1 << 16).astype(np.int64)

    yield "fwht n=16", lambda k: k.fwht(buf.copy())
    yield "walsh_scan n=10", lambda k: k.walsh_scan(
        f10.table, ctx10.mask_table, 10, False)
    yield "ddt_scan n=10", lambda k: k.ddt_scan(f10.table, 10)
    yield "nu_scan n=12", lambda k: k.nu_scan(ctx12.N, 5, 68, w12)
    yield "quad_dims n=12", lambda k: k.quad_dims(
        12, ctx12.N, ctx12._log, ctx12._exp, s12, a12)
    yield "ell_scan n=16", lambda k: k.ell_scan(16, sigma16, steps)
    yield "exp_fill n=16", lambda k: k.exp_fill(
        16, ctx16.N, ctx16.modulus, ctx16.alpha,
        np.zeros(ctx16.N, np.uint32))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'kernel':<18} {'python':>10} {'compiled':>10} {'speedup':>9}")
    for name, call in cases():
        tp = timeit(lambda: call(kpy), args.repeat)
        if kc is not None:
            tc = timeit(lambda: call(kc), args.repeat)
            print(f"{name:<18} {tp * 1e3:9.1f}ms {tc * 1e3:9.1f}ms "
                  f"{tp / tc:8.1f}x")
        else:
            print(f"{name:<18} {tp * 1e3:9.1f}ms {'n/a':>10} {'-':>9}")
    if kc is None:
        print("\ncompiled extension not available; showing fallback only")


if __name__ == "__main__":
    main()
