"""Command-line front end.

Subcommands: field, analyze, search, ell, table1, stick, gauss, verify.
Exit codes: 0 all requested checks hold, 1 at least one verification
failed (a falsified claim), 2 usage or resource-gate errors.

JSON output is schema-versioned (schema: 1) with a fixed key order so
runs are byte-comparable; CSV columns are fixed and documented in the
README.  Worker count comes from --jobs or BENTBIN_JOBS (default: all
cores); results are aggregated in canonical order, so output does not
depend on the worker count.
"""

from __future__ import annotations

import argparse
import functools
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__, classify, verify
from .boolfun import VectorialFn, diff_report, image_report, spectral_summary
from .cache import ResultCache
from .ellmap import BRUTE_GATE_COMPILED, BRUTE_GATE_PYTHON, KNOWN_ELL, ell_n
from .gf2n import ResourceGateError, make_field
from .padic import make_padic_ctx, verify_stickelberger_and_fourier
from .stickelberger import (NU_GATE, gcd_ledger, h_polynomial,
                            nu_and_minimizers, verify_valuation_law, wt2)
from ._kernels import backend

RECORD_KEYS = ["schema", "n", "modulus", "d1", "d2", "sf_size",
               "sf_is_subfield", "sf_equals_subfield", "nonlinearity",
               "delta", "image_size", "c", "s", "nu", "ledger",
               "bound_checks", "class_label", "tool_version"]

CSV_COLUMNS = ["n", "modulus", "d1", "d2", "sf_size", "sf_is_subfield",
               "sf_equals_subfield", "nonlinearity", "delta", "image_size",
               "c", "s", "nu", "ledger_j", "ledger_t", "ledger_k", "ledger_u",
               "ledger_r", "bounds_hold", "class_label"]


def default_jobs() -> int:
    env = os.environ.get("BENTBIN_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


# -- record assembly -----------------------------------------------------------


def build_analysis_record(ctx, d1: int, d2: int, full: bool = True) -> dict:
    fn = VectorialFn.binomial(ctx, d1, d2)
    rep = classify.maximality_check(fn)
    rec: dict = {"schema": 1, "n": ctx.n, "modulus": f"0x{ctx.modulus:x}",
                 "d1": d1, "d2": d2, "sf_size": rep.sf_size,
                 "sf_is_subfield": rep.sf_is_subspace,
                 "sf_equals_subfield": rep.sf_equals_subfield}
    ss = spectral_summary(fn, want_sos=False)
    dr = diff_report(fn)
    ir = image_report(fn)
    rec["nonlinearity"] = ss.nonlinearity
    rec["delta"] = dr.delta
    rec["image_size"] = ir.image_size
    rec["c"] = ir.c
    rec["s"] = ir.s
    nu = ledger = None
    if full and ctx.n <= NU_GATE:
        lo, hi = min(d1, d2), max(d1, d2)
        srec = nu_and_minimizers(ctx, lo, hi)
        nu = srec.nu
        led = gcd_ledger(ctx, lo, hi, srec)
        if led is not None:
            ledger = {"j": led.j_witness, "t": led.t, "k": led.k,
                      "u": led.u, "r": led.r}
    rec["nu"] = nu
    rec["ledger"] = ledger
    checks = classify.bounds_report(fn, ss, dr, ir)
    rec["bound_checks"] = [
        {"name": c.name, "relation": c.relation, "lhs": c.lhs, "rhs": c.rhs,
         "holds": c.holds, "applicable": c.applicable} for c in checks]
    rec["class_label"] = classify.classify_function(fn) if rep.maximal \
        else None
    rec["tool_version"] = __version__
    assert list(rec) == RECORD_KEYS
    return rec


def record_ok(rec: dict) -> bool:
    return all(c["holds"] for c in rec["bound_checks"] if c["applicable"])


def emit_records(records, fmt: str, out) -> None:
    if fmt == "json":
        for rec in records:
            out.write(json.dumps(rec) + "\n")
    elif fmt == "csv":
        out.write(",".join(CSV_COLUMNS) + "\n")
        for rec in records:
            led = rec.get("ledger") or {}
            row = [rec.get("n"), rec.get("modulus"), rec.get("d1"),
                   rec.get("d2"), rec.get("sf_size"),
                   rec.get("sf_is_subfield"), rec.get("sf_equals_subfield"),
                   rec.get("nonlinearity"), rec.get("delta"),
                   rec.get("image_size"), rec.get("c"), rec.get("s"),
                   rec.get("nu"), led.get("j"), led.get("t"), led.get("k"),
                   led.get("u"), led.get("r"), record_ok(rec),
                   rec.get("class_label")]
            out.write(",".join("" if v is None else str(v) for v in row)
                      + "\n")
    else:
        for rec in records:
            out.write(f"x^{rec['d1']}+x^{rec['d2']} over GF(2^{rec['n']}) "
                      f"(modulus {rec['modulus']}):\n")
            out.write(f"  #S_F = {rec['sf_size']}"
                      f" (subspace: {rec['sf_is_subfield']},"
                      f" equals subfield: {rec['sf_equals_subfield']})\n")
            out.write(f"  nonlinearity = {rec['nonlinearity']},"
                      f" delta = {rec['delta']},"
                      f" image = {rec['image_size']}, s = {rec['s']},"
                      f" c = {rec['c']}, nu = {rec['nu']}\n")
            if rec.get("ledger"):
                out.write(f"  ledger: {rec['ledger']}\n")
            held = sum(1 for c in rec["bound_checks"]
                       if c["applicable"] and c["holds"])
            appl = sum(1 for c in rec["bound_checks"] if c["applicable"])
            out.write(f"  bounds: {held}/{appl} applicable checks hold\n")
            out.write(f"  class: {rec['class_label']}\n")


# -- subcommands -----------------------------------------------------------------


def cmd_field(args) -> int:
    ctx = make_field(args.n, args.modulus)
    info = {"schema": 1, "n": ctx.n, "modulus": f"0x{ctx.modulus:x}",
            "m": ctx.m, "N": ctx.N, "alpha": ctx.alpha,
            "tables": ctx._exp is not None, "backend": backend(),
            "tool_version": __version__}
    if args.format == "json":
        print(json.dumps(info))
    else:
        for k, v in info.items():
            print(f"{k} = {v}")
    return 0


def cmd_analyze(args) -> int:
    ctx = make_field(args.n, args.modulus)
    cache = ResultCache(args.cache) if args.cache else None
    rec = cache.lookup(ctx, args.d1, args.d2) if cache else None
    if rec is None:
        rec = build_analysis_record(ctx, args.d1, args.d2)
        if cache:
            cache.store(rec)
    emit_records([rec], args.format, sys.stdout)
    return 0 if record_ok(rec) else 1


@functools.lru_cache(maxsize=4)
def _worker_ctx(n: int, modulus: int):
    return make_field(n, modulus)


def _search_worker(task) -> dict:
    n, modulus, d1, d2, full = task
    ctx = _worker_ctx(n, modulus)
    if full:
        return build_analysis_record(ctx, d1, d2)
    hit = classify.search_pair(ctx, d1, d2)
    return {"schema": 1, "n": n, "modulus": f"0x{modulus:x}",
            "d1": d1, "d2": d2, "sf_size": hit.sf_size,
            "sf_is_subfield": None, "sf_equals_subfield": None,
            "nonlinearity": None, "delta": None, "image_size": None,
            "c": None, "s": None, "nu": None, "ledger": None,
            "bound_checks": [], "class_label": hit.class_label,
            "tool_version": __version__}


def cmd_search(args) -> int:
    ctx = make_field(args.n, args.modulus)
    if ctx.m is None:
        raise ValueError("the bent-component search requires even n")
    pairs = classify.enumerate_pairs(ctx, args.max_weight)
    # the cache holds full analysis records, so it only serves --full runs
    cache = ResultCache(args.cache) if args.cache and args.full else None
    tasks = []
    cached = {}
    for d1, d2 in pairs:
        if cache:
            rec = cache.lookup(ctx, d1, d2)
            if rec is not None:
                cached[(d1, d2)] = rec
                continue
        tasks.append((ctx.n, ctx.modulus, d1, d2, args.full))
    jobs = min(args.jobs, len(tasks)) or 1
    if jobs > 1 and len(tasks) > 8:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            fresh = list(pool.map(_search_worker, tasks, chunksize=16))
    else:
        fresh = [_search_worker(t) for t in tasks]
    for rec in fresh:
        if cache:
            cache.store(rec)
        cached[(rec["d1"], rec["d2"])] = rec
    records = [cached[p] for p in pairs]   # canonical order
    emit_records(records, args.format, sys.stdout)
    bad = sum(0 if record_ok(r) else 1 for r in records)
    print(f"# searched {len(records)} orbit representatives, "
          f"{sum(1 for r in records if r.get('sf_size') == 1 << ctx.m)} "
          f"maximal, bound violations: {bad}", file=sys.stderr)
    return 0 if bad == 0 else 1


def cmd_ell(args) -> int:
    ctx = make_field(args.n, args.modulus)
    methods = ["brute", "lattice"] if args.method == "both" else [args.method]
    values = {}
    for meth in methods:
        t0 = time.time()
        rec = ell_n(ctx, meth)
        values[meth] = rec
        print(f"ell={rec.ell_n} method={meth} witness={rec.witness} "
              f"f=0x{rec.f_gamma:x} elapsed={time.time() - t0:.2f}s")
    if len(values) == 2 and len({r.ell_n for r in values.values()}) != 1:
        print("method disagreement", file=sys.stderr)
        return 1
    ell = next(iter(values.values())).ell_n
    if ctx.m is not None and ell <= ctx.m:
        print(f"warning: ell({ctx.n}) = {ell} <= m = {ctx.m}; the "
              f"orbit-complexity hypothesis fails at this degree",
              file=sys.stderr)
    return 0


def cmd_table1(args) -> int:
    n_lo, n_hi = args.n_min, args.n_max
    if n_lo % 2 or n_hi % 2:
        raise ValueError("table range bounds must be even")
    if n_hi > 16 and not args.long_run:
        print("degrees above 16 require --long-run", file=sys.stderr)
        return 2
    brute_gate = (BRUTE_GATE_COMPILED if backend() == "compiled"
                  else BRUTE_GATE_PYTHON)
    ok = True
    print("n  ell  method          elapsed  expected  match")
    for n in range(n_lo, n_hi + 1, 2):
        ctx = make_field(n)
        t0 = time.time()
        rl = ell_n(ctx, "lattice")
        method = "lattice"
        value = rl.ell_n
        if n <= brute_gate:
            rb = ell_n(ctx, "brute")
            method = "brute+lattice"
            if rb.ell_n != rl.ell_n:
                ok = False
                method = "DISAGREE"
        elapsed = time.time() - t0
        expected = KNOWN_ELL.get(n)
        match = expected is None or value == expected
        ok &= match
        print(f"{n:<3d}{value:<5d}{method:<16s}{elapsed:7.2f}s  "
              f"{expected if expected is not None else '-':<9} "
              f"{'ok' if match else 'MISMATCH'}")
    return 0 if ok else 1


def cmd_stick(args) -> int:
    ctx = make_field(args.n, args.modulus)
    lo, hi = min(args.d1, args.d2), max(args.d1, args.d2)
    rec = nu_and_minimizers(ctx, lo, hi)
    print(f"nu({lo},{hi}) = {rec.nu}  lower_bound = {rec.lower_bound}")
    print(f"#minimizers = {len(rec.minimizers)}  #zero-slice = "
          f"{len(rec.j0_slice)}")
    fn = VectorialFn.binomial(ctx, lo, hi)
    maximal = classify.maximality_check(fn).maximal if ctx.m else False
    hyp = (maximal and classify.ell_exceeds_m(ctx)
           and wt2(lo, ctx.n) == 2 and wt2(hi, ctx.n) == 2)
    hrep = h_polynomial(rec, hyp)
    if hrep.maximal_checked:
        print(f"h identity: degree={hrep.degree} matches="
              f"{hrep.matches_expected} sumset_covers={hrep.sumset_covers}")
    else:
        print(f"h (raw): degree={hrep.degree} terms={len(hrep.exponents)}")
    failed = hrep.maximal_checked and not hrep.ok
    if ctx.m is not None:
        led = gcd_ledger(ctx, lo, hi, rec)
        if led is None:
            print("ledger: no witness pair (j, 2^m-1-j)")
        else:
            print(f"ledger: j={led.j_witness} s={led.s} t={led.t} k={led.k} "
                  f"u={led.u} r={led.r} gcd_identity="
                  f"{led.gcd_identity_holds}")
            failed |= not led.gcd_identity_holds
    if args.valuation:
        vrep = verify_valuation_law(fn, rec)
        print(f"valuation law: checked={vrep.checked} ok={vrep.ok}")
        failed |= not vrep.ok
    return 1 if failed else 0


def cmd_gauss(args) -> int:
    ctx = make_field(args.n, args.modulus)
    pctx = make_padic_ctx(ctx, args.kappa)
    rep = verify_stickelberger_and_fourier(pctx)
    print(f"precision 2^{pctx.kappa}; congruences="
          f"{rep.checked_congruences} products={rep.checked_products} "
          f"fourier={rep.checked_fourier} failures={len(rep.failures)}")
    for kind, where in rep.failures[:10]:
        print(f"  FAIL {kind} at {where}")
    return 0 if rep.ok else 1


def cmd_verify(args) -> int:
    ctx = make_field(args.n, args.modulus)
    if args.inject_fault:
        if args.inject_fault != "exp-table":
            raise ValueError("supported fault: exp-table")
        ctx = verify.corrupt_field_tables(ctx)
    names = sorted(verify.SUITES) if args.suite == "all" else [args.suite]
    results = verify.run_suites(ctx, names)
    failures = 0
    for r in results:
        status = "ok" if r.ok else "FAIL"
        print(f"[{status}] {r.suite}: {r.name}"
              + (f" ({r.detail})" if r.detail and not r.ok else ""))
        failures += 0 if r.ok else 1
    print(f"# {len(results)} checks, {failures} failures", file=sys.stderr)
    return 0 if failures == 0 else 1


# -- parser ----------------------------------------------------------------------


def _hex_int(text: str) -> int:
    return int(text, 0)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="bentbin",
        description="Spectral, differential and 2-adic invariants of "
                    "binomial power functions over GF(2^n).")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, modulus=True, fmt=True):
        sp.add_argument("--n", type=int, required=True,
                        help="extension degree")
        if modulus:
            sp.add_argument("--modulus", type=_hex_int, default=None,
                            help="modulus polynomial, e.g. 0x13 "
                                 "(default: registry)")
        if fmt:
            sp.add_argument("--format", choices=["json", "csv", "text"],
                            default="text")

    sp = sub.add_parser("field", help="field facts and table status")
    common(sp)
    sp.set_defaults(func=cmd_field)

    sp = sub.add_parser("analyze", help="full record for one binomial")
    common(sp)
    sp.add_argument("--d1", type=int, required=True)
    sp.add_argument("--d2", type=int, required=True)
    sp.add_argument("--cache", default=None, help="cache directory")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("search", help="exhaustive binomial search")
    common(sp)
    sp.add_argument("--max-weight", type=int, default=None,
                    help="restrict exponents to this 2-adic weight")
    sp.add_argument("--jobs", type=int, default=default_jobs())
    sp.add_argument("--cache", default=None)
    sp.add_argument("--full", action="store_true",
                    help="full analysis record per pair (slower)")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("ell", help="Frobenius-orbit linear complexity")
    common(sp, fmt=False)
    sp.add_argument("--method", choices=["brute", "lattice", "both"],
                    default="both")
    sp.set_defaults(func=cmd_ell)

    sp = sub.add_parser("table1", help="reproduce the orbit-complexity table")
    sp.add_argument("--n-min", type=int, default=4)
    sp.add_argument("--n-max", type=int, default=16)
    sp.add_argument("--long-run", action="store_true")
    sp.set_defaults(func=cmd_table1)

    sp = sub.add_parser("stick", help="weight functional, minimizers, ledger")
    common(sp, fmt=False)
    sp.add_argument("--d1", type=int, required=True)
    sp.add_argument("--d2", type=int, required=True)
    sp.add_argument("--valuation", action="store_true",
                    help="exhaustive valuation-law check")
    sp.set_defaults(func=cmd_stick)

    sp = sub.add_parser("gauss", help="2-adic Gauss sum congruences")
    common(sp, fmt=False)
    sp.add_argument("--kappa", type=int, default=None)
    sp.set_defaults(func=cmd_gauss)

    sp = sub.add_parser("verify", help="named verification suites")
    common(sp, fmt=False)
    sp.add_argument("--suite", default="all",
                    help="suite name or 'all' "
                         f"({', '.join(sorted(verify.SUITES))})")
    sp.add_argument("--inject-fault", default=None,
                    help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ResourceGateError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
