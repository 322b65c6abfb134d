"""2-adic weight machinery for Walsh valuations of binomials.

The three-term weight functional V(j1, j2) = wt(j1) + wt(j2) +
wt(-d1*j1 - d2*j2) over index pairs mod N controls the 2-adic valuation
of every Walsh coefficient of x^d1 + x^d2: v_2(W) >= nu := min V, with
strictness at (a, b) exactly when the minimizer polynomial g_a vanishes
at b.  This module computes nu, the minimizer set and its slices, the
support polynomial of the zero slice, and the gcd ledger attached to the
witness pair (j, 2^m - 1 - j).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .boolfun import VectorialFn, walsh_row
from .gf2n import FieldContext, ResourceGateError

NU_GATE = 14  # the nu scan is O(N^2)


def wt2(j: int, n: int) -> int:
    """2-adic Hamming weight of j mod (2^n - 1); wt2(0) = 0."""
    return (j % ((1 << n) - 1)).bit_count()


def weight_table(n: int) -> np.ndarray:
    N = (1 << n) - 1
    idx = np.arange(N, dtype=np.uint32)
    w = np.zeros(N, dtype=np.uint8)
    for b in range(n):
        w += ((idx >> b) & 1).astype(np.uint8)
    return w


@dataclass
class StickelbergerRecord:
    """nu, its minimizer set and the zero-slice data for one (d1, d2)."""
    d1: int
    d2: int
    n: int
    nu: int
    minimizers: list
    j0_slice: list
    h_poly: dict          # integer exponent j1+j2 -> GF(2) coefficient 1
    sumset: set           # all j1+j2 over the zero slice, no cancellation
    jt_slices: dict = field(repr=False, default_factory=dict)

    @property
    def lower_bound(self) -> int:
        return -(-self.n // max(wt2(self.d1, self.n), wt2(self.d2, self.n)))


def nu_and_minimizers(ctx: FieldContext, d1: int, d2: int) -> StickelbergerRecord:
    """Exact nu over all index pairs plus the full minimizer set."""
    N = ctx.N
    for d in (d1, d2):
        if not 1 <= d <= N - 1:
            raise ValueError(f"exponent {d} outside [1, {N - 1}]")
    if ctx.n > NU_GATE:
        raise ResourceGateError(f"nu scan gated to n <= {NU_GATE}")
    w = weight_table(ctx.n)
    nu = int(_kernels.nu_scan(N, d1, d2, w))
    j1s, j2s = _kernels.nu_minimizers(N, d1, d2, w, nu)
    minimizers = list(zip((int(v) for v in j1s), (int(v) for v in j2s)))
    rec = _build_record(ctx.n, d1, d2, nu, minimizers)
    _validate_record(ctx.n, rec)
    return rec


def nu_and_minimizers_monomial(ctx: FieldContext, d: int) -> StickelbergerRecord:
    """Degenerate mode with j2 fixed to 0 (single-power analogue)."""
    N = ctx.N
    if not 1 <= d <= N - 1:
        raise ValueError(f"exponent {d} outside [1, {N - 1}]")
    w = weight_table(ctx.n)
    vals = [int(w[j]) + int(w[(-d * j) % N]) for j in range(1, N)]
    nu = min(vals)
    minimizers = [(j, 0) for j in range(1, N)
                  if int(w[j]) + int(w[(-d * j) % N]) == nu]
    return _build_record(ctx.n, d, 0, nu, minimizers)


def _build_record(n, d1, d2, nu, minimizers) -> StickelbergerRecord:
    N = (1 << n) - 1
    jt: dict[int, list] = {}
    for j1, j2 in minimizers:
        t = (-(d1 * j1 + d2 * j2)) % N
        jt.setdefault(t, []).append((j1, j2))
    j0 = jt.get(0, [])
    h: dict[int, int] = {}
    sums = set()
    for j1, j2 in j0:
        e = j1 + j2
        sums.add(e)
        if e in h:
            del h[e]
        else:
            h[e] = 1
    return StickelbergerRecord(d1, d2, n, nu, minimizers, j0, h, sums, jt)


def _validate_record(n, rec) -> None:
    N = (1 << n) - 1
    mins = set(rec.minimizers)
    for j1, j2 in rec.minimizers:
        if ((2 * j1) % N, (2 * j2) % N) not in mins:
            raise AssertionError("minimizer set not closed under doubling")
    if rec.nu < rec.lower_bound:
        raise AssertionError("nu beats the weight lower bound")


# -- valuation law -------------------------------------------------------------


@dataclass
class ValuationReport:
    nu: int
    checked: int
    violations: list
    g_value_errors: list

    @property
    def ok(self) -> bool:
        return not self.violations and not self.g_value_errors


def verify_valuation_law(fn: VectorialFn, rec: StickelbergerRecord,
                         a_values=None) -> ValuationReport:
    """Exhaustively check v2(W_{F_a}(b)) >= nu with strictness iff g_a(b) = 0.

    A failure is reported, not raised: it would falsify either the record
    or the transform, and the report is the audit trail.
    """
    ctx = fn.ctx
    if ctx._exp is None:
        raise ResourceGateError("valuation check needs a tabled field")
    N = ctx.N
    size = 1 << ctx.n
    # group minimizers: exponent of b is t, coefficient is sum of a^(j1+j2)
    groups: dict[int, list] = {}
    for j1, j2 in rec.minimizers:
        t = (-(fn.d1 * j1 + fn.d2 * j2)) % N
        groups.setdefault(t, []).append((j1 + j2) % N)
    log_b = ctx._log[1:size]  # discrete logs of all nonzero b
    violations = []
    g_errors = []
    checked = 0
    a_iter = range(1, size) if a_values is None else a_values
    for a in a_iter:
        row = walsh_row(fn, a)
        g_all = np.zeros(size, np.uint32)
        for t, sums in groups.items():
            c = 0
            for e in sums:
                c ^= ctx.pow(a, e)
            if not c:
                continue
            g_all[1:] ^= ctx._exp[(ctx._log[c] + t * log_b) % N].astype(
                np.uint32)
            if t == 0:
                g_all[0] ^= np.uint32(c)
        bad = np.nonzero(g_all > 1)[0]
        for b in bad:
            g_errors.append((a, int(b), int(g_all[b])))
        w = row
        nz = w != 0
        low = (w & -w).astype(np.float64)
        v2 = np.where(nz, np.log2(np.where(nz, low, 1)).astype(np.int64),
                      np.int64(1 << 30))  # sentinel for +inf
        strict = v2 > rec.nu
        ok = (v2 >= rec.nu) & (strict == (g_all == 0)) & (g_all <= 1)
        checked += size
        for b in np.nonzero(~ok & (g_all <= 1))[0]:
            violations.append((a, int(b), int(w[b]), int(g_all[b])))
    return ValuationReport(rec.nu, checked, violations, g_errors)


# -- the support polynomial of the zero slice ---------------------------------


@dataclass
class HPolyReport:
    exponents: set
    degree: int
    maximal_checked: bool
    expected_exponents: set | None
    matches_expected: bool | None
    sumset_covers: bool | None
    reduction_mismatch: list

    @property
    def ok(self) -> bool:
        if not self.maximal_checked:
            return True
        return bool(self.matches_expected and self.sumset_covers
                    and not self.reduction_mismatch)


def h_polynomial(rec: StickelbergerRecord, maximal: bool) -> HPolyReport:
    """Build h over the zero slice; compare with (x^(2^n)-x)/(x^(2^m)-x) + 1.

    Exponents are the integer sums j1 + j2 (not reduced mod N); a pair
    whose sum differs from its reduction is reported as a mismatch rather
    than silently reduced.  The comparison runs only when the function is
    maximal (callers also require the orbit-complexity hypothesis).
    """
    n = rec.n
    m = n // 2
    N = (1 << n) - 1
    exps = set(rec.h_poly)
    degree = max(exps) if exps else -1
    mismatch = [(j1, j2) for j1, j2 in rec.j0_slice
                if (j1 + j2) != (j1 + j2) % N]
    if not maximal:
        return HPolyReport(exps, degree, False, None, None, None, mismatch)
    half = (1 << m) - 1
    expected = {i * half for i in range(1, (1 << m) + 1)}
    covers = expected <= rec.sumset
    return HPolyReport(exps, degree, True, expected, exps == expected,
                       covers, mismatch)


# -- gcd ledger ----------------------------------------------------------------


@dataclass
class GcdLedger:
    s: int
    t: int
    k: int
    u: int
    r: int
    j_witness: int
    all_witnesses: list
    gcd_identity_holds: bool


def gcd_ledger(ctx: FieldContext, d1: int, d2: int,
               rec: StickelbergerRecord) -> GcdLedger | None:
    """Ledger (s, t, k, u, r) from the least witness pair (j, 2^m-1-j).

    Returns None when no witness exists, which falsifies the minimum-
    weight structure for this function.  Requires d1 < d2 so the derived
    k is positive.
    """
    if ctx.m is None:
        raise ValueError("gcd ledger requires even n")
    if d1 >= d2:
        raise ValueError("gcd ledger expects d1 < d2")
    m = ctx.m
    half = (1 << m) - 1
    mins = set(rec.minimizers)
    witnesses = [j for j in range(half + 1) if (j, half - j) in mins]
    if not witnesses:
        return None
    j = witnesses[0]
    s = math.gcd(math.gcd(d1, d2), ctx.N)
    t = math.gcd(j, half)
    if (d2 - d1) * t % half:
        raise AssertionError("witness does not satisfy the slope relation")
    k = (d2 - d1) * t // half
    r = math.gcd(k, (1 << m) + 1)
    u = math.gcd(t, k)
    identity = math.gcd(d2 - d1, ctx.N) == (half // t) * u * r
    ledger = GcdLedger(s, t, k, u, r, j, witnesses, identity)
    if math.gcd(u, r) != 1:
        raise AssertionError("u and r are not coprime")
    return ledger
