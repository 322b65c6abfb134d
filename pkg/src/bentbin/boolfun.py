"""Vectorial functions over GF(2^n): Walsh spectra, differential and image data.

Component spectra are computed with a fast Walsh-Hadamard transform over
the additive group; the trace pairing Tr(b*x) is handled by a linear
re-indexing of the transform output, so the transform itself runs on
plain coordinate parities.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels, gf2mat
from .gf2n import FieldContext, ResourceGateError

TABLE_GATE = 20      # largest n for which truth tables are materialized
SCAN_GATE = 16       # largest n for a default full component scan
SOS_GATE = 12        # sum-of-fourth-powers fits int64 up to here


class VectorialFn:
    """A function GF(2^n) -> GF(2^n), either x^d1 + x^d2 or a truth table."""

    def __init__(self, ctx: FieldContext, kind: str, d1=None, d2=None,
                 table=None):
        self.ctx = ctx
        self.kind = kind
        self.d1 = d1
        self.d2 = d2
        self._table = table
        self.monomial_d = None

    @classmethod
    def binomial(cls, ctx: FieldContext, d1: int, d2: int) -> "VectorialFn":
        N = ctx.N
        for d in (d1, d2):
            if not 1 <= d <= N - 1:
                raise ValueError(f"exponent {d} outside [1, {N - 1}]")
        if d1 == d2:
            raise ValueError("d1 = d2 gives the zero function; rejected")
        return cls(ctx, "binomial", d1=d1, d2=d2)

    @classmethod
    def monomial(cls, ctx: FieldContext, d: int) -> "VectorialFn":
        if not 1 <= d <= ctx.N - 1:
            raise ValueError(f"exponent {d} outside [1, {ctx.N - 1}]")
        fn = cls.from_table(ctx, _power_table(ctx, d))
        fn.monomial_d = d
        return fn

    @classmethod
    def from_table(cls, ctx: FieldContext, values) -> "VectorialFn":
        tbl = np.asarray(values, dtype=np.uint32)
        if tbl.shape != (1 << ctx.n,):
            raise ValueError(f"table must have 2^{ctx.n} entries")
        if tbl.max(initial=0) >> ctx.n:
            raise ValueError("table entry outside the field")
        return cls(ctx, "table", table=tbl)

    @property
    def table(self) -> np.ndarray:
        if self._table is None:
            if self.ctx.n > TABLE_GATE:
                raise ResourceGateError(
                    f"truth table materialization gated to n <= {TABLE_GATE}")
            t1 = _power_table(self.ctx, self.d1)
            t2 = _power_table(self.ctx, self.d2)
            self._table = t1 ^ t2
            self._table.setflags(write=False)
        return self._table

    def __call__(self, x: int) -> int:
        if self.kind == "binomial" and self._table is None:
            return self.ctx.pow(x, self.d1) ^ self.ctx.pow(x, self.d2)
        return int(self.table[x])

    def frobenius_commutes(self) -> bool:
        """F(x^2) == F(x)^2 for all x (true for any GF(2)-coefficient poly)."""
        ctx = self.ctx
        if self.kind == "binomial":
            return True
        tbl = self.table
        fr = ctx.frob_table(1)
        return bool(np.array_equal(tbl[fr], fr[tbl]))

    def exponents(self):
        """(d1, d2) for binomials, (d,) for monomial tables, else None."""
        if self.kind == "binomial":
            return (self.d1, self.d2)
        if self.monomial_d is not None:
            return (self.monomial_d,)
        return None

    def __repr__(self):
        if self.kind == "binomial":
            return f"VectorialFn(n={self.ctx.n}, x^{self.d1}+x^{self.d2})"
        if self.monomial_d is not None:
            return f"VectorialFn(n={self.ctx.n}, x^{self.monomial_d})"
        return f"VectorialFn(n={self.ctx.n}, table)"


def _power_table(ctx: FieldContext, d: int) -> np.ndarray:
    """Truth table of x -> x^d, vectorized through the log/antilog tables."""
    if ctx._exp is None:
        out = np.array([ctx.pow(x, d) for x in range(1 << ctx.n)],
                       dtype=np.uint32)
        return out
    out = np.zeros(1 << ctx.n, dtype=np.uint32)
    idx = (np.arange(ctx.N, dtype=np.int64) * d) % ctx.N
    out[ctx._exp] = ctx._exp[idx]
    return out


# -- Walsh spectra -----------------------------------------------------------


def walsh_row(fn: VectorialFn, a: int) -> np.ndarray:
    """W_{F_a}(b) for every b, indexed by b."""
    ctx = fn.ctx
    size = 1 << ctx.n
    am = np.uint32(ctx.mask_table[a])
    v = (am & fn.table).astype(np.uint32)
    v ^= v >> np.uint32(16)
    v ^= v >> np.uint32(8)
    v ^= v >> np.uint32(4)
    v ^= v >> np.uint32(2)
    v ^= v >> np.uint32(1)
    buf = 1 - 2 * (v & 1).astype(np.int64)
    _kernels.fwht(buf)
    return buf[ctx.mask_table]


@dataclass
class SpectralSummary:
    """Per-function Walsh data over all components."""
    s_f: frozenset
    nonlinearity: int | None
    T: int | None
    plateau: dict
    sos: dict
    is_plateaued_fn: bool
    w0: np.ndarray = field(repr=False)
    max_abs: np.ndarray = field(repr=False)

    @property
    def sf_size(self) -> int:
        return len(self.s_f)


def component_stats(fn: VectorialFn, want_sos: bool = False,
                    force: bool = False):
    """Raw per-component arrays (w0, max_abs, plateau_k, sum_w4).

    The full scan over every component costs O(n * 4^n) and is refused
    above SCAN_GATE unless force=True.
    """
    ctx = fn.ctx
    if ctx.n > SCAN_GATE and not force:
        raise ResourceGateError(
            f"full component scan gated to n <= {SCAN_GATE}; "
            "pass force=True to run anyway")
    if want_sos and ctx.n > SOS_GATE:
        raise ResourceGateError(
            f"sum-of-squares indicator gated to n <= {SOS_GATE}")
    return _kernels.walsh_scan(fn.table, ctx.mask_table, ctx.n, want_sos)


def spectral_summary(fn: VectorialFn, want_sos: bool | None = None,
                     force: bool = False) -> SpectralSummary:
    """S_F, nonlinearity, plateau amounts, T and the fourth-moment map.

    Bent/plateau bookkeeping needs even n; for odd n those fields are
    None and only the Walsh-derived numbers are filled.
    """
    ctx = fn.ctx
    if want_sos is None:
        want_sos = ctx.n <= SOS_GATE
    w0, mx, pk, s4 = component_stats(fn, want_sos, force)
    size = 1 << ctx.n
    nonlinearity = (1 << (ctx.n - 1)) - int(mx[1:].max()) // 2
    plateau = {a: (int(pk[a]) if pk[a] >= 0 else None) for a in range(size)}
    is_plateaued = bool((pk[1:] >= 0).all())
    sos = {}
    if want_sos:
        for u in range(1, size):
            v = int(s4[u])
            assert v % size == 0
            sos[u] = v >> ctx.n
    if ctx.m is None:
        return SpectralSummary(frozenset(), nonlinearity, None, plateau, sos,
                               is_plateaued, w0, mx)
    bent = pk == 0
    s_f = frozenset(int(a) for a in np.nonzero(~bent)[0])
    sub = ctx.subfield_mask
    T = int(((w0 != 0) & sub)[1:].sum())
    return SpectralSummary(s_f, nonlinearity, T, plateau, sos,
                           is_plateaued, w0, mx)


def check_SF_subspace(S) -> tuple[bool, list[int]]:
    """True iff S is an F_2-linear subspace; returns a basis when true."""
    elems = set(int(x) for x in S)
    if not elems:
        raise ValueError("empty set")
    if 0 not in elems:
        return False, []
    basis = gf2mat.reduce_basis(sorted(elems))
    if len(elems) == 1 << len(basis):
        return True, basis
    return False, []


# -- differential uniformity ---------------------------------------------------


@dataclass
class DiffReport:
    delta: int
    delta_set: frozenset
    ddt_row_max: np.ndarray
    is_apn: bool
    spectrum: dict
    collisions: int

    @property
    def delta_set_size(self) -> int:
        return len(self.delta_set)


def diff_report(fn: VectorialFn) -> DiffReport:
    """Differential uniformity, the difference set and the DDT spectrum."""
    ctx = fn.ctx
    delta, row_max, d_a0, hist = _kernels.ddt_scan(fn.table, ctx.n)
    delta_set = frozenset(int(a) for a in np.nonzero(d_a0)[0] if a != 0)
    spectrum = {int(v): int(c) for v, c in enumerate(hist) if c}
    collisions = (1 << ctx.n) + int(d_a0[1:].sum())
    return DiffReport(delta, delta_set, row_max, delta == 2, spectrum,
                      collisions)


# -- image set ---------------------------------------------------------------


@dataclass
class ImageReport:
    image_size: int
    s: int | None
    c: int | None
    formula_size: int | None
    agrees: bool | None
    collisions: int
    collision_lower_bound: int


def image_report(fn: VectorialFn) -> ImageReport:
    """Image size by enumeration plus the coset-counting formula data.

    For binomials with even n the report carries s = gcd(d1, d2, N) and
    c = #{F(alpha^i)^((2^m-1)/s) : i = 1..2^m}; when s divides 2^m - 1
    the predicted size (2^m-1)c/s + 1 and its agreement flag are filled.
    """
    ctx = fn.ctx
    tbl = fn.table
    values, counts = np.unique(tbl, return_counts=True)
    image_size = int(values.size)
    collisions = int((counts.astype(np.int64) ** 2).sum())
    lower = -(-(1 << (2 * ctx.n)) // image_size)  # ceil(2^2n / #Im)
    s = c = formula = agrees = None
    if fn.kind == "binomial" and ctx.m is not None:
        import math
        s = math.gcd(math.gcd(fn.d1, fn.d2), ctx.N)
        half = (1 << ctx.m) - 1
        if half % s == 0:
            e = half // s
            seen = set()
            x = 1
            for _ in range(1 << ctx.m):
                x = ctx.mul(x, ctx.alpha)
                seen.add(ctx.pow(fn(x), e))
            c = len(seen)
            formula = half * c // s + 1
            agrees = formula == image_size
    return ImageReport(image_size, s, c, formula, agrees, collisions, lower)


def walsh_abs_histogram(fn: VectorialFn) -> np.ndarray:
    """Counts of |W_{F_a}(b)| over all a != 0 and all b (index = value)."""
    ctx = fn.ctx
    size = 1 << ctx.n
    if ctx.n > SCAN_GATE:
        raise ResourceGateError(
            f"full spectrum histogram gated to n <= {SCAN_GATE}")
    hist = np.zeros(size + 1, np.int64)
    masks = ctx.mask_table
    tbl = fn.table[None, :]
    chunk = max(1, (1 << 21) // size)
    for lo in range(1, size, chunk):
        hi = min(size, lo + chunk)
        v = (masks[lo:hi, None] & tbl).astype(np.uint32)
        v ^= v >> np.uint32(16)
        v ^= v >> np.uint32(8)
        v ^= v >> np.uint32(4)
        v ^= v >> np.uint32(2)
        v ^= v >> np.uint32(1)
        rows = 1 - 2 * (v & 1).astype(np.int64)
        _kernels.fwht(rows)
        np.abs(rows, out=rows)
        hist += np.bincount(rows.ravel(), minlength=size + 1)
    return hist


# -- zero-shift Walsh helpers (cheap, no transform) ---------------------------


def w0_column(fn: VectorialFn) -> np.ndarray:
    """W_{F_a}(0) for every a: 2^n - 2 * weight(F_a)."""
    ctx = fn.ctx
    size = 1 << ctx.n
    masks = ctx.mask_table
    tbl = fn.table[None, :]
    out = np.empty(size, np.int64)
    chunk = max(1, (1 << 22) // size)
    for lo in range(0, size, chunk):
        v = (masks[lo:lo + chunk, None] & tbl).astype(np.uint32)
        v ^= v >> np.uint32(16)
        v ^= v >> np.uint32(8)
        v ^= v >> np.uint32(4)
        v ^= v >> np.uint32(2)
        v ^= v >> np.uint32(1)
        out[lo:lo + chunk] = size - 2 * (v & 1).astype(np.int64).sum(axis=1)
    return out
