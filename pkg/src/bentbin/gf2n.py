"""Arithmetic in GF(2^n) with bit-packed polynomial-basis elements.

Field elements are plain Python ints in [0, 2^n): bit i is the
coefficient of x^i.  Addition is XOR.  A FieldContext is immutable
after construction and safe to share between threads; multiplication
goes through log/antilog tables for n <= TABLE_LIMIT and through
carry-less multiplication plus reduction above that.

The default modulus for each n is the least irreducible degree-n
polynomial in integer encoding order, persisted in moduli.txt
(one line per degree, `n=<int> modulus=0x<hex>`).  Invariants reported
by the rest of the package do not depend on the modulus choice; that
independence is tested separately through explicit field isomorphisms.
"""

from __future__ import annotations

from importlib import resources

import numpy as np

from . import gf2poly
from ._kernels import exp_fill

TABLE_LIMIT = 20
MIN_N, MAX_N = 2, 30


class ResourceGateError(RuntimeError):
    """A computation was refused because it exceeds a documented gate."""


def _load_registry() -> dict[int, int]:
    text = resources.files(__package__).joinpath("moduli.txt").read_text()
    table = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        n_part, m_part = line.split()
        table[int(n_part.split("=")[1])] = int(m_part.split("=")[1], 16)
    return table


_REGISTRY: dict[int, int] | None = None


def default_modulus(n: int) -> int:
    """Registry modulus for degree n (least irreducible, integer order)."""
    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = _load_registry()
    if n not in _REGISTRY:
        raise ValueError(f"no registry modulus for n={n}")
    return _REGISTRY[n]


class FieldContext:
    """Immutable description of GF(2^n): modulus, sizes, arithmetic tables."""

    def __init__(self, n: int, modulus: int | None = None,
                 tables: bool | None = None):
        if not MIN_N <= n <= MAX_N:
            raise ValueError(f"n must be in [{MIN_N}, {MAX_N}], got {n}")
        if modulus is None:
            modulus = default_modulus(n)
        if gf2poly.degree(modulus) != n:
            raise ValueError(
                f"modulus 0x{modulus:x} has degree {gf2poly.degree(modulus)}, "
                f"expected {n}")
        if not gf2poly.is_irreducible(modulus):
            raise ValueError(f"modulus 0x{modulus:x} is reducible")
        self.n = n
        self.m = n // 2 if n % 2 == 0 else None
        self.N = (1 << n) - 1
        self.modulus = modulus
        self.alpha = self._find_primitive()
        if tables is None:
            tables = n <= TABLE_LIMIT
        self._exp = self._log = self._exp2 = None
        if tables:
            self._build_tables()
        self.trace_mask = self._build_trace_mask()
        self._mask_table = None
        self._frob_tables: dict[int, np.ndarray] = {}

    # -- construction helpers ------------------------------------------------

    def _raw_mul(self, a: int, b: int) -> int:
        return gf2poly.mod(gf2poly.mul(a, b), self.modulus)

    def _raw_pow(self, x: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._raw_mul(r, x)
            x = self._raw_mul(x, x)
            e >>= 1
        return r

    def _find_primitive(self) -> int:
        primes = gf2poly.prime_factors(self.N) if self.N > 1 else []
        for g in range(2, 1 << self.n):
            if all(self._raw_pow(g, self.N // p) != 1 for p in primes):
                return g
        raise AssertionError("no primitive element found")  # pragma: no cover

    def _build_tables(self) -> None:
        exp = np.zeros(self.N, dtype=np.uint32)
        exp_fill(self.n, self.N, self.modulus, self.alpha, exp)
        log = np.zeros(1 << self.n, dtype=np.int64)
        log[exp] = np.arange(self.N, dtype=np.int64)
        log[0] = -1
        exp2 = np.concatenate([exp, exp[: self.N - 1]])
        for arr in (exp, log, exp2):
            arr.setflags(write=False)
        self._exp, self._log, self._exp2 = exp, log, exp2

    def _build_trace_mask(self) -> int:
        mask = 0
        for i in range(self.n):
            t = 0
            y = 1 << i
            for _ in range(self.n):
                t ^= y
                y = self.mul(y, y)
            if t not in (0, 1):  # pragma: no cover
                raise AssertionError("trace basis value not in GF(2)")
            mask |= t << i
        return mask

    # -- arithmetic ----------------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp2 is not None:
            return int(self._exp2[self._log[a] + self._log[b]])
        return self._raw_mul(a, b)

    def pow(self, x: int, e: int) -> int:
        """x^e with 0^0 = 1 and 0^e = 0 for e > 0; exponents mod N for x != 0."""
        if x == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ValueError("negative power of zero")
            return 0
        e %= self.N
        if self._exp is not None:
            return int(self._exp[(self._log[x] * e) % self.N])
        return self._raw_pow(x, e)

    def inv(self, x: int) -> int:
        return self.pow(x, -1)

    def frob(self, x: int, k: int = 1) -> int:
        """Frobenius iterate x^(2^k)."""
        return self.pow(x, pow(2, k % self.n, self.N)) if x else 0

    def trace(self, x: int) -> int:
        """Absolute trace into GF(2)."""
        return (x & self.trace_mask).bit_count() & 1

    def rel_trace(self, x: int) -> int:
        """Relative trace onto the half-degree subfield (even n only)."""
        if self.m is None:
            raise ValueError("relative trace requires even n")
        return x ^ self.frob(x, self.m)

    def is_generator(self, x: int) -> bool:
        """True iff x lies in no maximal proper subfield."""
        return all(self.frob(x, self.n // p) != x
                   for p in gf2poly.prime_factors(self.n))

    # -- derived tables ------------------------------------------------------

    def pairing_mask(self, b: int) -> int:
        """mu(b) with <mu(b), x> = Tr(b*x) for the coordinate dot product."""
        mask = 0
        for i in range(self.n):
            mask |= self.trace(self.mul(b, 1 << i)) << i
        return mask

    @property
    def mask_table(self) -> np.ndarray:
        """pairing_mask(b) for every b, as a read-only uint32 array."""
        if self._mask_table is None:
            size = 1 << self.n
            tbl = np.zeros(size, dtype=np.uint32)
            for j in range(self.n):
                step = 1 << j
                tbl[step: 2 * step] = tbl[:step] ^ np.uint32(
                    self.pairing_mask(1 << j))
            tbl.setflags(write=False)
            self._mask_table = tbl
        return self._mask_table

    def frob_table(self, k: int = 1) -> np.ndarray:
        """x -> x^(2^k) for all x, as a read-only uint32 array."""
        k %= self.n
        if k not in self._frob_tables:
            size = 1 << self.n
            cols = [self.frob(1 << j, k) for j in range(self.n)]
            tbl = np.zeros(size, dtype=np.uint32)
            for j in range(self.n):
                step = 1 << j
                tbl[step: 2 * step] = tbl[:step] ^ np.uint32(cols[j])
            tbl.setflags(write=False)
            self._frob_tables[k] = tbl
        return self._frob_tables[k]

    @property
    def subfield_mask(self) -> np.ndarray:
        """Boolean array marking the elements of GF(2^m) (even n)."""
        if self.m is None:
            raise ValueError("subfield mask requires even n")
        idx = np.arange(1 << self.n, dtype=np.uint32)
        return self.frob_table(self.m) == idx

    def subfield_elements(self) -> list[int]:
        return [int(x) for x in np.nonzero(self.subfield_mask)[0]]

    # -- misc ----------------------------------------------------------------

    def __repr__(self):
        return f"FieldContext(n={self.n}, modulus=0x{self.modulus:x})"

    def __eq__(self, other):
        return (isinstance(other, FieldContext)
                and (self.n, self.modulus) == (other.n, other.modulus))

    def __hash__(self):
        return hash((self.n, self.modulus))


def make_field(n: int, modulus: int | None = None) -> FieldContext:
    """Build a field context; verifies the modulus at construction."""
    return FieldContext(n, modulus)


def second_modulus(n: int) -> int:
    """Next irreducible after the registry default (for independence tests)."""
    start = default_modulus(n) + 1
    for f in range(start, 1 << (n + 1)):
        if gf2poly.is_irreducible(f):
            return f
    raise AssertionError("unreachable")  # pragma: no cover


def isomorphism_table(src: FieldContext, dst: FieldContext) -> np.ndarray:
    """Explicit field isomorphism src -> dst by root matching.

    Maps the residue class of x in src to a root of src.modulus in dst,
    extended linearly.  Gated to small n because it scans for the root.
    """
    if src.n != dst.n:
        raise ValueError("isomorphism requires equal degrees")
    if src.n > 16:
        raise ResourceGateError("isomorphism table gated to n <= 16")
    root = None
    for y in range(1 << dst.n):
        acc = 0
        f = src.modulus
        for i in range(gf2poly.degree(f), -1, -1):
            acc = dst.mul(acc, y) ^ ((f >> i) & 1)
        if acc == 0:
            root = y
            break
    if root is None:  # pragma: no cover
        raise AssertionError("modulus has no root in target field")
    size = 1 << src.n
    tbl = np.zeros(size, dtype=np.uint32)
    for j in range(src.n):
        step = 1 << j
        tbl[step: 2 * step] = tbl[:step] ^ np.uint32(dst.pow(root, j))
    tbl.setflags(write=False)
    return tbl


def generate_registry_lines(n_max: int = MAX_N) -> list[str]:
    """Recompute the registry file contents (used by the build check)."""
    return [f"n={n} modulus=0x{gf2poly.smallest_irreducible(n):x}"
            for n in range(MIN_N, n_max + 1)]
