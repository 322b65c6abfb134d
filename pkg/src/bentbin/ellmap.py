"""Linear complexity of Frobenius orbits: ell(gamma) and ell(n).

ell(gamma) is the GF(2)-dimension of the span of gamma, gamma^2,
gamma^4, ...; ell(n) minimizes it over gamma that generate the full
field.  Two independent methods are provided: a brute scan over
Frobenius-orbit representatives, and a divisor-lattice method that walks
the monic divisors f of x^n - 1 in increasing degree and counts, by
inclusion-exclusion on subspace dimensions, whether some field generator
has annihilator exactly f.  They agree on every tested n, which is the
ground truth this module is held to.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels, gf2mat, gf2poly
from .gf2n import FieldContext, ResourceGateError

BRUTE_GATE_COMPILED = 26
BRUTE_GATE_PYTHON = 20
LATTICE_GATE = 30

# ell(n) for the even degrees this package reproduces routinely.
KNOWN_ELL = {4: 3, 6: 4, 8: 5, 10: 6, 12: 5, 14: 5, 16: 9, 18: 8, 20: 7,
             22: 12, 24: 7, 26: 14}


@dataclass
class EllRecord:
    n: int
    ell_n: int
    method: str
    witness: int
    f_gamma: int
    per_gamma: dict | None = None


def ell_gamma(ctx: FieldContext, gamma: int) -> tuple[int, int]:
    """(ell(gamma), f_gamma): orbit rank and the minimal annihilator of sigma.

    The annihilator is found from the first linear dependency among
    gamma, sigma(gamma), sigma^2(gamma), ...; its degree is the rank.
    """
    if gamma == 0:
        return 0, 1
    n = ctx.n
    rows: list[tuple[int, int]] = []  # (reduced vector, combination tag)
    x = gamma
    orbit = []
    for i in range(n + 1):
        orbit.append(x)
        v, tag = x, 1 << i
        for rv, rt in rows:
            if v ^ rv < v:
                v ^= rv
                tag ^= rt
        if v == 0:
            f = tag
            assert gf2poly.degree(f) == i
            return i, f
        rows.append((v, tag))
        rows.sort(key=lambda t: t[0], reverse=True)
        x = ctx.mul(x, x)
    raise AssertionError("no dependency within n + 1 iterates")


def _sigma_columns(ctx: FieldContext) -> np.ndarray:
    return np.array([ctx.mul(1 << j, 1 << j) for j in range(ctx.n)],
                    dtype=np.uint32)


def ell_n_brute(ctx: FieldContext, per_gamma: bool = False) -> EllRecord:
    """Scan one representative per Frobenius orbit, skipping non-generators."""
    n = ctx.n
    gate = (BRUTE_GATE_COMPILED if _kernels.backend() == "compiled"
            else BRUTE_GATE_PYTHON)
    if n > gate:
        raise ResourceGateError(
            f"brute ell scan gated to n <= {gate} on the "
            f"{_kernels.backend()} backend")
    if per_gamma:
        if n > 14:
            raise ResourceGateError("per-orbit map gated to n <= 14")
        table = {}
        best, wit = n + 1, 0
        seen = set()
        for g in range(1, 1 << n):
            if g in seen:
                continue
            orbit = {g}
            x = ctx.mul(g, g)
            while x != g:
                orbit.add(x)
                x = ctx.mul(x, x)
            seen |= orbit
            r, _ = ell_gamma(ctx, g)
            table[g] = r
            if ctx.is_generator(g) and r < best:
                best, wit = r, g
        _, f = ell_gamma(ctx, wit)
        return EllRecord(n, best, "brute", wit, f, table)
    steps = np.array([n // p for p in gf2poly.prime_factors(n)], np.int64)
    best, wit = _kernels.ell_scan(n, _sigma_columns(ctx), steps)
    _, f = ell_gamma(ctx, int(wit))
    return EllRecord(n, int(best), "brute", int(wit), f)


def _kernel_dim_matrix(ctx: FieldContext, f: int) -> list[int]:
    """Columns of f(sigma) in the polynomial basis."""
    n = ctx.n
    sigma_cols = [ctx.mul(1 << j, 1 << j) for j in range(n)]
    acc = [0] * n
    power = [1 << j for j in range(n)]  # sigma^0 = identity
    k = 0
    while f >> k:
        if (f >> k) & 1:
            acc = [a ^ p for a, p in zip(acc, power)]
        power = [gf2mat.apply_columns(sigma_cols, c) for c in power]
        k += 1
    return acc


def ell_n_lattice(ctx: FieldContext) -> EllRecord:
    """Divisor-lattice method over x^n - 1.

    For each monic divisor f in increasing degree, count the gamma with
    annihilator exactly f that generate the field, using
    dim(ker g(sigma) for g | x^n - 1) = deg g and inclusion-exclusion
    over the maximal proper divisors of f and the maximal subfields.
    """
    n = ctx.n
    if n > LATTICE_GATE:
        raise ResourceGateError(f"lattice method gated to n <= {LATTICE_GATE}")
    xn1 = (1 << n) | 1  # x^n - 1
    primes = gf2poly.prime_factors(n)
    subfield_polys = [(1 << (n // p)) | 1 for p in primes]
    for f in gf2poly.divisors(xn1):
        d = gf2poly.degree(f)
        if d < 1:
            continue
        constraints = []
        for p in gf2poly.factor(f):
            constraints.append(gf2poly.divmod_(f, p)[0])
        for sp in subfield_polys:
            constraints.append(gf2poly.gcd(f, sp))
        count = 0
        k = len(constraints)
        for mask in range(1 << k):
            g = f
            bits = 0
            mm = mask
            idx = 0
            while mm:
                if mm & 1:
                    g = gf2poly.gcd(g, constraints[idx])
                    bits += 1
                mm >>= 1
                idx += 1
            count += (-1) ** bits * (1 << gf2poly.degree(g))
        if count > 0:
            wit = _lattice_witness(ctx, f)
            return EllRecord(n, d, "lattice", wit, f)
    raise AssertionError("no divisor admits a generator")  # pragma: no cover


def _lattice_witness(ctx: FieldContext, f: int) -> int:
    """A generator gamma with annihilator exactly f, from ker f(sigma)."""
    basis = gf2mat.kernel_basis(_kernel_dim_matrix(ctx, f), ctx.n)
    maximal_cols = [_kernel_dim_matrix(ctx, gf2poly.divmod_(f, p)[0])
                    for p in gf2poly.factor(f)]
    for combo in range(1, 1 << len(basis)):
        gamma = 0
        mm = combo
        idx = 0
        while mm:
            if mm & 1:
                gamma ^= basis[idx]
            mm >>= 1
            idx += 1
        if not ctx.is_generator(gamma):
            continue
        if any(gf2mat.apply_columns(cc, gamma) == 0 for cc in maximal_cols):
            continue
        return gamma
    raise AssertionError("count was positive but no witness found")


def ell_n(ctx: FieldContext, method: str = "lattice",
          per_gamma: bool = False) -> EllRecord:
    if method == "brute":
        return ell_n_brute(ctx, per_gamma=per_gamma)
    if method == "lattice":
        return ell_n_lattice(ctx)
    raise ValueError(f"unknown method {method!r}")


@dataclass
class SufficientCondition:
    n: int
    guaranteed: bool
    reason: str
    bound: int | None = None


def sufficient_condition(n: int) -> SufficientCondition:
    """Structural conditions forcing ell(n) > n/2.

    Either n = 2p with p an odd prime and 2 a primitive root mod p, or
    n is a power of two (then ell(n) >= n/2 + 1).
    """
    if n % 2:
        raise ValueError("condition applies to even n")
    if n & (n - 1) == 0:
        return SufficientCondition(n, True, f"n = 2^{n.bit_length() - 1}",
                                   n // 2 + 1)
    p = n // 2
    if p > 2 and all(p % q for q in range(2, int(p ** 0.5) + 1)):
        # p odd prime; is 2 primitive mod p?
        order = 1
        v = 2 % p
        while v != 1:
            v = v * 2 % p
            order += 1
        if order == p - 1:
            return SufficientCondition(
                n, True, f"n = 2*{p}, 2 primitive mod {p}", p + 1)
        return SufficientCondition(
            n, False, f"2 has order {order} < {p - 1} mod {p}")
    return SufficientCondition(n, False, "n/2 is neither an odd prime "
                                         "nor is n a power of two")
