"""Finite-precision arithmetic in the unramified 2-adic lift of GF(2^n).

The ring is Z[x] / (modulus(x), 2^kappa) where the field modulus is read
with integer coefficients.  Elements are length-n int64 coefficient
vectors; reduction mod 2 recovers field arithmetic.  The module hosts
the multiplicative (Teichmuller) lifts, 2-adic Gauss sums, and the
congruence checks that tie Gauss-sum valuations to 2-adic weights
(Stickelberger's congruence, the conjugate-product identity, and
Fourier inversion of the additive character).

This is a verifier, not a hot path: exactness over speed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf2n import FieldContext
from .stickelberger import wt2


class PadicContext:
    """Z_2[x]/(modulus, 2^kappa); elements are int64 coefficient arrays."""

    def __init__(self, base: FieldContext, kappa: int):
        if kappa < 2:
            raise ValueError("precision kappa must be at least 2")
        n = base.n
        if 2 * kappa + n.bit_length() >= 63:
            raise ValueError("precision too large for exact int64 products")
        self.base = base
        self.kappa = kappa
        self.n = n
        self.mod_mask = (1 << kappa) - 1
        # reduction rows: x^(n+i) = sum_j red[i, j] x^j  (mod modulus, 2^kappa)
        low = [(base.modulus >> j) & 1 for j in range(n)]
        rows = []
        prev = [(-c) % (1 << kappa) for c in low]
        rows.append(prev)
        for _ in range(n - 2):
            nxt = [0] + prev[:-1]
            top = prev[-1]
            if top:
                for j in range(n):
                    nxt[j] = (nxt[j] + top * rows[0][j]) % (1 << kappa)
            rows.append(nxt)
            prev = nxt
        self._red = np.array(rows, dtype=np.int64) if rows else \
            np.zeros((0, n), dtype=np.int64)
        self._teich = None

    # -- element helpers -------------------------------------------------

    def lift(self, a: int) -> np.ndarray:
        """Naive 0/1-coefficient lift of a field element."""
        return np.array([(a >> j) & 1 for j in range(self.n)], dtype=np.int64)

    def scalar(self, c: int) -> np.ndarray:
        e = np.zeros(self.n, dtype=np.int64)
        e[0] = c % (1 << self.kappa)
        return e

    def reduce_mod2(self, e: np.ndarray) -> int:
        bits = np.asarray(e) & 1
        return int(sum(int(b) << j for j, b in enumerate(bits)))

    def add(self, a, b):
        return (a + b) & self.mod_mask

    def neg(self, a):
        return (-a) & self.mod_mask

    def mul(self, a, b):
        """Ring product; supports stacked operands via broadcasting."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        n = self.n
        prod = np.einsum("...i,...j->...ij", a, b)
        full = np.zeros(prod.shape[:-2] + (2 * n - 1,), dtype=np.int64)
        for i in range(n):
            full[..., i:i + n] += prod[..., i, :]
        full %= (1 << self.kappa)
        out = full[..., :n] + full[..., n:] @ self._red
        return out & self.mod_mask

    def pow(self, a, e: int):
        r = self.scalar(1)
        if np.ndim(a) > 1:
            r = np.broadcast_to(r, np.shape(a)).copy()
        base = np.array(a, dtype=np.int64)
        while e:
            if e & 1:
                r = self.mul(r, base)
            base = self.mul(base, base)
            e >>= 1
        return r

    def v2(self, e) -> int | None:
        """2-adic valuation: min coefficient valuation; None if 0 mod 2^kappa."""
        e = np.asarray(e) & self.mod_mask
        nz = e[e != 0]
        if nz.size == 0:
            return None
        low = nz & -nz
        return int(np.log2(low.astype(np.float64)).min())

    def congruent(self, a, b, k: int) -> bool:
        """a == b mod 2^k (coefficientwise), for k <= kappa."""
        mask = (1 << k) - 1
        return bool((((np.asarray(a) - np.asarray(b)) & mask) == 0).all())

    # -- Teichmuller lifts -------------------------------------------------

    def teichmuller(self, a: int) -> np.ndarray:
        """The multiplicative lift: iterate y -> y^(2^n) until fixed."""
        y = self.lift(a)
        for _ in range(self.kappa + 1):
            z = y
            for _ in range(self.n):
                z = self.mul(z, z)
            if (z == y).all():
                return y
            y = z
        raise AssertionError("Teichmuller iteration did not stabilize")

    def teichmuller_all(self) -> np.ndarray:
        """Lifts of every field element, shape (2^n, n); row index = element."""
        if self._teich is None:
            size = 1 << self.n
            y = np.stack([self.lift(a) for a in range(size)])
            for _ in range(self.kappa + 1):
                z = y
                for _ in range(self.n):
                    z = self.mul(z, z)
                if (z == y).all():
                    break
                y = z
            else:  # pragma: no cover
                raise AssertionError("Teichmuller iteration did not stabilize")
            y.setflags(write=False)
            self._teich = y
        return self._teich


def make_padic_ctx(ctx: FieldContext, kappa: int | None = None) -> PadicContext:
    """Default precision n + 2 covers the strongest needed congruence."""
    return PadicContext(ctx, ctx.n + 2 if kappa is None else kappa)


@dataclass
class GaussSumValue:
    j: int
    value: np.ndarray
    valuation: int | None
    conclusive: bool


def _psi_signs(ctx: FieldContext) -> np.ndarray:
    return np.array([1 - 2 * ctx.trace(x) for x in range(1 << ctx.n)],
                    dtype=np.int64)


def gauss_sum(pctx: PadicContext, j: int) -> GaussSumValue:
    """G(omega^-j) = sum over x != 0 of psi(x) * omega(x)^(-j)."""
    ctx = pctx.base
    N = ctx.N
    if not 0 <= j < N:
        raise ValueError(f"character index {j} outside [0, {N})")
    lifts = pctx.teichmuller_all()
    psi = _psi_signs(ctx)
    acc = np.zeros(pctx.n, dtype=np.int64)
    for i in range(N):
        x = int(ctx._exp[i]) if ctx._exp is not None else ctx.pow(ctx.alpha, i)
        k = (-j * i) % N
        y = int(ctx._exp[k]) if ctx._exp is not None else ctx.pow(ctx.alpha, k)
        acc += psi[x] * lifts[y]
    value = acc & pctx.mod_mask
    val = pctx.v2(value)
    conclusive = pctx.kappa >= wt2(j, ctx.n) + 2
    return GaussSumValue(j, value, val, conclusive)


def gauss_sums_all(pctx: PadicContext) -> list[GaussSumValue]:
    """All N Gauss sums, batched over the exponent grid."""
    ctx = pctx.base
    N = ctx.N
    lifts = pctx.teichmuller_all()
    psi = _psi_signs(ctx)
    if ctx._exp is not None:
        exp = ctx._exp.astype(np.int64)
    else:
        exp = np.array([ctx.pow(ctx.alpha, i) for i in range(N)], np.int64)
    signs = psi[exp]                       # psi(alpha^i)
    lift_pow = lifts[exp]                  # omega(alpha^i), shape (N, n)
    i_idx = np.arange(N, dtype=np.int64)
    out = []
    for j in range(N):
        sel = lift_pow[(-j * i_idx) % N]
        value = (signs[:, None] * sel).sum(axis=0) & pctx.mod_mask
        val = pctx.v2(value)
        out.append(GaussSumValue(j, value, val,
                                 pctx.kappa >= wt2(j, ctx.n) + 2))
    return out


@dataclass
class PadicReport:
    checked_congruences: int
    checked_products: int
    checked_fourier: int
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_stickelberger_and_fourier(pctx: PadicContext) -> PadicReport:
    """The three classical identities at working precision.

    For every index i: G(omega^-i) == 2^wt(i) mod 2^(wt(i)+1) and
    G(omega^-i) * G(omega^i) == 2^n; for every x != 0:
    N * psi(x) == sum_j G(omega^-j) omega^j(x) mod 2^kappa.
    """
    ctx = pctx.base
    N = ctx.N
    if pctx.kappa < ctx.n + 2:
        raise ValueError("Fourier check wants kappa >= n + 2")
    sums = gauss_sums_all(pctx)
    failures = []
    n_cong = n_prod = n_four = 0
    for gs in sums:
        w = wt2(gs.j, ctx.n)
        n_cong += 1
        if not pctx.congruent(gs.value, pctx.scalar(1 << w), w + 1):
            failures.append(("congruence", gs.j))
        if gs.j != 0:
            n_prod += 1
            conj = sums[(N - gs.j) % N]
            prod = pctx.mul(gs.value, conj.value)
            if not pctx.congruent(prod, pctx.scalar(1 << ctx.n), pctx.kappa):
                failures.append(("product", gs.j))
    # Fourier inversion at every nonzero x = alpha^i
    lift_pow = np.stack([s.value for s in sums])  # row j = G(omega^-j)
    if ctx._exp is not None:
        exp = ctx._exp.astype(np.int64)
    else:
        exp = np.array([ctx.pow(ctx.alpha, i) for i in range(N)], np.int64)
    lifts = pctx.teichmuller_all()
    omega_pow = lifts[exp]                 # omega(alpha^k), shape (N, n)
    psi = _psi_signs(ctx)
    j_idx = np.arange(N, dtype=np.int64)
    for i in range(N):
        x = int(exp[i])
        rhs = pctx.mul(lift_pow, omega_pow[(i * j_idx) % N]).sum(axis=0) \
            & pctx.mod_mask
        lhs = pctx.scalar(N * int(psi[x]))
        n_four += 1
        if not pctx.congruent(lhs, rhs, pctx.kappa):
            failures.append(("fourier", x))
    return PadicReport(n_cong, n_prod, n_four, failures)
