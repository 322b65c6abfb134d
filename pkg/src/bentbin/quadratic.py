"""Bentness of quadratic components via the polar bilinear form.

For F = x^d1 + x^d2 with exponents of 2-adic weight at most 2, every
component F_a is quadratic, its polar form is B_a(x, z) = Tr(z * L_a(x))
for a linearized polynomial L_a, and F_a is bent exactly when L_a is
invertible.  The plateau amount of F_a equals dim ker L_a.  This turns
the S_F scan into one GF(2) rank computation per component, which beats
the transform for n >= 10 and is what makes large-n searches feasible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels, gf2mat
from .boolfun import VectorialFn
from .gf2n import FieldContext, ResourceGateError
from .stickelberger import wt2

QUAD_GATE = 20


@dataclass
class LinearizedPoly:
    """x -> sum_i coeffs[i] * x^(2^i) over GF(2^n)."""
    ctx: FieldContext
    coeffs: tuple

    def __call__(self, x: int) -> int:
        acc = 0
        y = x
        for c in self.coeffs:
            if c:
                acc ^= self.ctx.mul(c, y)
            y = self.ctx.mul(y, y)
        return acc

    def columns(self) -> list[int]:
        """Images of the basis vectors, as bit-vector ints."""
        return [self(1 << j) for j in range(self.ctx.n)]

    def kernel_dim(self) -> int:
        return self.ctx.n - gf2mat.rank(self.columns())

    def kernel_basis(self) -> list[int]:
        return gf2mat.kernel_basis(self.columns(), self.ctx.n)


def _term_decomposition(ctx: FieldContext, d: int) -> tuple[int, int] | None:
    """(u, v) with d = 2^u + 2^v, u > v, for weight-2 exponents; None if linear."""
    dn = d % ctx.N
    w = wt2(dn, ctx.n)
    if w == 1:
        return None
    if w != 2:
        raise ValueError(f"exponent {d} has 2-adic weight {w}, not <= 2")
    v = (dn & -dn).bit_length() - 1
    u = dn.bit_length() - 1
    return u, v


def quad_contributions(ctx: FieldContext, exps) -> tuple[np.ndarray, np.ndarray]:
    """Contribution recipe for L_a: pairs (slot, apow).

    A weight-2 term x^(2^u + 2^v) of a*F contributes (a x^(2^u))^(2^(n-v))
    and (a x^(2^v))^(2^(n-u)); a weight-1 term contributes nothing.  Each
    contribution XORs a^(2^apow) into the coefficient of x^(2^slot).
    """
    n = ctx.n
    slots = []
    apows = []
    for d in exps:
        uv = _term_decomposition(ctx, d)
        if uv is None:
            continue
        u, v = uv
        slots.append((u - v) % n)
        apows.append((n - v) % n)
        slots.append((v - u) % n)
        apows.append((n - u) % n)
    return np.array(slots, np.int64), np.array(apows, np.int64)


def derive_La(fn: VectorialFn, a: int) -> LinearizedPoly:
    """The linearized polynomial with B_a(x, z) = Tr(z * L_a(x))."""
    if fn.kind != "binomial":
        raise ValueError("quadratic path requires a binomial function")
    ctx = fn.ctx
    slots, apows = quad_contributions(ctx, (fn.d1, fn.d2))
    coeffs = [0] * ctx.n
    for s, p in zip(slots, apows):
        coeffs[int(s)] ^= ctx.frob(a, int(p))
    return LinearizedPoly(ctx, tuple(coeffs))


def kernel_dims(fn: VectorialFn) -> np.ndarray:
    """dim ker L_a for every a (dims[0] = n); gated to tabled fields."""
    ctx = fn.ctx
    if ctx._exp is None or ctx.n > QUAD_GATE:
        raise ResourceGateError(
            f"quadratic scan gated to tabled fields (n <= {QUAD_GATE})")
    slots, apows = quad_contributions(ctx, (fn.d1, fn.d2))
    if slots.size == 0:
        # both terms linear: every component is affine
        out = np.full(1 << ctx.n, ctx.n, np.uint8)
        return out
    return _kernels.quad_dims(ctx.n, ctx.N, ctx._log, ctx._exp, slots, apows)


def nonbent_set_quadratic(fn: VectorialFn):
    """(S_F, plateau map) from kernel ranks; exact match with the transform."""
    dims = kernel_dims(fn)
    s_f = frozenset(int(a) for a in np.nonzero(dims)[0])
    plateau = {a: int(dims[a]) for a in range(dims.size)}
    return s_f, plateau


def is_quadratic_binomial(fn: VectorialFn) -> bool:
    if fn.kind != "binomial":
        return False
    return (wt2(fn.d1, fn.ctx.n) <= 2 and wt2(fn.d2, fn.ctx.n) <= 2)
