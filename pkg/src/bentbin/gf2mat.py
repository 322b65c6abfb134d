"""Dense GF(2) linear algebra on machine-word rows.

A vector is an int whose bit j is coordinate j; a matrix is a list of
row ints.  Everything here is O(rows * cols / wordsize) bit operations,
which is what makes kernel-rank scans over all field elements cheap.
"""

from __future__ import annotations


def rank(vectors: list[int]) -> int:
    """Rank of the span of the given bit-vectors."""
    basis: list[int] = []
    r = 0
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
            r += 1
    return r


def reduce_basis(vectors) -> list[int]:
    """Row-reduced basis (descending leading bits) of the span."""
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return basis


def in_span(v: int, basis: list[int]) -> bool:
    for b in basis:
        v = min(v, v ^ b)
    return v == 0


def apply_columns(cols: list[int], v: int) -> int:
    """Image of vector v under the matrix whose j-th column is cols[j]."""
    r = 0
    while v:
        low = v & -v
        r ^= cols[low.bit_length() - 1]
        v ^= low
    return r


def matmul_columns(a_cols: list[int], b_cols: list[int]) -> list[int]:
    """Column representation of the product A @ B."""
    return [apply_columns(a_cols, c) for c in b_cols]


def kernel_basis(cols: list[int], n: int) -> list[int]:
    """Basis of {v : sum_j v_j * cols[j] = 0} for an n-column matrix.

    Column-elimination with an identity tag: whenever a column cancels
    to zero, its tag records a kernel vector.
    """
    work = [(cols[j], 1 << j) for j in range(n)]
    pivots: list[tuple[int, int]] = []  # (column value, tag), values nonzero
    kernel: list[int] = []
    for val, tag in work:
        for pv, pt in pivots:
            if val ^ pv < val:
                val ^= pv
                tag ^= pt
        if val == 0:
            kernel.append(tag)
        else:
            pivots.append((val, tag))
            pivots.sort(key=lambda t: t[0], reverse=True)
    return kernel
