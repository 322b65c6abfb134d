"""Pure-Python / numpy fallback implementations of the hot kernels.

Same signatures as the compiled module `_core`; selected at import time
by the package __init__ when the extension is unavailable (or when
BENTBIN_PURE=1 is set).
"""

from __future__ import annotations

import numpy as np

_BIG = np.int64(1) << 62


def _parity(v):
    v = v.astype(np.uint32, copy=True)
    v ^= v >> 16
    v ^= v >> 8
    v ^= v >> 4
    v ^= v >> 2
    v ^= v >> 1
    return (v & 1).astype(np.int64)


def fwht(a: np.ndarray) -> None:
    """In-place Walsh-Hadamard transform along the last axis (int64)."""
    size = a.shape[-1]
    h = 1
    while h < size:
        view = a.reshape(*a.shape[:-1], -1, 2, h)
        x = view[..., 0, :].copy()
        view[..., 0, :] += view[..., 1, :]
        view[..., 1, :] = x - view[..., 1, :]
        h <<= 1


def exp_fill(n: int, N: int, modulus: int, alpha: int, out: np.ndarray) -> None:
    """Fill out[i] = alpha^i in GF(2^n) (sequential antilog table build)."""
    top = 1 << n
    x = 1
    for i in range(N):
        out[i] = x
        acc = 0
        a = alpha
        y = x
        while a:
            if a & 1:
                acc ^= y
            a >>= 1
            y <<= 1
            if y & top:
                y ^= modulus
        x = acc


def walsh_scan(tt: np.ndarray, masks: np.ndarray, n: int, want_sos: bool):
    """Per-component Walsh statistics for all a in [0, 2^n).

    Returns (w0, max_abs, plateau_k, sum_w4):
      w0[a]        Walsh value at the zero shift,
      max_abs[a]   max |W| over all shifts,
      plateau_k[a] amount k when the row's nonzero |W| values are all
                   equal (then |W| = 2^((n+k)/2)), else -1,
      sum_w4[a]    sum of W^4 over the row (None unless want_sos).
    """
    size = 1 << n
    w0 = np.empty(size, np.int64)
    mx = np.empty(size, np.int64)
    pk = np.empty(size, np.int16)
    s4 = np.empty(size, np.int64) if want_sos else None
    chunk = max(1, (1 << 21) // size)
    tt_row = tt[None, :]
    for lo in range(0, size, chunk):
        hi = min(size, lo + chunk)
        rows = 1 - 2 * _parity(masks[lo:hi, None] & tt_row)
        fwht(rows)
        w0[lo:hi] = rows[:, 0]
        ab = np.abs(rows)
        m = ab.max(axis=1)
        mx[lo:hi] = m
        mn = np.where(ab > 0, ab, _BIG).min(axis=1)
        plateaued = (mn == m) & (m > 0) & ((m & (m - 1)) == 0)
        logs = np.array([int(v).bit_length() - 1 for v in m], np.int16)
        pk[lo:hi] = np.where(plateaued, 2 * logs - n, -1).astype(np.int16)
        if want_sos:
            sq = rows * rows
            s4[lo:hi] = (sq * sq).sum(axis=1)
    return w0, mx, pk, s4


def ddt_scan(tt: np.ndarray, n: int):
    """Difference-distribution statistics.

    Returns (delta, row_max, delta_a0, hist) where hist counts DDT entry
    values over all rows a != 0 and all output differences.
    """
    size = 1 << n
    row_max = np.zeros(size, np.int64)
    delta_a0 = np.zeros(size, np.int64)
    hist = np.zeros(size + 1, np.int64)
    row_max[0] = size
    delta_a0[0] = size
    for a in range(1, size):
        diffs = tt[np.arange(size) ^ a] ^ tt
        cnt = np.bincount(diffs, minlength=size)
        row_max[a] = cnt.max()
        delta_a0[a] = cnt[0]
        hist += np.bincount(cnt, minlength=size + 1)
    delta = int(row_max[1:].max()) if size > 1 else 0
    return delta, row_max, delta_a0, hist


def nu_scan(N: int, d1: int, d2: int, w: np.ndarray) -> int:
    """Minimum of wt(j1) + wt(j2) + wt(-d1*j1 - d2*j2) over (j1,j2) != 0."""
    w64 = w.astype(np.int64)
    j2 = np.arange(N, dtype=np.int64)
    base = (-d2 * j2) % N
    best = 1 << 30
    for j1 in range(N):
        v = w64[j1] + w64 + w64[(base - d1 * j1) % N]
        if j1 == 0:
            m = int(v[1:].min()) if N > 1 else best
        else:
            m = int(v.min())
        if m < best:
            best = m
    return best


def nu_minimizers(N: int, d1: int, d2: int, w: np.ndarray, nu: int):
    """All (j1, j2) pairs attaining the minimum nu."""
    w64 = w.astype(np.int64)
    j2 = np.arange(N, dtype=np.int64)
    base = (-d2 * j2) % N
    out1 = []
    out2 = []
    for j1 in range(N):
        v = w64[j1] + w64 + w64[(base - d1 * j1) % N]
        hits = np.nonzero(v == nu)[0]
        for j in hits:
            if j1 == 0 and j == 0:
                continue
            out1.append(j1)
            out2.append(int(j))
    return np.array(out1, np.int64), np.array(out2, np.int64)


def quad_dims(n: int, N: int, logt: np.ndarray, expt: np.ndarray,
              slots: np.ndarray, apows: np.ndarray) -> np.ndarray:
    """dim ker L_a for every a, for the quadratic-part linear map L_a.

    The map is described by contribution pairs: coeffs[slots[i]] ^=
    a^(2^apows[i]).  dims[0] = n by convention (zero map).
    """
    size = 1 << n
    logl = [int(v) for v in logt]
    expl = [int(v) for v in expt]
    slot_l = [int(v) for v in slots]
    apow_l = [int(v) for v in apows]
    # P[i][j] = (basis_j)^(2^i)
    P = [[expl[((1 << i) * logl[1 << j]) % N] for j in range(n)]
         for i in range(n)]
    Plog = [[logl[P[i][j]] for j in range(n)] for i in range(n)]
    dims = np.zeros(size, np.uint8)
    dims[0] = n
    pow2 = [(1 << k) % N for k in range(n)]
    for a in range(1, size):
        la = logl[a]
        fr = [expl[(la * p) % N] for p in pow2]
        coeffs = [0] * n
        for s, p in zip(slot_l, apow_l):
            coeffs[s] ^= fr[p]
        rank = 0
        basis = []
        for j in range(n):
            col = 0
            for i in range(n):
                ci = coeffs[i]
                if ci:
                    col ^= expl[(logl[ci] + Plog[i][j]) % N]
            for b in basis:
                col = min(col, col ^ b)
            if col:
                basis.append(col)
                basis.sort(reverse=True)
                rank += 1
        dims[a] = n - rank
    return dims


def ell_scan(n: int, sigma_cols: np.ndarray, sub_steps: np.ndarray):
    """Minimum Frobenius-orbit rank over field generators, with a witness.

    sigma_cols[j] = (basis_j)^2; sub_steps lists n/p for the primes p | n.
    Returns (min_rank, witness).
    """
    size = 1 << n
    idx = np.arange(size, dtype=np.uint32)
    cols = sigma_cols.astype(np.uint32)
    cur = idx.copy()
    mn = idx.copy()
    nongen = np.zeros(size, dtype=bool)
    steps = set(int(s) for s in sub_steps)
    for step in range(1, n):
        nxt = np.zeros(size, np.uint32)
        for j in range(n):
            nxt ^= np.where((cur >> j) & 1, cols[j], 0).astype(np.uint32)
        cur = nxt
        np.minimum(mn, cur, out=mn)
        if step in steps:
            nongen |= cur == idx
    reps = np.nonzero((mn == idx) & ~nongen & (idx != 0))[0]
    col_l = [int(c) for c in cols]
    best = n + 1
    witness = 0
    for rep in reps:
        g = int(rep)
        vecs = []
        x = g
        for _ in range(n):
            vecs.append(x)
            y = 0
            xx = x
            while xx:
                low = xx & -xx
                y ^= col_l[low.bit_length() - 1]
                xx ^= low
            x = y
        r = 0
        basis = []
        for v in vecs:
            for b in basis:
                v = min(v, v ^ b)
            if v:
                basis.append(v)
                basis.sort(reverse=True)
                r += 1
                if r >= best:
                    break
        if r < best:
            best = r
            witness = g
    return best, witness
