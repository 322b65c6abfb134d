# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled hot-loop kernels; signatures mirror the numpy fallback."""

import numpy as np

cimport numpy as cnp
from libc.stdint cimport int16_t, int64_t, uint8_t, uint32_t, uint64_t

cnp.import_array()


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int _parity64(uint64_t v) nogil:
    return __builtin_popcountll(v) & 1


cdef void _fwht_row(int64_t* v, Py_ssize_t size) nogil:
    cdef Py_ssize_t h = 1, i, j
    cdef int64_t x, y
    while h < size:
        i = 0
        while i < size:
            for j in range(i, i + h):
                x = v[j]
                y = v[j + h]
                v[j] = x + y
                v[j + h] = x - y
            i += 2 * h
        h <<= 1


def fwht(arr):
    """In-place Walsh-Hadamard transform along the last axis (int64)."""
    cdef int64_t[:, ::1] m2
    cdef int64_t[::1] m1
    cdef Py_ssize_t i
    if arr.ndim == 1:
        m1 = arr
        with nogil:
            _fwht_row(&m1[0], m1.shape[0])
    elif arr.ndim == 2:
        m2 = arr
        with nogil:
            for i in range(m2.shape[0]):
                _fwht_row(&m2[i, 0], m2.shape[1])
    else:
        raise ValueError("fwht supports 1-D or 2-D arrays")


def exp_fill(int n, long long N, unsigned long long modulus,
             unsigned long long alpha, cnp.uint32_t[::1] out):
    """out[i] = alpha^i in GF(2^n)."""
    cdef uint64_t top = 1ULL << n
    cdef uint64_t x = 1, acc, a, y
    cdef long long i
    with nogil:
        for i in range(N):
            out[i] = <uint32_t> x
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


def walsh_scan(const cnp.uint32_t[::1] tt, const cnp.uint32_t[::1] masks, int n,
               bint want_sos):
    """Per-component Walsh statistics (see the fallback docstring)."""
    cdef Py_ssize_t size = 1 << n
    w0_arr = np.empty(size, np.int64)
    mx_arr = np.empty(size, np.int64)
    pk_arr = np.empty(size, np.int16)
    s4_arr = np.empty(size, np.int64) if want_sos else None
    cdef int64_t[::1] w0 = w0_arr
    cdef int64_t[::1] mx = mx_arr
    cdef int16_t[::1] pk = pk_arr
    cdef int64_t[::1] s4 = s4_arr if want_sos else w0_arr  # dummy alias
    buf_arr = np.empty(size, np.int64)
    cdef int64_t[::1] buf = buf_arr
    cdef Py_ssize_t a, b
    cdef uint64_t am
    cdef int64_t w, av, first, m, sq, acc4
    cdef bint plateaued
    cdef int k
    with nogil:
        for a in range(size):
            am = masks[a]
            for b in range(size):
                buf[b] = 1 - 2 * _parity64(am & tt[b])
            _fwht_row(&buf[0], size)
            w0[a] = buf[0]
            first = 0
            m = 0
            plateaued = True
            acc4 = 0
            for b in range(size):
                w = buf[b]
                av = w if w >= 0 else -w
                if av > m:
                    m = av
                if av != 0:
                    if first == 0:
                        first = av
                    elif av != first:
                        plateaued = False
                if want_sos:
                    sq = w * w
                    acc4 += sq * sq
            mx[a] = m
            if want_sos:
                s4[a] = acc4
            if plateaued and m > 0 and (m & (m - 1)) == 0:
                k = 0
                while (m >> k) > 1:
                    k += 1
                pk[a] = <int16_t> (2 * k - n)
            else:
                pk[a] = -1
    return w0_arr, mx_arr, pk_arr, (s4_arr if want_sos else None)


def ddt_scan(const cnp.uint32_t[::1] tt, int n):
    """Difference-distribution statistics (see the fallback docstring)."""
    cdef Py_ssize_t size = 1 << n
    row_max_arr = np.zeros(size, np.int64)
    d_a0_arr = np.zeros(size, np.int64)
    hist_arr = np.zeros(size + 1, np.int64)
    cnt_arr = np.zeros(size, np.int64)
    cdef int64_t[::1] row_max = row_max_arr
    cdef int64_t[::1] d_a0 = d_a0_arr
    cdef int64_t[::1] hist = hist_arr
    cdef int64_t[::1] cnt = cnt_arr
    cdef Py_ssize_t a, x
    cdef int64_t best, v
    cdef uint32_t d
    row_max[0] = size
    d_a0[0] = size
    cdef int64_t delta = 0
    with nogil:
        for a in range(1, size):
            for x in range(size):
                cnt[x] = 0
            for x in range(size):
                d = tt[x ^ a] ^ tt[x]
                cnt[d] += 1
            best = 0
            for x in range(size):
                v = cnt[x]
                hist[v] += 1
                if v > best:
                    best = v
            row_max[a] = best
            d_a0[a] = cnt[0]
            if best > delta:
                delta = best
    return int(delta), row_max_arr, d_a0_arr, hist_arr


def nu_scan(long long N, long long d1, long long d2, const cnp.uint8_t[::1] w):
    """Minimum three-term weight over nonzero index pairs, with pruning."""
    cdef long long best = 1 << 30
    cdef long long j1, j2, t, v, w1, base
    cdef long long dd1 = d1 % N, dd2 = d2 % N
    with nogil:
        for j1 in range(N):
            w1 = w[j1]
            if w1 >= best:
                continue
            base = (N - (dd1 * j1) % N) % N
            for j2 in range(N):
                if j1 == 0 and j2 == 0:
                    continue
                v = w1 + w[j2]
                if v >= best:
                    continue
                t = (base + N - (dd2 * j2) % N) % N
                v += w[t]
                if v < best:
                    best = v
    return int(best)


def nu_minimizers(long long N, long long d1, long long d2,
                  const cnp.uint8_t[::1] w, long long nu):
    """Collect every pair attaining nu (two-pass: count, then fill)."""
    cdef long long dd1 = d1 % N, dd2 = d2 % N
    cdef long long j1, j2, t, v, w1, base, count = 0, idx = 0
    with nogil:
        for j1 in range(N):
            w1 = w[j1]
            base = (N - (dd1 * j1) % N) % N
            for j2 in range(N):
                if j1 == 0 and j2 == 0:
                    continue
                t = (base + N - (dd2 * j2) % N) % N
                if w1 + w[j2] + w[t] == nu:
                    count += 1
    out1_arr = np.empty(count, np.int64)
    out2_arr = np.empty(count, np.int64)
    cdef int64_t[::1] out1 = out1_arr
    cdef int64_t[::1] out2 = out2_arr
    with nogil:
        for j1 in range(N):
            w1 = w[j1]
            base = (N - (dd1 * j1) % N) % N
            for j2 in range(N):
                if j1 == 0 and j2 == 0:
                    continue
                t = (base + N - (dd2 * j2) % N) % N
                if w1 + w[j2] + w[t] == nu:
                    out1[idx] = j1
                    out2[idx] = j2
                    idx += 1
    return out1_arr, out2_arr


def quad_dims(int n, long long N, const cnp.int64_t[::1] logt,
              const cnp.uint32_t[::1] expt, const cnp.int64_t[::1] slots,
              const cnp.int64_t[::1] apows):
    """dim ker L_a for every a (see the fallback docstring)."""
    cdef Py_ssize_t size = 1 << n
    dims_arr = np.zeros(size, np.uint8)
    cdef uint8_t[::1] dims = dims_arr
    dims[0] = <uint8_t> n
    cdef int64_t[64] pow2
    cdef int64_t[64] fr
    cdef uint64_t[64] coeffs
    cdef uint64_t[64] cols
    cdef int64_t[4096] plog   # (basis_j)^(2^i) logs, n*n <= 64*64
    cdef Py_ssize_t a, i, j, t
    cdef long long la
    cdef int nterms = slots.shape[0]
    cdef uint64_t col, b, ci
    cdef int rank
    for i in range(n):
        pow2[i] = (1 << i) % N
        for j in range(n):
            plog[i * n + j] = logt[expt[(pow2[i] * logt[1 << j]) % N]]
    with nogil:
        for a in range(1, size):
            la = logt[a]
            for i in range(n):
                fr[i] = expt[(la * pow2[i]) % N]
            for i in range(n):
                coeffs[i] = 0
            for t in range(nterms):
                coeffs[slots[t]] ^= <uint64_t> fr[apows[t]]
            rank = 0
            for j in range(n):
                col = 0
                for i in range(n):
                    ci = coeffs[i]
                    if ci:
                        col ^= expt[(logt[ci] + plog[i * n + j]) % N]
                # reduce against current basis stored in cols[0..rank)
                for i in range(rank):
                    b = col ^ cols[i]
                    if b < col:
                        col = b
                if col:
                    # insert keeping descending order
                    i = rank
                    while i > 0 and cols[i - 1] < col:
                        cols[i] = cols[i - 1]
                        i -= 1
                    cols[i] = col
                    rank += 1
            dims[a] = <uint8_t> (n - rank)
    return dims_arr


def ell_scan(int n, const cnp.uint32_t[::1] sigma_cols, const cnp.int64_t[::1] sub_steps):
    """Minimum orbit rank over field generators, with a witness."""
    cdef Py_ssize_t size = 1 << n
    cdef uint64_t[64] orbit
    cdef uint64_t[64] basis
    cdef uint64_t x, y, v, b, g
    cdef Py_ssize_t i, j, step
    cdef int r, best = n + 1
    cdef uint64_t witness = 0
    cdef int nsub = sub_steps.shape[0]
    cdef bint skip
    with nogil:
        for g in range(1, <uint64_t> size):
            x = g
            skip = False
            for i in range(n):
                orbit[i] = x
                y = 0
                v = x
                while v:
                    j = 0
                    while not (v >> j) & 1:
                        j += 1
                    y ^= sigma_cols[j]
                    v &= v - 1
                x = y
                if i > 0 and orbit[i] < g:
                    skip = True
                    break
            if skip:
                continue
            # generator test: x^(2^(n/p)) != x for every prime p | n
            for i in range(nsub):
                step = sub_steps[i]
                if orbit[step] == g:
                    skip = True
                    break
            if skip:
                continue
            r = 0
            for i in range(n):
                v = orbit[i]
                for j in range(r):
                    b = v ^ basis[j]
                    if b < v:
                        v = b
                if v:
                    j = r
                    while j > 0 and basis[j - 1] < v:
                        basis[j] = basis[j - 1]
                        j -= 1
                    basis[j] = v
                    r += 1
                    if r >= best:
                        break
            if r < best:
                best = r
                witness = g
    return int(best), int(witness)
