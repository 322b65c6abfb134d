"""Backend agreement: the compiled kernels must match the numpy fallback."""

import numpy as np
import pytest

from bentbin import make_field
from bentbin._kernels import py as kpy

kc = pytest.importorskip("bentbin._kernels._core")


def test_fwht_agreement():
    rng = np.random.default_rng(0)
    for size in (2, 8, 64, 1024):
        a = rng.integers(-9, 9, size).astype(np.int64)
        b = a.copy()
        kc.fwht(a)
        kpy.fwht(b)
        assert np.array_equal(a, b)
    mat = rng.integers(-9, 9, (16, 64)).astype(np.int64)
    mat2 = mat.copy()
    kc.fwht(mat)
    kpy.fwht(mat2)
    assert np.array_equal(mat, mat2)


def test_fwht_involution_up_to_scale():
    rng = np.random.default_rng(1)
    a = rng.integers(-9, 9, 256).astype(np.int64)
    b = a.copy()
    kc.fwht(b)
    kc.fwht(b)
    assert np.array_equal(b, 256 * a)


@pytest.mark.parametrize("n", [4, 7, 11])
def test_exp_fill_agreement(n):
    ctx = make_field(n)
    a = np.zeros(ctx.N, np.uint32)
    b = np.zeros(ctx.N, np.uint32)
    kc.exp_fill(n, ctx.N, ctx.modulus, ctx.alpha, a)
    kpy.exp_fill(n, ctx.N, ctx.modulus, ctx.alpha, b)
    assert np.array_equal(a, b)


@pytest.mark.parametrize("pair", [(3, 10), (3, 24), (7, 50), (1, 62)])
def test_walsh_scan_agreement(pair):
    ctx = make_field(6)
    from bentbin.boolfun import VectorialFn
    fn = VectorialFn.binomial(ctx, *pair)
    r1 = kc.walsh_scan(fn.table, ctx.mask_table, 6, True)
    r2 = kpy.walsh_scan(fn.table, ctx.mask_table, 6, True)
    for x, y in zip(r1, r2):
        assert np.array_equal(x, y)


def test_ddt_scan_agreement():
    ctx = make_field(6)
    from bentbin.boolfun import VectorialFn
    fn = VectorialFn.binomial(ctx, 5, 44)
    d1, rm1, da1, h1 = kc.ddt_scan(fn.table, 6)
    d2, rm2, da2, h2 = kpy.ddt_scan(fn.table, 6)
    assert d1 == d2
    assert np.array_equal(rm1, rm2)
    assert np.array_equal(da1, da2)
    assert np.array_equal(h1, h2)


@pytest.mark.parametrize("args", [(63, 3, 10), (63, 3, 24), (255, 5, 20),
                                  (255, 7, 200)])
def test_nu_agreement(args):
    from bentbin.stickelberger import weight_table
    N, d1, d2 = args
    n = N.bit_length()
    w = weight_table(n)
    v1 = kc.nu_scan(N, d1, d2, w)
    v2 = kpy.nu_scan(N, d1, d2, w)
    assert v1 == v2
    m1 = kc.nu_minimizers(N, d1, d2, w, v1)
    m2 = kpy.nu_minimizers(N, d1, d2, w, v1)
    assert set(zip(m1[0].tolist(), m1[1].tolist())) == \
        set(zip(m2[0].tolist(), m2[1].tolist()))


@pytest.mark.parametrize("pair", [(3, 10), (3, 24), (5, 12), (1, 9)])
def test_quad_dims_agreement(pair):
    ctx = make_field(6)
    from bentbin.quadratic import quad_contributions
    slots, apows = quad_contributions(ctx, pair)
    a = kc.quad_dims(6, 63, ctx._log, ctx._exp, slots, apows)
    b = kpy.quad_dims(6, 63, ctx._log, ctx._exp, slots, apows)
    assert np.array_equal(a, b)


@pytest.mark.parametrize("n", [4, 6, 8, 10, 12, 14])
def test_ell_scan_agreement(n):
    from bentbin import gf2poly
    from bentbin.ellmap import _sigma_columns
    ctx = make_field(n)
    steps = np.array([n // p for p in gf2poly.prime_factors(n)], np.int64)
    assert kc.ell_scan(n, _sigma_columns(ctx), steps) == \
        kpy.ell_scan(n, _sigma_columns(ctx), steps)
