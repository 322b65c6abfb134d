import itertools

import pytest

from bentbin import make_field
from bentbin.boolfun import VectorialFn, spectral_summary
from bentbin.quadratic import (derive_La, is_quadratic_binomial, kernel_dims,
                               nonbent_set_quadratic)
from bentbin.stickelberger import wt2


def component_value(fn, a, x):
    return fn.ctx.trace(fn.ctx.mul(a, fn(x)))


def polar_form(fn, a, x, z):
    return (component_value(fn, a, x ^ z) ^ component_value(fn, a, x)
            ^ component_value(fn, a, z))


@pytest.fixture(scope="module")
def ctx6():
    return make_field(6)


def test_bilinear_identity_exhaustive(ctx6):
    # B_a(x, z) = Tr(z * L_a(x)) over every (x, z) for a spread of a
    fn = VectorialFn.binomial(ctx6, 3, 10)
    for a in (1, 2, 7, 9, 35, 62):
        L = derive_La(fn, a)
        for x in range(64):
            lx = L(x)
            for z in range(64):
                assert polar_form(fn, a, x, z) == ctx6.trace(ctx6.mul(z, lx))


def test_polar_form_symmetric_alternating(ctx6):
    fn = VectorialFn.binomial(ctx6, 5, 12)
    for a in (3, 21):
        for x in range(0, 64, 5):
            assert polar_form(fn, a, x, x) == 0
            for z in range(0, 64, 7):
                assert polar_form(fn, a, x, z) == polar_form(fn, a, z, x)


def test_subfield_components_degenerate(ctx6):
    # conjugate-shifted family: L_a vanishes identically on the subfield
    fn = VectorialFn.binomial(ctx6, 3, 24)
    for a in ctx6.subfield_elements():
        L = derive_La(fn, a)
        assert all(c == 0 for c in L.coeffs)


def test_trace_one_witness_not_bent(ctx6):
    fn = VectorialFn.binomial(ctx6, 3, 24)
    sf, _ = nonbent_set_quadratic(fn)
    found = False
    for a in range(64):
        if ctx6.rel_trace(a) == 1 and derive_La(fn, a)(1) == 0:
            assert a in sf
            found = True
    assert found


def test_maximal_member_kernels(ctx6):
    fn = VectorialFn.binomial(ctx6, 3, 10)
    sf, plat = nonbent_set_quadratic(fn)
    assert sorted(sf) == ctx6.subfield_elements()
    for a in (5, 11, 40):
        assert derive_La(fn, a).kernel_dim() == 0
    assert plat[0] == 6


def test_kernel_dims_zero_component():
    ctx = make_field(4)
    fn = VectorialFn.binomial(ctx, 3, 6)
    dims = kernel_dims(fn)
    assert dims[0] == 4


def test_rejects_cubic_exponents(ctx6):
    fn = VectorialFn.binomial(ctx6, 7, 10)  # wt(7) = 3
    assert not is_quadratic_binomial(fn)
    with pytest.raises(ValueError):
        derive_La(fn, 1)


def test_kernel_path_matches_transform_everywhere():
    # all weight <= 2 pairs at n = 4 and n = 6, every component
    for n in (4, 6):
        ctx = make_field(n)
        exps = [d for d in range(1, ctx.N) if wt2(d, n) <= 2]
        for d1, d2 in itertools.combinations(exps, 2):
            fn = VectorialFn.binomial(ctx, d1, d2)
            dims = kernel_dims(fn)
            ss = spectral_summary(fn, want_sos=False)
            for a in range(1 << n):
                assert ss.plateau[a] == int(dims[a]), (n, d1, d2, a)


def test_kernel_basis_annihilates(ctx6):
    fn = VectorialFn.binomial(ctx6, 3, 24)
    for a in (1, 9, 33):
        L = derive_La(fn, a)
        for v in L.kernel_basis():
            assert L(v) == 0
