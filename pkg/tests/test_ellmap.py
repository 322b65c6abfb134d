import pytest

from bentbin import gf2mat, gf2poly, make_field
from bentbin.ellmap import (KNOWN_ELL, _kernel_dim_matrix, ell_gamma, ell_n,
                            sufficient_condition)
from bentbin.gf2n import second_modulus


def test_ell_gamma_basics():
    ctx = make_field(4)
    assert ell_gamma(ctx, 0) == (0, 1)
    assert ell_gamma(ctx, 1) == (1, 0b11)  # annihilated by x + 1


def test_ell_gamma_orbit_constant():
    ctx = make_field(6)
    for g in range(64):
        r, _ = ell_gamma(ctx, g)
        assert r == ell_gamma(ctx, ctx.mul(g, g))[0]


def test_annihilator_divides_and_annihilates():
    for n in (4, 6, 8, 10):
        ctx = make_field(n)
        xn1 = (1 << n) | 1
        for g in range(0, 1 << n, max(1, (1 << n) // 128)):
            r, f = ell_gamma(ctx, g)
            assert gf2poly.degree(f) == r or g == 0
            assert gf2poly.mod(xn1, f) == 0
            # f(sigma) applied to g is zero
            acc = 0
            y = g
            for i in range(gf2poly.degree(f) + 1):
                if (f >> i) & 1:
                    acc ^= y
                y = ctx.mul(y, y)
            assert acc == 0


def test_kernel_dimension_equals_divisor_degree():
    for n in (6, 8, 12):
        ctx = make_field(n)
        for f in gf2poly.divisors((1 << n) | 1):
            if f == 1:
                continue
            cols = _kernel_dim_matrix(ctx, f)
            dim = len(gf2mat.kernel_basis(cols, n))
            assert dim == gf2poly.degree(f)


@pytest.mark.parametrize("n", [4, 6, 8, 10, 12, 14, 16])
def test_table_values_both_methods(n):
    ctx = make_field(n)
    rb = ell_n(ctx, "brute")
    rl = ell_n(ctx, "lattice")
    assert rb.ell_n == rl.ell_n == KNOWN_ELL[n]
    for rec in (rb, rl):
        r, f = ell_gamma(ctx, rec.witness)
        assert r == rec.ell_n
        assert ctx.is_generator(rec.witness)
        assert f == rec.f_gamma


def test_odd_degree_still_defined():
    ctx = make_field(5)
    rec = ell_n(ctx, "lattice")
    assert 1 <= rec.ell_n <= 5
    assert rec.ell_n == ell_n(ctx, "brute").ell_n


def test_modulus_independence():
    for n in (6, 8):
        a = ell_n(make_field(n), "lattice").ell_n
        b = ell_n(make_field(n, second_modulus(n)), "lattice").ell_n
        assert a == b == KNOWN_ELL[n]


def test_per_gamma_map():
    ctx = make_field(6)
    rec = ell_n(ctx, "brute", per_gamma=True)
    assert rec.per_gamma is not None
    assert rec.ell_n == 4
    # one entry per orbit representative; values match direct computation
    for g, r in list(rec.per_gamma.items())[:20]:
        assert ell_gamma(ctx, g)[0] == r
    n_orbit_elems = sum(1 for _ in rec.per_gamma)
    assert n_orbit_elems < 64


def test_sufficient_condition_cases():
    c6 = sufficient_condition(6)
    assert c6.guaranteed and c6.bound == 4
    assert KNOWN_ELL[6] > 3
    c12 = sufficient_condition(12)
    assert not c12.guaranteed
    assert KNOWN_ELL[12] <= 6  # the hypothesis genuinely fails at 12
    c16 = sufficient_condition(16)
    assert c16.guaranteed and c16.bound == 9
    assert KNOWN_ELL[16] == 9
    c14 = sufficient_condition(14)   # 2 is not primitive mod 7
    assert not c14.guaranteed
    with pytest.raises(ValueError):
        sufficient_condition(5)


def test_guaranteed_degrees_hold():
    for n in (4, 6, 8, 10, 16):
        cond = sufficient_condition(n)
        if cond.guaranteed:
            assert KNOWN_ELL[n] > n // 2
            assert KNOWN_ELL[n] >= cond.bound
