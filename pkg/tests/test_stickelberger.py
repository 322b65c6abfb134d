import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bentbin import make_field
from bentbin.boolfun import VectorialFn
from bentbin.stickelberger import (GcdLedger, gcd_ledger, h_polynomial,
                                   nu_and_minimizers,
                                   nu_and_minimizers_monomial,
                                   verify_valuation_law, weight_table, wt2)


def naive_nu(N, d1, d2, n):
    """Unpruned reference scan; the oracle for the kernel implementation."""
    best = 10 ** 9
    mins = []
    for j1 in range(N):
        for j2 in range(N):
            if (j1, j2) == (0, 0):
                continue
            v = wt2(j1, n) + wt2(j2, n) + wt2(-(d1 * j1 + d2 * j2), n)
            if v < best:
                best, mins = v, [(j1, j2)]
            elif v == best:
                mins.append((j1, j2))
    return best, mins


def test_wt2_examples():
    assert wt2(5, 6) == 2
    assert wt2(58, 6) == 4
    assert wt2(-5, 6) == wt2(58, 6)
    assert wt2(14, 6) == 3
    assert wt2(0, 6) == 0
    assert wt2(63, 6) == 0  # reduced mod N first


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 62))
def test_wt2_complement(j):
    assert wt2(j, 6) + wt2(-j, 6) == 6


def test_weight_lemma_exhaustive():
    # multiplying by 2^m - 1 pins the weight to m, off multiples of 2^m + 1
    for n in (4, 6, 8, 10, 12):
        m = n // 2
        N = (1 << n) - 1
        for j in range(1, N):
            if j % ((1 << m) + 1):
                assert wt2(((1 << m) - 1) * j, n) == m


def test_nu_matches_naive_oracle():
    ctx = make_field(6)
    for d1, d2 in [(3, 10), (3, 24), (1, 9), (5, 44)]:
        rec = nu_and_minimizers(ctx, d1, d2)
        best, mins = naive_nu(63, d1, d2, 6)
        assert rec.nu == best
        assert set(rec.minimizers) == set(mins)


def test_nu_family_values():
    ctx = make_field(6)
    rec = nu_and_minimizers(ctx, 3, 10)
    assert rec.nu == 3 == ctx.m
    assert (1, 6) in set(rec.minimizers)
    # V(1,6) = 1 + 2 + wt(-63) = 3 by hand
    assert wt2(1, 6) + wt2(6, 6) + wt2(-(3 * 1 + 10 * 6), 6) == 3
    ctx8 = make_field(8)
    rec8 = nu_and_minimizers(ctx8, 5, 20)
    assert rec8.nu == 4 == ctx8.m


def test_minimizers_closed_under_doubling():
    ctx = make_field(6)
    rec = nu_and_minimizers(ctx, 3, 10)
    mins = set(rec.minimizers)
    for j1, j2 in mins:
        assert ((2 * j1) % 63, (2 * j2) % 63) in mins


def test_nu_lower_bound_for_quadratics():
    ctx = make_field(6)
    for d1, d2 in [(3, 10), (3, 24), (5, 12)]:
        rec = nu_and_minimizers(ctx, d1, d2)
        assert rec.nu >= 3  # ceil(n / 2) with both weights at 2


def test_nu_invariance_under_doubling_and_swap():
    ctx = make_field(6)
    base = nu_and_minimizers(ctx, 3, 10)
    doubled = nu_and_minimizers(ctx, 6, 20)
    assert doubled.nu == base.nu
    assert set(doubled.minimizers) == set(base.minimizers)
    swapped = nu_and_minimizers(ctx, 10, 3)
    assert swapped.nu == base.nu
    assert {(b, a) for a, b in swapped.minimizers} == set(base.minimizers)


def test_monomial_degenerate_mode():
    ctx = make_field(6)
    rec = nu_and_minimizers_monomial(ctx, 3)
    assert all(j2 == 0 for _, j2 in rec.minimizers)
    best = min(wt2(j, 6) + wt2(-3 * j, 6) for j in range(1, 63))
    assert rec.nu == best == 3


def test_valuation_law_exhaustive_n6():
    ctx = make_field(6)
    rec = nu_and_minimizers(ctx, 3, 10)
    fn = VectorialFn.binomial(ctx, 3, 10)
    rep = verify_valuation_law(fn, rec)
    assert rep.ok
    assert rep.checked == 63 * 64


def test_valuation_strictness_matches_g():
    # for a outside GF(8) the indicator is identically 1 (valuation exactly m);
    # for a inside GF(8)* zeros of W force the indicator to vanish
    ctx = make_field(6)
    rec = nu_and_minimizers(ctx, 3, 10)
    fn = VectorialFn.binomial(ctx, 3, 10)
    from bentbin.boolfun import walsh_row
    sub = set(ctx.subfield_elements())
    for a in (2, 5, 17):
        assert a not in sub
        row = walsh_row(fn, a)
        assert all(abs(int(w)) == 8 for w in row)  # v2 = 3 exactly
    for a in sorted(sub - {0})[:2]:
        row = walsh_row(fn, a)
        assert any(int(w) == 0 for w in row)


def test_h_polynomial_maximal_instance():
    ctx = make_field(6)
    rec = nu_and_minimizers(ctx, 3, 10)
    rep = h_polynomial(rec, maximal=True)
    assert rep.degree == 56 == (1 << 6) - (1 << 3)
    assert rep.exponents == {7 * i for i in range(1, 9)}
    assert rep.matches_expected and rep.sumset_covers
    assert not rep.reduction_mismatch
    assert rep.ok


def test_h_polynomial_nonmaximal_skipped():
    ctx = make_field(6)
    rec = nu_and_minimizers(ctx, 3, 24)
    rep = h_polynomial(rec, maximal=False)
    assert not rep.maximal_checked
    assert rep.expected_exponents is None
    assert rep.ok


def test_gcd_ledger_frozen_example():
    ctx = make_field(8)
    rec = nu_and_minimizers(ctx, 5, 20)
    led = gcd_ledger(ctx, 5, 20, rec)
    assert isinstance(led, GcdLedger)
    assert (led.j_witness, led.t, led.k, led.u, led.r) == (3, 3, 3, 3, 1)
    assert led.s == 5
    assert math.gcd(15, 255) == 15 == (15 // led.t) * led.u * led.r
    assert led.gcd_identity_holds


def test_gcd_ledger_divisibility_equivalence():
    # t = u exactly when 2^m - 1 divides d2 - d1
    ctx = make_field(8)
    for d1, d2 in [(5, 20), (3, 18), (3, 33)]:
        rec = nu_and_minimizers(ctx, d1, d2)
        led = gcd_ledger(ctx, d1, d2, rec)
        assert led is not None
        divisible = (d2 - d1) % 15 == 0
        assert (led.t == led.u) == divisible
        if led.s > 1 and 15 % led.s == 0:
            assert led.r == 1


def test_ledger_requires_sorted_exponents():
    ctx = make_field(8)
    rec = nu_and_minimizers(ctx, 5, 20)
    with pytest.raises(ValueError):
        gcd_ledger(ctx, 20, 5, rec)


def test_top_window_weight_floor():
    # reduced sums in the top window force the functional above m
    for n in (4, 6, 8):
        ctx = make_field(n)
        m = n // 2
        N = ctx.N
        floor = (1 << n) - (1 << m) + 1
        w = weight_table(n)
        for d1, d2 in [(3, (1 << 1) + (1 << m))]:
            for j1 in range(N):
                for j2 in range(N):
                    if (j1, j2) == (0, 0) or (j1 + j2) % N < floor:
                        continue
                    v = (int(w[j1]) + int(w[j2])
                         + int(w[(-(d1 * j1 + d2 * j2)) % N]))
                    assert v >= m + 1
