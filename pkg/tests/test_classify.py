import math

import numpy as np
import pytest

from bentbin import make_field
from bentbin.boolfun import VectorialFn, image_report
from bentbin.classify import (LABEL_BINOMIAL, LABEL_MONOMIAL, LABEL_UNKNOWN,
                              EquivWitness, apply_witness, bounds_report,
                              canonical_pair, classify_function,
                              composition_witness_check, ell_exceeds_m,
                              enumerate_pairs, equivalence_fingerprint,
                              explicit_image_check, family_catalog,
                              fingerprint, maximality_check, search_binomials,
                              search_witness, structure_checks)


@pytest.fixture(scope="module")
def ctx6():
    return make_field(6)


@pytest.fixture(scope="module")
def ctx8():
    return make_field(8)


@pytest.fixture(scope="module")
def hits6(ctx6):
    return search_binomials(ctx6, max_weight=2)


@pytest.fixture(scope="module")
def hits8(ctx8):
    return search_binomials(ctx8, max_weight=2)


def test_family_catalog_agreement(ctx6, ctx8):
    for ctx in (ctx6, ctx8):
        entries = family_catalog(ctx)
        assert entries, "catalog must not be empty"
        for e in entries:
            assert e.agrees, e.name


def test_maximality_examples(ctx6):
    rep = maximality_check(VectorialFn.binomial(ctx6, 3, 10))
    assert rep.maximal and rep.sf_equals_subfield and rep.via == "quadratic"
    rep = maximality_check(VectorialFn.monomial(make_field(4), 5))
    assert rep.maximal and rep.sf_equals_subfield
    rep = maximality_check(VectorialFn.binomial(ctx6, 3, 24))
    assert not rep.maximal and rep.sf_size == 64


def test_monomial_catalog_n6(ctx6):
    for d, expected in [(9, True), (18, True), (36, True), (27, False)]:
        rep = maximality_check(VectorialFn.monomial(ctx6, d))
        assert rep.maximal == expected


def test_composition_witness(ctx6, ctx8):
    for i in (1, 2):
        assert composition_witness_check(ctx6, i)
    for i in (1, 2, 3):
        assert composition_witness_check(ctx8, i)


def test_witness_for_composed_pair(ctx6):
    m, i = 3, 1
    F = VectorialFn.binomial(ctx6, 1 + (1 << (m - i)), (1 << (m - i)) + 8)
    G = VectorialFn.binomial(ctx6, 1 + (1 << i), 1 + (1 << (m + i)))
    w = search_witness(F, G)
    assert w is not None
    assert np.array_equal(apply_witness(F, w), G.table)


def test_identity_witness(ctx6):
    F = VectorialFn.binomial(ctx6, 3, 10)
    rep = equivalence_fingerprint(F, F)
    assert rep.verdict == "consistent"
    assert rep.witness == EquivWitness(1, 0, 1)


def test_linearized_summand_witness(ctx6):
    # x + x^9 reduces to the monomial x^9 by adding the summand x
    F = VectorialFn.binomial(ctx6, 1, 9)
    M = VectorialFn.monomial(ctx6, 9)
    w = search_witness(F, M)
    assert w is not None and w.l_coeff != 0
    assert np.array_equal(apply_witness(F, w), M.table)


def test_distinguisher_n8(ctx8):
    M = VectorialFn.monomial(ctx8, 17)
    B = VectorialFn.binomial(ctx8, 5, 20)
    rep = equivalence_fingerprint(M, B, with_witness=False)
    assert rep.verdict == "distinguished"
    assert not rep.walsh_equal and not rep.diff_equal and not rep.image_equal


def test_fingerprint_invariant_under_frobenius_twist(ctx6):
    # x^2 + x^9 is the squared image of x + x^36: same affine invariants
    a = fingerprint(VectorialFn.binomial(ctx6, 2, 9))
    b = fingerprint(VectorialFn.binomial(ctx6, 1, 36))
    assert a == b


def test_image_size_not_ea_invariant(ctx6):
    # EA-equivalent pair (witnessed by a linearized summand) with
    # different image sizes: the triple fingerprint is affine-only.
    assert image_report(VectorialFn.binomial(ctx6, 1, 9)).image_size == 36
    assert image_report(VectorialFn.monomial(ctx6, 9)).image_size == 8


def test_canonical_pair_orbits():
    assert canonical_pair(63, 6, 2, 9) == (1, 36)
    assert canonical_pair(63, 6, 5, 12) == (3, 17)
    assert canonical_pair(63, 6, 3, 10) == (3, 10)
    # doubling the pair lands in the same orbit
    assert canonical_pair(63, 6, 6, 20) == (3, 10)


def test_enumerate_pairs_dedup(ctx6):
    pairs = enumerate_pairs(ctx6, 2)
    assert len(pairs) == 37
    assert pairs == sorted(pairs)
    reps = {canonical_pair(63, 6, d1, d2) for d1, d2 in pairs}
    assert len(reps) == len(pairs)


def test_search_n6_maximal_set(hits6):
    maximal = {(h.d1, h.d2): h.class_label for h in hits6 if h.maximal}
    assert set(maximal) == {(1, 9), (1, 18), (1, 36), (3, 10), (3, 17)}
    # the doubling orbits of the three family shapes are all present
    assert canonical_pair(63, 6, 2, 9) in maximal
    assert canonical_pair(63, 6, 3, 10) in maximal
    assert canonical_pair(63, 6, 5, 12) in maximal
    assert maximal[(1, 9)] == LABEL_MONOMIAL
    assert maximal[(1, 18)] == LABEL_MONOMIAL
    assert maximal[(1, 36)] == LABEL_BINOMIAL
    assert maximal[(3, 10)] == LABEL_BINOMIAL
    assert maximal[(3, 17)] == LABEL_BINOMIAL
    assert LABEL_UNKNOWN not in maximal.values()


def test_search_n8_maximal_set(hits8):
    maximal = {(h.d1, h.d2): h.class_label for h in hits8 if h.maximal}
    assert set(maximal) == {(1, 17), (1, 34), (1, 68), (1, 136),
                            (3, 18), (3, 33), (5, 20)}
    assert LABEL_UNKNOWN not in maximal.values()


def test_search_verdict_invariant_under_modulus(ctx6):
    from bentbin.gf2n import second_modulus
    alt = make_field(6, second_modulus(6))
    hits_alt = search_binomials(alt, max_weight=2, classify=False)
    hits_ref = search_binomials(ctx6, max_weight=2, classify=False)
    assert [(h.d1, h.d2, h.maximal, h.sf_size) for h in hits_alt] == \
        [(h.d1, h.d2, h.maximal, h.sf_size) for h in hits_ref]


def test_structure_checks_s_gt_1(ctx8, hits8):
    for h in hits8:
        if not h.maximal:
            continue
        s = math.gcd(math.gcd(h.d1, h.d2), 255)
        rep = structure_checks(VectorialFn.binomial(ctx8, h.d1, h.d2))
        if s > 1:
            assert rep.applicable and rep.ok, (h.d1, h.d2)
        else:
            from bentbin.stickelberger import wt2
            if wt2(h.d1, 8) == 2 and wt2(h.d2, 8) == 2:
                assert not rep.applicable


def test_structure_gate_s1(ctx6):
    rep = structure_checks(VectorialFn.binomial(ctx6, 3, 10))
    assert not rep.applicable and rep.ok


def test_bounds_all_hold_on_maximal_instances(ctx6, ctx8, hits6, hits8):
    for ctx, hits in ((ctx6, hits6), (ctx8, hits8)):
        for h in hits:
            if not h.maximal:
                continue
            fn = VectorialFn.binomial(ctx, h.d1, h.d2)
            for chk in bounds_report(fn):
                if chk.applicable:
                    assert chk.holds, (ctx.n, h.d1, h.d2, chk)


def test_bounds_specific_values(ctx6):
    fn = VectorialFn.binomial(ctx6, 3, 10)
    by_name = {c.name: c for c in bounds_report(fn)}
    # 32 - sqrt(640)/2 is between 19 and 20, so the squared comparison
    # reads 1024 >= 640; the plateaued cap is exactly 16
    assert (by_name["nf_sqrt"].lhs, by_name["nf_sqrt"].rhs) == (1024, 640)
    assert by_name["nf_plateaued"].rhs == 16
    assert by_name["nf_plateaued"].lhs == 16
    assert not by_name["nf_image"].applicable  # T = 0 here
    assert by_name["delta_set_cap"].applicable
    assert by_name["delta_set_cap"].rhs == 28


def test_bounds_delta_floor_n8(ctx8):
    fn = VectorialFn.binomial(ctx8, 5, 20)
    by_name = {c.name: c for c in bounds_report(fn)}
    assert by_name["delta_s"].applicable
    assert by_name["delta_s"].rhs == 4
    assert by_name["delta_s"].holds
    assert by_name["nf_image"].applicable  # T = 15
    assert by_name["nf_image"].holds


def test_explicit_image_flag_required_at_8_2(ctx8):
    flags = []
    for l in range(4):
        chk = explicit_image_check(ctx8, l)
        assert chk.first_equality_holds
        if not chk.dichotomy_agrees:
            flags.append(l)
    assert flags == [2]
    chk = explicit_image_check(ctx8, 2)
    assert chk.gcd_value == 5
    assert chk.direct_size == 49
    assert chk.dichotomy_prediction == 81


def test_explicit_image_other_degrees():
    for n in (4, 6, 10):
        ctx = make_field(n)
        for l in range(ctx.m):
            chk = explicit_image_check(ctx, l)
            assert chk.first_equality_holds


def test_ell_hypothesis_gate():
    assert ell_exceeds_m(make_field(6))
    assert ell_exceeds_m(make_field(8))
    assert not ell_exceeds_m(make_field(12))


def test_classify_unknown_for_nonfamily(ctx6):
    # an APN monomial is nowhere near the maximal families
    label = classify_function(VectorialFn.monomial(ctx6, 3),
                              with_witness=False)
    assert label == LABEL_UNKNOWN


def test_distinguished_never_coexists_with_witness(ctx6):
    # the EA-reduced pair has a different image size than the monomial,
    # but a witness exists, so the verdict must stay consistent
    F = VectorialFn.binomial(ctx6, 1, 9)
    M = VectorialFn.monomial(ctx6, 9)
    rep = equivalence_fingerprint(F, M)
    assert not rep.fingerprints_equal
    assert rep.witness is not None
    assert rep.verdict == "consistent"


@pytest.mark.skipif(
    __import__("bentbin").backend() != "compiled",
    reason="the n=10 sweep is compiled-backend work")
def test_divisibility_sweep_n10():
    # every maximal weight-(2,2) binomial with s > 1 has d2 - d1 divisible
    # by 2^m - 1, swept through n = 10 on top of the acceptance degrees.
    # At n = 10 the s > 1 set is empty (31 is prime and never divides
    # 2^i + 1 here), so the sweep asserts zero exceptions over whatever
    # it finds plus the sanity fact that maximal pairs exist at all.
    ctx = make_field(10)
    half = (1 << 5) - 1
    hits = search_binomials(ctx, max_weight=2, classify=False)
    assert any(h.maximal for h in hits)
    for h in hits:
        if not h.maximal:
            continue
        from bentbin.stickelberger import wt2
        if wt2(h.d1, 10) != 2 or wt2(h.d2, 10) != 2:
            continue
        if math.gcd(math.gcd(h.d1, h.d2), ctx.N) > 1:
            assert (h.d2 - h.d1) % half == 0, (h.d1, h.d2)
