from fractions import Fraction

import pytest

from thetalab.quadrics import (
    NullData,
    QuadraticForm,
    forms_proportional,
    gen_even_basis,
    gen_even_s_basis,
    gen_odd_basis,
    monomial_basis,
    rank_check,
    substitute_nulls,
    verify_on_curve,
)
from thetalab.theta import ThetaContext

TAUS = (1j, 0.3 + 1.1j)


def numeric_nulls(N, tau=0.3 + 1.1j):
    return NullData.numeric(ThetaContext(N, tau, 1e-12))


def test_form_normalization_and_class():
    f = QuadraticForm(5, {(7, 3): Fraction(1), (0, 0): Fraction(2)})
    assert (2, 3) in f.coeffs
    assert f.graded_class() == 0
    g = f.shift(1)
    assert g.graded_class() == 2
    mixed = QuadraticForm(5, {(0, 0): 1, (0, 1): 1})
    assert mixed.graded_class() is None


def test_shift_moves_class_by_two():
    nd = numeric_nulls(8)
    eb = gen_even_basis(nd)
    for f in eb.V0:
        assert f.graded_class() == 0
        assert f.shift(1).graded_class() == 2
    for f in eb.V1:
        assert f.graded_class() == 1
        assert f.shift(1).graded_class() == 3


def test_full_system_class_counts():
    # per-class counts: (N-2)/2 on even classes, (N-4)/2 on odd ones
    for N in (4, 6, 8):
        nd = numeric_nulls(N)
        full = gen_even_basis(nd).full
        by_class = {}
        for f in full:
            by_class.setdefault(f.graded_class(), []).append(f)
        for k, fs in by_class.items():
            want = (N - 2) // 2 if k % 2 == 0 else (N - 4) // 2
            assert len(fs) == want, (N, k, len(fs))


def test_bianchi_form_for_level_5():
    nd = NullData.exact(5, 50)
    forms = gen_odd_basis(nd)
    assert len(forms) == 5
    a = nd.a
    bianchi = QuadraticForm(
        5,
        {
            (0, 0): a[1] * a[2],
            (2, 3): -(a[1] * a[1]),
            (1, 4): a[2] * a[2],
        },
    )
    assert forms_proportional(forms[0], bianchi)
    # every member of the system is an index shift of the same class of form
    for s, f in enumerate(forms):
        assert forms_proportional(f, bianchi.shift(s))


def test_level_7_base_forms():
    nd = NullData.exact(7, 60)
    forms = gen_odd_basis(nd)
    assert len(forms) == 14
    a = nd.a
    f1 = QuadraticForm(
        7, {(0, 0): a[1] * a[2], (3, 4): -(a[2] * a[2]), (2, 5): a[3] * a[3]}
    )
    f2 = QuadraticForm(
        7, {(0, 0): a[2] * a[3], (3, 4): -(a[1] * a[1]), (1, 6): a[3] * a[3]}
    )
    assert forms_proportional(forms[0], f1)
    assert forms_proportional(forms[1], f2)


def test_even_sizes():
    for N, v0, v1, full in ((4, 1, 0, 2), (6, 2, 1, 9), (8, 3, 2, 20)):
        nd = numeric_nulls(N)
        eb = gen_even_basis(nd)
        assert (len(eb.V0), len(eb.V1), len(eb.full)) == (v0, v1, full)
        sb = gen_even_s_basis(nd)
        assert (len(sb.V0), len(sb.V1)) == (v0, v1)


def test_level_8_contains_displayed_form():
    nd = NullData.exact(8, 70)
    eb = gen_even_basis(nd)
    a = nd.a
    # a_2^2 X_0^2 + a_2^2 X_4^2 = (a_0^2 + a_4^2) X_2 X_6
    want = QuadraticForm(
        8,
        {
            (0, 0): a[2] * a[2],
            (4, 4): a[2] * a[2],
            (2, 6): -(a[0] * a[0] + a[4] * a[4]),
        },
    )
    assert any(forms_proportional(f, want) for f in eb.V0)


def test_parity_errors():
    with pytest.raises(ValueError):
        gen_odd_basis(numeric_nulls(6))
    with pytest.raises(ValueError):
        gen_even_basis(numeric_nulls(5, 1j))
    nd = NullData.exact(6, 50)
    with pytest.raises(ValueError):
        gen_even_s_basis(nd)  # exact data carries no half-period values


def test_vanishing_on_curve_all_levels():
    for N in (4, 5, 6, 7, 8):
        for tau in TAUS + (0.5 + 1.5j,):
            ctx = ThetaContext(N, tau, 1e-12)
            nd = NullData.numeric(ctx)
            forms = gen_odd_basis(nd) if N % 2 else gen_even_basis(nd).full
            rep = verify_on_curve(forms, ctx, samples=12, seed=1, rtol=1e-9)
            assert rep.passed, (N, tau, rep.max_residual)
            assert rank_check(forms, N) == N * (N - 3) // 2


def test_vanishing_level5_at_tau_2i():
    ctx = ThetaContext(5, 2j, 1e-12)
    nd = NullData.numeric(ctx)
    forms = gen_odd_basis(nd)
    rep = verify_on_curve(forms, ctx, samples=25, seed=0, rtol=1e-9)
    assert rep.passed and len(forms) == 5


def test_s_basis_vanishes_and_spans():
    for N in (4, 6, 8):
        ctx = ThetaContext(N, 1j, 1e-12)
        nd = NullData.numeric(ctx)
        sb = gen_even_s_basis(nd)
        rep = verify_on_curve(sb.V0 + sb.V1, ctx, samples=10, seed=2, rtol=1e-9)
        assert rep.passed
        eb = gen_even_basis(nd)
        r_a = rank_check(eb.V0, N)
        r_s = rank_check(sb.V0, N)
        r_stacked = rank_check(eb.V0 + sb.V0, N)
        assert r_a == r_s == r_stacked == N // 2 - 1
        r1_stacked = rank_check(eb.V1 + sb.V1, N)
        assert r1_stacked == len(eb.V1)


def test_rank_ignores_duplicates():
    nd = numeric_nulls(6)
    forms = gen_even_basis(nd).full
    assert rank_check(forms + [forms[0]], 6) == rank_check(forms, 6)
    assert rank_check([], 6) == 0


def test_origin_substitution_vanishes_exactly():
    for N in (4, 6, 8):
        nd = NullData.exact(N, 50)
        for f in gen_even_basis(nd).full:
            assert substitute_nulls(f, nd).is_zero()
    for N in (5, 7):
        nd = NullData.exact(N, 50)
        for f in gen_odd_basis(nd):
            assert substitute_nulls(f, nd).is_zero()


def test_constant_zero_form_passes_trivially():
    ctx = ThetaContext(4, 1j, 1e-10)
    zero_form = QuadraticForm(4, {})
    rep = verify_on_curve([zero_form], ctx, samples=3, seed=0)
    assert rep.passed


def test_form_json():
    import json

    nd = numeric_nulls(4)
    f = gen_even_basis(nd).V0[0]
    obj = json.loads(f.to_json())
    assert obj["N"] == 4 and obj["class"] == 0
    assert all(len(t) == 3 for t in obj["terms"])
    assert len(monomial_basis(4)) == 10
