from fractions import Fraction

import pytest

from thetalab.congruence import (
    SubgroupSpec,
    TorsionPoint,
    base_structure,
    enum_structures_above,
    group_tower_check,
    sl2_mod,
    structure_apply,
    structure_class_index,
    subgroup_invariants,
    weil_pairing,
)
from thetalab.cyclotomic import zeta


def test_sl2_orders():
    assert len(sl2_mod(2)) == 6
    assert len(sl2_mod(4)) == 48
    assert len(sl2_mod(8)) == 384
    assert len(sl2_mod(16)) == 3072


def test_torsion_point_validation():
    with pytest.raises(ValueError):
        TorsionPoint(Fraction(1, 3), 0, 2)
    p = TorsionPoint(Fraction(5, 4), 0, 4)
    assert p.u == Fraction(1, 4)


def test_weil_pairing_values():
    for n in (4, 5, 6, 8):
        S, T = base_structure(n)
        assert weil_pairing(n, S, T) == zeta(n)
        assert weil_pairing(n, T, T) == 1
        assert weil_pairing(n, S, S) == 1
        # antisymmetry
        assert weil_pairing(n, T, S) == zeta(n, n - 1)
    St = TorsionPoint(0, Fraction(1, 16), 16)
    Tt = TorsionPoint(Fraction(1, 16), 0, 16)
    assert weil_pairing(16, St, Tt) == zeta(16)
    with pytest.raises(ValueError):
        weil_pairing(4, TorsionPoint(Fraction(1, 8), 0, 8), base_structure(4)[1])


def test_weil_pairing_bilinear():
    n = 8
    S, T = base_structure(n)
    for a in range(3):
        for b in range(3):
            P = S.scaled(a) + T.scaled(b)
            P = TorsionPoint(P.u, P.v, n)
            got = weil_pairing(n, P, T)
            assert got == zeta(n, a)


def test_structures_count_and_classes():
    for N in (4, 6, 8):
        res = enum_structures_above(N)
        assert len(res.structures) == 8
        assert res.class_count == 4
        # classes partition the survivors in pairs
        assert sorted(len(c) for c in res.classes) == [2, 2, 2, 2]


def test_coset_representatives_distinct():
    for N in (4, 6, 8):
        res = enum_structures_above(N)
        pair = res.structures[0]
        reps = ((1, 0, 0, 1), (1, N, 0, 1), (1, 0, N, 1), (1, N, N, 1))
        classes = [structure_class_index(res, structure_apply(pair, m)) for m in reps]
        assert len(set(classes)) == 4


def test_structures_invariant_under_relabeling():
    N = 6
    base = enum_structures_above(N)
    keys = {
        (p[0].u, p[0].v, p[1].u, p[1].v) for p in base.structures
    }
    S, T = base_structure(N)
    for g in ((1, N, 0, 1), (1, 0, N, 1), (1 + N, N, N, 1 + N)):
        # relabeled starting structure: (S, T) * g fixes (S, T) mod N
        newbase = structure_apply((S, T), g)
        res = enum_structures_above(N, base=newbase)
        got = {(p[0].u, p[0].v, p[1].u, p[1].v) for p in res.structures}
        assert got == keys
        assert res.class_count == 4


def test_subgroup_invariants_reference_values():
    inv = subgroup_invariants(SubgroupSpec("gammaN2N", 4))
    assert (inv.index_psl, inv.genus) == (96, 3)
    inv = subgroup_invariants(SubgroupSpec("gammaN2N", 6))
    assert (inv.index_psl, inv.genus) == (288, 13)
    inv = subgroup_invariants(SubgroupSpec("gamma", 8))
    assert inv.genus == 5
    # classical values for the principal subgroups
    assert subgroup_invariants(SubgroupSpec("gamma", 4)).index_psl == 24
    assert subgroup_invariants(SubgroupSpec("gamma", 5)).genus == 0
    assert subgroup_invariants(SubgroupSpec("gamma", 7)).genus == 3


def test_euler_characteristic_consistency():
    for spec in (
        SubgroupSpec("gamma", 4),
        SubgroupSpec("gamma", 6),
        SubgroupSpec("gamma", 8),
        SubgroupSpec("gammaN2N", 4),
        SubgroupSpec("gammaN2N", 6),
        SubgroupSpec("gammaN2N", 8),
    ):
        inv = subgroup_invariants(spec)
        assert 12 * (inv.genus - 1) + 6 * inv.cusps == inv.index_psl


def test_modulus_bound():
    with pytest.raises(ValueError):
        subgroup_invariants(SubgroupSpec("gamma", 13))


def test_group_tower():
    for N in (4, 6, 8):
        rep = group_tower_check(N)
        assert rep.passed, rep.checks
        assert rep.quotient_orders == (4, 2)
    with pytest.raises(ValueError):
        group_tower_check(5)


def test_gammaN2N_membership_examples():
    spec = SubgroupSpec("gammaN2N", 4)
    assert spec.contains_residue((1, 8, 0, 1))
    assert not spec.contains_residue((1, 4, 0, 1))
    assert spec.contains_residue((5, 0, 0, 5))
