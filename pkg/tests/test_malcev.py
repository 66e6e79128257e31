"""Truncated unipotent groups: BCH series, group words, filtration lattices."""

import random
from fractions import Fraction

import pytest

from grtlab import (
    ClassMismatchError,
    FreeGroup,
    LatticeTimesCyclic,
    LieElement,
    LieSyntaxError,
    NilpotentElement,
    SubgroupOfNilpotent,
    UnknownGeneratorError,
    UnsupportedFamilyError,
    bch,
    bracket,
    filtration_report,
    group_commutator,
    inverse,
    universal_bch,
    word_to_group,
)
from grtlab.malcev import tensor_bch

from conftest import XY, random_homogeneous


def _element(value, cls):
    return NilpotentElement(value.truncate(cls), cls)


def _random_group_element(rng, cls, nonzero_degree_one=False):
    x = random_homogeneous(XY, 1, rng)
    if nonzero_degree_one:
        while not x:
            x = random_homogeneous(XY, 1, rng)
    val = x
    for n in range(2, cls + 1):
        val = val + random_homogeneous(XY, n, rng)
    return NilpotentElement(val, cls)


def test_universal_bch_low_classes():
    u = (0,)
    v = (1,)
    assert universal_bch(1).terms == {u: 1, v: 1}
    assert universal_bch(2).terms == {u: 1, v: 1, (0, 1): Fraction(1, 2)}
    assert universal_bch(3).terms == {
        u: 1, v: 1,
        (0, 1): Fraction(1, 2),
        (0, 0, 1): Fraction(1, 12),   # [u,[u,v]]
        (0, 1, 1): Fraction(1, 12),   # [[u,v],v]
    }
    with pytest.raises(ValueError):
        universal_bch(0)


def test_universal_bch_matches_tensor_route():
    for cls in range(1, 7):
        assert universal_bch(cls) == tensor_bch(cls)


def test_identity_and_inverse():
    rng = random.Random(601)
    for _ in range(10):
        cls = rng.randint(1, 4)
        a = _random_group_element(rng, cls)
        e = NilpotentElement(LieElement.zero(XY), cls)
        assert bch(a, e) == a
        assert bch(e, a) == a
        assert bch(a, inverse(a)) == e
        assert bch(inverse(a), a) == e


def test_associativity_sample():
    rng = random.Random(602)
    for _ in range(20):
        cls = rng.randint(2, 4)
        a = _random_group_element(rng, cls)
        b = _random_group_element(rng, cls)
        c = _random_group_element(rng, cls)
        assert bch(bch(a, b), c) == bch(a, bch(b, c))


def test_commutator_leading_term():
    rng = random.Random(603)
    for _ in range(10):
        a = _random_group_element(rng, 4, nonzero_degree_one=True)
        b = _random_group_element(rng, 4, nonzero_degree_one=True)
        comm = group_commutator(a, b)
        lead = bracket(a.value.component(1), b.value.component(1))
        assert comm.value.component(2) == lead
        # abelian truncation: at class 1 all commutators die
        a1 = _element(a.value, 1)
        b1 = _element(b.value, 1)
        assert not group_commutator(a1, b1).value


def test_class_bound_enforced():
    x = LieElement.generator(XY, "x")
    y = LieElement.generator(XY, "y")
    with pytest.raises(ValueError):
        NilpotentElement(bracket(x, y), 1)
    with pytest.raises(ClassMismatchError):
        bch(NilpotentElement(x, 2), NilpotentElement(y, 3))


def test_word_to_group():
    x = LieElement.generator(XY, "x")
    y = LieElement.generator(XY, "y")
    cls = 3
    gx = NilpotentElement(x, cls)
    gy = NilpotentElement(y, cls)
    assert word_to_group("", XY, cls).value == LieElement.zero(XY)
    assert word_to_group("x", XY, cls) == gx
    assert word_to_group("x^3", XY, cls).value == x.scale(3)
    assert word_to_group("x y", XY, cls) == bch(gx, gy)
    assert (word_to_group("x y x^-1 y^-1", XY, cls)
            == group_commutator(gx, gy))
    assert word_to_group("x x^-1", XY, cls).value == LieElement.zero(XY)


def test_word_to_group_errors():
    with pytest.raises(LieSyntaxError):
        word_to_group("x^two", XY, 2)
    with pytest.raises(UnknownGeneratorError) as exc:
        word_to_group("x q", XY, 2)
    assert exc.value.position == 2


def test_free_group_filtration():
    rows = filtration_report(FreeGroup(2, 3), 3)
    assert [r["rank"] for r in rows] == [2, 1, 2]
    assert all(r["d_mod_l"] == [] for r in rows)
    assert all(r["torsion"] == [] for r in rows)
    # three generators: Witt numbers 3, 3, 8
    rows3 = filtration_report(FreeGroup(3, 3), 3)
    assert [r["rank"] for r in rows3] == [3, 3, 8]
    assert all(r["d_mod_l"] == [] for r in rows3)


def test_lattice_times_cyclic_filtration():
    rows = filtration_report(LatticeTimesCyclic(1, 3), 2)
    assert rows[0] == {"m": 1, "rank": 1, "torsion": [], "d_mod_l": []}
    assert rows[1] == {"m": 2, "rank": 0, "torsion": [], "d_mod_l": [3]}
    # trivial torsion leaves no gap
    rows = filtration_report(LatticeTimesCyclic(2, 1), 3)
    assert rows[1]["d_mod_l"] == []
    assert rows[2] == {"m": 3, "rank": 0, "torsion": [], "d_mod_l": []}


def test_subgroup_filtration_with_index():
    # subgroup generated by x and 2y inside the class-2 free group
    x = LieElement.generator(XY, "x")
    y = LieElement.generator(XY, "y")
    sub = SubgroupOfNilpotent([NilpotentElement(x, 2),
                               NilpotentElement(y.scale(2), 2)])
    rows = filtration_report(sub, 2)
    assert rows[0]["rank"] == 2
    assert rows[0]["d_mod_l"] == [2]
    assert rows[1]["rank"] == 1
    assert rows[1]["d_mod_l"] == [2]


def test_filtration_rejects_bad_input():
    with pytest.raises(UnsupportedFamilyError):
        FreeGroup(0, 3)
    with pytest.raises(UnsupportedFamilyError):
        LatticeTimesCyclic(1, 0)
    with pytest.raises(UnsupportedFamilyError):
        filtration_report(FreeGroup(2, 2), 4)  # level above class + 1
    with pytest.raises(UnsupportedFamilyError):
        filtration_report(42, 2)
    with pytest.raises(ValueError):
        filtration_report(FreeGroup(2, 2), 0)
    with pytest.raises(UnsupportedFamilyError):
        SubgroupOfNilpotent([])
    # non-integral logarithm has no graded lattice
    x = LieElement.generator(XY, "x")
    half = NilpotentElement(x.scale(Fraction(1, 2)), 2)
    with pytest.raises(UnsupportedFamilyError):
        filtration_report(SubgroupOfNilpotent([half]), 1)
    # mixed classes cannot generate one subgroup
    with pytest.raises(UnsupportedFamilyError):
        SubgroupOfNilpotent([NilpotentElement(x, 2),
                             NilpotentElement(x, 3)])
