from fractions import Fraction

import pytest

from conftest import TYPES, all_classes, classes_of, ids, rd_of
from subreg.parabolic import is_hn_vector, two_rho_pairing
from subreg.rootdata import killing_form, simple_coroot, special_roots
from subreg.subregular import (
    SubregularError,
    auxiliary_slope,
    classify,
    dynkin_decomposition,
    find_class,
    mu_pairings,
    neg_two_rho,
    slice_dimension_expected,
)


def expected_count(series, rank):
    if series == "A":
        return 1 if rank == 1 else rank - 1
    return {"B": 2 if rank == 3 else 1, "D": 3 if rank in (4, 5) else 1, "E": 2 if rank == 6 else 1}.get(series, 1)


@pytest.mark.parametrize("t", TYPES, ids=ids(TYPES))
def test_class_counts(t):
    if t == ("B", 2):
        assert classes_of(*t) == ()
    else:
        assert len(classes_of(*t)) == expected_count(*t)


@pytest.mark.parametrize(
    "t,tags",
    [
        (("D", 4), [("D", 1), ("D", 3), ("D", 4)]),
        (("D", 5), [("D", 2), ("E", 4), ("E", 5)]),
        (("B", 3), [("B", 1), ("F", 3)]),
        (("E", 6), [("E", 2), ("E", 5)]),
        (("E", 8), [("E", 5)]),
        (("F", 4), [("F", 3)]),
        (("G", 2), [("G", 1)]),
        (("A", 1), [("A1", 1)]),
        (("C", 5), [("C", 4)]),
    ],
)
def test_tags_and_alpha_i(t, tags):
    assert sorted((c.tag, c.alpha_i) for c in classes_of(*t)) == sorted(tags)


def test_type_a_targets():
    for c in classes_of("A", 5):
        assert c.t == (c.alpha_i, c.alpha_i + 1)
        assert c.alpha_j == c.alpha_i + 1
        p = mu_pairings(c)
        assert p[c.alpha_i] == p[c.alpha_i + 1] == -1


def test_a1_class():
    (c,) = classes_of("A", 1)
    assert mu_pairings(c) == {1: -2}
    assert c.N == 0 and c.alpha_j is None


@pytest.mark.parametrize("cls", all_classes(), ids=str)
def test_class_invariants(cls):
    rd = cls.rd
    assert is_hn_vector(cls.pt, cls.mu)
    assert classify(rd, cls.t, cls.mu) == cls
    assert neg_two_rho(cls) == slice_dimension_expected(cls)
    assert -two_rho_pairing(rd, cls.mu) == cls.l + (2 if cls.tag in "ABCD" and cls.tag != "A1" else 3)
    if cls.tag == "A1":
        return
    i, j = cls.alpha_i, cls.alpha_j
    assert rd.adjacent(i, j)
    if cls.tag != "A":
        assert special_roots(rd) == (j,)
    # edge deletion
    assert set(cls.c0) | set(cls.c1) == set(rd.nodes)
    assert cls.n0 + cls.n1 == cls.l
    assert cls.c0[-1] == i and j in cls.c1
    # d from the Killing form
    d = killing_form(rd, simple_coroot(rd, i), simple_coroot(rd, i)) / 2
    assert d == cls.d == {"C": 2, "F": 2, "G": 3}.get(cls.tag, 1)
    assert cls.N == {"A": cls.n1 + 1, "F": cls.n1 - 1}.get(cls.tag, cls.n1)


def test_decomposition_examples():
    g = find_class("G", 2, "G")
    assert dynkin_decomposition(g) == ((1,), (2,), 1, 1)
    e8 = find_class("E", 8, "E")
    assert e8.alpha_i == 5
    assert set(e8.c0) == {5, 6, 7, 8} and set(e8.c1) == {1, 2, 3, 4}
    assert e8.c1 == (1, 2, 3, 4) and e8.c0 == (8, 7, 6, 5)
    for l in range(3, 9):
        b = find_class("B", l, "B")
        assert (b.n0, b.n1) == (l - 2, 2)
        assert b.c1 == (l - 1, l)
    assert find_class("D", 5, "D").c1 == (4, 3, 5)
    assert find_class("E", 6, "E", 2).c1 == (6, 5, 3, 4)


def test_classify_examples():
    a3 = rd_of("A", 3)
    from subreg.parabolic import ParabolicType, solve_slope

    mu = solve_slope(ParabolicType(a3, {1, 2}), {1: -1, 2: -1})
    c = classify(a3, {1, 2}, mu)
    assert (c.tag, c.alpha_i, c.alpha_j) == ("A", 1, 2)
    d5 = rd_of("D", 5)
    assert classify(d5, {4}, solve_slope(ParabolicType(d5, {4}), {4: -1})).tag == "E"
    b3 = rd_of("B", 3)
    assert classify(b3, {3}, solve_slope(ParabolicType(b3, {3}), {3: -1})).tag == "F"
    # a regular (not subregular) slope
    assert classify(a3, {1}, solve_slope(ParabolicType(a3, {1}), {1: -1})) is None


def test_find_class_errors():
    with pytest.raises(SubregularError):
        find_class("D", 4, "D")
    with pytest.raises(SubregularError):
        auxiliary_slope(find_class("G", 2, "G"))


def test_auxiliary_slope_pairings():
    from subreg.rootdata import fundamental_weight, pairing

    for c in all_classes():
        if c.tag in ("B", "C", "D"):
            mp = auxiliary_slope(c)
            assert pairing(fundamental_weight(c.rd, c.alpha_i), mp) == -1
            k = c.l - 1 if c.alpha_i == c.l else c.l
            assert pairing(fundamental_weight(c.rd, k), mp) == 0
