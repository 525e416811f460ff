import pytest

from conftest import all_classes, classes_of, rd_of
from subreg.geometry import (
    CHARACTERISTIC_NOTE_D,
    P1,
    P12,
    ZERO,
    ConeOverE,
    GeometryError,
    GluedAlongDoubleCover,
    GluedLineBundles,
    Hirzebruch,
    ProjectivePlane,
    SectionFormula,
    StackyHirzebruch,
    base_self_intersection,
    base_surface,
    canonical_multiplicity,
    degree_d1,
    degree_sum_type_a,
    divisor_decomposition,
    hirzebruch_component,
    singular_fiber,
    singularity_types,
    theta_prime_sections,
    theta_sections,
)
from subreg.rootdata import simple_coroot
from subreg.subregular import find_class

# Reference degrees: (D_1)_y has degree l minus this offset
DEGREE_OFFSET = {"B": 6, "C": 4, "D": 8, "E": 9, "F": 5, "G": 3}
DECOMPOSABLE = [c for c in all_classes() if c.tag != "A1"]


def terms(*ts):
    return SectionFormula.build(ts)


@pytest.mark.parametrize("cls", [c for c in DECOMPOSABLE if c.tag != "A"], ids=str)
def test_reference_degrees(cls):
    assert degree_d1(cls) == cls.l - DEGREE_OFFSET[cls.tag]


def test_reference_degrees_cover_every_rank():
    ranks = {}
    for c in DECOMPOSABLE:
        if c.tag != "A":
            ranks.setdefault(c.tag, set()).add(c.l)
    assert ranks["E"] == {5, 6, 7, 8}
    assert ranks["F"] == {3, 4}
    assert ranks["G"] == {2}
    assert min(ranks["B"]) == 3 and min(ranks["C"]) == 2 and min(ranks["D"]) == 4


@pytest.mark.parametrize("cls", DECOMPOSABLE, ids=str)
def test_divisor_decomposition(cls):
    dd = divisor_decomposition(cls)
    assert dd.multiplicities == (cls.d, 1, 1)
    rd = cls.rd
    ai, aj = simple_coroot(rd, cls.alpha_i), simple_coroot(rd, cls.alpha_j)
    assert dd.coweights == (ai, aj, ai + aj)
    assert canonical_multiplicity(rd, ai) == canonical_multiplicity(rd, aj) == -1
    assert canonical_multiplicity(rd, ai + aj) == 0
    assert canonical_multiplicity(rd, 2 * ai) == 0


@pytest.mark.parametrize("cls", DECOMPOSABLE, ids=str)
def test_section_list_shapes(cls):
    th, tp = theta_sections(cls), theta_prime_sections(cls)
    assert len(th) == cls.n0 + 1 and th[-1] == ZERO
    assert len(tp) == cls.N and tp[-1] == ZERO
    assert all(t != ZERO for t in th[:-1])


def test_theta_examples():
    e6 = find_class("E", 6, "E", 2)
    i, j, c0 = e6.alpha_i, e6.alpha_j, e6.c0
    th = theta_sections(e6)
    assert th[0] == terms((1, "varpi", j), (-1, "varpi", i), (-1, "varpi", c0[0]))
    assert th[1] == terms((1, "varpi", j), (-1, "varpi", i), (-1, "varpi", c0[1]), (1, "varpi", c0[0]))


def test_theta_prime_examples():
    a = lambda *ks: terms(*((1, "alpha", k) for k in ks))
    assert theta_prime_sections(find_class("E", 8, "E")) == [a(1, 2, 3), a(2, 3), a(3), ZERO]
    for l in range(3, 9):
        assert theta_prime_sections(find_class("B", l, "B")) == [a(l - 1), ZERO]
    for l in range(4, 9):
        # alpha_{l-2} + ... + alpha_{l-k}
        assert theta_prime_sections(find_class("D", l, "D", l - 3)) == [a(l - 2, l - 1), a(l - 2), ZERO]
    assert theta_prime_sections(find_class("C", 4, "C")) == [ZERO]
    assert theta_prime_sections(find_class("G", 2, "G")) == [ZERO]
    a5 = find_class("A", 5, "A", 2)
    first = theta_prime_sections(a5)[0]
    assert first == terms((-1, "varpi", 2), (1, "varpi", 3), (1, "varpi", 5))


def test_section_rendering():
    f = terms((1, "alpha", 2), (-2, "varpi", 1), (1, "varpi", 2))
    assert str(f) == "-2ϖ1 + ϖ2 + α2"
    assert f.render(ascii=True) == "-2w1 + w2 + a2"
    assert str(ZERO) == "0"
    assert terms((1, "varpi", 1), (-1, "varpi", 1)) == ZERO


def test_surfaces():
    assert hirzebruch_component(find_class("D", 5, "D")) == Hirzebruch(0)
    assert hirzebruch_component(find_class("F", 4, "F")) == Hirzebruch(1)
    assert hirzebruch_component(find_class("G", 2, "G")) == Hirzebruch(2)
    c = find_class("C", 3, "C")
    assert base_surface(c, "generic") == Hirzebruch(0)
    assert base_surface(c, "special") == Hirzebruch(2)
    b = find_class("B", 4, "B")
    assert base_surface(b, "generic") == StackyHirzebruch(1)
    assert base_surface(b, "special") == StackyHirzebruch(3)
    e = find_class("E", 7, "E")
    assert base_surface(e, "generic") == base_surface(e, "special") == ProjectivePlane()
    with pytest.raises(ValueError):
        base_surface(c, "other")


def test_self_intersections():
    # E is anticanonical: K^2 = 4 deg(-K) on a ruled surface over P1 or P(1,2); 9 on P2
    assert P1.anticanonical_degree == 2 and P12.anticanonical_degree * 2 == 3
    expected = {"B": 6, "C": 8, "D": 8, "F": 8, "E": 9, "G": 9}
    for c in DECOMPOSABLE:
        if c.tag != "A":
            assert base_self_intersection(c) == expected[c.tag]


@pytest.mark.parametrize("l", range(2, 9))
def test_type_a_degree_sum(l):
    for c in classes_of("A", l):
        assert degree_sum_type_a(c) == l + 1
        fib = singular_fiber(c)
        assert fib == GluedLineBundles(l + 1)
        assert singular_fiber(c, deg1=2).deg2 == l - 1


def test_singular_fibres():
    assert singular_fiber(classes_of("A", 1)[0]) == ConeOverE(4)
    assert singular_fiber(find_class("B", 7, "B")) == GluedAlongDoubleCover(1, P12, 3)
    assert singular_fiber(find_class("E", 6, "E", 5)) == ConeOverE(3)
    for c in all_classes():
        fib = singular_fiber(c)
        if c.tag == "B":
            assert fib.branch_points == 3 and fib.line_degree == c.l - 6
        elif c.tag in ("C", "D"):
            assert fib.branch_points == 4 and fib.base == P1
        elif c.tag in ("E", "F", "G"):
            assert fib.degree == {"E": 9, "F": 5, "G": 3}[c.tag] - c.l


def test_singularity_reports():
    rep = singularity_types(GluedLineBundles(4))
    assert rep.a_infinity and rep.d_infinity_points == 0 and rep.summary() == "A_inf only"
    rep = singularity_types(GluedAlongDoubleCover(0, P1, 4))
    assert rep.d_infinity_points == 4 and CHARACTERISTIC_NOTE_D in rep.flags
    rep = singularity_types(ConeOverE(2))
    assert rep.simply_elliptic_degree == 2 and not rep.a_infinity
    with pytest.raises(GeometryError):
        singularity_types(ProjectivePlane())


def test_tag_errors():
    a1 = classes_of("A", 1)[0]
    a3 = find_class("A", 3, "A", 1)
    for f in (divisor_decomposition, theta_sections, hirzebruch_component):
        with pytest.raises(GeometryError):
            f(a1)
    with pytest.raises(GeometryError):
        degree_d1(a3)
    with pytest.raises(GeometryError):
        base_self_intersection(a3)
    with pytest.raises(GeometryError):
        degree_sum_type_a(find_class("G", 2, "G"))
