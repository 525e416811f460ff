from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import SMALL_TYPES, all_classes, rd_of
from subreg.parabolic import (
    NotHNVectorError,
    ParabolicError,
    ParabolicType,
    UnsupportedLeviError,
    gsp4_presentation,
    is_hn_vector,
    is_parabolic_root,
    levi_presentation,
    levi_roots,
    phi_mu,
    solve_slope,
    two_rho_pairing,
)
from subreg.rootdata import Coweight, all_roots, fundamental_coweight, fundamental_weight, pairing, root_pairing, simple_root
from subreg.subregular import classify


@given(st.sampled_from(SMALL_TYPES), st.data())
def test_solve_slope_hits_targets(t, data):
    rd = rd_of(*t)
    tP = data.draw(st.sets(st.sampled_from(list(rd.nodes)), min_size=1))
    targets = {k: data.draw(st.fractions(-3, 3, max_denominator=4)) for k in tP}
    pt = ParabolicType(rd, tP)
    mu = solve_slope(pt, targets)
    for k in rd.nodes:
        if k in tP:
            assert pairing(fundamental_weight(rd, k), mu) == targets[k]
        else:
            assert pairing(simple_root(rd, k), mu) == 0


@given(st.sampled_from(SMALL_TYPES), st.data())
def test_negative_simple_pairings_give_hn_vectors(t, data):
    # mu = sum c_k varpi_k^vee with every c_k < 0 is an HN vector for t = {k}
    rd = rd_of(*t)
    tP = data.draw(st.sets(st.sampled_from(list(rd.nodes)), min_size=1))
    pt = ParabolicType(rd, tP)
    mu = Coweight([0] * rd.rank)
    for k in tP:
        mu = mu + (-data.draw(st.integers(1, 3))) * fundamental_coweight(rd, k)
    assert is_hn_vector(pt, mu)
    assert not is_hn_vector(pt, -mu)
    again = solve_slope(pt, {k: pairing(fundamental_weight(rd, k), mu) for k in tP})
    assert again == mu


def test_parabolic_contains_negative_borel():
    pt = ParabolicType(rd_of("A", 3), {2})
    for r in all_roots(pt.rd):
        if not r.is_positive:
            assert is_parabolic_root(pt, r)
    assert {r.coeffs for r in levi_roots(pt)} == {(1, 0, 0), (-1, 0, 0), (0, 0, 1), (0, 0, -1)}


def test_phi_mu_and_two_rho():
    rd = rd_of("A", 2)
    mu = solve_slope(ParabolicType(rd, {1, 2}), {1: -1, 2: -1})
    assert mu == Coweight([-1, -1])
    assert {r.coeffs for r in phi_mu(rd, mu)} == {(1, 0), (0, 1), (1, 1)}
    assert two_rho_pairing(rd, mu) == -4


def test_errors():
    rd = rd_of("A", 3)
    with pytest.raises(ParabolicError):
        ParabolicType(rd, {5})
    with pytest.raises(ParabolicError):
        solve_slope(ParabolicType(rd, {1}), {2: -1})
    with pytest.raises(NotHNVectorError):
        classify(rd, {1}, Coweight([1, 0, 0]))
    with pytest.raises(UnsupportedLeviError):
        levi_presentation(ParabolicType(rd_of("B", 3), {1}))
    with pytest.raises(UnsupportedLeviError):
        gsp4_presentation(rd_of("C", 3))


@pytest.mark.parametrize("cls", [c for c in all_classes() if c.tag != "B"], ids=str)
def test_type_a_levi_presentations(cls):
    pres = levi_presentation(cls.pt)
    assert pres.relations_hold()
    assert pres.check()


@pytest.mark.parametrize("l", range(3, 9))
def test_gsp4_presentation(l):
    pres = gsp4_presentation(rd_of("B", l))
    assert pres.check()
    # the similitude character f1 + f4 restricts to varpi_{l-2}
    img = pres.image_of({"f[1]": 1, "f[4]": 1})
    assert img == fundamental_weight(pres.rd, l - 2)


def test_forced_ordering():
    pt = ParabolicType(rd_of("A", 4), {1})
    pres = levi_presentation(pt, {2: (4, 3, 2)})
    assert pres.components[0].nodes == (4, 3, 2)
    assert pres.check()
    with pytest.raises(ParabolicError):
        levi_presentation(pt, {2: (2, 4, 3)})


def _images(pres):
    return {k: tuple(v.coords) for k, v in pres.character_images.items()}


def test_g2_character_table():
    from subreg.subregular import find_class

    imgs = _images(levi_presentation(find_class("G", 2, "G").pt))
    assert imgs["e[1,1]"] == (0, 1)
    assert imgs["e[1,2]"] == (3, -1)


@pytest.mark.parametrize("series,rank", [("C", 3), ("C", 5), ("F", 4), ("B", 3)])
def test_last_character_of_c_and_f(series, rank):
    from subreg.subregular import find_class

    tag = "C" if series == "C" else "F"
    cls = find_class(series, rank, tag)
    pres = levi_presentation(cls.pt)
    comp = next(k for k, c in enumerate(pres.components, start=1) if cls.c1[-1] in c.nodes)
    last = f"e[{comp},{pres.components[comp - 1].n + 1}]"
    expected = 2 * fundamental_weight(cls.rd, cls.alpha_i) - fundamental_weight(cls.rd, cls.c1[-1])
    assert pres.character_image(last) == expected


def test_gsp4_character_table():
    rd = rd_of("B", 5)
    w = lambda k: fundamental_weight(rd, k)
    pres = gsp4_presentation(rd)
    assert pres.character_image("f[1]") == w(5)
    assert pres.character_image("f[2]") == w(4) - w(5)
    assert pres.character_image("f[3]") == w(3) - w(4) + w(5)
    assert pres.character_image("f[4]") == w(3) - w(5)


@pytest.mark.parametrize("l", range(3, 9))
def test_gsp4_levi_root_count(l):
    a_pos = (l - 3) * (l - 2) // 2
    assert len(levi_roots(ParabolicType(rd_of("B", l), {l - 2}))) == 2 * a_pos + 8


def test_slope_examples():
    a1 = rd_of("A", 1)
    assert solve_slope(ParabolicType(a1, {1}), {1: -2}) == Coweight([-2])
    g2 = rd_of("G", 2)
    assert solve_slope(ParabolicType(g2, {1}), {1: -1}) == Coweight([-1, Fraction(-3, 2)])
    c2 = rd_of("C", 2)
    assert two_rho_pairing(c2, solve_slope(ParabolicType(c2, {1}), {1: -1})) == -4
    a3 = rd_of("A", 3)
    pt = ParabolicType(a3, {1, 2})
    assert is_hn_vector(pt, solve_slope(pt, {1: -1, 2: -1}))
    pt = ParabolicType(rd_of("A", 2), {1})
    assert not is_hn_vector(pt, solve_slope(pt, {1: 1}))
    assert is_hn_vector(ParabolicType(a3, set()), Coweight([0, 0, 0]))
    assert levi_roots(ParabolicType(a3, {1, 2, 3})) == []
    assert len(levi_roots(ParabolicType(a3, set()))) == 12


def test_g2_phi_mu():
    g2 = rd_of("G", 2)
    mu = solve_slope(ParabolicType(g2, {1}), {1: -1})
    assert sorted(r.coeffs[0] for r in phi_mu(g2, mu)) == [1, 1, 2, 3, 3]
    assert phi_mu(g2, Coweight([0, 0])) == []


@pytest.mark.parametrize("cls", all_classes(), ids=str)
def test_phi_mu_mass_is_two_rho(cls):
    mass = sum(-root_pairing(cls.rd, r.coeffs, cls.mu) for r in phi_mu(cls.rd, cls.mu))
    assert mass == -two_rho_pairing(cls.rd, cls.mu)
