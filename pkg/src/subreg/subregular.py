"""Subregular Harder-Narasimhan classes and their Dynkin decompositions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .parabolic import (
    NotHNVectorError,
    ParabolicType,
    is_hn_vector,
    levi_negative_roots,
    solve_slope,
    two_rho_pairing,
)
from .rootdata import (
    Coweight,
    Root,
    RootDatum,
    build_root_datum,
    chain_order,
    components,
    fundamental_coweight,
    fundamental_weight,
    pairing,
    root_pairing,
    special_roots,
)

TAGS = ("A1", "A", "B", "C", "D", "E", "F", "G")


class SubregularError(ValueError):
    pass


@dataclass(frozen=True)
class SubregularClass:
    """One subregular class ``(G, P, mu)`` together with its decomposition data.

    ``c0`` is ordered so that it ends at ``alpha_i``. ``c1`` is ordered so that
    ``alpha_j`` is its last node (tags C, F, G), its second-to-last node (tags D,
    E), or so that it starts next to ``alpha_i`` (tags A, B). For tag A1 there is
    no ``alpha_j`` and the decomposition fields are placeholders.
    """

    tag: str
    series: str
    rank: int
    t: tuple[int, ...]
    targets: tuple[tuple[int, Fraction], ...]
    mu: Coweight
    alpha_i: int
    alpha_j: int | None
    c0: tuple[int, ...]
    c1: tuple[int, ...]
    d: int

    @property
    def rd(self) -> RootDatum:
        return build_root_datum(self.series, self.rank)

    @property
    def pt(self) -> ParabolicType:
        return ParabolicType(self.rd, self.t)

    @property
    def l(self) -> int:
        return self.rank

    @property
    def n0(self) -> int:
        return 1 if self.tag == "A1" else len(self.c0)

    @property
    def n1(self) -> int:
        return len(self.c1)

    @property
    def N(self) -> int:
        if self.tag == "A1":
            return 0
        if self.tag == "A":
            return self.n1 + 1
        if self.tag == "F":
            return self.n1 - 1
        return self.n1

    @property
    def group(self) -> tuple[str, int]:
        return (self.series, self.rank)

    @property
    def label(self) -> str:
        """Row label such as ``E6`` or ``F3``: tag plus the series rank ``l``."""
        return "A1" if self.tag == "A1" else f"{self.tag}{self.rank}"

    def __str__(self) -> str:
        j = "-" if self.alpha_j is None else self.alpha_j
        return f"{self.series}{self.rank}[{self.tag}] i={self.alpha_i} j={j}"


# ---------------------------------------------------------------------------
# The case list


def _candidates(rd: RootDatum) -> list[tuple[str, tuple[int, ...], dict[int, int]]]:
    """``(tag, t(P), targets)`` for every class on the group, in tag order."""
    s, l = rd.series, rd.rank
    out: list[tuple[str, tuple[int, ...], dict[int, int]]] = []
    if (s, l) == ("A", 1):
        out.append(("A1", (1,), {1: -2}))
    if s == "A" and l > 1:
        out += [("A", (i, i + 1), {i: -1, i + 1: -1}) for i in range(1, l)]
    if s == "B" and l >= 3:
        out.append(("B", (l - 2,), {l - 2: -1}))
    if s == "C" and l >= 2:
        out.append(("C", (l - 1,), {l - 1: -1}))
    if s == "D":
        for i in ((1, 3, 4) if l == 4 else (l - 3,)):
            out.append(("D", (i,), {i: -1}))
    e_nodes = {("D", 5): (4, 5), ("E", 6): (2, 5), ("E", 7): (5,), ("E", 8): (5,)}
    for i in e_nodes.get((s, l), ()):
        out.append(("E", (i,), {i: -1}))
    if (s, l) in (("B", 3), ("F", 4)):
        out.append(("F", (3,), {3: -1}))
    if (s, l) == ("G", 2):
        out.append(("G", (1,), {1: -1}))
    return out


def _edge_split(rd: RootDatum, i: int, j: int) -> tuple[set[int], set[int]]:
    """Node sets of the two pieces left after deleting the edge ``i - j``."""
    seen = {i}
    stack = [i]
    while stack:
        x = stack.pop()
        for y in rd.neighbours(x):
            if {x, y} == {i, j} or y in seen:
                continue
            seen.add(y)
            stack.append(y)
    if j in seen:
        raise SubregularError(f"deleting edge {i}-{j} does not disconnect {rd.name}")
    return seen, set(rd.nodes) - seen


def _chain(rd: RootDatum, nodes: Iterable[int], simply_laced: bool = True) -> tuple[int, ...]:
    """Path order of ``nodes``; a double edge is tolerated when ``simply_laced`` is off."""
    nodes = sorted(nodes)
    if len(components(rd, nodes)) != 1:
        raise SubregularError(f"nodes {nodes} of {rd.name} are not connected")
    order = chain_order(rd, nodes)
    if order is None and not simply_laced:
        ends = [x for x in nodes if sum(rd.adjacent(x, y) for y in nodes) <= 1]
        path = [ends[0]]
        while len(path) < len(nodes):
            path += [y for y in nodes if rd.adjacent(path[-1], y) and y not in path][:1]
            if len(path) > len(set(path)) or not rd.adjacent(path[-2], path[-1]):
                break
        order = tuple(path) if len(path) == len(nodes) else None
    if order is None:
        raise SubregularError(f"nodes {nodes} of {rd.name} do not form a chain")
    return order


def _orient(chain: tuple[int, ...], node: int, position: int) -> tuple[int, ...]:
    """The orientation of ``chain`` placing ``node`` at 1-based ``position`` (lex-first)."""
    options = [o for o in (chain, chain[::-1]) if o[position - 1] == node]
    if not options:
        raise SubregularError(f"cannot place {node} at position {position} of {chain}")
    return min(options)


def _build(rd: RootDatum, tag: str, t: tuple[int, ...], targets: dict[int, int]) -> SubregularClass:
    mu = solve_slope(ParabolicType(rd, t), targets)
    tg = tuple(sorted((k, Fraction(v)) for k, v in targets.items()))
    i = t[0]
    d = rd.coroot_half_lengths[i - 1]
    if tag == "A1":
        return SubregularClass(tag, rd.series, rd.rank, t, tg, mu, i, None, (1,), (), d)
    if tag == "A":
        j = i + 1
    else:
        specials = special_roots(rd)
        if len(specials) != 1:
            raise SubregularError(f"{rd.name} has no unique special root")
        j = specials[0]
    if not rd.adjacent(i, j):
        raise SubregularError(f"alpha_{i} is not adjacent to alpha_{j} in {rd.name}")
    s0, s1 = _edge_split(rd, i, j)
    ch0, ch1 = _chain(rd, s0), _chain(rd, s1, simply_laced=False)
    c0 = _orient(ch0, i, len(ch0))
    n1 = len(ch1)
    if tag in ("C", "F", "G"):
        c1 = _orient(ch1, j, n1)
    elif tag in ("D", "E"):
        c1 = _orient(ch1, j, n1 - 1)
    else:
        c1 = _orient(ch1, j, 1)
    return SubregularClass(tag, rd.series, rd.rank, t, tg, mu, i, j, c0, c1, d)


@lru_cache(maxsize=None)
def _enumerate(rd: RootDatum) -> tuple[SubregularClass, ...]:
    return tuple(_build(rd, *c) for c in _candidates(rd))


def enumerate_subregular(rd: RootDatum) -> list[SubregularClass]:
    """All subregular classes on ``rd``, ordered by (tag, i)."""
    return sorted(_enumerate(rd), key=lambda c: (TAGS.index(c.tag), c.alpha_i))


def classify(rd: RootDatum, tP: Iterable[int], mu: Coweight) -> SubregularClass | None:
    """The subregular class of ``(G, P, mu)``, or ``None`` when it is not subregular."""
    pt = ParabolicType(rd, tP)
    if not is_hn_vector(pt, mu):
        raise NotHNVectorError(f"{mu} is not a Harder-Narasimhan vector for t={sorted(pt.t)}")
    for cls in _enumerate(rd):
        if frozenset(cls.t) == pt.t and cls.mu == mu:
            return cls
    return None


def find_class(series: str, rank: int, tag: str, i: int | None = None) -> SubregularClass:
    """Look up a class by tag (and ``alpha_i`` when the tag occurs more than once)."""
    matches = [
        c
        for c in enumerate_subregular(build_root_datum(series, rank))
        if c.tag == tag and (i is None or c.alpha_i == i)
    ]
    if len(matches) != 1:
        raise SubregularError(
            f"{len(matches)} classes with tag {tag} and i={i} on {series}{rank}"
        )
    return matches[0]


def dynkin_decomposition(cls: SubregularClass) -> tuple[tuple[int, ...], tuple[int, ...], int, int]:
    return cls.c0, cls.c1, cls.n0, cls.n1


def slice_dimension_expected(cls: SubregularClass) -> int:
    """``l + 2`` for tags A, B, C, D and ``l + 3`` for the others."""
    return cls.l + (2 if cls.tag in ("A", "B", "C", "D") else 3)


def mu_pairings(cls: SubregularClass) -> dict[int, Fraction]:
    """``<varpi_k, mu>`` for every simple index ``k``."""
    rd = cls.rd
    return {k: pairing(fundamental_weight(rd, k), cls.mu) for k in rd.nodes}


def neg_two_rho(cls: SubregularClass) -> Fraction:
    return -two_rho_pairing(cls.rd, cls.mu)


# ---------------------------------------------------------------------------
# Roots of the Levi with negative pairing against the auxiliary slope


@dataclass(frozen=True)
class LeviRootRow:
    root: Root
    mu_prime: Fraction
    varpi_l: Fraction


def _outer_node(cls: SubregularClass) -> int:
    """``l``, except ``l - 1`` for the ``D_4`` class with ``i = 4`` (its image under the 3-4 swap)."""
    return cls.l - 1 if cls.alpha_i == cls.l else cls.l


def auxiliary_slope(cls: SubregularClass) -> Coweight:
    """The slope with ``<varpi_i, mu'> = -1`` and ``<varpi_l, mu'> = 0``."""
    if cls.tag not in ("B", "C", "D"):
        raise SubregularError("the auxiliary slope is used for tags B, C and D only")
    k = _outer_node(cls)
    return solve_slope(ParabolicType(cls.rd, {cls.alpha_i, k}), {cls.alpha_i: -1, k: 0})


def levi_root_rows(cls: SubregularClass) -> list[LeviRootRow]:
    """Roots of the Levi of ``P`` pairing negatively with the auxiliary slope."""
    rd = cls.rd
    mp = auxiliary_slope(cls)
    wl = fundamental_coweight(rd, _outer_node(cls))
    rows = [
        LeviRootRow(r, root_pairing(rd, r.coeffs, mp), root_pairing(rd, r.coeffs, wl))
        for r in levi_negative_roots(cls.pt, mp)
    ]
    return sorted(rows, key=lambda row: (row.mu_prime, tuple(-c for c in row.root.coeffs)))
