"""Standard parabolics, slopes, Harder-Narasimhan vectors and Levi presentations.

A standard parabolic is recorded by its type ``t``: the simple roots that are
*not* roots of it. The parabolics contain the negative Borel, so the roots of
``P`` are the negative roots together with the roots of the Levi.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import _linalg
from .rootdata import (
    Coweight,
    Root,
    RootDatum,
    Weight,
    all_roots,
    chain_order,
    components,
    fundamental_coweight,
    pairing,
    root_pairing,
    two_rho,
)


class ParabolicError(ValueError):
    pass


class NotHNVectorError(ParabolicError):
    pass


class UnsupportedLeviError(ParabolicError):
    """Levi factor outside the type-A engine and the one fixed GSp4 table."""


@dataclass(frozen=True)
class ParabolicType:
    rd: RootDatum
    t: frozenset[int]

    def __init__(self, rd: RootDatum, t: Iterable[int]) -> None:
        t = frozenset(int(k) for k in t)
        for k in t:
            if not 1 <= k <= rd.rank:
                raise ParabolicError(f"simple index {k} out of range 1..{rd.rank}")
        object.__setattr__(self, "rd", rd)
        object.__setattr__(self, "t", t)

    @property
    def levi_nodes(self) -> tuple[int, ...]:
        return tuple(k for k in self.rd.nodes if k not in self.t)


# A slope is a rational coweight orthogonal to the simple roots of the Levi.
SlopeVector = Coweight


def levi_roots(pt: ParabolicType) -> list[Root]:
    """Roots whose support avoids ``t``."""
    return [r for r in all_roots(pt.rd) if not (r.support & pt.t)]


def is_parabolic_root(pt: ParabolicType, r: Root) -> bool:
    return not r.is_positive or not (r.support & pt.t)


def is_hn_vector(pt: ParabolicType, mu: Coweight) -> bool:
    """``alpha`` is a root of ``P`` exactly when ``<alpha, mu> >= 0``."""
    rd = pt.rd
    rd.check_rank(mu)
    for r in all_roots(rd):
        if is_parabolic_root(pt, r) != (root_pairing(rd, r.coeffs, mu) >= 0):
            return False
    return True


def solve_slope(pt: ParabolicType, targets: Mapping[int, object]) -> SlopeVector:
    """The coweight in the span of ``{varpi_k^vee : k in t}`` with ``<varpi_k, mu> = targets[k]``."""
    rd = pt.rd
    if set(targets) != set(pt.t):
        raise ParabolicError(
            f"need exactly one target per element of t={sorted(pt.t)}, got {sorted(targets)}"
        )
    ks = sorted(pt.t)
    if not ks:
        return SlopeVector([0] * rd.rank)
    inv = rd.cartan_inverse
    # <varpi_m, varpi_k^vee> = inv[m][k]
    system = [[inv[m - 1][k - 1] for k in ks] for m in ks]
    coeffs = _linalg.solve(system, [Fraction(targets[m]) for m in ks])
    total = [Fraction(0)] * rd.rank
    for c, k in zip(coeffs, ks):
        total = [a + c * b for a, b in zip(total, fundamental_coweight(rd, k).coords)]
    return SlopeVector(total)


def two_rho_pairing(rd: RootDatum, mu: Coweight) -> Fraction:
    return pairing(two_rho(rd), mu)


def phi_mu(rd: RootDatum, mu: Coweight) -> list[Root]:
    """Roots with strictly negative pairing against ``mu``."""
    rd.check_rank(mu)
    return [r for r in all_roots(rd) if root_pairing(rd, r.coeffs, mu) < 0]


def levi_negative_roots(pt: ParabolicType, mu: Coweight) -> list[Root]:
    """Roots of the Levi with ``<alpha, mu> < 0``."""
    return [r for r in levi_roots(pt) if root_pairing(pt.rd, r.coeffs, mu) < 0]


# ---------------------------------------------------------------------------
# Levi presentations


@dataclass(frozen=True)
class LeviComponent:
    nodes: tuple[int, ...]
    attach: tuple[tuple[int, int], ...]
    mult: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.nodes)

    def i(self, k: int) -> int:
        return dict(self.attach)[k]

    def m(self, k: int) -> int:
        return dict(self.mult)[k]

    def exponent(self, k: int) -> int:
        """Exponent of ``lambda_k`` in the determinant relation for this component."""
        return self.m(k) * (self.n + 1 - self.i(k))


@dataclass(frozen=True)
class LeviPresentation:
    """A lattice-level presentation of a Levi by products of general linear groups.

    ``basis`` labels the weight lattice ``M_0`` of the product group, ``relations``
    span the kernel of ``M_0 -> M``, and ``phi[k]`` is the image of ``alpha_k^vee``
    in the dual of ``M_0``.
    """

    rd: RootDatum
    t: frozenset[int]
    components: tuple[LeviComponent, ...]
    basis: tuple[str, ...]
    relations: tuple[tuple[int, ...], ...]
    phi: tuple[tuple[int, ...], ...]
    simple_roots: tuple[tuple[str, int], ...] = field(default=())

    def character_image(self, label: str) -> Weight:
        """``phi^*`` of a basis character."""
        idx = self.basis.index(label)
        return Weight(self.phi[k][idx] for k in range(self.rd.rank))

    @property
    def character_images(self) -> dict[str, Weight]:
        return {b: self.character_image(b) for b in self.basis}

    def image_of(self, vec: Mapping[str, int]) -> Weight:
        out = Weight([0] * self.rd.rank)
        for label, c in vec.items():
            out = out + c * self.character_image(label)
        return out

    def relations_hold(self) -> bool:
        return all(
            sum(a * b for a, b in zip(rel, self.phi[k])) == 0
            for rel in self.relations
            for k in range(self.rd.rank)
        )

    def is_isomorphism(self) -> bool:
        """``phi`` is injective onto a saturated sublattice of full rank in ``M^vee``."""
        if len(self.basis) - len(self.relations) != self.rd.rank:
            return False
        if not self.relations_hold():
            return False
        try:
            return _linalg.maximal_minor_gcd(self.phi) == 1
        except ValueError:
            return False

    def roots_match(self) -> bool:
        """``phi^*`` sends each ``beta_{c,j} = e_{c,j} - e_{c,j+1}`` to ``alpha_{c,j}``."""
        rd = self.rd
        for label_pair, node in self.simple_roots:
            a, b = label_pair.split("-")
            img = self.character_image(a) - self.character_image(b)
            if img != Weight(rd.cartan[node - 1]):
                return False
        return True

    def check(self) -> bool:
        return self.is_isomorphism() and self.roots_match()


def _e(c: int, j: int) -> str:
    return f"e[{c},{j}]"


def _attachment(rd: RootDatum, order: Sequence[int], t: Iterable[int]):
    attach, mult = [], []
    for k in sorted(t):
        adj = [p for p, node in enumerate(order, start=1) if rd.adjacent(node, k)]
        if len(adj) > 1:
            raise UnsupportedLeviError(f"node {k} meets component {tuple(order)} twice")
        if adj:
            p = adj[0]
            attach.append((k, p))
            mult.append((k, -rd.a(order[p - 1], k)))
        else:
            attach.append((k, len(order) + 1))
            mult.append((k, 0))
    return LeviComponent(tuple(order), tuple(attach), tuple(mult))


def _type_a_presentation(
    rd: RootDatum, t: frozenset[int], comps: Sequence[LeviComponent]
) -> LeviPresentation:
    basis: list[str] = []
    for ci, comp in enumerate(comps, start=1):
        basis += [_e(ci, j) for j in range(1, comp.n + 2)]
    ts = sorted(t)
    basis += [f"omega[{k}]" for k in ts]
    pos = {b: p for p, b in enumerate(basis)}

    relations = []
    for ci, comp in enumerate(comps, start=1):
        rel = [0] * len(basis)
        for j in range(1, comp.n + 2):
            rel[pos[_e(ci, j)]] = 1
        for k in ts:
            rel[pos[f"omega[{k}]"]] = -comp.exponent(k)
        relations.append(tuple(rel))

    phi = []
    for node in rd.nodes:
        vec = [0] * len(basis)
        if node in t:
            vec[pos[f"omega[{node}]"]] = 1
            for ci, comp in enumerate(comps, start=1):
                for j in range(comp.i(node) + 1, comp.n + 2):
                    vec[pos[_e(ci, j)]] += comp.m(node)
        else:
            ci, comp = next((ci, c) for ci, c in enumerate(comps, start=1) if node in c.nodes)
            j = comp.nodes.index(node) + 1
            vec[pos[_e(ci, j)]] = 1
            vec[pos[_e(ci, j + 1)]] = -1
        phi.append(tuple(vec))

    simple = tuple(
        (f"{_e(ci, j)}-{_e(ci, j + 1)}", node)
        for ci, comp in enumerate(comps, start=1)
        for j, node in enumerate(comp.nodes, start=1)
    )
    return LeviPresentation(rd, t, tuple(comps), tuple(basis), tuple(relations), tuple(phi), simple)


def _total_exponent(comp: LeviComponent, t: Iterable[int]) -> int:
    return sum(comp.exponent(k) for k in t)


def levi_presentation(
    pt: ParabolicType, orderings: Mapping[int, Sequence[int]] | None = None
) -> LeviPresentation:
    """Present the Levi of ``pt`` as a subgroup of a product of ``GL``'s and tori.

    Each component is a type-A chain. By default it is oriented to minimise the
    total determinant exponent (ties broken lexicographically); ``orderings`` may
    instead fix the orientation of the component containing a given node.
    """
    rd, t = pt.rd, pt.t
    comps = []
    for nodes in components(rd, pt.levi_nodes):
        chain = chain_order(rd, nodes)
        if chain is None:
            raise UnsupportedLeviError(
                f"Levi component {nodes} of {rd.name} is not of type A"
            )
        forced = None
        for key, order in (orderings or {}).items():
            if key in nodes:
                forced = tuple(order)
        if forced is not None:
            if sorted(forced) != sorted(nodes) or forced not in (chain, chain[::-1]):
                raise ParabolicError(f"ordering {forced} is not a path through {nodes}")
            comps.append(_attachment(rd, forced, t))
            continue
        options = [_attachment(rd, o, t) for o in sorted({chain, chain[::-1]})]
        comps.append(min(options, key=lambda c: (_total_exponent(c, t), c.nodes)))
    return _type_a_presentation(rd, t, comps)


def gsp4_presentation(rd: RootDatum) -> LeviPresentation:
    """Fixed presentation of the Levi of type ``{alpha_{l-2}}`` in ``B_l`` via ``GL_{l-2} x GSp_4``."""
    if rd.series != "B" or rd.rank < 3:
        raise UnsupportedLeviError("the GSp4 table applies to B_l with l >= 3 only")
    l = rd.rank
    basis = tuple([_e(1, j) for j in range(1, l - 1)] + [f"f[{k}]" for k in range(1, 5)])
    pos = {b: p for p, b in enumerate(basis)}

    def vec(entries: Mapping[str, int]) -> tuple[int, ...]:
        v = [0] * len(basis)
        for label, c in entries.items():
            v[pos[label]] += c
        return tuple(v)

    relations = (
        vec({"f[1]": 1, "f[2]": -1, "f[3]": -1, "f[4]": 1}),
        vec({"f[1]": 1, "f[4]": 1, **{_e(1, j): -1 for j in range(1, l - 1)}}),
    )
    phi = []
    for k in range(1, l - 2):
        phi.append(vec({_e(1, k): 1, _e(1, k + 1): -1}))
    phi.append(vec({_e(1, l - 2): 1, "f[3]": 1, "f[4]": 1}))
    phi.append(vec({"f[2]": 1, "f[3]": -1}))
    phi.append(vec({"f[1]": 1, "f[2]": -1, "f[3]": 1, "f[4]": -1}))
    simple = tuple((f"{_e(1, k)}-{_e(1, k + 1)}", k) for k in range(1, l - 2)) + (
        ("f[2]-f[3]", l - 1),
        ("f[1]-f[2]", l),
    )
    chain = LeviComponent(tuple(range(1, l - 2)), ((l - 2, l - 2),), ((l - 2, 1),))
    return LeviPresentation(
        rd, frozenset({l - 2}), (chain,), basis, relations, tuple(phi), simple
    )


__all__ = [
    "LeviComponent",
    "LeviPresentation",
    "NotHNVectorError",
    "ParabolicError",
    "ParabolicType",
    "SlopeVector",
    "UnsupportedLeviError",
    "gsp4_presentation",
    "is_hn_vector",
    "levi_negative_roots",
    "levi_presentation",
    "levi_roots",
    "phi_mu",
    "solve_slope",
    "two_rho_pairing",
]
