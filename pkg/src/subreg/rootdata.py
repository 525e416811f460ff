"""Root data of the simply connected simple groups.

Weights are stored in the fundamental-weight basis and coweights in the
simple-coroot basis, so the natural pairing is a plain dot product. Roots are
stored by their (integer) coordinates in the simple-root basis.

Node labels follow the Bourbaki-like labelling used throughout the package:

* ``B_l``: double edge between ``l-1`` and ``l``, with ``alpha_l`` short.
* ``C_l``: double edge between ``l-1`` and ``l``, with ``alpha_l`` long.
* ``D_l``: chain ``1..l-2``; nodes ``l-1`` and ``l`` both hang off ``l-2``.
* ``E_l``: chain ``1-2-3-5-6-...-l`` with node 4 attached to node 3.
* ``F_4``: ``1-2=>3-4`` with ``alpha_1, alpha_2`` long.
* ``G_2``: ``alpha_1`` short.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from . import _linalg

SERIES = ("A", "B", "C", "D", "E", "F", "G")


class RootDataError(ValueError):
    """Invalid simple type or mismatched root-datum context."""


def _frac_tuple(xs: Iterable) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in xs)


@dataclass(frozen=True)
class Weight:
    """A weight, in the basis of fundamental weights."""

    coords: tuple[Fraction, ...]

    def __init__(self, coords: Iterable) -> None:
        object.__setattr__(self, "coords", _frac_tuple(coords))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        _check_same(self, other)
        return Weight(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "Weight") -> "Weight":
        _check_same(self, other)
        return Weight(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "Weight":
        return Weight(-a for a in self.coords)

    def __mul__(self, k) -> "Weight":
        return Weight(k * a for a in self.coords)

    __rmul__ = __mul__

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)


@dataclass(frozen=True)
class Coweight:
    """A coweight, in the basis of simple coroots."""

    coords: tuple[Fraction, ...]

    def __init__(self, coords: Iterable) -> None:
        object.__setattr__(self, "coords", _frac_tuple(coords))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __add__(self, other: "Coweight") -> "Coweight":
        _check_same(self, other)
        return Coweight(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "Coweight") -> "Coweight":
        _check_same(self, other)
        return Coweight(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "Coweight":
        return Coweight(-a for a in self.coords)

    def __mul__(self, k) -> "Coweight":
        return Coweight(k * a for a in self.coords)

    __rmul__ = __mul__

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)


def _check_same(a, b) -> None:
    if type(a) is not type(b):
        raise RootDataError(f"cannot combine {type(a).__name__} with {type(b).__name__}")
    if a.rank != b.rank:
        raise RootDataError(f"rank mismatch: {a.rank} vs {b.rank}")


@dataclass(frozen=True, order=True)
class Root:
    """A root, with simple-root coordinates and the matching coroot coordinates."""

    coeffs: tuple[int, ...]
    coroot: tuple[int, ...]

    @property
    def sign(self) -> str:
        return "positive" if any(c > 0 for c in self.coeffs) else "negative"

    @property
    def is_positive(self) -> bool:
        return self.sign == "positive"

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(k + 1 for k, c in enumerate(self.coeffs) if c)

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coeffs), tuple(-c for c in self.coroot))

    def coweight(self) -> Coweight:
        """The coroot, as a coweight."""
        return Coweight(self.coroot)


# ---------------------------------------------------------------------------
# Dynkin data


def _edges(series: str, l: int) -> list[tuple[int, int, int]]:
    """Edges as ``(long_node, short_node, multiplicity)`` (order irrelevant if simple)."""
    chain = [(k, k + 1, 1) for k in range(1, l)]
    if series == "A":
        return chain
    if series == "B":
        return chain[:-1] + [(l - 1, l, 2)]
    if series == "C":
        return chain[:-1] + [(l, l - 1, 2)]
    if series == "D":
        return [(k, k + 1, 1) for k in range(1, l - 2)] + [(l - 2, l - 1, 1), (l - 2, l, 1)]
    if series == "E":
        return [(1, 2, 1), (2, 3, 1), (3, 4, 1), (3, 5, 1)] + [(k, k + 1, 1) for k in range(5, l)]
    if series == "F":
        return [(1, 2, 1), (2, 3, 2), (3, 4, 1)]
    if series == "G":
        return [(2, 1, 3)]
    raise RootDataError(f"unknown series {series!r}")


def _valid(series: str, rank: int) -> bool:
    if series not in SERIES or not isinstance(rank, int) or rank < 1:
        return False
    return {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": 6 <= rank <= 8,
        "F": rank == 4,
        "G": rank == 2,
    }[series]


@dataclass(frozen=True)
class RootDatum:
    """Cartan data for a simple type; ``cartan[i][j] = <alpha_{i+1}, alpha_{j+1}^vee>``."""

    series: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    root_lengths: tuple[str, ...]

    @property
    def name(self) -> str:
        return f"{self.series}{self.rank}"

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    def a(self, i: int, j: int) -> int:
        """``<alpha_i, alpha_j^vee>`` with 1-based labels."""
        return self.cartan[i - 1][j - 1]

    def adjacent(self, i: int, j: int) -> bool:
        return i != j and self.a(i, j) != 0

    def neighbours(self, i: int) -> list[int]:
        return [j for j in self.nodes if self.adjacent(i, j)]

    @cached_property
    def coroot_half_lengths(self) -> tuple[int, ...]:
        """``(alpha_k^vee | alpha_k^vee) / 2``: 1 on long roots, 2 or 3 on short ones."""
        return _symmetrizer(self.cartan)

    @cached_property
    def cartan_inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(r) for r in _linalg.inverse(self.cartan))

    @cached_property
    def killing_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Gram matrix of the simple coroots: ``(a_i^vee | a_j^vee) = <a_j, a_i^vee> D_j``."""
        l, D = self.rank, self.coroot_half_lengths
        return tuple(
            tuple(self.cartan[j][i] * D[j] for j in range(l)) for i in range(l)
        )

    @cached_property
    def _positive_roots(self) -> tuple[Root, ...]:
        return _closure(self)

    def check_rank(self, x) -> None:
        if x.rank != self.rank:
            raise RootDataError(f"rank mismatch: expected {self.rank}, got {x.rank}")


def _symmetrizer(cartan: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Propagate ``D_j = D_i A_ij / A_ji`` over the (connected) diagram, then normalise."""
    l = len(cartan)
    D: dict[int, Fraction] = {0: Fraction(1)}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(l):
            if j != i and cartan[i][j] != 0 and j not in D:
                D[j] = D[i] * cartan[i][j] / cartan[j][i]
                stack.append(j)
    if len(D) != l:
        raise RootDataError("Dynkin diagram is not connected")
    lo = min(D.values())
    out = tuple(D[k] / lo for k in range(l))
    if any(x.denominator != 1 for x in out):
        raise RootDataError("non-integral symmetrizer")
    return tuple(int(x) for x in out)


@lru_cache(maxsize=None)
def build_root_datum(series: str, rank: int) -> RootDatum:
    """The root datum of the simply connected group of the given type."""
    if not _valid(series, rank):
        raise RootDataError(f"invalid simple type ({series!r}, {rank!r})")
    cartan = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for p, q, m in _edges(series, rank):
        # p long, q short (irrelevant when m == 1)
        cartan[p - 1][q - 1] = -m
        cartan[q - 1][p - 1] = -1
    D = _symmetrizer(cartan)
    lengths = tuple("long" if d == 1 else "short" for d in D)
    rd = RootDatum(series, rank, tuple(tuple(r) for r in cartan), lengths)
    if _linalg.det(rd.cartan) == 0:  # pragma: no cover - finite type
        raise RootDataError("Cartan matrix is singular")
    return rd


# ---------------------------------------------------------------------------
# Basic vectors


def simple_root(rd: RootDatum, i: int) -> Weight:
    """``alpha_i`` as a weight (row ``i`` of the Cartan matrix)."""
    return Weight(rd.cartan[i - 1])


def fundamental_weight(rd: RootDatum, i: int) -> Weight:
    return Weight(1 if k == i else 0 for k in rd.nodes)


def simple_coroot(rd: RootDatum, i: int) -> Coweight:
    return Coweight(1 if k == i else 0 for k in rd.nodes)


def fundamental_coweight(rd: RootDatum, i: int) -> Coweight:
    """``varpi_i^vee``: column ``i`` of the inverse Cartan matrix."""
    return Coweight(rd.cartan_inverse[k][i - 1] for k in range(rd.rank))


def root_weight(rd: RootDatum, coeffs: Sequence[int]) -> Weight:
    """A combination of simple roots, rewritten in the fundamental-weight basis."""
    return Weight(
        sum(c * rd.cartan[k][j] for k, c in enumerate(coeffs)) for j in range(rd.rank)
    )


def weight_to_root_coords(rd: RootDatum, w: Weight) -> tuple[Fraction, ...]:
    """Simple-root coordinates of a weight (inverse of :func:`root_weight`)."""
    rd.check_rank(w)
    inv = rd.cartan_inverse
    return tuple(sum(w.coords[k] * inv[k][j] for k in range(rd.rank)) for j in range(rd.rank))


def pairing(w: Weight, c: Coweight) -> Fraction:
    """``<w, c>``."""
    if not isinstance(w, Weight) or not isinstance(c, Coweight):
        raise RootDataError("pairing expects (Weight, Coweight)")
    if w.rank != c.rank:
        raise RootDataError(f"rank mismatch: {w.rank} vs {c.rank}")
    return sum((a * b for a, b in zip(w.coords, c.coords)), Fraction(0))


def killing_form(rd: RootDatum, c1: Coweight, c2: Coweight) -> Fraction:
    """Normalised invariant form on coweights; short coroots have square length 2."""
    rd.check_rank(c1)
    rd.check_rank(c2)
    K = rd.killing_matrix
    return sum(
        (c1.coords[i] * K[i][j] * c2.coords[j] for i in range(rd.rank) for j in range(rd.rank)),
        Fraction(0),
    )


# ---------------------------------------------------------------------------
# Roots


def _make_root(rd: RootDatum, coeffs: tuple[int, ...]) -> Root:
    D = rd.coroot_half_lengths
    # root-side Gram matrix (a_j|a_k) = A_jk / D_k, long roots of length 2
    norm = sum(
        Fraction(coeffs[j] * coeffs[k] * rd.cartan[j][k], D[k])
        for j in range(rd.rank)
        for k in range(rd.rank)
    )
    coroot = []
    for k, a in enumerate(coeffs):
        x = Fraction(2 * a, D[k]) / norm
        if x.denominator != 1:
            raise RootDataError("non-integral coroot")  # pragma: no cover
        coroot.append(int(x))
    return Root(coeffs, tuple(coroot))


def _closure(rd: RootDatum) -> tuple[Root, ...]:
    l = rd.rank
    simple = [tuple(1 if k == i else 0 for k in range(l)) for i in range(l)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(l):
                p = sum(r[k] * rd.cartan[k][i] for k in range(l))
                s = tuple(r[k] - (p if k == i else 0) for k in range(l))
                if all(x >= 0 for x in s) and any(s) and s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    ordered = sorted(seen, key=lambda r: (sum(r), tuple(-x for x in r)))
    return tuple(_make_root(rd, r) for r in ordered)


def positive_roots(rd: RootDatum) -> tuple[Root, ...]:
    """Positive roots, ordered by height."""
    return rd._positive_roots


def all_roots(rd: RootDatum) -> tuple[Root, ...]:
    pos = positive_roots(rd)
    return pos + tuple(-r for r in pos)


def highest_root(rd: RootDatum) -> Root:
    return max(positive_roots(rd), key=lambda r: r.height)


def two_rho(rd: RootDatum) -> Weight:
    """Sum of the positive roots, as a weight."""
    total = [0] * rd.rank
    for r in positive_roots(rd):
        total = [t + c for t, c in zip(total, r.coeffs)]
    return root_weight(rd, total)


def coroot_integers(rd: RootDatum) -> tuple[int, ...]:
    """Coefficients of the coroot of the highest root in the simple-coroot basis."""
    return highest_root(rd).coroot


def looijenga_weights(rd: RootDatum) -> tuple[int, ...]:
    """``(1, g_1, ..., g_l)`` sorted."""
    return tuple(sorted((1,) + coroot_integers(rd)))


def dominance_leq(c1: Coweight, c2: Coweight) -> bool:
    """``c1 <= c2``: the difference is a non-negative integral sum of simple coroots."""
    if not (c1.is_integral() and c2.is_integral()):
        raise RootDataError("dominance order is defined on integral coweights")
    return all(b - a >= 0 for a, b in zip(c1.coords, c2.coords)) and c1.rank == c2.rank


# ---------------------------------------------------------------------------
# Diagram combinatorics


def components(rd: RootDatum, nodes: Iterable[int]) -> list[tuple[int, ...]]:
    """Connected components of the sub-diagram on ``nodes`` (sorted, deterministic)."""
    remaining = set(nodes)
    out = []
    while remaining:
        start = min(remaining)
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in rd.neighbours(x):
                if y in remaining and y not in comp:
                    comp.add(y)
                    stack.append(y)
        remaining -= comp
        out.append(tuple(sorted(comp)))
    return sorted(out)


def chain_order(rd: RootDatum, comp: Sequence[int]) -> tuple[int, ...] | None:
    """If ``comp`` is a simply-laced chain (type A), return it in path order from its
    smaller end; otherwise ``None``."""
    comp = list(comp)
    cs = set(comp)
    for x in comp:
        for y in rd.neighbours(x):
            if y in cs and rd.a(x, y) != -1:
                return None
    deg = {x: sum(1 for y in rd.neighbours(x) if y in cs) for x in comp}
    if len(comp) == 1:
        return (comp[0],)
    ends = sorted(x for x in comp if deg[x] == 1)
    if len(ends) != 2 or any(d > 2 for d in deg.values()):
        return None
    path = [ends[0]]
    prev = None
    while len(path) < len(comp):
        cur = path[-1]
        nxt = [y for y in rd.neighbours(cur) if y in cs and y != prev]
        if len(nxt) != 1:
            return None
        prev = cur
        path.append(nxt[0])
    return tuple(path)


def special_roots(rd: RootDatum) -> tuple[int, ...]:
    """Long simple roots whose removal leaves type-A pieces, each attached at an end."""
    out = []
    for a in rd.nodes:
        if rd.root_lengths[a - 1] != "long":
            continue
        ok = True
        for comp in components(rd, [k for k in rd.nodes if k != a]):
            order = chain_order(rd, comp)
            touching = [x for x in comp if rd.adjacent(a, x)]
            if order is None or len(touching) != 1 or touching[0] not in (order[0], order[-1]):
                ok = False
                break
        if ok:
            out.append(a)
    return tuple(out)


def diagram_automorphisms(rd: RootDatum) -> list[tuple[int, ...]]:
    """All node permutations preserving the Cartan matrix, as tuples ``(s(1), ..., s(l))``."""
    from itertools import permutations

    l = rd.rank
    out = []
    for perm in permutations(range(1, l + 1)):
        if all(rd.a(perm[i - 1], perm[j - 1]) == rd.a(i, j) for i in rd.nodes for j in rd.nodes):
            out.append(perm)
    return out


def root_pairing(rd: RootDatum, coeffs: Sequence, c: Coweight) -> Fraction:
    """``<alpha, c>`` for ``alpha`` given in simple-root coordinates."""
    rd.check_rank(c)
    return pairing(root_weight(rd, coeffs), c)
