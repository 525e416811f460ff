"""Weyl group elements as words in the simple reflections.

An element ``w`` is identified with the point ``w(rho)`` of the weight lattice.
Since ``rho`` is regular this is faithful, and it is much cheaper than carrying
full action matrices around.  Words act right to left: ``(a, b, c)`` is
``s_a s_b s_c``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import prod
from typing import Iterable, Iterator, Sequence

from .rootdata import Coweight, RootDatum, Weight, positive_roots

MAX_ENUMERATION_RANK = 7


class SearchBudgetError(RuntimeError):
    """Exhaustive enumeration of W was requested beyond the configured rank cap."""


class WeylIndexError(IndexError):
    pass


@dataclass(frozen=True, order=True)
class WeylWord:
    letters: tuple[int, ...] = ()

    def __init__(self, letters: Iterable[int] = ()) -> None:
        object.__setattr__(self, "letters", tuple(int(x) for x in letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "WeylWord") -> "WeylWord":
        return WeylWord(self.letters + other.letters)

    def inverse(self) -> "WeylWord":
        return WeylWord(reversed(self.letters))

    def __str__(self) -> str:
        return "1" if not self.letters else "".join(f"s{k}" for k in self.letters)


IDENTITY = WeylWord()


def _check_letters(rd: RootDatum, w: WeylWord) -> None:
    for k in w.letters:
        if not 1 <= k <= rd.rank:
            raise WeylIndexError(f"reflection index {k} out of range 1..{rd.rank}")


def reflect_weight(rd: RootDatum, i: int, x: Sequence) -> list:
    """``s_i`` on fundamental-weight coordinates."""
    xi = x[i - 1]
    row = rd.cartan[i - 1]
    return [x[k] - xi * row[k] for k in range(rd.rank)]


def reflect_coweight(rd: RootDatum, i: int, c: Sequence) -> list:
    """``s_i`` on simple-coroot coordinates."""
    p = sum(rd.cartan[i - 1][j] * c[j] for j in range(rd.rank))
    out = list(c)
    out[i - 1] -= p
    return out


def act_on_weight(rd: RootDatum, w: WeylWord, x: Weight) -> Weight:
    _check_letters(rd, w)
    rd.check_rank(x)
    v = list(x.coords)
    for k in reversed(w.letters):
        v = reflect_weight(rd, k, v)
    return Weight(v)


def act_on_coweight(rd: RootDatum, w: WeylWord, c: Coweight) -> Coweight:
    _check_letters(rd, w)
    rd.check_rank(c)
    v = list(c.coords)
    for k in reversed(w.letters):
        v = reflect_coweight(rd, k, v)
    return Coweight(v)


def act_on_root(rd: RootDatum, w: WeylWord, coeffs: Sequence[int]) -> tuple[int, ...]:
    """``w`` applied to a root given in simple-root coordinates."""
    _check_letters(rd, w)
    v = list(coeffs)
    for k in reversed(w.letters):
        p = sum(v[j] * rd.cartan[j][k - 1] for j in range(rd.rank))
        v[k - 1] -= p
    return tuple(v)


def rho_image(rd: RootDatum, w: WeylWord) -> tuple[int, ...]:
    """``w(rho)`` in fundamental-weight coordinates; a faithful key for ``w``."""
    _check_letters(rd, w)
    v = [1] * rd.rank
    for k in reversed(w.letters):
        v = reflect_weight(rd, k, v)
    return tuple(v)


def word_from_rho_image(rd: RootDatum, v: Sequence[int]) -> WeylWord:
    """The lexicographically first reduced word of the element with ``w(rho) = v``."""
    v = list(v)
    letters = []
    while True:
        neg = [k for k in range(rd.rank) if v[k] < 0]
        if not neg:
            break
        k = neg[0] + 1
        letters.append(k)
        v = reflect_weight(rd, k, v)
    if any(x != 1 for x in v):
        raise ValueError("not a point of the rho-orbit")
    return WeylWord(letters)


def reduce(rd: RootDatum, w: WeylWord) -> WeylWord:
    """Canonical (lex-first reduced) word for the element ``w``."""
    return word_from_rho_image(rd, rho_image(rd, w))


def same_element(rd: RootDatum, u: WeylWord, w: WeylWord) -> bool:
    return rho_image(rd, u) == rho_image(rd, w)


def length(rd: RootDatum, w: WeylWord) -> int:
    """Coxeter length of ``w``."""
    return len(reduce(rd, w))


@lru_cache(maxsize=None)
def weyl_order(rd: RootDatum) -> int:
    """``|W|``, from the height formula ``prod (ht a + 1) / ht a`` over positive roots."""
    num = prod(r.height + 1 for r in positive_roots(rd))
    den = prod(r.height for r in positive_roots(rd))
    return num // den


def _iter_orbit(rd: RootDatum, gens: Sequence[int]) -> Iterator[tuple[int, ...]]:
    start = tuple([1] * rd.rank)
    seen = {start}
    frontier = [start]
    while frontier:
        yield from frontier
        nxt = []
        for v in frontier:
            for k in gens:
                if v[k - 1] > 0:
                    u = tuple(reflect_weight(rd, k, v))
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
        frontier = nxt


def _check_budget(rd: RootDatum, max_rank: int | None) -> None:
    cap = MAX_ENUMERATION_RANK if max_rank is None else max_rank
    if rd.rank > cap:
        raise SearchBudgetError(
            f"exhaustive search over W({rd.name}) exceeds the rank cap {cap}"
        )


def elements(
    rd: RootDatum, generators: Iterable[int] | None = None, *, max_rank: int | None = None
) -> list[WeylWord]:
    """All elements of ``W`` (or of the parabolic subgroup on ``generators``), by length."""
    gens = sorted(rd.nodes if generators is None else set(generators))
    for k in gens:
        if not 1 <= k <= rd.rank:
            raise WeylIndexError(f"reflection index {k} out of range 1..{rd.rank}")
    _check_budget(rd, max_rank)
    return [word_from_rho_image(rd, v) for v in _iter_orbit(rd, gens)]


def is_positive_after(rd: RootDatum, w: WeylWord, coeffs: Sequence[int]) -> bool:
    return any(c > 0 for c in act_on_root(rd, w, coeffs))


def min_coset_reps(
    rd: RootDatum,
    tP: Iterable[int],
    tP2: Iterable[int],
    *,
    max_rank: int | None = None,
) -> list[WeylWord]:
    """Minimal-length representatives of ``W_P \\ W / W_P'``.

    ``tP`` and ``tP2`` are parabolic types, i.e. the simple roots *not* in the
    respective Levi. Returned words are canonical and sorted by (length, word).
    """
    tP, tP2 = set(tP), set(tP2)
    for k in tP | tP2:
        if not 1 <= k <= rd.rank:
            raise WeylIndexError(f"simple index {k} out of range 1..{rd.rank}")
    left = [a for a in rd.nodes if a not in tP]
    right = [b for b in rd.nodes if b not in tP2]
    _check_budget(rd, max_rank)
    out = []
    for v in _iter_orbit(rd, list(rd.nodes)):
        # w^{-1} alpha_a > 0  <=>  <w rho, alpha_a^vee> > 0
        if any(v[a - 1] < 0 for a in left):
            continue
        w = word_from_rho_image(rd, v)
        # w alpha_b > 0  <=>  <w^{-1} rho, alpha_b^vee> > 0
        if right:
            u = rho_image(rd, w.inverse())
            if any(u[b - 1] < 0 for b in right):
                continue
        out.append(w)
    return sorted(out, key=lambda w: (len(w), w.letters))
