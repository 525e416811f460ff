"""Weight bookkeeping for the subregular slices: fibre dimensions, slice and base
weights, and the folding comparison between families."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterable, Mapping

from .rootdata import (
    build_root_datum,
    coroot_integers,
    fundamental_coweight,
    killing_form,
    root_pairing,
)
from .parabolic import phi_mu, two_rho_pairing
from .subregular import SubregularClass, enumerate_subregular


class ConsistencyError(ArithmeticError):
    """A derived quantity failed an integrality or tag-table check."""


class FoldingError(ValueError):
    """The pair of classes is not a folding pair."""


Weight = tuple[int, ...]


@dataclass(frozen=True)
class WeightMultiset:
    """Finite multiset of integer weight vectors (length 1, or 2 for tag A)."""

    entries: tuple[tuple[Weight, int], ...]

    def __init__(self, data: Mapping | Iterable = ()) -> None:
        counts: Counter = Counter()
        items = data.items() if isinstance(data, Mapping) else data
        for w, m in items:
            key = (w,) if isinstance(w, int) else tuple(int(x) for x in w)
            if m < 0:
                raise ValueError("negative multiplicity")
            counts[key] += int(m)
        object.__setattr__(
            self, "entries", tuple(sorted((w, m) for w, m in counts.items() if m))
        )

    @classmethod
    def from_list(cls, weights: Iterable) -> "WeightMultiset":
        return cls((w, 1) for w in weights)

    def as_dict(self) -> dict[Weight, int]:
        return dict(self.entries)

    def __len__(self) -> int:
        return sum(m for _, m in self.entries)

    @property
    def total(self) -> int:
        """Number of entries counted with multiplicity."""
        return len(self)

    def scaled(self, k: int | Weight) -> "WeightMultiset":
        if isinstance(k, int):
            return WeightMultiset((tuple(k * x for x in w), m) for w, m in self.entries)
        return WeightMultiset(
            (tuple(a * x for a, x in zip(k, w)), m) for w, m in self.entries
        )

    def divisible_part(self, d: int) -> "WeightMultiset":
        return WeightMultiset((w, m) for w, m in self.entries if all(x % d == 0 for x in w))

    def product(self) -> int:
        """Product of all weights with multiplicity (one-dimensional weights only)."""
        if any(len(w) != 1 for w, _ in self.entries):
            raise ValueError("product is defined for scalar weights")
        return prod(w[0] ** m for w, m in self.entries)

    def exponent_string(self) -> str:
        parts = []
        for w, m in self.entries:
            base = str(w[0]) if len(w) == 1 else "(" + ",".join(map(str, w)) + ")"
            parts.append(base if m == 1 else f"{base}^{m}")
        return " ".join(parts) if parts else "-"


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ConsistencyError(f"{what} is not integral: {x}")
    return int(x)


def slice_fiber_dimension(cls: SubregularClass) -> int:
    """``-<2 rho, mu>``."""
    dim = _as_int(-two_rho_pairing(cls.rd, cls.mu), "fibre dimension")
    if dim < 0:
        raise ConsistencyError(f"negative fibre dimension {dim}")
    return dim


def _coords(cls: SubregularClass) -> tuple[int, ...]:
    return (cls.alpha_i, cls.alpha_i + 1) if cls.tag == "A" else (cls.alpha_i,)


def slice_weights(cls: SubregularClass) -> WeightMultiset:
    """Each root of ``Phi_mu`` puts mass ``-<alpha, mu>`` on its ``varpi_i^vee`` level."""
    rd = cls.rd
    masses: dict[Weight, Fraction] = {}
    for r in phi_mu(rd, cls.mu):
        w = tuple(r.coeffs[k - 1] for k in _coords(cls))
        masses[w] = masses.get(w, Fraction(0)) - root_pairing(rd, r.coeffs, cls.mu)
    out = WeightMultiset((w, _as_int(m, f"mass at weight {w}")) for w, m in masses.items())
    for w, _ in out.entries:
        if any(x < 0 for x in w) or not any(w):
            raise ConsistencyError(f"slice weight {w} is not a nonzero non-negative vector")
    return out


def mu_weight(cls: SubregularClass) -> int | tuple[int, int]:
    """``-(mu | varpi_i^vee)`` (componentwise in tag A), checked against the tag table."""
    rd = cls.rd
    vals = tuple(
        _as_int(-killing_form(rd, cls.mu, fundamental_coweight(rd, k)), "mu weight")
        for k in _coords(cls)
    )
    if cls.tag == "A":
        if vals != (1, 1):
            raise ConsistencyError(f"tag A mu weight {vals} != (1, 1)")
        return vals
    expected = 2 if cls.tag == "A1" else cls.d
    if vals[0] != expected:
        raise ConsistencyError(f"mu weight {vals[0]} != {expected} for tag {cls.tag}")
    return vals[0]


def looijenga_weights(cls: SubregularClass) -> WeightMultiset:
    """``{1, g_1, ..., g_l}``, unscaled."""
    return WeightMultiset.from_list((1,) + coroot_integers(cls.rd))


def base_weights(cls: SubregularClass) -> WeightMultiset:
    """Looijenga weights multiplied by :func:`mu_weight`."""
    mw = mu_weight(cls)
    base = looijenga_weights(cls)
    if cls.tag == "A":
        return WeightMultiset(((1, 1), m) for _, m in base.entries).scaled(mw)
    return base.scaled(mw)


def weighted_cone_degree(cls: SubregularClass) -> Fraction:
    """Product of base weights over product of slice weights (scalar tags only)."""
    if cls.tag == "A":
        raise ConsistencyError("weights are two-dimensional in tag A")
    return Fraction(base_weights(cls).product(), slice_weights(cls).product())


# ---------------------------------------------------------------------------
# Folding


FOLDING_FAMILIES = {("A1", "E"), ("C", "D"), ("F", "E"), ("G", "E")}

# Pairs as (small group, small tag, big group, big tag).
LISTED_FOLDING_PAIRS = (
    (("A", 1), "A1", ("D", 5), "E"),
    (("C", 2), "C", ("D", 6), "D"),
    (("C", 3), "C", ("D", 7), "D"),
    (("C", 4), "C", ("D", 8), "D"),
    (("B", 3), "F", ("E", 6), "E"),
    (("F", 4), "F", ("E", 7), "E"),
    (("G", 2), "G", ("E", 8), "E"),
)

FOLDING_PAIRS = (
    (("A", 1), "A1", ("D", 5), "E"),
    (("C", 2), "C", ("D", 6), "D"),
    (("C", 3), "C", ("D", 7), "D"),
    (("C", 4), "C", ("D", 8), "D"),
    (("B", 3), "F", ("E", 7), "E"),
    (("F", 4), "F", ("E", 8), "E"),
    (("G", 2), "G", ("E", 8), "E"),
)


def first_class(group: tuple[str, int], tag: str) -> SubregularClass:
    for c in enumerate_subregular(build_root_datum(*group)):
        if c.tag == tag:
            return c
    raise FoldingError(f"no class with tag {tag} on {group[0]}{group[1]}")


@dataclass(frozen=True)
class FoldingReport:
    small: str
    big: str
    d: int
    base_small: WeightMultiset
    base_big_part: WeightMultiset
    slice_small_part: WeightMultiset
    slice_big_part: WeightMultiset

    @property
    def ok(self) -> bool:
        return (
            self.base_small == self.base_big_part
            and self.slice_small_part == self.slice_big_part
        )


def folding_report(small: SubregularClass, big: SubregularClass) -> FoldingReport:
    if (small.tag, big.tag) not in FOLDING_FAMILIES:
        raise FoldingError(f"({small.label}, {big.label}) is not a folding family")
    d = mu_weight(small)
    assert isinstance(d, int)
    return FoldingReport(
        small.label,
        big.label,
        d,
        base_weights(small),
        base_weights(big).divisible_part(d),
        slice_weights(small).divisible_part(d),
        slice_weights(big).divisible_part(d),
    )


def folding_check(small: SubregularClass, big: SubregularClass) -> bool:
    """Compare ``d``-divisible parts of the base and slice weights of the two classes."""
    return folding_report(small, big).ok


# ---------------------------------------------------------------------------
# Reference rows of the weights table, used only to flag discrepancies.


def _ms(*pairs: tuple[int, int]) -> WeightMultiset:
    return WeightMultiset(pairs)


def reference_weights_row(cls: SubregularClass):
    """Reference ``(base, mu_weight, slice)``, or ``None`` when no row applies."""
    l, tag = cls.l, cls.tag
    if tag == "A1":
        return _ms((1, 2)), 2, _ms((1, 4))
    if tag == "A":
        return (
            _ms((1, l + 1)),
            (1, 1),
            WeightMultiset((((1, 0), 1), ((0, 1), 1), ((1, 1), l))),
        )
    if tag == "B":
        return _ms((1, 3), (2, l - 2)), 1, _ms((1, 5), (2, l - 3))
    if tag == "C":
        return _ms((1, l + 1)), 2, _ms((1, 2), (2, l))
    if tag == "D":
        return _ms((1, 4), (2, l - 3)), 1, _ms((1, 6), (2, l - 4))
    table = {
        ("E", 5): (_ms((1, 4), (2, 2)), 1, _ms((1, 8))),
        ("E", 6): (_ms((1, 3), (2, 3), (3, 1)), 1, _ms((1, 6), (2, 3))),
        ("E", 7): (_ms((1, 2), (2, 2), (3, 2), (4, 1)), 1, _ms((1, 4), (2, 4), (3, 2))),
        (
            "E",
            8,
        ): (
            _ms((1, 1), (2, 2), (3, 2), (4, 2), (5, 1), (6, 1)),
            1,
            _ms((1, 2), (2, 3), (3, 3), (4, 2), (5, 1)),
        ),
        ("F", 3): (_ms((1, 3), (2, 1)), 2, _ms((1, 2), (2, 4))),
        ("F", 4): (_ms((1, 2), (2, 2), (3, 1)), 2, _ms((1, 1), (2, 3), (3, 1), (4, 2))),
        ("G", 2): (_ms((1, 2), (2, 1)), 3, _ms((1, 1), (2, 1), (3, 3))),
    }
    return table.get((tag, l))
