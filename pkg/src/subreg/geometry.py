"""Symbolic bookkeeping for the unstable fibre: divisors, blowup sections, base
surfaces, self-intersection degrees and singularity reports.

Surfaces here are descriptors, not schemes. Numerical claims (degrees, branch
counts, cone degrees) are derived from the class data and a few intersection
rules on weighted projective lines.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .induction import weighted_cone_degree
from .rootdata import Coweight, RootDatum, killing_form, pairing, simple_coroot, two_rho
from .subregular import SubregularClass


class GeometryError(ValueError):
    """The operation does not apply to this class."""


def _need_decomposition(cls: SubregularClass, what: str) -> None:
    if cls.tag == "A1":
        raise GeometryError(f"{what} is not defined for tag A1")


# ---------------------------------------------------------------------------
# Divisors


@dataclass(frozen=True)
class DivisorDecomposition:
    """``sum m * D_lambda`` over ``lambda`` in ``alpha_i^vee, alpha_j^vee, alpha_i^vee + alpha_j^vee``."""

    labels: tuple[str, ...]
    coweights: tuple[Coweight, ...]
    multiplicities: tuple[int, ...]

    @property
    def terms(self) -> list[tuple[str, int]]:
        return list(zip(self.labels, self.multiplicities))


def divisor_decomposition(cls: SubregularClass) -> DivisorDecomposition:
    """Multiplicities ``(d, 1, 1)``, each checked against ``(lam | lam) / 2``."""
    _need_decomposition(cls, "the divisor decomposition")
    rd = cls.rd
    i, j = cls.alpha_i, cls.alpha_j
    ai, aj = simple_coroot(rd, i), simple_coroot(rd, j)
    lams = (ai, aj, ai + aj)
    mults = (cls.d, 1, 1)
    for lam, m in zip(lams, mults):
        half = killing_form(rd, lam, lam) / 2
        if half != m:
            raise GeometryError(f"(lam|lam)/2 = {half} differs from multiplicity {m}")
    labels = (f"α{i}∨", f"α{j}∨", f"α{i}∨+α{j}∨")
    return DivisorDecomposition(labels, lams, mults)


def canonical_multiplicity(rd: RootDatum, lam: Coweight) -> int:
    """``-2 + <rho, lam>``."""
    rd.check_rank(lam)
    val = pairing(two_rho(rd), lam) / 2 - 2
    if val.denominator != 1:
        raise GeometryError(f"-2 + <rho, lam> = {val} is not an integer")
    return int(val)


# ---------------------------------------------------------------------------
# Sections


@dataclass(frozen=True)
class SectionFormula:
    """A signed sum of ``varpi_k(y)`` and ``alpha_k(y)``; empty means zero."""

    terms: tuple[tuple[int, str, int], ...] = ()

    @classmethod
    def build(cls, pieces) -> "SectionFormula":
        acc: dict[tuple[str, int], int] = {}
        for coef, kind, k in pieces:
            if kind not in ("varpi", "alpha"):
                raise ValueError(f"unknown symbol kind {kind!r}")
            acc[(kind, k)] = acc.get((kind, k), 0) + coef
        order = {"varpi": 0, "alpha": 1}
        items = sorted(((kind, k), c) for (kind, k), c in acc.items() if c)
        items.sort(key=lambda t: (order[t[0][0]], t[0][1]))
        return cls(tuple((c, kind, k) for (kind, k), c in items))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def render(self, ascii: bool = False) -> str:
        if self.is_zero:
            return "0"
        sym = {"varpi": "w" if ascii else "ϖ", "alpha": "a" if ascii else "α"}
        out = ""
        for c, kind, k in self.terms:
            mag = "" if abs(c) == 1 else str(abs(c))
            sign = "-" if c < 0 else "+"
            body = f"{mag}{sym[kind]}{k}"
            out += (("-" if c < 0 else "") + body) if not out else f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.render()


ZERO = SectionFormula()


def theta_sections(cls: SubregularClass) -> list[SectionFormula]:
    """``theta_1, ..., theta_{n_0 + 1}``; the last one is zero."""
    _need_decomposition(cls, "theta sections")
    i, j, c0 = cls.alpha_i, cls.alpha_j, cls.c0
    out = []
    for k in range(1, cls.n0 + 1):
        pieces = [(1, "varpi", j), (-1, "varpi", i), (-1, "varpi", c0[k - 1])]
        if k > 1:
            pieces.append((1, "varpi", c0[k - 2]))
        out.append(SectionFormula.build(pieces))
    return out + [ZERO]


def theta_prime_sections(cls: SubregularClass) -> list[SectionFormula]:
    """``theta'_1, ..., theta'_N``; the last one is zero.

    Outside tag A, ``theta'_k`` is ``alpha_{c_1,k} + ... + alpha_{c_1,n_1-1}``.
    In tag A the roles of ``alpha_i`` and ``alpha_{i+1}`` are swapped, the diagram
    read backwards and the result negated.
    """
    _need_decomposition(cls, "theta' sections")
    N, c1 = cls.N, cls.c1
    out = []
    if cls.tag == "A":
        i, j = cls.alpha_i, cls.alpha_j
        rev = c1[::-1]
        for k in range(1, N):
            pieces = [(-1, "varpi", i), (1, "varpi", j), (1, "varpi", rev[k - 1])]
            if k > 1:
                pieces.append((-1, "varpi", rev[k - 2]))
            out.append(SectionFormula.build(pieces))
    else:
        for k in range(1, N):
            out.append(SectionFormula.build((1, "alpha", c1[p - 1]) for p in range(k, cls.n1)))
    return out + [ZERO]


# ---------------------------------------------------------------------------
# Surfaces


@dataclass(frozen=True)
class WeightedProjectiveLine:
    a: int = 1
    b: int = 1

    @property
    def anticanonical_degree(self) -> Fraction:
        """``deg(-K) = (a + b) / ab``."""
        return Fraction(self.a + self.b, self.a * self.b)

    def __str__(self) -> str:
        return "P1" if (self.a, self.b) == (1, 1) else f"P({self.a},{self.b})"


P1 = WeightedProjectiveLine(1, 1)
P12 = WeightedProjectiveLine(1, 2)


@dataclass(frozen=True)
class SurfaceDescriptor:
    """Base class; ``kind`` names the variant and ``fields()`` its parameters."""

    kind: str = field(init=False, default="")

    def fields(self) -> dict:
        return {}

    def to_dict(self) -> dict:
        return {"kind": self.kind, **self.fields()}


@dataclass(frozen=True)
class LineBundleOverE(SurfaceDescriptor):
    degree: int | None = None
    kind: str = field(init=False, default="LineBundleOverE")

    def fields(self) -> dict:
        return {"degree": self.degree}

    def __str__(self) -> str:
        d = "?" if self.degree is None else self.degree
        return f"line bundle of degree {d} over E"


@dataclass(frozen=True)
class Hirzebruch(SurfaceDescriptor):
    """``F_n = P_{P1}(O + O(n))``."""

    index: int = 0
    kind: str = field(init=False, default="Hirzebruch")

    @property
    def base(self) -> WeightedProjectiveLine:
        return P1

    def anticanonical_self_intersection(self) -> Fraction:
        return 4 * self.base.anticanonical_degree

    def fields(self) -> dict:
        return {"index": self.index}

    def __str__(self) -> str:
        return f"F_{self.index}"


@dataclass(frozen=True)
class StackyHirzebruch(SurfaceDescriptor):
    """``P_{P(1,2)}(O + O(twist))``."""

    twist: int = 1
    kind: str = field(init=False, default="StackyHirzebruch")

    @property
    def base(self) -> WeightedProjectiveLine:
        return P12

    def anticanonical_self_intersection(self) -> Fraction:
        return 4 * self.base.anticanonical_degree

    def fields(self) -> dict:
        return {"twist": self.twist}

    def __str__(self) -> str:
        return f"P_P(1,2)(O + O({self.twist}))"


@dataclass(frozen=True)
class ProjectivePlane(SurfaceDescriptor):
    kind: str = field(init=False, default="ProjectivePlane")

    def anticanonical_self_intersection(self) -> Fraction:
        return Fraction(9)

    def __str__(self) -> str:
        return "P2"


@dataclass(frozen=True)
class ConeOverE(SurfaceDescriptor):
    """Cone over ``E`` from contracting the zero section of a degree ``-degree`` bundle."""

    degree: int = 1
    kind: str = field(init=False, default="ConeOverE")

    def fields(self) -> dict:
        return {"degree": self.degree}

    def __str__(self) -> str:
        return f"cone over E of degree {self.degree}"


@dataclass(frozen=True)
class GluedLineBundles(SurfaceDescriptor):
    """Two line bundles on ``E`` glued along their zero sections.

    Only ``total = deg1 + deg2`` is determined; ``deg1`` may be left unset.
    """

    total: int = 0
    deg1: int | None = None
    kind: str = field(init=False, default="GluedLineBundles")

    @property
    def deg2(self) -> int | None:
        return None if self.deg1 is None else self.total - self.deg1

    def fields(self) -> dict:
        return {"deg1": self.deg1, "deg2": self.deg2, "total": self.total}

    def __str__(self) -> str:
        if self.deg1 is None:
            return f"two line bundles on E glued along E, degrees summing to {self.total}"
        return f"line bundles of degrees {self.deg1}, {self.deg2} on E glued along E"


@dataclass(frozen=True)
class GluedAlongDoubleCover(SurfaceDescriptor):
    """A line bundle on ``E`` glued along a double cover ``E -> base``."""

    line_degree: int = 0
    base: WeightedProjectiveLine = P1
    branch_points: int = 4
    kind: str = field(init=False, default="GluedAlongDoubleCover")

    def fields(self) -> dict:
        return {
            "line_degree": self.line_degree,
            "base": str(self.base),
            "branch_points": self.branch_points,
        }

    def __str__(self) -> str:
        return (
            f"degree {self.line_degree} line bundle glued along E -> {self.base}"
            f" branched at {self.branch_points} points"
        )


def hirzebruch_component(cls: SubregularClass) -> Hirzebruch:
    """``F_{d-1}``."""
    _need_decomposition(cls, "the Hirzebruch component")
    return Hirzebruch(cls.d - 1)


def base_surface(cls: SubregularClass, y_condition: str = "generic") -> SurfaceDescriptor:
    """The surface ``(D_1')_y``; ``special`` means ``varpi_l(y) = 0`` (``alpha_1(y) = 0`` in tag F)."""
    _need_decomposition(cls, "the base surface")
    if y_condition not in ("generic", "special"):
        raise ValueError(f"y_condition must be 'generic' or 'special', not {y_condition!r}")
    generic = y_condition == "generic"
    if cls.tag == "A":
        return LineBundleOverE(None)
    if cls.tag == "B":
        return StackyHirzebruch(1 if generic else 3)
    if cls.tag in ("C", "D", "F"):
        return Hirzebruch(0 if generic else 2)
    return ProjectivePlane()


def base_self_intersection(cls: SubregularClass) -> int:
    """``(E^2)`` on ``(D_1')_y``; ``E`` is anticanonical there, so this is ``K^2``."""
    if cls.tag in ("A", "A1"):
        raise GeometryError(f"no base self-intersection for tag {cls.tag}")
    k2 = base_surface(cls).anticanonical_self_intersection()
    if k2.denominator != 1:
        raise GeometryError(f"non-integral K^2 = {k2}")
    return int(k2)


def degree_d1(cls: SubregularClass) -> int:
    """``(E^2)`` on ``(D_1)_y`` from ``(N - (E^2)' - 1)/d + n_0 + 1``."""
    if cls.tag in ("A", "A1"):
        raise GeometryError(f"degree_d1 is not defined for tag {cls.tag}")
    val = Fraction(cls.N - base_self_intersection(cls) - 1, cls.d) + cls.n0 + 1
    if val.denominator != 1:
        raise GeometryError(f"degree formula gives the non-integer {val} for {cls}")
    return int(val)


def degree_sum_type_a(cls: SubregularClass) -> int:
    """``deg (D_1)_y + deg (D_1')_y``; with ``d = 1`` the degree formula collapses to ``N + n_0``."""
    if cls.tag != "A":
        raise GeometryError("degree_sum_type_a applies to tag A only")
    return cls.N + cls.n0


# ---------------------------------------------------------------------------
# The unstable fibre


def _branch_points(base: WeightedProjectiveLine) -> int:
    """Branch points of a double cover ``E -> base`` (orbifold Riemann-Hurwitz)."""
    b = 2 * base.anticanonical_degree
    if b.denominator != 1:
        raise GeometryError(f"non-integral branch count over {base}")
    return int(b)


def singular_fiber(cls: SubregularClass, deg1: int | None = None) -> SurfaceDescriptor:
    """The zero fibre of the slice, as a symbolic surface."""
    if cls.tag == "A1":
        cone = weighted_cone_degree(cls)
        if cone.denominator != 1:
            raise GeometryError(f"non-integral cone degree {cone}")
        return ConeOverE(int(cone))
    if cls.tag == "A":
        return GluedLineBundles(degree_sum_type_a(cls), deg1)
    if cls.tag in ("B", "C", "D"):
        base = base_surface(cls).base
        return GluedAlongDoubleCover(degree_d1(cls), base, _branch_points(base))
    return ConeOverE(-degree_d1(cls))


CHARACTERISTIC_NOTE_D = "D-infinity type at branch points assumes the base field is not of characteristic 2"
GEOMETRY_NOTE = "flatness, smoothness and normal crossings are not checked"


@dataclass(frozen=True)
class SingularityReport:
    kind: str
    a_infinity: bool
    d_infinity_points: int
    simply_elliptic_degree: int | None
    flags: tuple[str, ...]

    def summary(self) -> str:
        if self.simply_elliptic_degree is not None:
            return f"simply elliptic of degree {self.simply_elliptic_degree}"
        if self.d_infinity_points:
            return f"A_inf away from {self.d_infinity_points} D_inf points"
        return "A_inf only"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "a_infinity": self.a_infinity,
            "d_infinity_points": self.d_infinity_points,
            "simply_elliptic_degree": self.simply_elliptic_degree,
            "summary": self.summary(),
            "flags": list(self.flags),
        }


def singularity_types(desc: SurfaceDescriptor) -> SingularityReport:
    if isinstance(desc, GluedLineBundles):
        return SingularityReport(desc.kind, True, 0, None, (GEOMETRY_NOTE,))
    if isinstance(desc, GluedAlongDoubleCover):
        return SingularityReport(
            desc.kind, True, desc.branch_points, None, (CHARACTERISTIC_NOTE_D, GEOMETRY_NOTE)
        )
    if isinstance(desc, ConeOverE):
        return SingularityReport(desc.kind, False, 0, desc.degree, (GEOMETRY_NOTE,))
    raise GeometryError(f"no singularity report for {desc.kind}")
