"""Cell combinatorics for ``GL_n`` and brute-force checks of the Weyl group lemmas.

``GL_n`` objects are plain tuples. A permutation ``w`` of ``{1..n}`` is stored as
``(w(1), ..., w(n))``; a cocharacter is an integer vector in the basis
``e_1^*, ..., e_n^*``; a root ``e_a - e_b`` is stored by its coefficients in the
simple roots ``beta_k = e_k - e_{k+1}``.  ``Q^n_k`` is the standard parabolic of
type ``{beta_1, ..., beta_{k-1}}`` containing the lower-triangular Borel, and
``R_n`` is the one of type ``{beta_{n-1}}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence

from .rootdata import (
    Coweight,
    RootDatum,
    build_root_datum,
    chain_order,
    components,
    dominance_leq,
    fundamental_coweight,
    fundamental_weight,
    pairing,
    simple_coroot,
    two_rho,
)
from .subregular import SubregularClass
from .weyl import (
    IDENTITY,
    SearchBudgetError,
    WeylWord,
    act_on_coweight,
    elements,
    min_coset_reps,
    reduce,
)

Permutation = tuple[int, ...]
GLnCoweight = tuple[int, ...]
GLRoot = tuple[int, ...]

MAX_SYMMETRIC_N = 8
MAX_LEMMA_RANK = 5


class GLnError(ValueError):
    pass


@dataclass(frozen=True)
class GLnContext:
    """``GL_n`` with the parabolic ``Q^n_k`` singled out."""

    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise GLnError(f"n = {self.n} must be at least 2")
        if not 1 <= self.k <= self.n:
            raise GLnError(f"k = {self.k} outside 1..{self.n}")

    @property
    def q_type(self) -> frozenset[int]:
        return frozenset(range(1, self.k))

    @property
    def r_type(self) -> frozenset[int]:
        return frozenset({self.n - 1})


# ---------------------------------------------------------------------------
# Permutations


def identity_perm(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def compose(u: Permutation, v: Permutation) -> Permutation:
    """``u o v``."""
    return tuple(u[x - 1] for x in v)


def invert(w: Permutation) -> Permutation:
    out = [0] * len(w)
    for q, x in enumerate(w, start=1):
        out[x - 1] = q
    return tuple(out)


def transposition(n: int, i: int) -> Permutation:
    """``s_i``, swapping ``i`` and ``i + 1``."""
    if not 1 <= i < n:
        raise GLnError(f"s_{i} is not a simple reflection of S_{n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def word_to_perm(n: int, word: WeylWord | Iterable[int]) -> Permutation:
    letters = word.letters if isinstance(word, WeylWord) else tuple(word)
    w = identity_perm(n)
    for i in letters:
        w = compose(w, transposition(n, i))
    return w


def perm_to_word(w: Permutation) -> WeylWord:
    """A reduced word for ``w`` (bubble sort on the one-line notation)."""
    n = len(w)
    cur = list(w)
    letters: list[int] = []
    # peel off s_i on the right while some descent exists
    while True:
        for i in range(1, n):
            if cur[i - 1] > cur[i]:
                cur[i - 1], cur[i] = cur[i], cur[i - 1]
                letters.append(i)
                break
        else:
            break
    return WeylWord(reversed(letters))


def w_p(n: int, p: int) -> Permutation:
    """``s_{n-1} ... s_p``: sends ``p`` to ``n`` and ``q`` to ``q - 1`` for ``q > p``."""
    if n < 1 or not 1 <= p <= n:
        raise GLnError(f"p = {p} outside 1..{n}")
    return word_to_perm(n, range(n - 1, p - 1, -1))


def act_on_cocharacter(w: Permutation, lam: Sequence[int]) -> GLnCoweight:
    """``w`` on ``sum lam_q e_q^*``, via ``e_q^* -> e_{w(q)}^*``."""
    out = [0] * len(w)
    for q, x in enumerate(lam, start=1):
        out[w[q - 1] - 1] += x
    return tuple(out)


def e_star(n: int, q: int, sign: int = 1) -> GLnCoweight:
    out = [0] * n
    out[q - 1] = sign
    return tuple(out)


# ---------------------------------------------------------------------------
# Roots


def gl_root(n: int, a: int, b: int) -> GLRoot:
    """``e_a - e_b`` in the basis of simple roots ``beta_1, ..., beta_{n-1}``."""
    if a == b or not (1 <= a <= n and 1 <= b <= n):
        raise GLnError(f"e_{a} - e_{b} is not a root of GL_{n}")
    c = [0] * (n - 1)
    lo, hi, s = (a, b, 1) if a < b else (b, a, -1)
    for k in range(lo, hi):
        c[k - 1] = s
    return tuple(c)


def root_ends(r: GLRoot) -> tuple[int, int]:
    """The pair ``(a, b)`` with ``r = e_a - e_b``."""
    supp = [k + 1 for k, c in enumerate(r) if c]
    lo, hi = supp[0], supp[-1] + 1
    return (lo, hi) if r[lo - 1] > 0 else (hi, lo)


def gl_roots(n: int) -> list[GLRoot]:
    return sorted(gl_root(n, a, b) for a in range(1, n + 1) for b in range(1, n + 1) if a != b)


def act_on_gl_root(w: Permutation, r: GLRoot) -> GLRoot:
    a, b = root_ends(r)
    return gl_root(len(w), w[a - 1], w[b - 1])


def is_positive_gl(r: GLRoot) -> bool:
    return any(c > 0 for c in r)


def is_parabolic_gl_root(t: Iterable[int], r: GLRoot) -> bool:
    """Negative roots, and positive roots whose support avoids the type ``t``."""
    t = set(t)
    return not is_positive_gl(r) or not any(r[k - 1] for k in t)


def format_gl_root(r: GLRoot) -> str:
    terms = []
    for k in sorted(range(1, len(r) + 1), reverse=True):
        c = r[k - 1]
        if c:
            terms.append(("-" if c < 0 else "+") + f"b{k}")
    s = "".join(terms)
    return s[1:] if s.startswith("+") else s


# ---------------------------------------------------------------------------
# Operations


def degree_filter(n: int, box: int | None = None) -> set[GLnCoweight]:
    """Cocharacters ``lam <= -e_n^*`` with ``<e_1 + ... + e_i, lam> >= -i/(n-1)``.

    Candidates are ``-e_n^* - sum d_i beta_i^vee`` with ``0 <= d_i <= box``
    (default ``n``).
    """
    if n < 2:
        raise GLnError("n must be at least 2")
    box = n if box is None else box
    base = e_star(n, n, -1)
    out: set[GLnCoweight] = set()

    # partial sums up to i only involve d_1..d_i, so prune on prefixes
    def extend(d: list[int], partial: int) -> None:
        i = len(d)
        if i == n - 1:
            lam = list(base)
            for k, dk in enumerate(d, start=1):
                lam[k - 1] -= dk
                lam[k] += dk
            out.add(tuple(lam))
            return
        prev = d[-1] if d else 0
        for di in range(box + 1):
            # lam_{i+1} = base_{i+1} + d_i - d_{i+1}
            p = partial + base[i] + prev - di
            if p >= Fraction(-(i + 1), n - 1):
                extend(d + [di], p)

    extend([], 0)
    return out


def _check_n(n: int) -> None:
    if n > MAX_SYMMETRIC_N:
        raise SearchBudgetError(f"brute force over S_{n} exceeds the cap n <= {MAX_SYMMETRIC_N}")


def gln_coset_reps(n: int, k: int) -> set[Permutation]:
    """``W^0_{R_n, Q^n_k}`` by brute force over ``S_n``."""
    ctx = GLnContext(n, k)
    _check_n(n)
    left = [a for a in range(1, n) if a not in ctx.r_type]
    right = [b for b in range(1, n) if b not in ctx.q_type]
    out = set()
    for w in permutations(range(1, n + 1)):
        wi = invert(w)
        if any(wi[a - 1] > wi[a] for a in left):
            continue
        if any(w[b - 1] > w[b] for b in right):
            continue
        out.add(tuple(w))
    return out


def gln_coset_reps_expected(n: int, k: int) -> set[Permutation]:
    """``{w_p : 1 <= p < k} | {w_n}``."""
    return {w_p(n, p) for p in range(1, k)} | {identity_perm(n)}


def gln_coset_reps_via_weyl(n: int, k: int) -> set[Permutation]:
    """The same set through :func:`weyl.min_coset_reps` on ``A_{n-1}``."""
    ctx = GLnContext(n, k)
    rd = build_root_datum("A", n - 1)
    reps = min_coset_reps(rd, ctx.r_type, ctx.q_type)
    return {word_to_perm(n, w) for w in reps}


def unipotent_radical_roots(n: int) -> list[GLRoot]:
    """Roots of ``R_u(R_n)``: ``e_n - e_q`` for ``q < n``."""
    r_type = {n - 1}
    return [
        r
        for r in gl_roots(n)
        if is_parabolic_gl_root(r_type, r) and not is_parabolic_gl_root(r_type, tuple(-c for c in r))
    ]


def unipotent_quotient_roots(n: int, k: int, p: int) -> set[GLRoot]:
    """Roots ``beta`` of ``R_u(R_n)`` with ``w_p^{-1} beta`` not a root of ``Q^n_k``."""
    if not (1 <= p < k <= n):
        raise GLnError(f"need 1 <= p < k <= n, got p={p}, k={k}, n={n}")
    wi = invert(w_p(n, p))
    q_type = GLnContext(n, k).q_type
    return {
        r
        for r in unipotent_radical_roots(n)
        if not is_parabolic_gl_root(q_type, act_on_gl_root(wi, r))
    }


def unipotent_quotient_expected(n: int, p: int) -> set[GLRoot]:
    """``{-beta_{n-1}, -beta_{n-1} - beta_{n-2}, ..., -beta_{n-1} - ... - beta_p}``."""
    return {gl_root(n, n, q) for q in range(p, n)}


# ---------------------------------------------------------------------------
# Weyl group lemmas on a root datum


def _coroot_positive(c: Coweight) -> bool:
    return all(x >= 0 for x in c.coords) and any(x > 0 for x in c.coords)


def _check_rank(rd: RootDatum, max_rank: int | None) -> None:
    cap = MAX_LEMMA_RANK if max_rank is None else max_rank
    if rd.rank > cap:
        raise SearchBudgetError(f"lemma search on {rd.name} exceeds the rank cap {cap}")


def sigma_chains(rd: RootDatum, *, all_bonds: bool = False) -> list[tuple[int, tuple[int, ...]]]:
    """Pairs ``(beta_j, c)``: ``c`` is a type A component of the diagram minus
    ``beta_j``, ordered so that ``c[-1]`` is its only node adjacent to ``beta_j``.

    By default only pairs with ``<beta_{c[-1]}, beta_j^vee> = -1`` are returned; the
    chain description of :func:`sigma_set_check` needs this, and fails e.g. for
    ``C_3`` with ``beta_j = alpha_2``, ``c = (3,)``. Pass ``all_bonds`` to get the rest.
    """
    out = []
    for j in rd.nodes:
        for comp in components(rd, [k for k in rd.nodes if k != j]):
            order = chain_order(rd, comp)
            if order is None:
                continue
            touching = [k for k in order if rd.adjacent(k, j)]
            if len(touching) != 1 or touching[0] not in (order[0], order[-1]):
                continue
            if touching[0] != order[-1]:
                order = order[::-1]
            if all_bonds or rd.a(order[-1], j) == -1:
                out.append((j, order))
    return out


def sigma_set_check(
    rd: RootDatum, beta_j: int, c: Sequence[int], *, max_rank: int | None = None
) -> set[WeylWord]:
    """All ``w`` with ``w^{-1} beta_k^vee > 0`` for ``k != c[-1]`` and
    ``w^{-1}(beta_{c[-1]}^vee + beta_j^vee) > 0``, by exhaustive search."""
    _check_rank(rd, max_rank)
    c = tuple(c)
    if not c or not rd.adjacent(c[-1], beta_j):
        raise ValueError(f"the chain {c} must end next to beta_{beta_j}")
    cn = c[-1]
    pair = simple_coroot(rd, cn) + simple_coroot(rd, beta_j)
    others = [simple_coroot(rd, k) for k in rd.nodes if k != cn]
    out = set()
    for w in elements(rd, max_rank=MAX_LEMMA_RANK if max_rank is None else max_rank):
        wi = w.inverse()
        if all(_coroot_positive(act_on_coweight(rd, wi, x)) for x in others) and _coroot_positive(
            act_on_coweight(rd, wi, pair)
        ):
            out.add(w)
    return out


def sigma_set_expected(rd: RootDatum, c: Sequence[int]) -> set[WeylWord]:
    """``{1} | {s_{c,n} s_{c,n-1} ... s_{c,k} : 1 <= k <= n}``."""
    c = tuple(c)
    return {IDENTITY} | {reduce(rd, WeylWord(c[k:][::-1])) for k in range(len(c))}


def in_parabolic_subgroup(rd: RootDatum, w: WeylWord, nodes: Iterable[int]) -> bool:
    """Whether ``w`` lies in the subgroup generated by the reflections on ``nodes``."""
    return set(reduce(rd, w).letters) <= set(nodes)


def _coweight_key(c: Coweight) -> tuple:
    return tuple(c.coords)


def borel_cell_filter(
    cls: SubregularClass, bound: str = "j", *, max_rank: int | None = None
) -> set[tuple[WeylWord, Coweight]]:
    """Pairs ``(w, lam)`` allowed by the Borel cell analysis of a subregular class.

    ``w`` runs over ``W^0_{P,B}``; ``w lam`` must be minus one of ``alpha_i^vee``,
    ``alpha_j^vee``, ``alpha_i^vee + alpha_j^vee`` with the same ``varpi_k``-pairings
    as ``mu`` for ``k`` in ``t(P)``; ``lam`` itself must be minus one of those three
    coroots and lie below ``-alpha_j^vee`` (``bound="j"``) or ``-alpha_i^vee``
    (``bound="i"``, not for tag A).
    """
    if cls.alpha_j is None:
        raise ValueError("tag A1 has no alpha_j")
    if bound not in ("i", "j"):
        raise ValueError(f"bound must be 'i' or 'j', not {bound!r}")
    if bound == "i" and cls.tag == "A":
        raise ValueError("the -alpha_i^vee bound is only used outside tag A")
    rd = cls.rd
    _check_rank(rd, max_rank)
    ai, aj = simple_coroot(rd, cls.alpha_i), simple_coroot(rd, cls.alpha_j)
    divisors = [-ai, -aj, -(ai + aj)]
    targets = [
        tau
        for tau in divisors
        if all(
            pairing(fundamental_weight(rd, k), tau) == pairing(fundamental_weight(rd, k), cls.mu)
            for k in cls.t
        )
    ]
    top = -(aj if bound == "j" else ai)
    keys = {_coweight_key(x) for x in divisors}
    out = set()
    cap = max_rank if max_rank is not None else MAX_LEMMA_RANK
    for w in min_coset_reps(rd, cls.t, rd.nodes, max_rank=cap):
        wi = w.inverse()
        for tau in targets:
            lam = act_on_coweight(rd, wi, tau)
            if _coweight_key(lam) in keys and dominance_leq(lam, top):
                out.add((w, lam))
    return out


def borel_cell_conclusion_holds(cls: SubregularClass, bound: str = "j") -> bool:
    """Compare :func:`borel_cell_filter` with the stated conclusions."""
    rd = cls.rd
    ai, aj = simple_coroot(rd, cls.alpha_i), simple_coroot(rd, cls.alpha_j)
    pairs = borel_cell_filter(cls, bound)
    if bound == "j":
        if (IDENTITY, -(ai + aj)) not in pairs:
            return False
        allowed = {_coweight_key(-aj), _coweight_key(-(ai + aj))}
        return all(
            in_parabolic_subgroup(rd, w, cls.c0)
            and lam == -act_on_coweight(rd, w.inverse(), ai + aj)
            and _coweight_key(lam) in allowed
            for w, lam in pairs
        )
    allowed = {_coweight_key(-ai), _coweight_key(-(ai + aj))}
    return bool(pairs) and all(
        w == IDENTITY and _coweight_key(lam) in allowed for w, lam in pairs
    )


# ---------------------------------------------------------------------------
# The codimension bound for maximal parabolics


def bound_ratio(rd: RootDatum, k: int) -> Fraction:
    """``<2 rho, varpi_k^vee> / <varpi_k, varpi_k^vee>``."""
    wk = fundamental_coweight(rd, k)
    return pairing(two_rho(rd), wk) / pairing(fundamental_weight(rd, k), wk)


def bound_property_holds(rd: RootDatum) -> bool:
    """``bound_ratio(rd, k) >= l + 1`` for every simple index ``k``."""
    return all(bound_ratio(rd, k) >= rd.rank + 1 for k in rd.nodes)
