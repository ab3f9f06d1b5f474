"""Lexsegment edge ideals and their closed-form invariants.

A lexsegment edge ideal is generated by every squarefree quadric ``w`` with
``u >=lex w >=lex v``.  After normalization ``u = x1*xi`` and ``v = xj*xk``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .monomial import (
    LT,
    MonomialIdeal,
    SquarefreeMonomial,
    all_squarefree,
    lex_compare,
)

# witness_case tags
SINGLE = "SINGLE"
J1 = "J1"
PD_N1 = "PD_N1"
CASE1 = "CASE1"
CASE2 = "CASE2"
J2_TAYLOR = "J2_TAYLOR"
J2_BIGROW_I3 = "J2_BIGROW_I3"
J2_BIGROW_IGT3 = "J2_BIGROW_IGT3"


class SegmentError(ValueError):
    pass


def quadric(n: int, a: int, b: int) -> SquarefreeMonomial:
    return SquarefreeMonomial.from_vars(n, (a, b))


def _pair(m: SquarefreeMonomial) -> tuple[int, int]:
    if m.degree != 2:
        raise SegmentError(f"{m} is not a squarefree quadric")
    return m.vars  # type: ignore[return-value]


@dataclass(frozen=True)
class LexSegmentIdeal:
    n: int
    u: SquarefreeMonomial
    v: SquarefreeMonomial
    gens: tuple[SquarefreeMonomial, ...]
    normalized: bool = False
    shift: int = 0

    @property
    def i(self) -> int:
        return self.u.vars[1]

    @property
    def j(self) -> int:
        return self.v.vars[0]

    @property
    def k(self) -> int:
        return self.v.vars[1]

    @property
    def mu(self) -> int:
        return len(self.gens)

    @property
    def indeg(self) -> int:
        return 2

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.n, self.gens)

    def __str__(self):
        return f"L({self.u},{self.v}) in n={self.n}"


def build_segment(n: int, u: SquarefreeMonomial, v: SquarefreeMonomial,
                  normalized: bool = False, shift: int = 0) -> LexSegmentIdeal:
    if n < 2:
        raise SegmentError("need at least two variables")
    if u.n != n or v.n != n:
        raise SegmentError("u and v must live in the ambient ring")
    _pair(u), _pair(v)
    if lex_compare(u, v) == LT:
        raise SegmentError(f"u={u} is lex-smaller than v={v}")
    gens = tuple(w for w in all_squarefree(n, 2)
                 if lex_compare(u, w) != LT and lex_compare(w, v) != LT)
    return LexSegmentIdeal(n, u, v, gens, normalized, shift)


def normalize(n: int, u: SquarefreeMonomial, v: SquarefreeMonomial) -> LexSegmentIdeal:
    """Drop the leading variables that no generator involves.

    If ``u = x_l x_q`` with ``l >= 2`` then x1..x_{l-1} appear in no
    generator and form a regular sequence on S/I; relabel so that x1 | u.
    """
    if u.n != n or v.n != n:
        raise SegmentError("u and v must live in the ambient ring")
    _pair(u), _pair(v)
    if lex_compare(u, v) == LT:
        raise SegmentError(f"u={u} is lex-smaller than v={v}")
    shift = u.min_index() - 1
    m = n - shift
    nu = u.shifted(-shift, m)
    nv = v.shifted(-shift, m)
    return build_segment(m, nu, nv, normalized=True, shift=shift)


def segment(n: int, u, v) -> LexSegmentIdeal:
    """Normalized segment from index pairs or monomials."""
    if not isinstance(u, SquarefreeMonomial):
        u = SquarefreeMonomial.from_vars(n, u)
    if not isinstance(v, SquarefreeMonomial):
        v = SquarefreeMonomial.from_vars(n, v)
    return normalize(n, u, v)


def _require_normalized(L: LexSegmentIdeal) -> None:
    if L.u.min_index() != 1:
        raise SegmentError(f"{L} is not normalized (x1 must divide u)")


def _ge(a: SquarefreeMonomial, b: SquarefreeMonomial) -> bool:
    return lex_compare(a, b) != LT


@dataclass(frozen=True)
class SegmentClass:
    is_full: bool
    is_initial: bool
    is_final: bool
    is_single: bool
    is_completely: bool
    witness_case: str


def witness_case(L: LexSegmentIdeal) -> str:
    _require_normalized(L)
    n, i, j, k = L.n, L.i, L.j, L.k
    if L.u == L.v:
        return SINGLE
    if j == 1:
        return J1
    if _ge(quadric(n, i - 1, n), L.v):
        return PD_N1
    if j >= 3:
        if i == 4 or _ge(quadric(n, i - 1, i), L.v):
            return CASE1
        if i >= 5:
            return CASE2
        raise AssertionError(f"unreachable dispatch for {L}")
    return J2_TAYLOR if i > k else (J2_BIGROW_I3 if i == 3 else J2_BIGROW_IGT3)


def classify(L: LexSegmentIdeal) -> SegmentClass:
    _require_normalized(L)
    n, i, j = L.n, L.i, L.j
    initial = i == 2
    final = L.v == quadric(n, n - 1, n)
    return SegmentClass(
        is_full=initial and final,
        is_initial=initial,
        is_final=final,
        is_single=L.u == L.v,
        # only meaningful for i >= 3 and 2 <= j <= n - 2
        is_completely=j >= i - 2,
        witness_case=witness_case(L),
    )


@dataclass(frozen=True)
class InvariantReport:
    dim: int
    depth: int
    projdim: int
    reg: int
    ara: int
    height: int
    cm: bool
    stci: bool
    linear_resolution: bool

    def as_dict(self) -> dict:
        return asdict(self)


def _report(n: int, dim: int, depth: int, reg: int, mu: int) -> InvariantReport:
    projdim = n - depth
    cm = dim == depth
    return InvariantReport(
        dim=dim, depth=depth, projdim=projdim, reg=reg, ara=projdim,
        height=n - dim, cm=cm, stci=cm, linear_resolution=reg == 2 and mu >= 2,
    )


def closed_dim(L: LexSegmentIdeal) -> int:
    _require_normalized(L)
    n, i, j = L.n, L.i, L.j
    if L.u == L.v or j == 1:
        return n - 1
    cls = classify(L)
    if cls.is_full:
        return 1
    if cls.is_final and i >= 3:
        return 2
    return n - j


def closed_depth(L: LexSegmentIdeal) -> int:
    _require_normalized(L)
    n, i, j, k = L.n, L.i, L.j, L.k
    if L.u == L.v:
        return n - 1
    if j == 1:
        return n - k + i - 1
    if _ge(quadric(n, i - 1, n), L.v):
        return 1
    if j >= 3:
        return 2
    return 2 if k >= i else i + 1 - k


def closed_reg(L: LexSegmentIdeal) -> int:
    _require_normalized(L)
    if L.mu == 1 or L.j == 1:
        return 2
    return 3 if L.i >= L.j + 2 and L.k != L.n else 2


def invariants(L: LexSegmentIdeal) -> InvariantReport:
    """Closed-form invariants of S/I (reg is that of I)."""
    return _report(L.n, closed_dim(L), closed_depth(L), closed_reg(L), L.mu)


def invariants_original(n: int, u: SquarefreeMonomial, v: SquarefreeMonomial) -> tuple[LexSegmentIdeal, InvariantReport]:
    """Invariants of the un-normalized ideal in n variables.

    The dropped variables are free, so dim and depth grow by the shift while
    projdim, reg and ara stay put.
    """
    L = normalize(n, u, v)
    r = invariants(L)
    s = L.shift
    return L, _report(n, r.dim + s, r.depth + s, r.reg, L.mu)


def linear_resolution_from_corollaries(L: LexSegmentIdeal) -> bool:
    """Linear resolution test via the completely / non-completely split."""
    _require_normalized(L)
    n, i, j, k = L.n, L.i, L.j, L.k
    if L.u == L.v or j == 1 or i == 2 or L.v == quadric(n, n - 1, n):
        return True
    if j >= i - 2:
        return i <= j + 1 or (i == j + 2 and k == n)
    return k == n


def cm_classification_table(n: int) -> list[tuple[SquarefreeMonomial, SquarefreeMonomial]]:
    """All (u, v) with x1 | u and u != v whose segment is Cohen-Macaulay."""
    if n < 3:
        raise SegmentError("the table is defined for n >= 3")
    q = lambda a, b: quadric(n, a, b)  # noqa: E731
    pairs = {(q(1, 2), q(n - 1, n)), (q(1, n - 1), q(n - 2, n - 1))}
    if n >= 4:
        for v in (q(2, 3), q(n - 2, n - 1), q(n - 2, n)):
            pairs.add((q(1, n), v))
    pairs = {(u, v) for u, v in pairs if u != v}
    return sorted(pairs, key=lambda p: (p[0].vars, p[1].vars))


def all_pairs(n: int) -> list[tuple[SquarefreeMonomial, SquarefreeMonomial]]:
    """Every (u, v) with u >=lex v among squarefree quadrics, lex-sorted."""
    quads = all_squarefree(n, 2)  # decreasing lex
    return [(quads[a], quads[b]) for a in range(len(quads)) for b in range(a, len(quads))]
