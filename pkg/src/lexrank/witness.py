"""Schmitt-Vogel certificates for lexsegment edge ideals and their duals.

A Schmitt-Vogel family A_1, ..., A_r of monomial sets in a squarefree ideal I
satisfies

* SV1: |A_1| = 1;
* SV2: the union of the A_t contains every minimal generator of I;
* SV3: for t >= 2 and distinct m1, m2 in A_t some m' in an earlier A_s
  divides m1*m2.

Then the sums g_t of the monomials in A_t generate I up to radical, so
ara(I) <= r.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations

from .cover import CoverError, vertex_removal_witness
from .duality import alexander_dual, dual_projdim
from .groebner import DEFAULT_VAR_LIMIT, radical_equals_ideal
from .lexsegment import (
    CASE1,
    CASE2,
    J1,
    J2_BIGROW_IGT3,
    J2_TAYLOR,
    PD_N1,
    SINGLE,
    LexSegmentIdeal,
    _require_normalized,
    build_segment,
    invariants,
    normalize,
    quadric,
    witness_case,
)
from .monomial import MonomialIdeal, SquarefreeMonomial, all_squarefree, lex_key
from .polynomial import GF32003, Field, Polynomial

log = logging.getLogger(__name__)

SV_VERIFIED = "sv_verified"
GROEBNER_VERIFIED = "groebner_verified"
DERIVED_VERIFIED = "derived_verified"
FAILED = "failed"

CI_J1 = "CI_J1"
CM_SEARCH = "CM_SEARCH"
THREE_ELEMENT = "THREE_ELEMENT"


class WitnessError(RuntimeError):
    pass


class UnresolvedError(WitnessError):
    """CM_SEARCH found no two-element witness; carries the search log."""

    def __init__(self, message: str, search_log: list[str]):
        super().__init__(message)
        self.search_log = search_log


@dataclass(frozen=True)
class Verdict:
    status: str
    reason: str = ""

    @property
    def ok(self) -> bool:
        return self.status != FAILED

    def __str__(self):
        return self.status if not self.reason else f"{self.status}({self.reason})"


SvFamily = tuple[tuple[SquarefreeMonomial, ...], ...]


def verify_sv(family, ideal: MonomialIdeal) -> Verdict:
    """Check SV1-SV3 plus membership of every element in ``ideal``."""
    family = [tuple(a) for a in family]
    if not family or any(not a for a in family):
        return Verdict(FAILED, "SV1: empty family or empty set")
    if len(family[0]) != 1:
        return Verdict(FAILED, f"SV1: |A_1| = {len(family[0])}")
    for t, a in enumerate(family, 1):
        for m in a:
            if m.n != ideal.n:
                return Verdict(FAILED, f"membership: {m} lives in n={m.n}")
            if not ideal.contains(m):
                return Verdict(FAILED, f"membership: {m} in A_{t} is not in the ideal")
    union = {m.mask for a in family for m in a}
    for g in ideal.gens:
        if g.mask not in union:
            return Verdict(FAILED, f"SV2: generator {g} is not covered")
    earlier: list[int] = [family[0][0].mask]
    for t in range(1, len(family)):
        for m1, m2 in combinations(family[t], 2):
            if m1.mask == m2.mask:
                continue
            prod = m1.mask | m2.mask
            if not any(e & ~prod == 0 for e in earlier):
                return Verdict(FAILED, f"SV3: no earlier divisor of {m1}*{m2} in A_{t + 1}")
        earlier.extend(m.mask for m in family[t])
    return Verdict(SV_VERIFIED)


def family_sums(family, field: Field = GF32003) -> list[Polynomial]:
    return [Polynomial.monomial_sum(a, a[0].n, field) for a in family]


def _sum_text(a) -> str:
    return "+".join(str(m) for m in a)


@dataclass
class SvCertificate:
    family: SvFamily
    target: MonomialIdeal
    verdict: Verdict
    case: str = ""
    groebner: Verdict | None = None

    @property
    def r(self) -> int:
        return len(self.family)

    def sums(self, field: Field = GF32003) -> list[Polynomial]:
        return family_sums(self.family, field)

    def to_json(self) -> dict:
        out = {
            "kind": "sv_certificate",
            "case": self.case,
            "target": self.target.to_json(),
            "r": self.r,
            "sets": [[list(m.vars) for m in a] for a in self.family],
            "sums": [_sum_text(a) for a in self.family],
            "verdict": str(self.verdict),
        }
        if self.groebner is not None:
            out["groebner"] = str(self.groebner)
        return out


# --- constructions ---------------------------------------------------------

def degree_grouping_family(ideal: MonomialIdeal) -> SvFamily:
    """A_l = all squarefree monomials of degree n - l + 1 in the ideal.

    Largest degree first, so A_1 = {x1...xn}.  SV3 holds because m1 times any
    variable of m2 outside m1 is a larger monomial of the ideal.
    """
    n, d = ideal.n, ideal.indeg
    if d is None:
        raise WitnessError("zero ideal has no certificate")
    family = []
    for deg in range(n, d - 1, -1):
        family.append(tuple(m for m in all_squarefree(n, deg) if ideal.contains(m)))
    return tuple(family)


def _diagonals(rows: list[list[SquarefreeMonomial]], n: int, extra=None) -> SvFamily:
    family = []
    for t in range(1, n - 1):
        pos = n - 2 - t
        a = [row[pos] for row in rows if 0 <= pos < len(row) and row[pos] is not None]
        if extra is not None:
            a.extend(extra(t))
        family.append(tuple(a))
    return tuple(family)


def _case1(L: LexSegmentIdeal) -> SvFamily:
    n, i, j, k = L.n, L.i, L.j, L.k
    q = lambda a, b: quadric(n, a, b)  # noqa: E731
    if j != i - 1:
        raise WitnessError(f"CASE1 expects j = i - 1, got {L}")
    rows = []
    for a in range(2, i - 1):
        rows.append([q(a, b) for b in range(a + 1, i)] + [q(a, n)] + [q(a, b) for b in range(i, n)])
    rows.append([q(1, n)] + [q(1, b) for b in range(i, n)])
    rows.append([q(i - 1, b) for b in range(i, k + 1)])
    return _diagonals(rows, n)


def _case2(L: LexSegmentIdeal) -> SvFamily:
    n, i, j, k = L.n, L.i, L.j, L.k
    q = lambda a, b: quadric(n, a, b)  # noqa: E731
    rows = [[q(a, b) for b in range(a + 1, n + 1)] for a in range(2, j)]
    # x1*xj*xb lies in I only for b >= i; cells with k < b < i stay empty
    rows.append([q(j, b) for b in range(j + 1, k + 1)]
                + [SquarefreeMonomial.from_vars(n, (1, j, b)) if b >= i else None
                   for b in range(k + 1, n + 1)])

    def x1_row(t):
        m = n + j - t
        return [q(1, m)] if i <= m <= n else []

    return _diagonals(rows, n, x1_row)


def _j2_bigrow_igt3(L: LexSegmentIdeal) -> SvFamily:
    n, i, k = L.n, L.i, L.k
    q = lambda a, b: quadric(n, a, b)  # noqa: E731
    c = lambda b: SquarefreeMonomial.from_vars(n, (1, 2, b))  # noqa: E731
    # with k = n there are no cubics and the corner is x2*xn
    family = [(c(n),) if k < n else (q(2, n),)]
    for t in range(2, n - 1):
        if t <= n - k:
            family.append((q(1, n + 2 - t), c(n + 1 - t)))
        elif t <= n - i + 2:
            family.append((q(1, n + 2 - t), q(2, n + 1 - t)))
        else:
            family.append((q(2, n + 1 - t),))
    return tuple(family)


def _j2_bigrow_i3(L: LexSegmentIdeal) -> SvFamily:
    n, k = L.n, L.k
    q = lambda a, b: quadric(n, a, b)  # noqa: E731
    family = [(q(1, 3),)]
    for t in range(2, n - 1):
        if t <= k - 1:
            family.append((q(1, t + 2), q(2, t + 1)))
        else:
            family.append((q(1, t + 2), SquarefreeMonomial.from_vars(n, (1, 2, t + 1))))
    return tuple(family)


def lex_family(L: LexSegmentIdeal) -> tuple[str, SvFamily]:
    """The unverified family for a normalized segment, with its case tag."""
    _require_normalized(L)
    case = witness_case(L)
    n, i, k = L.n, L.i, L.k
    if case == SINGLE:
        fam = ((L.u,),)
    elif case == J1:
        fam = tuple((quadric(n, 1, b),) for b in range(i, k + 1))
    elif case == PD_N1:
        fam = degree_grouping_family(L.ideal())
    elif case == CASE1:
        fam = _case1(L)
    elif case == CASE2:
        fam = _case2(L)
    elif case == J2_TAYLOR:
        fam = tuple((g,) for g in L.gens)
    elif case == J2_BIGROW_IGT3:
        fam = _j2_bigrow_igt3(L)
    else:
        fam = _j2_bigrow_i3(L)
    return case, fam


def sv_lex_witness(L: LexSegmentIdeal) -> SvCertificate:
    """Verified certificate with r = projdim(S/I) for a normalized segment."""
    case, fam = lex_family(L)
    ideal = L.ideal()
    verdict = verify_sv(fam, ideal)
    if not verdict.ok:
        raise WitnessError(f"{case} construction for {L} failed: {verdict.reason}")
    expected = invariants(L).projdim
    if len(fam) != expected:
        raise WitnessError(f"{case} construction for {L} has r={len(fam)}, projdim is {expected}")
    return SvCertificate(fam, ideal, verdict, case)


def _shift_family(fam: SvFamily, shift: int, n: int) -> SvFamily:
    return tuple(tuple(m.shifted(shift, n) for m in a) for a in fam)


def certificate(n: int, u: SquarefreeMonomial, v: SquarefreeMonomial,
                groebner: bool = False, field: Field = GF32003,
                var_limit: int = DEFAULT_VAR_LIMIT) -> SvCertificate:
    """Certificate for the (possibly un-normalized) segment L(u, v) in n variables."""
    L = normalize(n, u, v)
    cert = sv_lex_witness(L)
    if L.shift:
        target = build_segment(n, u, v).ideal()
        fam = _shift_family(cert.family, L.shift, n)
        verdict = verify_sv(fam, target)
        if not verdict.ok:
            raise WitnessError(f"relabeled certificate failed: {verdict.reason}")
        cert = SvCertificate(fam, target, verdict, cert.case)
    if groebner:
        cert.groebner = groebner_verdict(cert.sums(field), cert.target, var_limit)
    return cert


def groebner_verdict(polys: list[Polynomial], target: MonomialIdeal,
                     var_limit: int = DEFAULT_VAR_LIMIT) -> Verdict:
    ok, why = radical_equals_ideal(polys, target, var_limit, explain=True)
    return Verdict(GROEBNER_VERIFIED) if ok else Verdict(FAILED, why)


# --- dual witnesses --------------------------------------------------------

@dataclass
class DualWitness:
    polys: list[Polynomial]
    method: str
    target: MonomialIdeal
    verdict: Verdict
    f1: Polynomial | None = None
    f2: Polynomial | None = None
    xj: Polynomial | None = None
    pi: Polynomial | None = None
    sv_family: SvFamily | None = None
    search_log: list[str] = field(default_factory=list)
    groebner: Verdict | None = None

    def to_json(self) -> dict:
        out = {
            "kind": "dual_witness",
            "method": self.method,
            "target": self.target.to_json(),
            "size": len(self.polys),
            "polys": [str(p) for p in self.polys],
            "polys_terms": [p.to_json() for p in self.polys],
            "field": self.polys[0].field.name if self.polys else None,
            "verdict": str(self.verdict),
        }
        if self.f1 is not None:
            out["f1"], out["f2"] = str(self.f1), str(self.f2)
        if self.pi is not None:
            out["xj"], out["pi"] = str(self.xj), str(self.pi)
        if self.sv_family is not None:
            out["sets"] = [[list(m.vars) for m in a] for a in self.sv_family]
        if self.groebner is not None:
            out["groebner"] = str(self.groebner)
        return out


def _product(vars, n: int, field: Field) -> Polynomial:
    return Polynomial.from_monomial(SquarefreeMonomial.from_vars(n, vars), field)


def cm_search(dual: MonomialIdeal, field: Field = GF32003, max_partitions: int = 4096,
              var_limit: int = DEFAULT_VAR_LIMIT):
    """Two polynomials f1, f2 with sqrt(f1, f2) = dual.

    First tries every r = 2 Schmitt-Vogel family A_1 = {m}, A_2 = the other
    generators; then sums over 2-partitions of the generators, checked with
    the Groebner radical test; last, the vertex-removal construction from
    ``lexrank.cover``.  Returns (f1, f2, family_or_None, verdict, log).
    """
    search_log: list[str] = []
    gens = list(dual.gens)
    if len(gens) == 1:
        raise WitnessError("a principal dual needs no search")
    for m in gens:
        fam = ((m,), tuple(g for g in gens if g != m))
        verdict = verify_sv(fam, dual)
        search_log.append(f"sv A1={m}: {verdict}")
        if verdict.ok:
            f1, f2 = family_sums(fam, field)
            return f1, f2, fam, verdict, search_log
    found = _partition_search(dual, field, max_partitions, var_limit, search_log)
    if found is not None:
        return found[0], found[1], None, Verdict(GROEBNER_VERIFIED), search_log
    try:
        pair = vertex_removal_witness(dual, field, var_limit=var_limit, log=search_log)
    except CoverError as exc:
        search_log.append(f"vertex removal not applicable: {exc}")
        pair = None
    if pair is not None:
        return pair[0], pair[1], None, Verdict(GROEBNER_VERIFIED, "vertex removal"), search_log
    raise UnresolvedError(f"no two-element witness found for {dual}", search_log)


def _partition_search(dual: MonomialIdeal, field: Field, max_partitions: int,
                      var_limit: int, search_log: list[str]):
    gens = list(dual.gens)
    n = dual.n
    first, rest = gens[0], gens[1:]
    tried = 0
    for size in range(0, len(rest)):
        for combo in combinations(rest, size):
            if tried >= max_partitions:
                search_log.append(f"partition cap {max_partitions} reached")
                return None
            tried += 1
            part = (first,) + combo
            other = tuple(g for g in rest if g not in combo)
            f1 = Polynomial.monomial_sum(part, n, field)
            f2 = Polynomial.monomial_sum(other, n, field)
            ok, why = radical_equals_ideal([f1, f2], dual, var_limit, explain=True)
            search_log.append(f"partition {_sum_text(part)} | {_sum_text(other)}: {'ok' if ok else why}")
            if ok:
                return f1, f2
    return None


def _dual_witness_normalized(L: LexSegmentIdeal, field: Field, var_limit: int) -> DualWitness:
    _require_normalized(L)
    n, i, j, k = L.n, L.i, L.j, L.k
    dual = alexander_dual(L.ideal())
    if j == 1:
        polys = [Polynomial.variable(n, field, 1), _product(range(i, k + 1), n, field)]
        gens = {g.mask for g in dual.gens}
        expect = {1, sum(1 << (b - 1) for b in range(i, k + 1))}
        verdict = Verdict(SV_VERIFIED) if gens == expect else Verdict(FAILED, "dual is not (x1, xi...xk)")
        fam = ((SquarefreeMonomial.from_vars(n, (1,)),),
               (SquarefreeMonomial.from_vars(n, range(i, k + 1)),))
        return DualWitness(polys, CI_J1, dual, verdict, sv_family=fam)
    if dual_projdim(L) == 2:
        f1, f2, fam, verdict, search_log = cm_search(dual, field, var_limit=var_limit)
        return DualWitness([f1, f2], CM_SEARCH, dual, verdict, f1=f1, f2=f2,
                           sv_family=fam, search_log=search_log)
    # i >= j + 2 and k != n: peel off the x_j-row from J = L(x1 xi, x_{j-1} xn)
    J = build_segment(n, L.u, quadric(n, j - 1, n), normalized=True)
    inner = _dual_witness_normalized(J, field, var_limit)
    f1, f2 = inner.polys
    xj = Polynomial.variable(n, field, j)
    pi = _product(range(j + 1, k + 1), n, field)
    polys = [xj * f1, xj * f2 + pi * f1, pi * f2]
    w = DualWitness(polys, THREE_ELEMENT, dual, Verdict(DERIVED_VERIFIED), f1=f1, f2=f2,
                    xj=xj, pi=pi, search_log=[f"inner {inner.method}: {inner.verdict}"] + inner.search_log)
    if not inner.verdict.ok or not quadratic_root_check(w):
        w.verdict = Verdict(FAILED, "inner witness or quadratic identity failed")
    return w


def dual_witness(L: LexSegmentIdeal, field: Field = GF32003, groebner: bool = False,
                 var_limit: int = DEFAULT_VAR_LIMIT) -> DualWitness:
    """Witness that ara(I*) = projdim(S/I*) for a normalized segment."""
    w = _dual_witness_normalized(L, field, var_limit)
    if len(w.polys) != dual_projdim(L):
        raise WitnessError(f"dual witness has {len(w.polys)} elements, expected {dual_projdim(L)}")
    if groebner:
        w.groebner = groebner_verdict(w.polys, w.target, var_limit)
    return w


def _shift_poly(f: Polynomial, shift: int, n: int) -> Polynomial:
    terms = {(0,) * shift + e: c for e, c in f.terms.items()}
    return Polynomial(n, f.field, terms)


def dual_witness_original(n: int, u: SquarefreeMonomial, v: SquarefreeMonomial,
                          field: Field = GF32003, groebner: bool = False,
                          var_limit: int = DEFAULT_VAR_LIMIT) -> DualWitness:
    """Dual witness for the (possibly un-normalized) segment in n variables."""
    L = normalize(n, u, v)
    w = dual_witness(L, field, groebner=False, var_limit=var_limit)
    s = L.shift
    if s:
        sh = lambda f: None if f is None else _shift_poly(f, s, n)  # noqa: E731
        fam = None if w.sv_family is None else _shift_family(w.sv_family, s, n)
        w = DualWitness([sh(f) for f in w.polys], w.method, alexander_dual(build_segment(n, u, v).ideal()),
                        w.verdict, f1=sh(w.f1), f2=sh(w.f2), xj=sh(w.xj), pi=sh(w.pi),
                        sv_family=fam, search_log=w.search_log)
    if groebner:
        w.groebner = groebner_verdict(w.polys, w.target, var_limit)
    return w


def quadratic_root_check(w: DualWitness) -> bool:
    """x_j f2 and pi f1 are the roots of T^2 - g2 T + x_j pi f1 f2, g2 the middle poly."""
    if w.method != THREE_ELEMENT:
        raise WitnessError("quadratic identity only applies to three-element witnesses")
    a = w.xj * w.f2
    b = w.pi * w.f1
    s = w.polys[1]
    prod = w.xj * w.pi * w.f1 * w.f2
    return all((r * r - s * r + prod).is_zero() for r in (a, b))


def sorted_family(fam) -> SvFamily:
    return tuple(tuple(sorted(a, key=lex_key, reverse=True)) for a in fam)
