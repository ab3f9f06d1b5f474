"""A small Buchberger engine for ideal and radical membership.

The term order here is degree-reverse-lex with x1 > ... > xn > t.  It has
nothing to do with the lex order used to define lexsegments; the two are
never mixed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .monomial import MonomialIdeal
from .polynomial import Field, Polynomial

DEFAULT_VAR_LIMIT = 10


class GroebnerLimitError(RuntimeError):
    pass


@lru_cache(maxsize=1 << 16)
def grevlex_key(e: tuple[int, ...]) -> tuple:
    return (sum(e), tuple(-x for x in reversed(e)))


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lead(f: dict):
    return max(f, key=grevlex_key)


def _monic(f: dict, field: Field) -> dict:
    lm = _lead(f)
    inv = field.inv(f[lm])
    p = field.p
    if p:
        return {e: c * inv % p for e, c in f.items()}
    return {e: c * inv for e, c in f.items()}


def _reduce(f: dict, basis: list, field: Field) -> dict:
    """Full reduction of ``f`` by monic basis elements ``(lm, poly)``."""
    p = field.p
    f = dict(f)
    rem = {}
    while f:
        lm = _lead(f)
        c = f.pop(lm)
        for glm, g in basis:
            if _divides(glm, lm):
                shift = tuple(a - b for a, b in zip(lm, glm))
                for e, gc in g.items():
                    if e == glm:
                        continue
                    e2 = tuple(a + b for a, b in zip(e, shift))
                    s = f.get(e2, 0) - c * gc
                    if p:
                        s %= p
                    if s:
                        f[e2] = s
                    else:
                        f.pop(e2, None)
                break
        else:
            rem[lm] = c
    return rem


def _spoly(f: dict, flm, g: dict, glm, field: Field) -> dict:
    lcm = tuple(max(a, b) for a, b in zip(flm, glm))
    p = field.p
    out: dict = {}
    for poly, lm, sign in ((f, flm, 1), (g, glm, -1)):
        shift = tuple(a - b for a, b in zip(lcm, lm))
        for e, c in poly.items():
            e2 = tuple(a + b for a, b in zip(e, shift))
            s = out.get(e2, 0) + sign * c
            if p:
                s %= p
            if s:
                out[e2] = s
            else:
                out.pop(e2, None)
    return out


def _is_constant(e) -> bool:
    return not any(e)


@dataclass(frozen=True)
class GroebnerBasis:
    polys: tuple[Polynomial, ...]
    order: str = "grevlex"

    def is_unit(self) -> bool:
        return len(self.polys) == 1 and _is_constant(next(iter(self.polys[0].terms)))

    def leading_exponents(self) -> list[tuple[int, ...]]:
        return [_lead(g.terms) for g in self.polys]

    def to_json(self) -> dict:
        return {"order": self.order, "polys": [g.to_json() for g in self.polys]}


def _check_limit(n: int, limit: int) -> None:
    if n + 1 > limit:
        raise GroebnerLimitError(f"{n} variables plus the auxiliary slot exceed the limit of {limit}")


def _buchberger_raw(gens: list[dict], field: Field, stop_on_unit: bool = True) -> list[tuple]:
    basis: list[tuple] = []
    for f in gens:
        if f:
            f = _monic(f, field)
            basis.append((_lead(f), f))
    if any(_is_constant(lm) for lm, _ in basis):
        return [(lm, f) for lm, f in basis if _is_constant(lm)][:1]
    pending = {(a, b) for b in range(len(basis)) for a in range(b)}

    def pair_key(pr):
        a, b = pr
        lcm = tuple(max(x, y) for x, y in zip(basis[a][0], basis[b][0]))
        return (sum(lcm), pr)

    while pending:
        pr = min(pending, key=pair_key)
        pending.discard(pr)
        a, b = pr
        alm, af = basis[a]
        blm, bf = basis[b]
        # first criterion: coprime leading monomials
        if all(x == 0 or y == 0 for x, y in zip(alm, blm)):
            continue
        # second (chain) criterion
        lcm = tuple(max(x, y) for x, y in zip(alm, blm))
        chain = False
        for c, (clm, _) in enumerate(basis):
            if c in (a, b) or not _divides(clm, lcm):
                continue
            if (min(a, c), max(a, c)) not in pending and (min(b, c), max(b, c)) not in pending:
                chain = True
                break
        if chain:
            continue
        r = _reduce(_spoly(af, alm, bf, blm, field), basis, field)
        if not r:
            continue
        r = _monic(r, field)
        rlm = _lead(r)
        if _is_constant(rlm) and stop_on_unit:
            return [(rlm, r)]
        new = len(basis)
        basis.append((rlm, r))
        pending.update((c, new) for c in range(new))
    return basis


def _interreduce(basis: list[tuple], field: Field) -> list[tuple]:
    # drop elements whose leading monomial is divisible by another's
    minimal = []
    for idx, (lm, f) in enumerate(basis):
        redundant = False
        for jdx, (lm2, _) in enumerate(basis):
            if jdx == idx or not _divides(lm2, lm):
                continue
            if lm2 != lm or jdx < idx:
                redundant = True
                break
        if not redundant:
            minimal.append((lm, f))
    out = []
    for idx, (lm, f) in enumerate(minimal):
        others = [g for jdx, g in enumerate(minimal) if jdx != idx]
        tail = {e: c for e, c in f.items() if e != lm}
        tail = _reduce(tail, others, field)
        tail[lm] = f[lm]
        out.append((lm, tail))
    out.sort(key=lambda pair: grevlex_key(pair[0]), reverse=True)
    return out


def buchberger(gens: list[Polynomial], var_limit: int = DEFAULT_VAR_LIMIT) -> GroebnerBasis:
    """Reduced Groebner basis (monic, inter-reduced) of the generated ideal."""
    if not gens:
        raise ValueError("need at least one generator")
    n, field = gens[0].n, gens[0].field
    for g in gens:
        g._check(gens[0])
    _check_limit(n, var_limit)
    raw = _buchberger_raw([g.terms for g in gens], field)
    if not raw:
        return GroebnerBasis(())
    reduced = _interreduce(raw, field)
    return GroebnerBasis(tuple(Polynomial._raw(n, field, f) for _, f in reduced))


def normal_form(f: Polynomial, basis: GroebnerBasis) -> Polynomial:
    if not basis.polys:
        return f
    for g in basis.polys:
        f._check(g)
    raw = [(_lead(g.terms), g.terms) for g in basis.polys]
    return Polynomial._raw(f.n, f.field, _reduce(f.terms, raw, f.field))


def ideal_member(f: Polynomial, gens: list[Polynomial], var_limit: int = DEFAULT_VAR_LIMIT) -> bool:
    return normal_form(f, buchberger(gens, var_limit)).is_zero()


def radical_member(f: Polynomial, gens: list[Polynomial], var_limit: int = DEFAULT_VAR_LIMIT) -> bool:
    """Rabinowitsch: f lies in sqrt(J) iff 1 lies in J + (1 - t f)."""
    n, field = f.n, f.field
    _check_limit(n, var_limit)
    if any(e[n] for e in f.terms):
        raise ValueError("f must not involve the auxiliary variable")
    for g in gens:
        f._check(g)
        if any(e[n] for e in g.terms):
            raise ValueError("generators must not involve the auxiliary variable")
    if f.is_zero():
        return True
    t = Polynomial.variable(n, field, n + 1)
    aux = Polynomial.constant(n, field) - t * f
    raw = _buchberger_raw([g.terms for g in gens] + [aux.terms], field)
    return any(_is_constant(lm) for lm, _ in raw)


def _term_outside(polys: list[Polynomial], ideal: MonomialIdeal):
    n = ideal.n
    for f in polys:
        for e in f.terms:
            if e[n]:
                raise ValueError("polynomials must not involve the auxiliary variable")
            # a monomial lies in a squarefree monomial ideal iff its support does
            mask = sum(1 << i for i in range(n) if e[i])
            if not ideal.contains_mask(mask):
                return f, e
    return None


def radical_equals_ideal(polys: list[Polynomial], ideal: MonomialIdeal,
                         var_limit: int = DEFAULT_VAR_LIMIT, explain: bool = False):
    """Check sqrt(polys) == ideal for a squarefree monomial ideal.

    The inclusion sqrt(polys) in ideal holds iff every term of every poly lies
    in the ideal (a squarefree monomial ideal is radical and is spanned by its
    monomials).  The reverse inclusion is tested generator by generator.
    """
    bad = _term_outside(polys, ideal)
    if bad is not None:
        f, e = bad
        msg = f"term with exponents {list(e)} of {f} is not in the ideal"
        return (False, msg) if explain else False
    field = polys[0].field if polys else None
    for g in ideal.gens:
        if not polys or not radical_member(Polynomial.from_monomial(g, field), polys, var_limit):
            msg = f"generator {g} is not in the radical"
            return (False, msg) if explain else False
    return (True, "") if explain else True
