"""Alexander duals of squarefree monomial ideals."""

from __future__ import annotations

from dataclasses import dataclass

from .lexsegment import LexSegmentIdeal, _require_normalized
from .monomial import MonomialIdeal, SquarefreeMonomial, minimalize
from .polynomial import GF2, Field
from .stanley_reisner import ORACLE_LIMIT, hochster_betti, minimal_primes


class DualityError(ValueError):
    pass


def minimal_transversals(supports: list[int]) -> list[int]:
    """Minimal vertex covers of a hypergraph given by bitmask edges."""
    covers: set[int] = set()

    def branch(chosen: int):
        for s in supports:
            if not s & chosen:
                rest = s
                while rest:
                    low = rest & -rest
                    branch(chosen | low)
                    rest ^= low
                return
        covers.add(chosen)

    branch(0)
    kept = []
    for c in sorted(covers, key=int.bit_count):
        if not any(k & ~c == 0 for k in kept):
            kept.append(c)
    return kept


def alexander_dual(ideal: MonomialIdeal) -> MonomialIdeal:
    """I* = intersection of (x_a : a in supp m) over the generators m of I."""
    if ideal.is_zero():
        raise DualityError("the Alexander dual of the zero ideal is not defined here")
    covers = minimal_transversals([g.mask for g in ideal.gens])
    return minimalize([SquarefreeMonomial(ideal.n, c) for c in covers], n=ideal.n)


@dataclass(frozen=True)
class DualPresentation:
    primes: tuple[tuple[int, ...], ...]
    dual: MonomialIdeal

    def to_json(self) -> dict:
        return {
            "primes": [list(p) for p in self.primes],
            "dual_gens": [list(g.vars) for g in self.dual.gens],
        }


def dual_presentation(ideal: MonomialIdeal) -> DualPresentation:
    return DualPresentation(tuple(g.vars for g in ideal.gens), alexander_dual(ideal))


def is_unmixed_height_two(dual: MonomialIdeal, limit: int = ORACLE_LIMIT) -> bool:
    return all(len(p) == 2 for p in minimal_primes(dual, limit))


def dual_projdim(L: LexSegmentIdeal) -> int:
    """projdim(S/I*) in closed form: 3 iff j >= 2, i >= j + 2 and k != n."""
    _require_normalized(L)
    if L.j >= 2 and L.i >= L.j + 2 and L.k != L.n:
        return 3
    return 2


def terai_check(ideal: MonomialIdeal, field: Field = GF2, limit: int = ORACLE_LIMIT) -> bool:
    """Oracle check of projdim(S/I*) == reg(I)."""
    primal = hochster_betti(ideal, field, limit)
    dual = hochster_betti(alexander_dual(ideal), field, limit)
    return dual.projdim == primal.reg_ideal
