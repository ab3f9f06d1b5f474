"""Squarefree monomials, monomial ideals and the lexicographic order.

Variables are 1-based: ``x1 > x2 > ... > xn``.  A squarefree monomial is
stored as a bitmask where bit ``t - 1`` stands for ``x_t``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import total_ordering
from itertools import combinations
from typing import Iterable

MAX_VARS = 64

LT, EQ, GT = -1, 0, 1


class MonomialError(ValueError):
    pass


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_VARS:
        raise MonomialError(f"ambient variable count must be in 1..{MAX_VARS}, got {n}")


@total_ordering
@dataclass(frozen=True)
class SquarefreeMonomial:
    n: int
    mask: int

    def __post_init__(self):
        _check_n(self.n)
        if self.mask < 0 or self.mask >> self.n:
            raise MonomialError(f"variable index out of range 1..{self.n}")

    @classmethod
    def from_vars(cls, n: int, vars: Iterable[int]) -> "SquarefreeMonomial":
        _check_n(n)
        mask = 0
        for t in vars:
            if not 1 <= t <= n:
                raise MonomialError(f"variable index {t} out of range 1..{n}")
            if mask >> (t - 1) & 1:
                raise MonomialError(f"repeated variable x{t} in squarefree monomial")
            mask |= 1 << (t - 1)
        return cls(n, mask)

    @classmethod
    def unit(cls, n: int) -> "SquarefreeMonomial":
        return cls(n, 0)

    @property
    def vars(self) -> tuple[int, ...]:
        return tuple(t + 1 for t in range(self.n) if self.mask >> t & 1)

    @property
    def degree(self) -> int:
        return self.mask.bit_count()

    def max_index(self) -> int:
        return self.mask.bit_length()

    def min_index(self) -> int:
        return (self.mask & -self.mask).bit_length()

    def __mul__(self, other: "SquarefreeMonomial") -> "SquarefreeMonomial":
        """Squarefree part of the product (the lcm)."""
        _same_n(self, other)
        return SquarefreeMonomial(self.n, self.mask | other.mask)

    def __truediv__(self, other: "SquarefreeMonomial") -> "SquarefreeMonomial":
        if not divides(other, self):
            raise MonomialError(f"{other} does not divide {self}")
        return SquarefreeMonomial(self.n, self.mask & ~other.mask)

    def shifted(self, shift: int, n: int) -> "SquarefreeMonomial":
        """Relabel x_t -> x_{t+shift} inside a ring with n variables."""
        if shift >= 0:
            return SquarefreeMonomial(n, self.mask << shift)
        return SquarefreeMonomial(n, self.mask >> -shift)

    def __lt__(self, other):
        return lex_compare(self, other) == LT

    def __str__(self):
        return "".join(f"x{t}" for t in self.vars) or "1"

    def __repr__(self):
        return f"SquarefreeMonomial({self})"


def _same_n(a: SquarefreeMonomial, b: SquarefreeMonomial) -> None:
    if a.n != b.n:
        raise MonomialError(f"ambient mismatch: n={a.n} vs n={b.n}")


def lex_compare(a: SquarefreeMonomial, b: SquarefreeMonomial) -> int:
    """Lexicographic comparison of exponent vectors, x1 > x2 > ... > xn.

    The smallest variable index in the symmetric difference decides: the
    monomial containing it is the larger one.  For equal degrees this is the
    usual "smaller first index wins" rule.
    """
    _same_n(a, b)
    diff = a.mask ^ b.mask
    if not diff:
        return EQ
    low = diff & -diff
    return GT if a.mask & low else LT


def divides(a: SquarefreeMonomial, b: SquarefreeMonomial) -> bool:
    _same_n(a, b)
    return a.mask & ~b.mask == 0


def lex_key(m: SquarefreeMonomial) -> tuple[int, ...]:
    """Sort key increasing with the lex order."""
    return tuple(m.mask >> t & 1 for t in range(m.n))


def all_squarefree(n: int, degree: int) -> list[SquarefreeMonomial]:
    """All squarefree monomials of a degree, decreasing in lex order."""
    return [SquarefreeMonomial.from_vars(n, c) for c in combinations(range(1, n + 1), degree)]


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    gens: tuple[SquarefreeMonomial, ...] = field(default=())

    def __post_init__(self):
        _check_n(self.n)
        for g in self.gens:
            if g.n != self.n:
                raise MonomialError(f"generator {g} lives in n={g.n}, ideal has n={self.n}")
        masks = [g.mask for g in self.gens]
        for a in masks:
            for b in masks:
                if a != b and a & ~b == 0:
                    raise MonomialError("generators must form a divisibility antichain")

    @property
    def mu(self) -> int:
        return len(self.gens)

    @property
    def indeg(self) -> int | None:
        if not self.gens:
            return None
        return min(g.degree for g in self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def contains(self, m: SquarefreeMonomial) -> bool:
        _check_same_ring(self, m)
        return any(g.mask & ~m.mask == 0 for g in self.gens)

    def contains_mask(self, mask: int) -> bool:
        return any(g.mask & ~mask == 0 for g in self.gens)

    def shifted(self, shift: int, n: int) -> "MonomialIdeal":
        return MonomialIdeal(n, tuple(g.shifted(shift, n) for g in self.gens))

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    def to_json(self) -> dict:
        return {"n": self.n, "gens": [list(g.vars) for g in self.gens]}

    @classmethod
    def from_json(cls, data: dict) -> "MonomialIdeal":
        n = data["n"]
        return minimalize([SquarefreeMonomial.from_vars(n, g) for g in data["gens"]], n=n)


def _check_same_ring(ideal: MonomialIdeal, m: SquarefreeMonomial) -> None:
    if ideal.n != m.n:
        raise MonomialError(f"ambient mismatch: ideal n={ideal.n}, monomial n={m.n}")


def minimalize(gens: Iterable[SquarefreeMonomial], n: int | None = None) -> MonomialIdeal:
    """Reduce to the minimal generators, sorted decreasing in lex order."""
    gens = list(gens)
    if n is None:
        if not gens:
            raise MonomialError("cannot infer n from an empty generator list")
        n = gens[0].n
    masks = sorted({g.mask for g in gens}, key=int.bit_count)
    kept: list[int] = []
    for m in masks:
        if not any(k & ~m == 0 for k in kept):
            kept.append(m)
    out = sorted((SquarefreeMonomial(n, m) for m in kept), key=lex_key, reverse=True)
    return MonomialIdeal(n, tuple(out))


def monomial_in_radical_trivial(m: SquarefreeMonomial, ideal: MonomialIdeal) -> bool:
    # squarefree monomial ideals are radical, so this is plain membership
    return ideal.contains(m)


_FACTOR = re.compile(r"x(\d+)")


def parse_monomial(text: str, n: int) -> SquarefreeMonomial:
    """Parse ``x1x3``, ``x1*x3`` or ``[1,3]``."""
    s = text.strip()
    if s.startswith("["):
        try:
            vars = json.loads(s)
        except json.JSONDecodeError as exc:
            raise MonomialError(f"cannot parse monomial {text!r}") from exc
        if not isinstance(vars, list) or not all(isinstance(t, int) for t in vars):
            raise MonomialError(f"cannot parse monomial {text!r}")
        return SquarefreeMonomial.from_vars(n, vars)
    if s == "1":
        return SquarefreeMonomial.unit(n)
    compact = s.replace("*", "").replace(" ", "")
    if not compact or _FACTOR.sub("", compact):
        raise MonomialError(f"cannot parse monomial {text!r}")
    return SquarefreeMonomial.from_vars(n, [int(t) for t in _FACTOR.findall(compact)])
