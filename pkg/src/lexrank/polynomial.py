"""Sparse polynomials over GF(p) or the rationals.

Exponent vectors have length ``n + 1``; the last slot is reserved for an
auxiliary variable ``t`` (used by the Rabinowitsch trick in the Groebner
module).  It is printed as ``t``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .monomial import SquarefreeMonomial


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Field:
    """GF(p) for a prime ``p``, or the rationals when ``p == 0``."""

    p: int = 0

    def __post_init__(self):
        if self.p and not _is_prime(self.p):
            raise ValueError(f"GF({self.p}): modulus must be prime")

    @property
    def name(self) -> str:
        if self.p == 0:
            return "q"
        if self.p == 2:
            return "gf2"
        return f"gf{self.p}"

    def __call__(self, c):
        if self.p:
            if isinstance(c, Fraction):
                return c.numerator * pow(c.denominator, -1, self.p) % self.p
            return int(c) % self.p
        return Fraction(c)

    def inv(self, c):
        if self.p:
            return pow(c, -1, self.p)
        return 1 / c

    def parse(self, text: str):
        return self(Fraction(text))

    def format(self, c) -> str:
        return str(c)


GF2 = Field(2)
GF32003 = Field(32003)
QQ = Field(0)


def field_from_name(name: str) -> Field:
    name = name.strip().lower()
    if name in ("q", "qq", "rational", "rationals"):
        return QQ
    if name.startswith("gf"):
        return Field(int(name[2:]))
    raise ValueError(f"unknown field {name!r} (use gf2, gf<p> or q)")


Exps = tuple[int, ...]


class Polynomial:
    """Immutable sparse polynomial in x1..xn plus the auxiliary slot."""

    __slots__ = ("n", "field", "terms")

    def __init__(self, n: int, field: Field, terms: Mapping[Exps, object] | None = None):
        self.n = n
        self.field = field
        clean = {}
        for e, c in (terms or {}).items():
            if len(e) != n + 1:
                raise ValueError(f"exponent vector {e} has wrong length for n={n}")
            if any(x < 0 for x in e):
                raise ValueError(f"negative exponent in {e}")
            c = field(c)
            if c:
                clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, n, field, terms):
        p = cls.__new__(cls)
        p.n, p.field, p.terms = n, field, terms
        return p

    @classmethod
    def constant(cls, n: int, field: Field, c=1) -> "Polynomial":
        return cls(n, field, {(0,) * (n + 1): c})

    @classmethod
    def variable(cls, n: int, field: Field, index: int) -> "Polynomial":
        """``x_index`` for 1 <= index <= n; index n + 1 is the auxiliary slot."""
        e = [0] * (n + 1)
        e[index - 1] = 1
        return cls(n, field, {tuple(e): 1})

    @classmethod
    def from_monomial(cls, m: SquarefreeMonomial, field: Field, c=1) -> "Polynomial":
        e = tuple(m.mask >> t & 1 for t in range(m.n)) + (0,)
        return cls(m.n, field, {e: c})

    @classmethod
    def monomial_sum(cls, monomials: Iterable[SquarefreeMonomial], n: int, field: Field) -> "Polynomial":
        out = cls(n, field)
        for m in monomials:
            out = out + cls.from_monomial(m, field)
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "Polynomial"):
        if self.n != other.n or self.field != other.field:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        p = self.field.p
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if p:
                s %= p
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(self.n, self.field, out)

    def __neg__(self) -> "Polynomial":
        p = self.field.p
        return Polynomial._raw(self.n, self.field, {e: (-c % p if p else -c) for e, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        p = self.field.p
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if p:
                    s %= p
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Polynomial._raw(self.n, self.field, out)

    def __pow__(self, k: int) -> "Polynomial":
        out = Polynomial.constant(self.n, self.field)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.field, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[Exps, object]]:
        """Terms in decreasing lex order of exponent vectors (display order)."""
        return sorted(self.terms.items(), key=lambda ec: ec[0], reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "".join(_factor(i, x, self.n) for i, x in enumerate(e))
            if c == 1 and mono:
                parts.append(mono)
            else:
                parts.append(f"{c}{mono}")
        return "+".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"

    def to_json(self) -> list[dict]:
        return [{"coeff": str(c), "exps": list(e)} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: list[dict], n: int, field: Field) -> "Polynomial":
        return cls(n, field, {tuple(t["exps"]): field.parse(t["coeff"]) for t in data})


def _factor(i: int, x: int, n: int) -> str:
    if not x:
        return ""
    name = "t" if i == n else f"x{i + 1}"
    return name if x == 1 else f"{name}^{x}"
