"""Brute-force oracle: Stanley-Reisner complexes and Hochster's formula.

Everything here enumerates all 2^n vertex subsets, so it is only meant for
small n (the default cap is ``ORACLE_LIMIT``).
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from math import gcd

from .lexsegment import InvariantReport
from .monomial import MonomialIdeal
from .polynomial import GF2, Field

ORACLE_LIMIT = 12


class OracleLimitError(RuntimeError):
    pass


def _check_limit(n: int, limit: int) -> None:
    if n > limit:
        raise OracleLimitError(f"n={n} exceeds the oracle limit {limit} (cost grows like 2^n)")


def _mask_vars(mask: int) -> tuple[int, ...]:
    return tuple(t + 1 for t in range(mask.bit_length()) if mask >> t & 1)


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    faces: tuple[int, ...]  # bitmasks, sorted by (size, mask); includes the empty face
    facets: tuple[int, ...]

    @property
    def dim(self) -> int:
        return max(f.bit_count() for f in self.facets) - 1

    def facet_sets(self) -> list[tuple[int, ...]]:
        return [_mask_vars(f) for f in self.facets]

    def is_face(self, mask: int) -> bool:
        return any(mask & ~f == 0 for f in self.facets)


def complex_of(ideal: MonomialIdeal, limit: int = ORACLE_LIMIT) -> SimplicialComplex:
    """The complex whose Stanley-Reisner ideal is ``ideal``."""
    n = ideal.n
    _check_limit(n, limit)
    gens = [g.mask for g in ideal.gens]
    faces = [s for s in range(1 << n) if not any(g & ~s == 0 for g in gens)]
    face_set = set(faces)
    facets = [f for f in faces
              if not any((f | 1 << t) in face_set for t in range(n) if not f >> t & 1)]
    faces.sort(key=lambda s: (s.bit_count(), s))
    facets.sort(key=lambda s: (-s.bit_count(), _mask_vars(s)))
    return SimplicialComplex(n, tuple(faces), tuple(facets))


def minimal_primes(ideal: MonomialIdeal, limit: int = ORACLE_LIMIT) -> list[tuple[int, ...]]:
    """Variable sets generating the minimal primes (facet complements)."""
    cx = complex_of(ideal, limit)
    full = (1 << ideal.n) - 1
    primes = [full & ~f for f in cx.facets]
    primes.sort(key=lambda s: (s.bit_count(), _mask_vars(s)))
    return [_mask_vars(p) for p in primes]


def height(ideal: MonomialIdeal, limit: int = ORACLE_LIMIT) -> int:
    return min(len(p) for p in minimal_primes(ideal, limit))


def skeleton1_connected(ideal: MonomialIdeal) -> bool:
    """Connectivity of the 1-skeleton of the Stanley-Reisner complex."""
    n = ideal.n
    gens = [g.mask for g in ideal.gens]

    def face(mask):
        return not any(g & ~mask == 0 for g in gens)

    verts = [t for t in range(n) if face(1 << t)]
    if not verts:
        return True
    seen = {verts[0]}
    queue = deque([verts[0]])
    while queue:
        a = queue.popleft()
        for b in verts:
            if b not in seen and face(1 << a | 1 << b):
                seen.add(b)
                queue.append(b)
    return len(seen) == len(verts)


def taylor_minimal(ideal: MonomialIdeal) -> bool:
    """Every generator owns a variable that divides no other generator.

    Sufficient for the Taylor resolution to be minimal.
    """
    if ideal.is_zero():
        raise ValueError("need at least one generator")
    masks = [g.mask for g in ideal.gens]
    for idx, m in enumerate(masks):
        others = 0
        for jdx, o in enumerate(masks):
            if jdx != idx:
                others |= o
        if not m & ~others:
            return False
    return True


# --- exact ranks -----------------------------------------------------------

def _rank_gf2(rows: list[int]) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for r in rows:
        while r:
            top = r.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = r
                rank += 1
                break
            r ^= p
    return rank


def _rank_mod_p(rows: list[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for r in rows:
        r = {c: v % p for c, v in r.items() if v % p}
        while r:
            col = max(r)
            piv = pivots.get(col)
            if piv is None:
                inv = pow(r[col], -1, p)
                pivots[col] = {c: v * inv % p for c, v in r.items()}
                rank += 1
                break
            f = r[col]
            for c, v in piv.items():
                s = (r.get(c, 0) - f * v) % p
                if s:
                    r[c] = s
                else:
                    r.pop(c, None)
    return rank


def _rank_rational(rows: list[dict[int, int]]) -> int:
    # fraction-free elimination on integer rows, content removed after each step
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for r in rows:
        r = {c: v for c, v in r.items() if v}
        while r:
            col = max(r)
            piv = pivots.get(col)
            if piv is None:
                pivots[col] = r
                rank += 1
                break
            a, b = piv[col], r[col]
            new = {}
            for c in set(r) | set(piv):
                s = a * r.get(c, 0) - b * piv.get(c, 0)
                if s:
                    new[c] = s
            g = 0
            for v in new.values():
                g = gcd(g, v)
            r = {c: v // g for c, v in new.items()} if g > 1 else new
    return rank


def boundary_rank(faces_q: list[int], index_prev: dict[int, int], field: Field) -> int:
    """Rank of the simplicial boundary map from q-faces to (q-1)-faces."""
    if not faces_q:
        return 0
    if field.p == 2:
        rows = []
        for f in faces_q:
            row = 0
            rest = f
            while rest:
                low = rest & -rest
                row |= 1 << index_prev[f ^ low]
                rest ^= low
            rows.append(row)
        return _rank_gf2(rows)
    rows = []
    for f in faces_q:
        row = {}
        rest = f
        sign = 1
        while rest:
            low = rest & -rest
            row[index_prev[f ^ low]] = sign
            sign = -sign
            rest ^= low
        rows.append(row)
    if field.p:
        return _rank_mod_p(rows, field.p)
    return _rank_rational(rows)


def reduced_homology(faces: list[int], field: Field) -> dict[int, int]:
    """Reduced Betti numbers {q: dim H~_q} of the complex with the given faces.

    ``faces`` must be closed under taking subsets and contain the empty face
    (the void complex, with no faces at all, has zero reduced homology).
    """
    if not faces:
        return {}
    by_dim: dict[int, list[int]] = defaultdict(list)
    for f in faces:
        by_dim[f.bit_count() - 1].append(f)
    top = max(by_dim)
    ranks = {}
    for q in range(0, top + 1):
        prev = by_dim[q - 1]
        index_prev = {f: idx for idx, f in enumerate(prev)}
        ranks[q] = boundary_rank(by_dim[q], index_prev, field)
    out = {}
    for q in range(-1, top + 1):
        h = len(by_dim[q]) - ranks.get(q, 0) - ranks.get(q + 1, 0)
        if h:
            out[q] = h
    return out


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers of S/I: (homological degree, internal degree) -> rank."""

    entries: dict
    field: Field

    @property
    def projdim(self) -> int:
        return max(i for i, _ in self.entries)

    @property
    def reg_ideal(self) -> int | None:
        """reg(I) = reg(S/I) + 1; None for the zero ideal."""
        shifts = [d - i for (i, d) in self.entries if i >= 1]
        if not shifts:
            return None
        return max(shifts) + 1

    def total(self, i: int) -> int:
        return sum(b for (h, _), b in self.entries.items() if h == i)

    def is_linear(self) -> bool:
        return all(d == i + 1 for (i, d) in self.entries if i >= 1)

    def to_json(self) -> dict:
        return {
            "field": self.field.name,
            "entries": [{"i": i, "d": d, "beta": b} for (i, d), b in sorted(self.entries.items())],
        }

    def __str__(self):
        if not self.entries:
            return "(empty)"
        pd = self.projdim
        rows = sorted({d - i for i, d in self.entries})
        width = max(len(str(b)) for b in self.entries.values()) + 1
        lines = ["     " + "".join(f"{i:>{width}}" for i in range(pd + 1))]
        for r in rows:
            cells = "".join(f"{self.entries.get((i, i + r), '.'):>{width}}" for i in range(pd + 1))
            lines.append(f"{r:>3}: {cells}")
        return "\n".join(lines)


def hochster_betti(ideal: MonomialIdeal, field: Field = GF2, limit: int = ORACLE_LIMIT) -> BettiTable:
    """Betti numbers of S/I via beta_{i,sigma} = dim H~_{|sigma|-i-1}(Delta|sigma)."""
    cx = complex_of(ideal, limit)
    entries: dict[tuple[int, int], int] = defaultdict(int)
    for sigma in range(1 << ideal.n):
        sub = [f for f in cx.faces if f & ~sigma == 0]
        size = sigma.bit_count()
        for q, h in reduced_homology(sub, field).items():
            entries[(size - q - 1, size)] += h
    return BettiTable(dict(entries), field)


def oracle_invariants(ideal: MonomialIdeal, field: Field = GF2, limit: int = ORACLE_LIMIT) -> InvariantReport:
    """Invariants from the complex and the Betti table.

    dim is the largest facet size, depth = n - projdim.  ara is reported as
    projdim, which is the cohomological-dimension lower bound for ara.
    """
    n = ideal.n
    cx = complex_of(ideal, limit)
    dim = max(f.bit_count() for f in cx.facets)
    table = hochster_betti(ideal, field, limit)
    projdim = table.projdim
    depth = n - projdim
    reg = table.reg_ideal
    cm = dim == depth
    return InvariantReport(
        dim=dim, depth=depth, projdim=projdim, reg=reg if reg is not None else 0,
        ara=projdim, height=n - dim, cm=cm, stci=cm,
        linear_resolution=table.is_linear() and ideal.mu >= 2,
    )
