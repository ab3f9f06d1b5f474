"""Two-element radical witnesses for height-two cover ideals, built by vertex removal.

Let G be a graph whose complement is chordal and let J(G) be its cover
ideal, the intersection of (x_a, x_b) over the edges ab.  If s is simplicial
in the complement and W is its neighbourhood in G, then

    J(G) = J(G - s) ∩ (x_s, Π_W)   with Π_W ∈ J(G - s).

Given sqrt(f1, f2) = K = J(G - s) we look for

    g1 = x_s f1 + Π a,   g2 = x_s f2 + Π b

where a is a monomial supported on W and f1 b - a f2 = -r with r a single
term supported on W or on variables dividing every term of f1.  Away from
V(f1) the pair forces Π r / f1 = 0, and on V(f1) it forces Π = 0 or f2 = 0,
so sqrt(g1, g2) = K ∩ (x_s, Π).  b is the quotient of a f2 by f1 for some
choice of leading term.  Every candidate is still checked with Groebner
bases at the end, so the argument above only guides the search.

False twins (non-adjacent vertices with the same neighbourhood) appear
together in every minimal cover; one of them is dropped first and restored
by the substitution x_a -> x_a x_b.
"""

from __future__ import annotations

from itertools import combinations, zip_longest

from .groebner import DEFAULT_VAR_LIMIT, radical_equals_ideal
from .monomial import MonomialIdeal, SquarefreeMonomial
from .polynomial import Field, Polynomial

DEFAULT_PER_VERTEX = 4
DEFAULT_CANDIDATES = 8


class CoverError(ValueError):
    pass


def graph_of(dual: MonomialIdeal) -> dict[int, int]:
    """Adjacency bitmasks (0-based) of the graph whose cover ideal is ``dual``.

    The edges are the two-element minimal transversals of the generators.
    Raises CoverError when some minimal prime is not an edge.
    """
    from .duality import minimal_transversals

    edges = minimal_transversals([g.mask for g in dual.gens])
    if any(e.bit_count() != 2 for e in edges):
        raise CoverError("the ideal is not a cover ideal of a graph")
    adj: dict[int, int] = {}
    for e in edges:
        a = (e & -e).bit_length() - 1
        b = e.bit_length() - 1
        adj[a] = adj.get(a, 0) | 1 << b
        adj[b] = adj.get(b, 0) | 1 << a
    return adj


def false_twins(adj: dict[int, int]) -> list[tuple[int, int]]:
    """Pairs (keep, drop) to merge, dropping the larger index each time."""
    merges = []
    seen: dict[int, int] = {}
    for v in sorted(adj):
        key = adj[v]
        if key in seen:
            merges.append((seen[key], v))
        else:
            seen[key] = v
    return merges


def _remove(adj: dict[int, int], v: int) -> dict[int, int]:
    return {a: m & ~(1 << v) for a, m in adj.items() if a != v}


def _simplicial_in_complement(adj: dict[int, int], v: int) -> bool:
    # complement neighbours of v must be pairwise non-adjacent in G
    others = 0
    for a in adj:
        if a != v:
            others |= 1 << a
    co = others & ~adj[v]
    rest = co
    while rest:
        low = rest & -rest
        if adj[low.bit_length() - 1] & co:
            return False
        rest ^= low
    return True


def _mono(n: int, mask: int, field: Field) -> Polynomial:
    return Polynomial.from_monomial(SquarefreeMonomial(n, mask), field)


def _support(f: Polynomial) -> int:
    s = 0
    for e in f.terms:
        for t, x in enumerate(e[:-1]):
            if x:
                s |= 1 << t
    return s


def _common(f: Polynomial) -> int:
    out = None
    for e in f.terms:
        m = sum(1 << t for t, x in enumerate(e[:-1]) if x)
        out = m if out is None else out & m
    return out or 0


def divide(f: Polynomial, g: Polynomial, lead, cap: int = 200):
    """(q, r) with f = q g + r and no term of r divisible by ``lead``.

    ``lead`` is the term of g treated as leading.  Returns (None, None) if
    the reduction does not settle within ``cap`` steps.
    """
    field = f.field
    p = field.p
    inv = field.inv(g.terms[lead])
    work = dict(f.terms)
    quot: dict = {}
    rem: dict = {}
    steps = 0
    while work:
        steps += 1
        if steps > cap:
            return None, None
        e = max(work)
        c = work.pop(e)
        if all(a >= b for a, b in zip(e, lead)):
            shift = tuple(a - b for a, b in zip(e, lead))
            cq = c * inv % p if p else c * inv
            quot[shift] = quot.get(shift, 0) + cq
            for ge, gc in g.terms.items():
                if ge == lead:
                    continue
                e2 = tuple(a + b for a, b in zip(ge, shift))
                s = work.get(e2, 0) - cq * gc
                if p:
                    s %= p
                if s:
                    work[e2] = s
                else:
                    work.pop(e2, None)
        else:
            rem[e] = c
    return Polynomial(f.n, field, quot), Polynomial(f.n, field, rem)


def lift(f1: Polynomial, f2: Polynomial, s: int, w_mask: int):
    """Candidate pairs (g1, g2) for adding vertex s (1-based) with G-neighbourhood W."""
    n, field = f1.n, f1.field
    pi = _mono(n, w_mask, field)
    xs = Polynomial.variable(n, field, s)
    wv = [1 << t for t in range(n) if w_mask >> t & 1]
    multipliers = [0] + wv + [a | b for a, b in combinations(wv, 2)]
    for F1, F2 in ((f1, f2), (f2, f1)):
        allowed = w_mask | _common(F1)
        for a_mask in multipliers:
            a = _mono(n, a_mask, field)
            for lead in sorted(F1.terms):
                q, r = divide(a * F2, F1, lead)
                if r is None or len(r.terms) != 1 or _support(r) & ~allowed:
                    continue
                yield xs * F1 + pi * a, xs * F2 + pi * q


def _build(adj: dict[int, int], n: int, field: Field, memo: dict, per_vertex: int) -> list:
    """Candidate pairs for J(G), G given by ``adj`` (no isolated vertices).

    Memoized on the vertex set.  Each removable vertex contributes at most
    ``per_vertex`` lifts and the lists are interleaved, so one unlucky
    elimination choice cannot crowd out the others.
    """
    key = sum(1 << a for a in adj)
    if key in memo:
        return memo[key]
    if len(adj) == 2:
        a, b = sorted(adj)
        memo[key] = [(Polynomial.variable(n, field, a + 1), Polynomial.variable(n, field, b + 1))]
        return memo[key]
    per_v = []
    for v in sorted(adj, reverse=True):
        if not _simplicial_in_complement(adj, v):
            continue
        rest = {a: m for a, m in _remove(adj, v).items() if m}
        if len(rest) < 2:
            continue
        found: list = []
        for f1, f2 in _build(rest, n, field, memo, per_vertex):
            for pair in lift(f1, f2, v + 1, adj[v]):
                if pair not in found:
                    found.append(pair)
                if len(found) >= per_vertex:
                    break
            if len(found) >= per_vertex:
                break
        per_v.append(found)
    out: list = []
    for group in zip_longest(*per_v):
        out.extend(pair for pair in group if pair is not None and pair not in out)
    memo[key] = out
    return out


def _substitute(f: Polynomial, keep: int, drop: int) -> Polynomial:
    # x_keep -> x_keep * x_drop (0-based indices)
    terms = {}
    for e, c in f.terms.items():
        e2 = list(e)
        e2[drop] += e[keep]
        terms[tuple(e2)] = c
    return Polynomial(f.n, f.field, terms)


def vertex_removal_witness(dual: MonomialIdeal, field: Field, per_vertex: int = DEFAULT_PER_VERTEX,
                           max_candidates: int = DEFAULT_CANDIDATES,
                           var_limit: int = DEFAULT_VAR_LIMIT, log: list[str] | None = None):
    """(f1, f2) with sqrt(f1, f2) = dual, or None if no candidate verifies."""
    log = log if log is not None else []
    adj = graph_of(dual)
    merges = []
    while True:
        twins = false_twins(adj)
        if not twins:
            break
        keep, drop = twins[0]
        merges.append((keep, drop))
        adj = _remove(adj, drop)
    if merges:
        log.append("merged twins " + ", ".join(f"x{b + 1}->x{a + 1}" for a, b in merges))
    if len(adj) < 2:
        raise CoverError("graph has no edges")
    tried = 0
    for g1, g2 in _build(adj, dual.n, field, {}, per_vertex):
        if tried >= max_candidates:
            break
        tried += 1
        for keep, drop in reversed(merges):
            g1, g2 = _substitute(g1, keep, drop), _substitute(g2, keep, drop)
        ok, why = radical_equals_ideal([g1, g2], dual, var_limit, explain=True)
        log.append(f"vertex removal candidate {tried}: {'ok' if ok else why}")
        if ok:
            return g1, g2
    log.append(f"vertex removal: no witness after {tried} candidates")
    return None
