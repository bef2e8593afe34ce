"""Slow, independent reference implementations used to cross-check the
library. Everything here works from first principles (set arithmetic and
itertools over explicit vertex sets) and deliberately shares no code with
src/pairdom beyond the Graph accessors."""

from __future__ import annotations

import itertools

from pairdom.graph import Graph


def dominates(g: Graph, D) -> bool:
    covered = set()
    for v in D:
        covered.add(v)
        covered.update(u for u in range(g.n) if g.has_edge(u, v))
    return covered == set(range(g.n))


def is_minimal_dominating(g: Graph, D) -> bool:
    """Literal definition: dominating, and no proper subset dominates."""
    D = frozenset(D)
    if not dominates(g, D):
        return False
    for r in range(len(D)):
        for sub in itertools.combinations(sorted(D), r):
            if dominates(g, sub):
                return False
    return True


def has_perfect_matching(g: Graph, S) -> bool:
    S = sorted(S)
    if len(S) % 2:
        return False
    if not S:
        return True
    v, rest = S[0], S[1:]
    for u in rest:
        if g.has_edge(u, v):
            if has_perfect_matching(g, [w for w in rest if w != u]):
                return True
    return False


def is_paired_dominating(g: Graph, S) -> bool:
    return dominates(g, set(S)) and has_perfect_matching(g, S)


def is_minimal_paired_dominating(g: Graph, S) -> bool:
    S = frozenset(S)
    if not is_paired_dominating(g, S):
        return False
    for r in range(len(S)):
        for sub in itertools.combinations(sorted(S), r):
            if is_paired_dominating(g, sub):
                return False
    return True


def _subsets(n: int):
    for r in range(n + 1):
        yield from itertools.combinations(range(n), r)


def gamma(g: Graph) -> int:
    return min(len(S) for S in _subsets(g.n) if dominates(g, S))


def upper_gamma(g: Graph) -> int:
    return max(len(S) for S in _subsets(g.n) if is_minimal_dominating(g, S))


def gamma_pr(g: Graph):
    sizes = [len(S) for S in _subsets(g.n) if is_paired_dominating(g, S)]
    return min(sizes) if sizes else None


def upper_gamma_pr(g: Graph):
    sizes = [
        len(S) for S in _subsets(g.n) if is_minimal_paired_dominating(g, S)
    ]
    return max(sizes) if sizes else None


def independence_number(g: Graph) -> int:
    best = 0
    for S in _subsets(g.n):
        if all(not g.has_edge(u, v) for u, v in itertools.combinations(S, 2)):
            best = max(best, len(S))
    return best


def girth(g: Graph):
    """Shortest cycle via per-edge removal + BFS between the endpoints."""
    best = None
    for u, v in g.edges():
        dist = {u: 0}
        frontier = [u]
        while frontier:
            nxt = []
            for x in frontier:
                for y in range(g.n):
                    if not g.has_edge(x, y) or y in dist:
                        continue
                    if {x, y} == {u, v}:
                        continue
                    dist[y] = dist[x] + 1
                    nxt.append(y)
            frontier = nxt
        if v in dist:
            cyc = dist[v] + 1
            if best is None or cyc < best:
                best = cyc
    return best


def encode_graph6(g: Graph) -> str:
    """Reference short-form graph6 encoder (n <= 62)."""
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)
