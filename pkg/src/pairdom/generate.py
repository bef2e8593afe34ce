"""Exhaustive small-graph sources.

Two generators live here. ``enumerate_labeled_graphs`` walks every labeled
graph on up to 7 vertices, optionally deduplicated by the minimum
adjacency-bit-string over all vertex permutations. ``nonisomorphic_graphs``
scales further (one vertex-addition level at a time, one representative per
isomorphism class) and accepts a hereditary predicate so restricted streams
such as triangle-free graphs never materialize the unrestricted universe.
"""

from __future__ import annotations

from itertools import permutations

from .domination import GuardError
from .graph import Graph, bits_of, girth, components

LABELED_GUARD = 7


def _pair_index(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def graph_from_pair_mask(n: int, mask: int) -> Graph:
    adj = [0] * n
    for k, (i, j) in enumerate(_pair_index(n)):
        if (mask >> k) & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def _permutation_tables(n: int) -> list[list[int]]:
    """For each permutation p, table[k] = pair index of (p[i], p[j])."""
    pairs = _pair_index(n)
    index = {pair: k for k, pair in enumerate(pairs)}
    tables = []
    for p in permutations(range(n)):
        tables.append(
            [index[tuple(sorted((p[i], p[j])))] for (i, j) in pairs]
        )
    return tables


def enumerate_labeled_graphs(n: int, dedup: bool = False):
    """Yield all labeled graphs on n vertices; with dedup, only the
    representative whose pair bitmask is minimal over all relabelings."""
    if n > LABELED_GUARD:
        raise GuardError(f"labeled enumeration limited to n <= {LABELED_GUARD}")
    npairs = n * (n - 1) // 2
    tables = _permutation_tables(n) if dedup else None
    for mask in range(1 << npairs):
        if dedup:
            canon = mask
            for table in tables:
                image = 0
                m = mask
                while m:
                    low = m & -m
                    image |= 1 << table[low.bit_length() - 1]
                    m ^= low
                if image < canon:
                    canon = image
            if canon != mask:
                continue
        yield graph_from_pair_mask(n, mask)


# --- isomorphism machinery ---------------------------------------------------


def refinement_colors(g: Graph) -> list[int]:
    """Stable vertex colors under iterated neighborhood refinement,
    canonically renumbered (independent of labeling up to isomorphism)."""
    colors = [g.adj[v].bit_count() for v in range(g.n)]
    for _ in range(g.n):
        sig = [
            (colors[v], tuple(sorted(colors[u] for u in bits_of(g.adj[v]))))
            for v in range(g.n)
        ]
        palette = {s: i for i, s in enumerate(sorted(set(sig)))}
        fresh = [palette[s] for s in sig]
        if fresh == colors:
            break
        colors = fresh
    return colors


def iso_key(g: Graph) -> tuple:
    """A cheap isomorphism-invariant bucket key (not a complete invariant)."""
    colors = refinement_colors(g)
    edge_colors = sorted(
        tuple(sorted((colors[u], colors[v]))) for u, v in g.edges()
    )
    return (g.n, g.edge_count, tuple(sorted(colors)), tuple(edge_colors))


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism test: refinement colors plus backtracking."""
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    n = g1.n
    c1 = refinement_colors(g1)
    c2 = refinement_colors(g2)
    if sorted(c1) != sorted(c2):
        return False
    freq: dict[int, int] = {}
    for c in c1:
        freq[c] = freq.get(c, 0) + 1
    order = sorted(range(n), key=lambda v: (freq[c1[v]], c1[v], v))
    mapping = [-1] * n
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        for w in range(n):
            if used[w] or c2[w] != c1[v]:
                continue
            ok = True
            for prev in range(k):
                u = order[prev]
                if ((g1.adj[v] >> u) & 1) != ((g2.adj[w] >> mapping[u]) & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            if extend(k + 1):
                return True
            used[w] = False
            mapping[v] = -1
        return False

    return extend(0)


def nonisomorphic_levels(n: int, predicate=None) -> dict[int, list[Graph]]:
    """Representatives of every isomorphism class on 0..n vertices.

    ``predicate`` must be hereditary under vertex deletion (triangle-free,
    girth bounds, cactus-like conditions all qualify); it prunes each level
    so restricted families are generated directly.
    """
    levels: dict[int, list[Graph]] = {0: [Graph(0, ())]}
    for k in range(1, n + 1):
        buckets: dict[tuple, list[Graph]] = {}
        reps: list[Graph] = []
        for base in levels[k - 1]:
            for mask in range(1 << (k - 1)):
                adj = list(base.adj)
                for u in bits_of(mask):
                    adj[u] |= 1 << (k - 1)
                adj.append(mask)
                g = Graph(k, tuple(adj))
                if predicate is not None and not predicate(g):
                    continue
                bucket = buckets.setdefault(iso_key(g), [])
                if any(are_isomorphic(g, h) for h in bucket):
                    continue
                bucket.append(g)
                reps.append(g)
        levels[k] = reps
    return levels


def nonisomorphic_graphs(n: int, predicate=None, min_n: int = 0) -> list[Graph]:
    """One representative per isomorphism class with min_n..n vertices."""
    levels = nonisomorphic_levels(n, predicate)
    out: list[Graph] = []
    for k in range(min_n, n + 1):
        out.extend(levels[k])
    return out


# --- hereditary predicates ----------------------------------------------------


def triangle_free(g: Graph) -> bool:
    return all(
        g.adj[u] & g.adj[v] == 0 for u in range(g.n) for v in bits_of(g.adj[u])
        if u < v
    )


def girth_at_least(k: int):
    def pred(g: Graph) -> bool:
        return girth(g) >= k

    return pred


def at_most_one_cycle_per_component(g: Graph) -> bool:
    """Each component has at most one independent cycle (supersets the
    unicyclic graphs; hereditary, unlike connectivity)."""
    for mask in components(g).component_masks():
        verts = list(bits_of(mask))
        edges = sum((g.adj[v] & mask).bit_count() for v in verts) // 2
        if edges > len(verts):
            return False
    return True


def relabel(g: Graph, perm) -> Graph:
    """The isomorphic copy with vertex v renamed perm[v]."""
    adj = [0] * g.n
    for v in range(g.n):
        for u in bits_of(g.adj[v]):
            adj[perm[v]] |= 1 << perm[u]
    return Graph(g.n, tuple(adj))
