"""Immutable bitset-backed simple graphs and the graph6 codec.

Vertices are the integers 0..n-1 with n <= 62, so every adjacency row and
every vertex set fits in a single machine word.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

MAX_VERTICES = 62

INFINITE = math.inf


class GraphError(ValueError):
    """Malformed graph input (bad edge, bad encoding, size overflow)."""


def bits_of(mask: int):
    """Iterate the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """A set of vertices of a graph of order ``n``, stored as a bitset."""

    bits: int
    n: int

    def __post_init__(self):
        if self.bits >> self.n:
            raise GraphError("vertex set contains a vertex >= n")
        if self.bits < 0:
            raise GraphError("negative bitset")

    @classmethod
    def of(cls, vertices, n: int) -> "VertexSet":
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise GraphError(f"vertex {v} out of range for order {n}")
            mask |= 1 << v
        return cls(mask, n)

    def members(self) -> tuple[int, ...]:
        return tuple(bits_of(self.bits))

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and (self.bits >> v) & 1 == 1

    def __iter__(self):
        return bits_of(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def _check(self, other: "VertexSet"):
        if self.n != other.n:
            raise GraphError("vertex sets bound to different graph orders")

    def __or__(self, other):
        self._check(other)
        return VertexSet(self.bits | other.bits, self.n)

    def __and__(self, other):
        self._check(other)
        return VertexSet(self.bits & other.bits, self.n)

    def __sub__(self, other):
        self._check(other)
        return VertexSet(self.bits & ~other.bits, self.n)

    def issubset(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def sort_key(self) -> tuple[int, ...]:
        """Lexicographic key: the increasing member tuple."""
        return self.members()

    def __repr__(self):
        return f"VertexSet({set(self.members()) or '{}'}, n={self.n})"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbor bitset of v."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"order {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match order")
        for v, row in enumerate(self.adj):
            if row >> self.n:
                raise GraphError("adjacency row mentions a vertex >= n")
            if (row >> v) & 1:
                raise GraphError(f"loop at vertex {v}")
        for v in range(self.n):
            for u in bits_of(self.adj[v]):
                if not (self.adj[u] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency at ({v},{u})")

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits_of(self.adj[u]) if u < v]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj[u] >> v) & 1 == 1

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertex_set(self, vertices) -> VertexSet:
        return VertexSet.of(vertices, self.n)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def build_graph(n: int, edges) -> Graph:
    """Build a simple graph, collapsing duplicate edges and rejecting loops."""
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"order {n} outside 0..{MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge ({u},{v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def as_mask(S, n: int) -> int:
    """Coerce a VertexSet, int bitset, or iterable of vertices to a bitset."""
    if isinstance(S, VertexSet):
        if S.n != n:
            raise GraphError("vertex set bound to a different graph order")
        return S.bits
    if isinstance(S, int):
        if S < 0 or S >> n:
            raise GraphError("bitset out of range")
        return S
    return VertexSet.of(S, n).bits


def neighborhood(g: Graph, v: int) -> VertexSet:
    """The open neighborhood N(v)."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    return VertexSet(g.adj[v], g.n)


def bfs_distances(g: Graph, v: int) -> list[int]:
    """Shortest-path distances from v; -1 for unreachable vertices."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    dist = [-1] * g.n
    dist[v] = 0
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in bits_of(g.adj[u]):
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance_layer(g: Graph, v: int, i: int) -> VertexSet:
    """All vertices at shortest-path distance exactly i from v."""
    if i < 0:
        raise GraphError("distance must be nonnegative")
    dist = bfs_distances(g, v)
    mask = 0
    for u, d in enumerate(dist):
        if d == i:
            mask |= 1 << u
    return VertexSet(mask, g.n)


def girth(g: Graph):
    """Length of a shortest cycle; INFINITE when the graph is acyclic.

    One BFS per vertex; a non-tree edge (u,w) seen from root s bounds the
    girth by dist[u] + dist[w] + 1, and the bound is tight for roots lying
    on a shortest cycle.
    """
    best = INFINITE
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in bits_of(g.adj[u]):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    cand = dist[u] + dist[w] + 1
                    if cand < best:
                        best = cand
    return best


@dataclass(frozen=True)
class ComponentDecomposition:
    count: int
    assignment: tuple[int, ...]

    def component_masks(self) -> list[int]:
        masks = [0] * self.count
        for v, c in enumerate(self.assignment):
            masks[c] |= 1 << v
        return masks


def components(g: Graph) -> ComponentDecomposition:
    """Connected-component labeling in vertex order."""
    assignment = [-1] * g.n
    count = 0
    for s in range(g.n):
        if assignment[s] >= 0:
            continue
        assignment[s] = count
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in bits_of(g.adj[u]):
                if assignment[w] < 0:
                    assignment[w] = count
                    queue.append(w)
        count += 1
    return ComponentDecomposition(count, tuple(assignment))


def is_connected(g: Graph) -> bool:
    return components(g).count == 1


def induced_subgraph(g: Graph, S) -> tuple[Graph, list[int]]:
    """The subgraph induced by S, plus the map new index -> old vertex."""
    mask = as_mask(S, g.n)
    old = list(bits_of(mask))
    index = {v: i for i, v in enumerate(old)}
    adj = [0] * len(old)
    for i, v in enumerate(old):
        for u in bits_of(g.adj[v] & mask):
            adj[i] |= 1 << index[u]
    return Graph(len(old), tuple(adj)), old


# --- graph6 codec (short form, n <= 62) ---------------------------------


def encode_graph6(g: Graph) -> str:
    """Encode a labeled graph in graph6 short form."""
    if g.n > MAX_VERTICES:
        raise GraphError(f"graph6 short form requires n <= {MAX_VERTICES}")
    out = [chr(g.n + 63)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | ((g.adj[j] >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 short-form line."""
    s = line.strip()
    if not s:
        raise GraphError("empty graph6 line")
    head = ord(s[0])
    if head == 126:
        raise GraphError("graph6 long form (n > 62) is not supported")
    n = head - 63
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"bad graph6 header byte {s[0]!r}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise GraphError(
            f"graph6 payload has {len(body)} bytes, expected {need} for n={n}"
        )
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise GraphError(f"bad graph6 payload byte {ch!r}")
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise GraphError("nonzero graph6 padding bits")
    adj = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(adj))


# --- edge-list text format ------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format: a "n m" header then m "u v" lines."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise GraphError("empty edge-list input")
    header = lines[0].split()
    if len(header) != 2:
        raise GraphError(f"bad edge-list header {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphError(f"bad edge-list header {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise GraphError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return build_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
