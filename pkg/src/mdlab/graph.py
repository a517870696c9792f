"""Immutable simple undirected graphs and the structural transforms used everywhere else.

Vertices are the integers 0..n-1.  Edges are stored as a lexicographically
sorted tuple of pairs (u, v) with u < v, so two graphs are equal iff they have
the same vertex count and the same edge tuple (canonical form).  All operations
are pure functions returning fresh Graph values; instances are safe to share
between workers.

Transforms that relabel vertices (deletion, contraction) relabel survivors
order-preservingly and return the old-id -> new-id mapping alongside the graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

#: Old vertex id -> new vertex id.  Total on the surviving vertices, and the
#: images always cover 0..n'-1 exactly.  Vertices removed outright (deletion)
#: are absent from the mapping; contraction maps every vertex somewhere.
VertexMap = dict[int, int]

#: Returned by odd_girth for bipartite graphs.
INFINITE = math.inf


class Graph6Error(ValueError):
    """Raised for malformed or unsupported graph6 text."""


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph in canonical form.

    Attributes:
        n: number of vertices (vertex ids are 0..n-1).
        edges: sorted tuple of (u, v) pairs with u < v, duplicate-free.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        prev = None
        for e in self.edges:
            u, v = e
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge {e} out of range for n={self.n}")
            if prev is not None and e <= prev:
                raise ValueError(f"edge list not sorted and duplicate-free at {e}")
            prev = e

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Neighbor lists, sorted, one per vertex."""
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        """Edge -> position in the canonical edge order."""
        return {e: i for i, e in enumerate(self.edges)}

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_index

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adjacency[v]

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    def __repr__(self) -> str:  # compact, the edge list can be long
        return f"Graph(n={self.n}, m={self.m})"


def graph(n: int, edges) -> Graph:
    """Build a Graph from any iterable of pairs, canonicalizing order.

    Loops are rejected; duplicate and reversed pairs collapse to one edge.
    """
    canon = set()
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at vertex {u} not allowed")
        canon.add((u, v) if u < v else (v, u))
    return Graph(n, tuple(sorted(canon)))


def min_degree(g: Graph) -> int:
    return min((len(a) for a in g.adjacency), default=0)


def max_degree(g: Graph) -> int:
    return max((len(a) for a in g.adjacency), default=0)


def common_neighbors(g: Graph, u: int, v: int) -> tuple[int, ...]:
    """Vertices adjacent to both u and v, sorted."""
    g._check_vertex(u)
    g._check_vertex(v)
    return tuple(sorted(set(g.adjacency[u]) & set(g.adjacency[v])))


# ---------------------------------------------------------------------------
# Connectivity


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * g.n
    out: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    """True when g has at most one component (the 0-vertex graph counts as connected)."""
    if g.n <= 1:
        return True
    return len(components(g)) == 1


# ---------------------------------------------------------------------------
# Structural transforms


def delete_vertex(g: Graph, v: int) -> tuple[Graph, VertexMap]:
    """Remove v, relabel survivors order-preservingly, and report the relabeling."""
    g._check_vertex(v)
    vmap: VertexMap = {}
    for old in range(g.n):
        if old != v:
            vmap[old] = old if old < v else old - 1
    new_edges = [
        (vmap[a], vmap[b]) for a, b in g.edges if a != v and b != v
    ]
    return graph(g.n - 1, new_edges), vmap


def delete_edges(g: Graph, edge_set) -> Graph:
    """Remove the given edges; all vertices stay."""
    drop = set()
    for u, v in edge_set:
        e = (u, v) if u < v else (v, u)
        if e not in g.edge_index:
            raise ValueError(f"{e} is not an edge of the graph")
        drop.add(e)
    return Graph(g.n, tuple(e for e in g.edges if e not in drop))


def contract_edge_set(g: Graph, edge_set) -> tuple[Graph, VertexMap]:
    """Identify the endpoints of every edge in the set (transitively).

    Loops and parallel edges created by the identification are dropped, so the
    result is the underlying simple graph.  New ids are assigned to the merged
    classes in order of their smallest original vertex.
    """
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edge_set:
        e = (u, v) if u < v else (v, u)
        if e not in g.edge_index:
            raise ValueError(f"{e} is not an edge of the graph")
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)

    roots = sorted({find(x) for x in range(g.n)})
    root_id = {r: i for i, r in enumerate(roots)}
    vmap: VertexMap = {x: root_id[find(x)] for x in range(g.n)}
    new_edges = []
    for a, b in g.edges:
        na, nb = vmap[a], vmap[b]
        if na != nb:
            new_edges.append((na, nb))
    return graph(len(roots), new_edges), vmap


def subdivide_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Replace edge e by a length-2 path through a new vertex with id n."""
    u, v = e
    if u > v:
        u, v = v, u
    if (u, v) not in g.edge_index:
        raise ValueError(f"{(u, v)} is not an edge of the graph")
    w = g.n
    new_edges = [x for x in g.edges if x != (u, v)]
    new_edges += [(u, w), (v, w)]
    return graph(g.n + 1, new_edges)


def split_off(g: Graph, v: int) -> Graph:
    """Delete a degree-2 vertex and join its two neighbors directly.

    Requires the neighbors to be non-adjacent, otherwise the result would need
    a parallel edge; callers must handle that case themselves.
    """
    g._check_vertex(v)
    nbrs = g.adjacency[v]
    if len(nbrs) != 2:
        raise ValueError(f"vertex {v} has degree {len(nbrs)}, need exactly 2")
    a, b = nbrs
    if g.has_edge(a, b):
        raise ValueError(
            f"neighbors {a} and {b} of vertex {v} are adjacent; "
            "splitting off would create a parallel edge"
        )
    h, vmap = delete_vertex(g, v)
    return graph(h.n, list(h.edges) + [(vmap[a], vmap[b])])


# ---------------------------------------------------------------------------
# Bipartiteness and odd girth


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.adjacency[x]:
                if color[y] == -1:
                    color[y] = color[x] ^ 1
                    stack.append(y)
                elif color[y] == color[x]:
                    return False
    return True


def odd_girth(g: Graph) -> int | float:
    """Length of a shortest odd cycle, or INFINITE when the graph is bipartite.

    For every start vertex a BFS level labeling is computed; an edge joining
    two vertices on the same level closes an odd walk of length 2*level + 1,
    and the minimum of those over all starts is attained by a shortest odd
    cycle.
    """
    best = INFINITE
    for s in range(g.n):
        dist = [-1] * g.n
        dist[s] = 0
        queue = [s]
        head = 0
        while head < len(queue):
            x = queue[head]
            head += 1
            for y in g.adjacency[x]:
                if dist[y] == -1:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        for u, v in g.edges:
            if dist[u] != -1 and dist[u] == dist[v]:
                cand = dist[u] + dist[v] + 1
                if cand < best:
                    best = cand
    return best


# ---------------------------------------------------------------------------
# graph6 and DOT


def from_graph6(text: str) -> Graph:
    """Decode a graph6 line (short form, n <= 62).

    The format is one length byte (n + 63) followed by the upper triangle of
    the adjacency matrix, column by column, packed into 6-bit groups, each
    group + 63.  Any nonzero padding bit is an error.
    """
    s = text.strip()
    if not s:
        raise Graph6Error("empty graph6 string")
    first = ord(s[0])
    if first == 126:
        raise Graph6Error(
            "offset 0: long-form graph6 (n > 62) is not supported"
        )
    if not 63 <= first <= 125:
        raise Graph6Error(f"offset 0: invalid length byte {s[0]!r}")
    n = first - 63
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = s[1:]
    if len(body) != nchars:
        raise Graph6Error(
            f"expected {nchars} content characters for n={n}, got {len(body)}"
        )
    bits: list[int] = []
    for i, ch in enumerate(body):
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise Graph6Error(f"offset {i + 1}: character {ch!r} out of range")
        for shift in range(5, -1, -1):
            bits.append((val >> shift) & 1)
    if any(bits[nbits:]):
        bad = nbits // 6
        raise Graph6Error(
            f"offset {bad + 1}: nonzero padding bits after the {nbits} data bits"
        )
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                edges.append((u, v))
            k += 1
    return graph(n, edges)


def to_graph6(g: Graph) -> str:
    """Encode as a graph6 line (short form); n must be at most 62."""
    if g.n > 62:
        raise Graph6Error(f"n={g.n} exceeds the short-form graph6 limit of 62")
    out = [chr(g.n + 63)]
    acc = 0
    nb = 0
    for v in range(1, g.n):
        for u in range(v):
            acc = (acc << 1) | (1 if g.has_edge(u, v) else 0)
            nb += 1
            if nb == 6:
                out.append(chr(acc + 63))
                acc, nb = 0, 0
    if nb:
        out.append(chr((acc << (6 - nb)) + 63))
    return "".join(out)


def to_dot(g: Graph) -> str:
    """Attribute-free DOT text for quick visualization."""
    lines = ["graph G {"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
