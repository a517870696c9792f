"""Structural analyses feeding the md bounds: blocks, edge-equivalence classes,
matching cuts, and degree-two layer reductions.

The edge relation at the heart of this module links two edges when a chain of
triangles and K_{2,3} subgraphs, consecutive ones sharing an edge, connects
them.  Every class of that relation is monochromatic under any edge coloring
in which all vertex pairs can be separated by removing one color class, so a
graph whose whole edge set forms a single gadget-covered class only admits the
one-color such coloring.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from mdlab.graph import Graph, VertexMap, delete_vertex, graph, is_connected


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (maximal 2-connected subgraphs and bridges) with cut vertices.

    Attributes:
        blocks: vertex set of each block, sorted; blocks ordered by smallest
            contained vertex (then lexicographically).
        cut_vertices: sorted tuple of cut vertices.
        block_graphs: for each block, the induced Graph and the old -> local
            vertex relabeling.
    """

    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: tuple[int, ...]
    block_graphs: tuple[tuple[Graph, VertexMap], ...]

    @property
    def block_edge_sets(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Edges of the original graph belonging to each block."""
        out = []
        for g_block, vmap in self.block_graphs:
            inv = {new: old for old, new in vmap.items()}
            out.append(
                tuple(
                    sorted(
                        tuple(sorted((inv[a], inv[b]))) for a, b in g_block.edges
                    )
                )
            )
        return tuple(out)


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Hopcroft-Tarjan biconnected components of a connected graph.

    Every edge lands in exactly one block; K_1 has no blocks.
    """
    if not is_connected(g):
        raise ValueError("block decomposition requires a connected graph")
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent_edge = [-1] * n
    edge_stack: list[tuple[int, int]] = []
    block_edge_lists: list[list[tuple[int, int]]] = []
    cut: set[int] = set()
    timer = 0

    for root in range(n):
        if disc[root] != -1:
            continue
        # Iterative DFS; each frame is (vertex, neighbor iterator index).
        stack = [(root, 0)]
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        while stack:
            v, i = stack[-1]
            nbrs = g.adjacency[v]
            if i < len(nbrs):
                stack[-1] = (v, i + 1)
                w = nbrs[i]
                if disc[w] == -1:
                    edge_stack.append((min(v, w), max(v, w)))
                    parent_edge[w] = v
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, 0))
                    if v == root:
                        root_children += 1
                elif w != parent_edge[v] and disc[w] < disc[v]:
                    edge_stack.append((min(v, w), max(v, w)))
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] >= disc[u]:
                        # u closes a block containing the tree edge (u, v).
                        blk: list[tuple[int, int]] = []
                        marker = (min(u, v), max(u, v))
                        while True:
                            e = edge_stack.pop()
                            blk.append(e)
                            if e == marker:
                                break
                        block_edge_lists.append(blk)
                        if u != root or root_children > 1:
                            cut.add(u)
        # A lone root with leftover edges should be impossible; the loop above
        # pops every block at its articulation frame.
        assert not edge_stack

    records = []
    for blk in block_edge_lists:
        verts = tuple(sorted({x for e in blk for x in e}))
        vmap: VertexMap = {v: i for i, v in enumerate(verts)}
        sub = graph(len(verts), [(vmap[a], vmap[b]) for a, b in blk])
        records.append((verts, sub, vmap))
    records.sort(key=lambda r: r[0])
    return BlockDecomposition(
        blocks=tuple(r[0] for r in records),
        cut_vertices=tuple(sorted(cut)),
        block_graphs=tuple((r[1], r[2]) for r in records),
    )


def cut_vertices(g: Graph) -> tuple[int, ...]:
    return block_decomposition(g).cut_vertices


def is_two_connected(g: Graph) -> bool:
    """Connected, at least 3 vertices, and no cut vertex."""
    return g.n >= 3 and is_connected(g) and not block_decomposition(g).cut_vertices


# ---------------------------------------------------------------------------
# Gadget equivalence classes


@dataclass(frozen=True)
class ThetaPartition:
    """Partition of the edge set into gadget-chain equivalence classes.

    classes holds edge tuples, each class sorted, classes ordered by first
    edge.  gadget_count is diagnostic: triangles plus vertex pairs with three
    or more common neighbors (each such pair witnesses a K_{2,3} bundle).
    """

    classes: tuple[tuple[tuple[int, int], ...], ...]
    gadget_count: int


class _EdgeUnion:
    def __init__(self, g: Graph):
        self.g = g
        self.parent = list(range(g.m))
        self.covered = [False] * g.m

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union_edges(self, edges: list[tuple[int, int]]) -> None:
        idx = self.g.edge_index
        first = idx[edges[0]]
        self.covered[first] = True
        r0 = self.find(first)
        for e in edges[1:]:
            i = idx[e]
            self.covered[i] = True
            r = self.find(i)
            if r != r0:
                self.parent[r] = r0

    def classes(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for i in range(self.g.m):
            groups.setdefault(self.find(i), []).append(i)
        return sorted(groups.values())


def _gadget_union(g: Graph) -> tuple[_EdgeUnion, int]:
    """Union triangle edges and K_{2,3} bundles; report the gadget count."""
    uf = _EdgeUnion(g)
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    triangles = 0
    for u, v in g.edges:
        common = masks[u] & masks[v]
        w = common
        while w:
            wb = w & -w
            x = wb.bit_length() - 1
            w ^= wb
            if x > v:
                triangles += 1
            uf.union_edges(
                [
                    (u, v),
                    (min(u, x), max(u, x)),
                    (min(v, x), max(v, x)),
                ]
            )
    k23_pairs = 0
    for u in range(g.n):
        for v in range(u + 1, g.n):
            common = masks[u] & masks[v]
            if common.bit_count() < 3:
                continue
            k23_pairs += 1
            # All K_{2,3} copies on (u, v) chain through shared 3-subsets, so
            # unioning the whole double star gives the same classes.
            bundle = []
            w = common
            while w:
                wb = w & -w
                x = wb.bit_length() - 1
                w ^= wb
                bundle.append((min(u, x), max(u, x)))
                bundle.append((min(v, x), max(v, x)))
            uf.union_edges(bundle)
    return uf, triangles + k23_pairs


def theta_classes(g: Graph) -> ThetaPartition:
    """Edge classes under chains of triangle / K_{2,3} gadgets sharing edges."""
    uf, gadgets = _gadget_union(g)
    classes = tuple(
        tuple(g.edges[i] for i in cls) for cls in uf.classes()
    )
    return ThetaPartition(classes=classes, gadget_count=gadgets)


def is_closure(g: Graph) -> bool:
    """True when the edge set is one class and every edge sits in a gadget.

    A single-edge graph is not a closure: its edge lies in no triangle or
    K_{2,3}, so nothing links it to itself.
    """
    if g.m < 1:
        return False
    uf, _ = _gadget_union(g)
    if not all(uf.covered):
        return False
    root = uf.find(0)
    return all(uf.find(i) == root for i in range(1, g.m))


# ---------------------------------------------------------------------------
# Matching cuts


def find_matching_cuts(
    g: Graph, minimal_only: bool = False, max_n: int = 16
) -> list[tuple[tuple[int, int], ...]]:
    """All matching cuts (edge cuts that are matchings), deduplicated.

    Enumerates vertex bipartitions; with minimal_only the search is restricted
    to bipartitions with both sides connected, which yields exactly the
    matching bonds, i.e. the minimal matching cuts.  Results are sorted by
    size then lexicographically.
    """
    if not is_connected(g):
        raise ValueError("matching cuts are defined for connected graphs")
    if g.n > max_n:
        raise ValueError(
            f"refusing matching-cut enumeration for n={g.n} > cap {max_n}"
        )
    if g.n < 2:
        return []
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    full = (1 << g.n) - 1

    def side_connected(side_mask: int) -> bool:
        start = side_mask & -side_mask
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= masks[b.bit_length() - 1]
            frontier = nxt & side_mask & ~seen
            seen |= frontier
        return seen == side_mask

    found: set[tuple[tuple[int, int], ...]] = set()
    # Vertex 0 always on the S side; complements give the same cut.
    for t in range(1 << (g.n - 1)):
        s_mask = (t << 1) | 1
        if s_mask == full:
            continue
        cross = []
        endpoints = 0
        ok = True
        for u, v in g.edges:
            if ((s_mask >> u) & 1) != ((s_mask >> v) & 1):
                pair = (1 << u) | (1 << v)
                if endpoints & pair:
                    ok = False
                    break
                endpoints |= pair
                cross.append((u, v))
        if not ok or not cross:
            continue
        if minimal_only and not (
            side_connected(s_mask) and side_connected(full & ~s_mask)
        ):
            continue
        found.add(tuple(sorted(cross)))
    return sorted(found, key=lambda cut: (len(cut), cut))


def has_matching_cut(g: Graph, max_n: int = 16) -> bool:
    return bool(find_matching_cuts(g, minimal_only=True, max_n=max_n))


# ---------------------------------------------------------------------------
# Degree-two layer reduction


def soft_layer_reduce(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Greedily strip vertices of current degree >= 2 that are not cut vertices.

    Every removal keeps the graph connected, so each prefix of the returned
    sequence is a valid layer.  Always removes the smallest eligible id; the
    sequence reports original ids.
    """
    if not is_connected(g):
        raise ValueError("layer reduction requires a connected graph")
    current = g
    to_orig = list(range(g.n))
    removed: list[int] = []
    while current.n > 1:
        cuts = set(block_decomposition(current).cut_vertices)
        victim = -1
        for v in range(current.n):
            if current.degree(v) >= 2 and v not in cuts:
                victim = v
                break
        if victim == -1:
            break
        removed.append(to_orig[victim])
        del to_orig[victim]
        current, _ = delete_vertex(current, victim)
    return current, tuple(removed)


# ---------------------------------------------------------------------------
# Block-count edge bound


def max_edges_with_r_blocks(n: int, r: int) -> int:
    """Largest edge count of a connected n-vertex graph with exactly r blocks.

    Attained by one clique block on n-r+1 vertices plus r-1 bridges.
    """
    if n < 2 or not 1 <= r <= n - 1:
        raise ValueError(f"need n >= 2 and 1 <= r <= n-1, got n={n}, r={r}")
    return math.comb(n - r + 1, 2) + r - 1
