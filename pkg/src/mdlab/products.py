"""The four standard graph products and the Cartesian product coloring.

Vertex (u, v) of a product maps to id u * |H| + v (row-major).  The product
operation itself is definitional and total; the theorem-shaped helpers
(tensor_connected, tensor_md_upper) enforce their own preconditions.
"""

from __future__ import annotations

from enum import Enum

from mdlab.coloring import EdgeColoring, is_md_coloring, normalize
from mdlab.graph import Graph, graph, is_bipartite, is_connected, min_degree, odd_girth


class ProductKind(Enum):
    CARTESIAN = "cartesian"
    STRONG = "strong"
    LEXICOGRAPHIC = "lexicographic"
    TENSOR = "tensor"


def product(g: Graph, h: Graph, kind: ProductKind) -> Graph:
    """Product of g and h; vertex (u, v) becomes u * h.n + v."""
    if g.n < 1 or h.n < 1:
        raise ValueError("products need at least one vertex per factor")
    hn = h.n
    edges: list[tuple[int, int]] = []
    if kind in (ProductKind.CARTESIAN, ProductKind.STRONG, ProductKind.LEXICOGRAPHIC):
        for u, up in g.edges:
            for v in range(hn):
                edges.append((u * hn + v, up * hn + v))
        for v, vp in h.edges:
            for u in range(g.n):
                edges.append((u * hn + v, u * hn + vp))
    if kind in (ProductKind.STRONG, ProductKind.TENSOR):
        for u, up in g.edges:
            for v, vp in h.edges:
                edges.append((u * hn + v, up * hn + vp))
                edges.append((u * hn + vp, up * hn + v))
    if kind is ProductKind.LEXICOGRAPHIC:
        for u, up in g.edges:
            for v in range(hn):
                for vp in range(hn):
                    if v != vp:
                        edges.append((u * hn + v, up * hn + vp))
    return graph(g.n * hn, edges)


def cartesian_md_coloring(
    g: Graph, cg: EdgeColoring, h: Graph, ch: EdgeColoring
) -> EdgeColoring:
    """Color G x H by projecting every edge to its factor edge.

    Each product edge lies in exactly one fiber of a factor edge; fibers of
    G-edges inherit cg, fibers of H-edges inherit ch shifted past cg's
    palette.  With separating inputs the result separates: any path between
    vertices differing in the H coordinate walks an H-projection that must
    cross the color class separating them in H, and likewise for G.  Uses
    cg.k + ch.k colors.
    """
    ok_g, _ = is_md_coloring(g, cg)
    if not ok_g:
        raise ValueError("the first factor's coloring does not separate it")
    ok_h, _ = is_md_coloring(h, ch)
    if not ok_h:
        raise ValueError("the second factor's coloring does not separate it")
    cg = normalize(cg)
    ch = normalize(ch)
    offset = cg.k
    prod = product(g, h, ProductKind.CARTESIAN)
    hn = h.n
    colors = []
    for a, b in prod.edges:
        ua, va = divmod(a, hn)
        ub, vb = divmod(b, hn)
        if va == vb:
            colors.append(cg.color_of((ua, ub)))
        else:
            colors.append(ch.color_of((va, vb)) + offset)
    return EdgeColoring(prod, tuple(colors))


def tensor_connected(g: Graph, h: Graph) -> bool:
    """Whether the tensor product is connected: some factor is non-bipartite."""
    if not (is_connected(g) and is_connected(h)) or g.n < 2 or h.n < 2:
        raise ValueError("tensor connectivity rule needs connected factors on >= 2 vertices")
    return not (is_bipartite(g) and is_bipartite(h))


def tensor_md_upper(g: Graph, h: Graph) -> int:
    """Upper bound min(odd girth of g, odd girth of h) for md of the tensor.

    Requires connected factors without pendent edges and at least one
    non-bipartite factor (otherwise the product is disconnected and both odd
    girths are infinite).
    """
    for name, x in (("first", g), ("second", h)):
        if not is_connected(x) or x.n < 2:
            raise ValueError(f"{name} factor must be connected on >= 2 vertices")
        if min_degree(x) < 2:
            raise ValueError(f"{name} factor has a pendent edge")
    og, oh = odd_girth(g), odd_girth(h)
    if og == oh == float("inf"):
        raise ValueError("both factors are bipartite; the tensor product is disconnected")
    return int(min(og, oh))
