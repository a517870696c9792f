import random
from itertools import combinations

import pytest

from mdlab.coloring import (
    EdgeColoring,
    coloring_from_json,
    coloring_to_json,
    is_md_coloring,
    matching_cut_coloring,
    merge_to_k,
    normalize,
    trivial_coloring,
)
from mdlab.graph import components, delete_edges, graph, is_connected


def k(n):
    return graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(n):
    return graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_coloring(n, colors_in_cycle_order):
    """Map colors given around the cycle onto the canonical edge order."""
    g = cycle(n)
    by_edge = {}
    for i in range(n):
        e = tuple(sorted((i, (i + 1) % n)))
        by_edge[e] = colors_in_cycle_order[i]
    return EdgeColoring(g, tuple(by_edge[e] for e in g.edges))


def random_connected(n, p, rng):
    while True:
        g = graph(
            n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        )
        if is_connected(g):
            return g


class TestVerifier:
    def test_trivial_coloring_always_passes(self):
        rng = random.Random(3)
        for _ in range(20):
            g = random_connected(rng.randrange(1, 8), 0.5, rng)
            ok, cert = is_md_coloring(g, trivial_coloring(g))
            assert ok
            assert cert.separated_all

    def test_c4_alternating(self):
        ok, cert = is_md_coloring(cycle(4), cycle_coloring(4, [1, 2, 1, 2]))
        assert ok
        # Opposite corners are separated by removing either class.
        assert cert.witness[(0, 2)] == 1

    def test_c4_single_odd_edge_fails(self):
        # Removing class 1 leaves the color-2 edge joining its endpoints;
        # removing class 2 leaves the path through the rest of the cycle.
        ok, cert = is_md_coloring(cycle(4), cycle_coloring(4, [1, 1, 1, 2]))
        assert not ok
        assert cert.unseparated_pairs() == [(0, 3)]

    def test_certificate_witnesses_recompute(self):
        rng = random.Random(8)
        for _ in range(20):
            g = random_connected(rng.randrange(2, 7), 0.6, rng)
            colors = tuple(rng.randrange(1, 4) for _ in range(g.m))
            ok, cert = is_md_coloring(g, EdgeColoring(g, colors))
            for (u, v), w in cert.witness.items():
                if w is None:
                    continue
                keep = [e for e, c in zip(g.edges, colors) if c != w]
                h = graph(g.n, keep)
                comp_of = {}
                for ci, comp in enumerate(components(h)):
                    for x in comp:
                        comp_of[x] = ci
                assert comp_of[u] != comp_of[v]

    def test_graph_mismatch_rejected(self):
        c = trivial_coloring(cycle(4))
        with pytest.raises(ValueError, match="different graph"):
            is_md_coloring(cycle(5), c)

    def test_single_vertex_vacuous(self):
        g = graph(1, [])
        ok, cert = is_md_coloring(g, trivial_coloring(g))
        assert ok and cert.witness == {}


class TestC4Classification:
    def test_only_trivial_and_alternating_pass(self):
        # All 15 set partitions of the 4 cycle edges, exhaustively.
        g = cycle(4)
        cyc_edges = [(0, 1), (1, 2), (2, 3), (0, 3)]
        passing = []

        def rgs(m):  # restricted growth strings over m items
            a = [0] * m
            while True:
                yield list(a)
                j = m - 1
                while j > 0 and a[j] == max(a[:j]) + 1:
                    j -= 1
                if j == 0:
                    return
                a[j] += 1
                for t in range(j + 1, m):
                    a[t] = 0

        for a in rgs(4):
            by_edge = {e: a[i] + 1 for i, e in enumerate(cyc_edges)}
            col = EdgeColoring(g, tuple(by_edge[e] for e in g.edges))
            ok, _ = is_md_coloring(g, col)
            if ok:
                passing.append(a)
        # Trivial: [0,0,0,0]; alternating: opposite cycle edges paired.
        assert passing == [[0, 0, 0, 0], [0, 1, 0, 1]]

    def test_opposite_edges_same_color_in_any_passing_coloring(self):
        g = cycle(4)
        for a, b, c, d in [(1, 2, 1, 2), (1, 1, 1, 1)]:
            col = cycle_coloring(4, [a, b, c, d])
            ok, _ = is_md_coloring(g, col)
            assert ok
            assert col.color_of((0, 1)) == col.color_of((2, 3))


class TestMatchingCutColoring:
    def test_c6_opposite_edges(self):
        col = matching_cut_coloring(cycle(6), [(0, 1), (3, 4)])
        assert col.k == 2
        ok, _ = is_md_coloring(cycle(6), col)
        assert ok

    def test_tree_bridge(self):
        g = path(4)
        col = matching_cut_coloring(g, [(1, 2)])
        ok, _ = is_md_coloring(g, col)
        assert ok

    def test_k4_has_no_matching_cut(self):
        with pytest.raises(ValueError, match="not a matching cut"):
            matching_cut_coloring(k(4), [(0, 1)])

    def test_always_md_on_random_graphs(self):
        from mdlab.analysis import find_matching_cuts

        rng = random.Random(21)
        for _ in range(25):
            g = random_connected(rng.randrange(3, 8), rng.uniform(0.3, 0.8), rng)
            for cut in find_matching_cuts(g)[:5]:
                col = matching_cut_coloring(g, cut)
                ok, _ = is_md_coloring(g, col)
                assert ok


class TestMergeAndNormalize:
    def test_normalize_examples(self):
        g = path(4)
        assert normalize(EdgeColoring(g, (5, 5, 9))).colors == (1, 1, 2)
        assert normalize(EdgeColoring(g, (1, 2, 3))).colors == (1, 2, 3)
        g2 = cycle(4)
        assert normalize(EdgeColoring(g2, (2, 1, 2, 1))).colors == (1, 2, 1, 2)

    def test_normalize_idempotent(self):
        rng = random.Random(13)
        for _ in range(30):
            g = random_connected(rng.randrange(2, 7), 0.6, rng)
            c = EdgeColoring(g, tuple(rng.randrange(1, 6) for _ in range(g.m)))
            once = normalize(c)
            assert normalize(once) == once
            assert set(once.colors) == set(range(1, once.k + 1))

    def test_merge_keeps_count_when_r_is_k(self):
        g = cycle(6)
        c = normalize(EdgeColoring(g, (1, 2, 3, 1, 2, 3)))
        assert merge_to_k(c, c.k) == c

    def test_merge_to_one_is_trivial(self):
        g = cycle(6)
        c = EdgeColoring(g, (1, 2, 3, 1, 2, 3))
        assert merge_to_k(c, 1) == trivial_coloring(g)

    def test_merge_extremal_c6(self):
        # A 3-class coloring of C_6 pairing opposite edges separates all
        # pairs; merging down to 2 colors must keep that property.
        g = cycle(6)
        col = cycle_coloring(6, [1, 2, 3, 1, 2, 3])
        ok, _ = is_md_coloring(g, col)
        assert ok
        merged = merge_to_k(col, 2)
        assert merged.k == 2
        ok2, _ = is_md_coloring(g, merged)
        assert ok2

    def test_merge_preserves_property_randomized(self):
        rng = random.Random(34)
        checked = 0
        for _ in range(120):
            g = random_connected(rng.randrange(3, 7), 0.55, rng)
            c = EdgeColoring(g, tuple(rng.randrange(1, 5) for _ in range(g.m)))
            ok, _ = is_md_coloring(g, c)
            if not ok:
                continue
            checked += 1
            for r in range(1, normalize(c).k + 1):
                merged = merge_to_k(c, r)
                assert merged.k == r
                ok2, _ = is_md_coloring(g, merged)
                assert ok2
        assert checked >= 10

    def test_merge_domain(self):
        c = trivial_coloring(cycle(4))
        with pytest.raises(ValueError):
            merge_to_k(c, 2)


class TestRestriction:
    def test_restriction_to_connected_subgraph_stays_valid(self):
        # Restricting a passing coloring to a connected subgraph keeps the
        # separation property on that subgraph.
        rng = random.Random(55)
        checked = 0
        for _ in range(150):
            g = random_connected(rng.randrange(3, 7), 0.6, rng)
            c = EdgeColoring(g, tuple(rng.randrange(1, 4) for _ in range(g.m)))
            ok, _ = is_md_coloring(g, c)
            if not ok:
                continue
            for _ in range(4):
                keep_vertices = sorted(
                    rng.sample(range(g.n), rng.randrange(2, g.n + 1))
                )
                vmap = {v: i for i, v in enumerate(keep_vertices)}
                sub_edges = [
                    (vmap[u], vmap[v])
                    for u, v in g.edges
                    if u in vmap and v in vmap
                ]
                sub = graph(len(keep_vertices), sub_edges)
                if not is_connected(sub) or sub.n < 2:
                    continue
                inv = {i: v for v, i in vmap.items()}
                sub_col = EdgeColoring(
                    sub,
                    tuple(
                        c.color_of((inv[u], inv[v])) for u, v in sub.edges
                    ),
                )
                ok_sub, _ = is_md_coloring(sub, sub_col)
                assert ok_sub
                checked += 1
        assert checked >= 20


class TestJson:
    def test_round_trip(self):
        g = cycle(5)
        c = EdgeColoring(g, (1, 2, 1, 2, 1))
        assert coloring_from_json(coloring_to_json(c)) == c

    def test_malformed(self):
        with pytest.raises(ValueError):
            coloring_from_json('{"graph6": "Bw"}')

    def test_color_count_mismatch(self):
        with pytest.raises(ValueError):
            coloring_from_json('{"graph6": "Bw", "colors": [1, 2]}')
