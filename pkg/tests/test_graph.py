import math
import random

import pytest

from mdlab.graph import (
    Graph,
    Graph6Error,
    INFINITE,
    common_neighbors,
    components,
    contract_edge_set,
    delete_edges,
    delete_vertex,
    from_graph6,
    graph,
    is_bipartite,
    is_connected,
    min_degree,
    odd_girth,
    split_off,
    subdivide_edge,
    to_dot,
    to_graph6,
)


def k(n):
    return graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(n):
    return graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return graph(n, [(i, i + 1) for i in range(n - 1)])


def random_graph(n, p, rng):
    return graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return graph(10, outer + spokes + inner)


class TestCanonicalForm:
    def test_reversed_and_duplicate_pairs_collapse(self):
        g = graph(3, [(1, 0), (0, 1), (2, 1)])
        assert g.edges == ((0, 1), (1, 2))

    def test_loop_rejected(self):
        with pytest.raises(ValueError):
            graph(2, [(1, 1)])

    def test_out_of_range_edge_rejected(self):
        with pytest.raises(ValueError):
            Graph(2, ((0, 2),))

    def test_unsorted_edges_rejected(self):
        with pytest.raises(ValueError):
            Graph(3, ((1, 2), (0, 1)))

    def test_equality_is_structural(self):
        assert graph(3, [(0, 1), (1, 2)]) == graph(3, [(1, 2), (0, 1)])
        assert graph(3, [(0, 1)]) != graph(4, [(0, 1)])

    def test_adjacency_matches_edges(self):
        g = graph(4, [(0, 1), (1, 2), (1, 3)])
        assert g.adjacency == ((1,), (0, 2, 3), (1,), (1,))
        assert g.degree(1) == 3
        assert g.neighbors(3) == (1,)


class TestGraph6:
    # Hand-decoded per the bit layout: length byte n+63, then the upper
    # triangle column by column in 6-bit groups.
    def test_decode_k3(self):
        assert from_graph6("Bw") == k(3)

    def test_decode_path3(self):
        assert from_graph6("Bg") == graph(3, [(0, 1), (1, 2)])

    def test_decode_single_vertex(self):
        assert from_graph6("@") == graph(1, [])

    def test_encode_k3(self):
        assert to_graph6(k(3)) == "Bw"

    def test_encode_single_vertex(self):
        assert to_graph6(graph(1, [])) == "@"

    def test_c4_round_trip(self):
        c4 = graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        assert from_graph6(to_graph6(c4)) == c4

    def test_round_trip_random(self):
        rng = random.Random(1729)
        for _ in range(200):
            n = rng.randrange(0, 15)
            g = random_graph(n, rng.random(), rng)
            assert from_graph6(to_graph6(g)) == g

    def test_round_trip_boundary_size(self):
        g = cycle(62)
        assert from_graph6(to_graph6(g)) == g

    def test_encode_rejects_large(self):
        with pytest.raises(Graph6Error):
            to_graph6(graph(63, []))

    def test_decode_rejects_long_form(self):
        with pytest.raises(Graph6Error, match="offset 0"):
            from_graph6("~??")

    def test_decode_rejects_bad_length_byte(self):
        with pytest.raises(Graph6Error, match="offset 0"):
            from_graph6("!")

    def test_decode_rejects_truncation(self):
        with pytest.raises(Graph6Error, match="content characters"):
            from_graph6("D")  # n=5 needs 2 content chars

    def test_decode_rejects_out_of_range_char(self):
        with pytest.raises(Graph6Error, match="offset 2"):
            from_graph6("Dw" + "\x05")

    def test_decode_rejects_nonzero_padding(self):
        # n=3 uses 3 of 6 bits; 'w' + 1 sets a padding bit.
        bad = "B" + chr(ord("w") + 1)
        with pytest.raises(Graph6Error, match="padding"):
            from_graph6(bad)


class TestConnectivity:
    def test_k3_connected(self):
        assert is_connected(k(3))

    def test_two_disjoint_edges(self):
        g = graph(4, [(0, 1), (2, 3)])
        assert not is_connected(g)
        assert components(g) == [[0, 1], [2, 3]]

    def test_c5_minus_edge_connected(self):
        g = delete_edges(cycle(5), [(0, 1)])
        assert is_connected(g)

    def test_empty_graph_connected_by_convention(self):
        assert is_connected(graph(0, []))


class TestTransforms:
    def test_delete_vertex_k4(self):
        g, vmap = delete_vertex(k(4), 3)
        assert g == k(3)
        assert vmap == {0: 0, 1: 1, 2: 2}

    def test_delete_vertex_relabels_order_preservingly(self):
        g, vmap = delete_vertex(path(4), 1)
        assert vmap == {0: 0, 2: 1, 3: 2}
        assert g == graph(3, [(1, 2)])

    def test_delete_star_center(self):
        g, _ = delete_vertex(graph(4, [(0, 1), (0, 2), (0, 3)]), 0)
        assert g == graph(3, [])

    def test_delete_edges_c4(self):
        g = delete_edges(cycle(4), [(0, 1)])
        assert g == graph(4, [(0, 3), (1, 2), (2, 3)])

    def test_delete_edges_rejects_non_edge(self):
        with pytest.raises(ValueError):
            delete_edges(cycle(4), [(0, 2)])

    def test_contract_one_edge_of_k3(self):
        g, vmap = contract_edge_set(k(3), [(0, 1)])
        assert g == k(2)
        assert vmap == {0: 0, 1: 0, 2: 1}

    def test_contract_perfect_matching_of_c6(self):
        # Hand contraction: classes {0,1},{2,3},{4,5}; the other three cycle
        # edges become the triangle.
        g, _ = contract_edge_set(cycle(6), [(0, 1), (2, 3), (4, 5)])
        assert g == k(3)

    def test_contract_all_tree_edges(self):
        g, vmap = contract_edge_set(path(5), path(5).edges)
        assert g == graph(1, [])
        assert set(vmap.values()) == {0}

    def test_contract_spanning_connected_set_gives_single_vertex(self):
        rng = random.Random(7)
        for _ in range(30):
            n = rng.randrange(2, 9)
            g = random_graph(n, 0.6, rng)
            if not is_connected(g):
                continue
            contracted, _ = contract_edge_set(g, g.edges)
            assert contracted.n == len(components(g))

    def test_subdivide_k3_edge(self):
        g = subdivide_edge(k(3), (0, 1))
        assert (g.n, g.m) == (4, 4)
        assert sorted(g.degree(v) for v in range(4)) == [2, 2, 2, 2]

    def test_subdivide_c4_gives_c5(self):
        g = subdivide_edge(cycle(4), (0, 1))
        assert (g.n, g.m) == (5, 5)
        assert all(g.degree(v) == 2 for v in range(5))

    def test_subdivide_pendent_edge_of_path(self):
        g = subdivide_edge(path(4), (0, 1))
        assert (g.n, g.m) == (5, 4)
        assert sorted(g.degree(v) for v in range(5)) == [1, 1, 2, 2, 2]

    def test_subdivide_split_off_counts(self):
        rng = random.Random(11)
        for _ in range(40):
            g = random_graph(rng.randrange(3, 9), 0.5, rng)
            if not g.edges:
                continue
            e = g.edges[rng.randrange(g.m)]
            h = subdivide_edge(g, e)
            assert (h.n, h.m) == (g.n + 1, g.m + 1)
            back = split_off(h, h.n - 1)
            assert (back.n, back.m) == (g.n, g.m)
            assert back == g

    def test_split_off_path(self):
        assert split_off(path(3), 1) == k(2)

    def test_split_off_c5(self):
        assert split_off(cycle(5), 0) == cycle(4)

    def test_split_off_rejects_adjacent_neighbors(self):
        # The triangle is the smallest cycle where this fires: both neighbors
        # of any vertex are themselves adjacent.
        with pytest.raises(ValueError, match="adjacent"):
            split_off(cycle(3), 0)

    def test_split_off_rejects_wrong_degree(self):
        with pytest.raises(ValueError, match="degree"):
            split_off(k(4), 0)

    def test_split_off_c4_gives_triangle(self):
        # Neighbors 1 and 3 of vertex 0 are non-adjacent in C_4, so the
        # operation is legal and closes the remaining path into C_3.
        assert split_off(cycle(4), 0) == k(3)


class TestOddGirth:
    def test_c6_bipartite(self):
        assert is_bipartite(cycle(6))
        assert odd_girth(cycle(6)) == INFINITE

    def test_c5(self):
        assert not is_bipartite(cycle(5))
        assert odd_girth(cycle(5)) == 5

    def test_petersen_via_matrix_power_oracle(self):
        # Independent oracle: smallest odd k with a nonzero diagonal in A^k.
        g = petersen()
        n = g.n
        a = [[0] * n for _ in range(n)]
        for u, v in g.edges:
            a[u][v] = a[v][u] = 1
        power = [row[:] for row in a]

        def matmul(x, y):
            return [
                [sum(x[i][t] * y[t][j] for t in range(n)) for j in range(n)]
                for i in range(n)
            ]

        oracle = None
        kk = 1
        while kk <= n:
            if kk % 2 == 1 and any(power[i][i] for i in range(n)):
                oracle = kk
                break
            power = matmul(power, a)
            kk += 1
        assert oracle == 5
        assert odd_girth(g) == 5

    def test_odd_girth_is_odd_or_infinite(self):
        rng = random.Random(23)
        for _ in range(60):
            g = random_graph(rng.randrange(1, 9), rng.random(), rng)
            og = odd_girth(g)
            if og == INFINITE:
                assert is_bipartite(g)
            else:
                assert og % 2 == 1
                assert not is_bipartite(g)


class TestSmallQueries:
    def test_k23_common_neighbors(self):
        g = graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
        assert common_neighbors(g, 0, 1) == (2, 3, 4)

    def test_k4_pair(self):
        assert common_neighbors(k(4), 0, 1) == (2, 3)

    def test_c5_adjacent_pair(self):
        assert common_neighbors(cycle(5), 0, 1) == ()

    def test_min_degree(self):
        assert min_degree(path(4)) == 1
        assert min_degree(k(4)) == 3


def test_dot_export():
    text = to_dot(graph(3, [(0, 1)]))
    assert "0 -- 1;" in text
    assert text.startswith("graph G {")
    assert "2;" in text  # isolated vertex listed
