"""Clique moves, block completion, and edge deletion."""

import itertools

import pytest

from blockspectra import (
    GraphError,
    are_isomorphic,
    block_decomposition,
    clique_path,
    complement_distance_matrix,
    complete_blocks,
    complete_graph,
    delete_block_edges,
    diameter,
    end_cliques,
    from_edge_list,
    is_clique_tree,
    move_clique,
    path_graph,
    random_clique_tree,
    realize,
    CliqueTreeSpec,
)
from blockspectra.transforms import __all__ as transforms_all


def cycle_graph(n):
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def block_sizes(g):
    return sorted(len(b) for b in block_decomposition(g).blocks)


class TestEndCliques:
    def test_path(self):
        out = end_cliques(path_graph(5))
        assert sorted((sorted(k), v) for k, v in out) == [([0, 1], 1), ([3, 4], 3)]

    def test_single_block(self):
        assert end_cliques(complete_graph(4)) == []

    def test_star(self):
        out = end_cliques(from_edge_list(4, [(0, 1), (0, 2), (0, 3)]))
        assert len(out) == 3
        assert all(v == 0 for _, v in out)


class TestMoveClique:
    def test_path_golden(self):
        g = path_graph(5)
        h = move_clique(g, {3, 4}, 3, 1)
        assert set(h.edges) == {(0, 1), (1, 2), (2, 3), (1, 4)}

    def test_identity_when_w_equals_v(self):
        g = path_graph(5)
        assert move_clique(g, {3, 4}, 3, 3).edges == g.edges

    def test_bowtie_with_pendant_becomes_single_cut(self):
        g = from_edge_list(6, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (0, 5)])
        assert sorted(block_decomposition(g).cut_vertices) == [0, 2]
        h = move_clique(g, {2, 3, 4}, 2, 0)
        d = block_decomposition(h)
        assert sorted(d.cut_vertices) == [0]
        assert block_sizes(h) == [2, 3, 3]

    def test_preserves_block_multiset_and_clique_tree(self):
        moves = 0
        for seed in range(60):
            g = random_clique_tree(4 + seed % 6, 2 + seed % 3, seed)
            d = block_decomposition(g)
            if len(d.cut_vertices) < 2:
                continue
            for K, v in end_cliques(g, d):
                for w in sorted(d.cut_vertices):
                    if w in K and w != v:
                        continue
                    h = move_clique(g, K, v, w)
                    assert h.n == g.n
                    assert is_clique_tree(h)
                    assert block_sizes(h) == block_sizes(g)
                    moves += 1
        assert moves > 50

    def test_rejections(self):
        g = path_graph(5)
        with pytest.raises(GraphError):
            move_clique(g, {0, 2}, 0, 1)  # not a block
        with pytest.raises(GraphError):
            move_clique(g, {1, 2}, 1, 3)  # interior block, two cut vertices
        with pytest.raises(GraphError):
            move_clique(g, {0, 1}, 0, 3)  # v is not the end cut vertex
        with pytest.raises(GraphError):
            move_clique(g, {0, 1}, 1, 4)  # w is not a cut vertex
        with pytest.raises(GraphError):
            move_clique(cycle_graph(4), {0, 1}, 0, 2)  # not a clique tree


class TestCompleteBlocks:
    def test_cycle_fills_to_clique(self):
        assert complete_blocks(cycle_graph(5)).edges == complete_graph(5).edges

    def test_clique_trees_are_fixed_points(self):
        for seed in range(40):
            n = 4 + seed % 5
            g = random_clique_tree(n, min(1 + seed % 4, n - 1), seed)
            assert complete_blocks(g).edges == g.edges

    def test_two_c4_sharing_a_vertex(self):
        g = from_edge_list(
            7,
            [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)],
        )
        cb = complete_blocks(g)
        target = realize(CliqueTreeSpec(2, (4, 4), ((0, 0),)))
        assert are_isomorphic(cb, target)
        from blockspectra import spectral_radius

        lhs = spectral_radius(g, "complement_adjacency").value
        rhs = spectral_radius(cb, "complement_adjacency").value
        assert lhs >= rhs - 1e-10
        # diameter collapses to 2 here, so the complement-distance route
        # is undefined for the completed graph
        assert diameter(cb) == 2
        with pytest.raises(GraphError):
            complement_distance_matrix(cb)

    def test_idempotent_and_monotone(self):
        for seed in range(30):
            import random

            rng = random.Random(seed)
            n = rng.randint(2, 8)
            while True:
                edges = [
                    (u, v)
                    for u in range(n)
                    for v in range(u + 1, n)
                    if rng.random() < 0.45
                ]
                g = from_edge_list(n, edges)
                from blockspectra import is_connected

                if is_connected(g):
                    break
            cb = complete_blocks(g)
            assert is_clique_tree(cb)
            assert set(g.edges) <= set(cb.edges)
            assert complete_blocks(cb).edges == cb.edges
            da, db = block_decomposition(g), block_decomposition(cb)
            assert sorted(map(sorted, da.blocks)) == sorted(map(sorted, db.blocks))
            assert da.cut_vertices == db.cut_vertices

    def test_rejects_disconnected(self):
        with pytest.raises(GraphError):
            complete_blocks(from_edge_list(4, [(0, 1), (2, 3)]))


class TestDeleteBlockEdges:
    def test_k4_minus_edge(self):
        h = delete_block_edges(complete_graph(4), [(0, 1)])
        assert len(h.edges) == 5 and not h.has_edge(0, 1)

    def test_c4_minus_edge_stretches_diameter(self):
        g = cycle_graph(4)
        assert diameter(g) == 2
        h = delete_block_edges(g, [(0, 1)])
        assert are_isomorphic(h, path_graph(4))
        assert diameter(h) == 3

    def test_multiple_edges(self):
        h = delete_block_edges(complete_graph(5), [(0, 1), (2, 3)])
        assert len(h.edges) == 8

    def test_bridge_rejected(self):
        with pytest.raises(GraphError):
            delete_block_edges(path_graph(4), [(1, 2)])

    def test_duplicate_rejected(self):
        with pytest.raises(GraphError):
            delete_block_edges(complete_graph(4), [(0, 1), (1, 0)])

    def test_missing_edge_rejected(self):
        with pytest.raises(GraphError):
            delete_block_edges(cycle_graph(4), [(0, 2)])
        with pytest.raises(GraphError):
            delete_block_edges(cycle_graph(4), [(0, 9)])


def test_public_surface():
    assert set(transforms_all) == {
        "end_cliques",
        "move_clique",
        "complete_blocks",
        "delete_block_edges",
    }
