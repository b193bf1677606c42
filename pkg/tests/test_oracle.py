from fractions import Fraction

import pytest

from kirchhoff.graphs import (
    DisconnectedGraphError,
    Graph,
    PartitionSpec,
    complete_graph,
    complete_multipartite,
    disjoint_union,
)
from kirchhoff.linalg import det, laplacian
from kirchhoff.oracle import (
    degree_kirchhoff_index,
    invariant_report,
    kirchhoff_index,
    normalized_inverse_trace,
    resistance_matrix,
    spanning_tree_count,
)

from conftest import random_connected_graph


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


class TestResistanceMatrix:
    def test_path_series_resistors(self):
        m = resistance_matrix(path_graph(3))
        assert m[0, 2] == 2
        assert m[0, 1] == 1 and m[1, 2] == 1

    def test_cycle_parallel_resistors(self):
        m = resistance_matrix(cycle_graph(4))
        assert m[0, 2] == 1
        assert m[0, 1] == Fraction(3, 4)

    def test_k234_matches_closed_form(self):
        from kirchhoff.closed_forms import resistance_matrix_closed

        spec = PartitionSpec((2, 3, 4))
        assert resistance_matrix(complete_multipartite(spec)) == resistance_matrix_closed(spec)

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            resistance_matrix(disjoint_union(complete_graph(2), complete_graph(3)))

    def test_metric_properties_random(self, rng):
        for _ in range(8):
            g = random_connected_graph(rng, rng.randint(3, 8))
            m = resistance_matrix(g)
            assert m == m.transpose()
            for i in range(g.n):
                assert m[i, i] == 0
                for j in range(g.n):
                    if i != j:
                        assert m[i, j] > 0
            for u in range(g.n):
                for v in range(g.n):
                    for w in range(g.n):
                        assert m[u, w] <= m[u, v] + m[v, w]


class TestKirchhoffIndex:
    def test_complete_graphs(self):
        for n in range(2, 8):
            assert kirchhoff_index(complete_graph(n)) == n - 1

    def test_k126(self):
        g = complete_multipartite(PartitionSpec((1, 2, 6)))
        assert kirchhoff_index(g) == Fraction(128, 7)

    def test_star_graph(self):
        # star = K_{4,1}: Kf = -1 + 4(4/1 + 1/4)
        g = complete_multipartite(PartitionSpec((4, 1)))
        assert kirchhoff_index(g) == 16

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            kirchhoff_index(Graph(3, [(0, 1)]))


class TestDegreeKirchhoffIndex:
    def test_k2(self):
        assert degree_kirchhoff_index(complete_graph(2)) == 1

    def test_cocktail_party_r3(self):
        g = complete_multipartite(PartitionSpec((2, 2, 2)))
        assert degree_kirchhoff_index(g) == 4 * (2 * 27 - 4 * 9 + 3 * 3 - 1) == 104

    def test_k234_definitional_value(self):
        g = complete_multipartite(PartitionSpec((2, 3, 4)))
        assert degree_kirchhoff_index(g) == 382


class TestNormalizedInverseTrace:
    def test_k2(self):
        g = complete_graph(2)
        assert normalized_inverse_trace(g) == Fraction(1, 2)
        assert 2 * g.edge_count() * normalized_inverse_trace(g) == 1

    def test_trace_identity_k234(self):
        g = complete_multipartite(PartitionSpec((2, 3, 4)))
        assert 2 * g.edge_count() * normalized_inverse_trace(g) == degree_kirchhoff_index(g)

    def test_trace_identity_random(self, rng):
        for _ in range(20):
            g = random_connected_graph(rng, rng.randint(2, 10))
            lhs = 2 * g.edge_count() * normalized_inverse_trace(g)
            assert lhs == degree_kirchhoff_index(g)

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            normalized_inverse_trace(disjoint_union(complete_graph(2), complete_graph(2)))


class TestSpanningTreeCount:
    def test_trees_have_one(self):
        for n in range(1, 8):
            assert spanning_tree_count(path_graph(n) if n > 1 else Graph(1)) == 1

    def test_c5(self):
        assert spanning_tree_count(cycle_graph(5)) == 5

    def test_k234(self):
        assert spanning_tree_count(complete_multipartite(PartitionSpec((2, 3, 4)))) == 283500

    def test_disconnected_returns_zero(self):
        assert spanning_tree_count(disjoint_union(complete_graph(2), complete_graph(3))) == 0

    def test_independent_of_deleted_vertex(self, rng):
        for _ in range(8):
            g = random_connected_graph(rng, rng.randint(2, 8))
            lap = laplacian(g)
            counts = {det(lap.delete({v}, {v})) for v in range(g.n)}
            assert len(counts) == 1


class TestInvariantReport:
    def test_bundle_consistency(self):
        g = complete_multipartite(PartitionSpec((2, 3)))
        report = invariant_report(g)
        assert report.source == "oracle"
        total = sum(x for row in report.resistance.data for x in row)
        assert report.kf == total / 2
        assert report.dkf == 2 * g.edge_count() * report.normalized_inverse_trace
        assert report.spanning_trees == spanning_tree_count(g)
