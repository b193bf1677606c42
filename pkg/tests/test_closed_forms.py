import random
from fractions import Fraction

import pytest

from kirchhoff.closed_forms import (
    dkf_closed,
    join_spectrum,
    kf_closed,
    kf_join,
    minor_charpoly,
    minor_det_two_vertices,
    multipartite_spectrum,
    quotient_matrix,
    resistance_closed,
    resistance_matrix_closed,
    spanning_trees,
)
from kirchhoff.graphs import (
    DisconnectedGraphError,
    PartitionSpec,
    VertexLocator,
    complete_multipartite,
)
from kirchhoff.linalg import RatMatrix, char_poly, det, laplacian, laplacian_pinv
from kirchhoff.oracle import resistance_matrix, spanning_tree_count


def minor_for_subset(spec, vertices):
    lap = laplacian(complete_multipartite(spec))
    return lap.delete(set(vertices), set(vertices))


def t_vector(spec, vertices):
    t = [0] * spec.r
    for v in vertices:
        t[spec.locate(v).part] += 1
    return t


class TestMinorCharpoly:
    def test_k234_single_vertex_at_zero(self):
        spec = PartitionSpec((2, 3, 4))
        factored = minor_charpoly(spec, (1, 0, 0))
        assert factored.expanded(0) == 283500
        assert factored.expanded == char_poly(minor_for_subset(spec, [0]))

    def test_full_deletion_gives_one(self):
        factored = minor_charpoly(PartitionSpec((1, 1)), (1, 1))
        assert factored.expanded.coeffs == (1,)
        assert factored.linear_factors == ()

    def test_degree_is_minor_dimension(self):
        spec = PartitionSpec((3, 2))
        factored = minor_charpoly(spec, (1, 1))
        assert factored.expanded.degree == spec.n - 2

    def test_t_out_of_range(self):
        with pytest.raises(ValueError):
            minor_charpoly(PartitionSpec((2, 3)), (3, 0))
        with pytest.raises(ValueError):
            minor_charpoly(PartitionSpec((2, 3)), (1,))

    def test_matches_exact_char_poly_sampled(self):
        rng = random.Random(7)
        specs = [
            PartitionSpec(tuple(parts))
            for parts in [(2, 3, 4), (5, 5), (1, 1, 1, 1), (4, 3, 2, 1), (6, 2), (3, 3, 3)]
        ]
        for _ in range(30):
            spec = rng.choice(specs)
            size = rng.randint(0, spec.n)
            vertices = rng.sample(range(spec.n), size)
            factored = minor_charpoly(spec, t_vector(spec, vertices))
            assert factored.expanded == char_poly(minor_for_subset(spec, vertices))

    def test_serialization_shape(self):
        payload = minor_charpoly(PartitionSpec((2, 3, 4)), (1, 0, 0)).to_dict()
        assert payload["rational_factor"] == [[-1, 8], [-3, 9], [-4, 9]]
        assert set(payload) == {
            "parts",
            "t",
            "rational_factor",
            "linear_factors",
            "coefficients",
        }


class TestQuotientMatrix:
    def test_k234_no_deletion(self):
        b = quotient_matrix(PartitionSpec((2, 3, 4)), (0, 0, 0))
        assert b == RatMatrix(
            [[7, -3, -4], [-2, 6, -4], [-2, -3, 5]]
        )

    def test_single_empty_part(self):
        assert quotient_matrix(PartitionSpec((3,)), (0,)) == RatMatrix([[0]])

    def test_det_single_vertex_deleted(self):
        b = quotient_matrix(PartitionSpec((2, 3, 4)), (1, 0, 0))
        assert det(b) == 63

    def test_quotient_det_matches_factored_rational_part(self):
        # det(B - xI) carries the non-trivial factor of the minor char poly:
        # the full char poly is det(B - xI) times the (d_k - x) powers.
        spec = PartitionSpec((2, 3, 4))
        t = (1, 1, 0)
        factored = minor_charpoly(spec, t)
        b = quotient_matrix(spec, t)
        for x0 in (Fraction(0), Fraction(1, 2), Fraction(-3), Fraction(7)):
            extra = Fraction(1)
            for k in range(spec.r):
                mult = spec.parts[k] - t[k] - 1
                extra *= (spec.n - spec.parts[k] - x0) ** mult
            shifted = b - RatMatrix.identity(spec.r).scale(x0)
            assert factored.expanded(x0) == det(shifted) * extra


class TestMinorDetTwoVertices:
    def test_same_part_k234(self):
        spec = PartitionSpec((2, 3, 4))
        value = minor_det_two_vertices(spec, VertexLocator(0, 0), VertexLocator(0, 1))
        assert value == Fraction(2, 7) * 283500 == 81000

    def test_cross_part_k234(self):
        spec = PartitionSpec((2, 3, 4))
        value = minor_det_two_vertices(spec, VertexLocator(0, 0), VertexLocator(1, 0))
        assert value == Fraction(52, 189) * 283500 == 78000

    def test_k2_empty_product(self):
        spec = PartitionSpec((1, 1))
        assert minor_det_two_vertices(spec, VertexLocator(0, 0), VertexLocator(1, 0)) == 1

    def test_equal_vertices_rejected(self):
        spec = PartitionSpec((2, 2))
        with pytest.raises(ValueError):
            minor_det_two_vertices(spec, VertexLocator(0, 0), VertexLocator(0, 0))

    def test_r1_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            minor_det_two_vertices(
                PartitionSpec((3,)), VertexLocator(0, 0), VertexLocator(0, 1)
            )

    def test_all_pairs_match_bareiss(self):
        spec = PartitionSpec((2, 3, 4))
        lap = laplacian(complete_multipartite(spec))
        for u in range(9):
            for v in range(u + 1, 9):
                closed = minor_det_two_vertices(spec, spec.locate(u), spec.locate(v))
                assert closed == det(lap.delete({u, v}, {u, v}))


class TestSpanningTrees:
    def test_cayley(self):
        for n in range(2, 8):
            assert spanning_trees(PartitionSpec((1,) * n)) == n ** (n - 2)

    def test_c4(self):
        assert spanning_trees(PartitionSpec((2, 2))) == 4

    def test_k234(self):
        assert spanning_trees(PartitionSpec((2, 3, 4))) == 283500

    def test_single_vertex(self):
        assert spanning_trees(PartitionSpec((1,))) == 1

    def test_r1_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            spanning_trees(PartitionSpec((3,)))

    def test_matches_matrix_tree(self):
        for parts in [(2, 2), (3, 1), (2, 3, 4), (4, 4), (1, 1, 5)]:
            spec = PartitionSpec(parts)
            assert spanning_trees(spec) == spanning_tree_count(complete_multipartite(spec))


class TestResistanceClosed:
    def test_same_part_of_four(self):
        spec = PartitionSpec((2, 3, 4))
        assert resistance_closed(spec, VertexLocator(2, 0), VertexLocator(2, 3)) == Fraction(2, 5)

    def test_parts_two_and_three(self):
        spec = PartitionSpec((2, 3, 4))
        assert resistance_closed(spec, VertexLocator(0, 1), VertexLocator(1, 2)) == Fraction(52, 189)

    def test_complete_graph_resistance(self):
        for n in range(2, 9):
            spec = PartitionSpec((1,) * n)
            assert resistance_closed(spec, VertexLocator(0, 0), VertexLocator(1, 0)) == Fraction(2, n)

    def test_symmetry_and_zero_diagonal(self):
        spec = PartitionSpec((3, 2, 2))
        m = resistance_matrix_closed(spec)
        assert m == m.transpose()
        assert all(m[i, i] == 0 for i in range(spec.n))

    def test_k2_matrix(self):
        assert resistance_matrix_closed(PartitionSpec((1, 1))) == RatMatrix([[0, 1], [1, 0]])

    def test_matches_oracle_random_specs(self):
        rng = random.Random(11)
        for _ in range(20):
            r = rng.randint(2, 4)
            parts = tuple(rng.randint(1, 4) for _ in range(r))
            spec = PartitionSpec(parts)
            if spec.n > 12:
                continue
            assert resistance_matrix_closed(spec) == resistance_matrix(
                complete_multipartite(spec)
            )

    def test_omega_times_trees_is_two_vertex_minor(self):
        spec = PartitionSpec((2, 3, 4))
        trees = spanning_trees(spec)
        for u in range(9):
            for v in range(u + 1, 9):
                lu, lv = spec.locate(u), spec.locate(v)
                assert resistance_closed(spec, lu, lv) * trees == minor_det_two_vertices(
                    spec, lu, lv
                )


class TestKfClosed:
    def test_large_example(self):
        spec = PartitionSpec.parse("2^3,3^2,5,7")
        expected = -1 + 23 * (
            Fraction(6, 22) + Fraction(6, 21) + Fraction(5, 19) + Fraction(7, 17)
        )
        assert kf_closed(spec) == expected

    def test_table_endpoints(self):
        assert kf_closed(PartitionSpec((7, 1, 1))) == 29
        assert kf_closed(PartitionSpec((3, 3, 3))) == 11

    def test_equals_trace_route(self):
        for parts in [(2, 3, 4), (5, 1), (2, 2, 2), (4, 3, 2, 1)]:
            spec = PartitionSpec(parts)
            g = complete_multipartite(spec)
            assert kf_closed(spec) == spec.n * laplacian_pinv(g).trace()

    def test_equals_half_resistance_sum(self):
        for parts in [(2, 3), (3, 3, 3), (2, 2, 5)]:
            spec = PartitionSpec(parts)
            m = resistance_matrix_closed(spec)
            total = sum(x for row in m.data for x in row)
            assert kf_closed(spec) == total / 2

    def test_equals_spectrum_reciprocal_sum(self):
        for parts in [(2, 3, 4), (4, 4), (1, 1, 7)]:
            spec = PartitionSpec(parts)
            nonzero = multipartite_spectrum(spec).nonzero()
            assert kf_closed(spec) == spec.n * sum(Fraction(1, int(x)) for x in nonzero)

    def test_r1_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            kf_closed(PartitionSpec((5,)))


class TestKfJoin:
    def test_two_singletons(self):
        assert kf_join([(1, [0]), (1, [0])]) == 1

    def test_join_of_two_k2(self):
        # K_2 join K_2 = K_4, spectra (2, 0) each
        assert kf_join([(2, [2, 0]), (2, [2, 0])]) == 3

    def test_empty_parts_reduce_to_closed_form(self):
        spec = PartitionSpec((2, 3, 4))
        assert kf_join([(p, [0] * p) for p in spec.parts]) == kf_closed(spec)

    def test_missing_zero_rejected(self):
        with pytest.raises(ValueError, match="zero"):
            kf_join([(2, [2, 1]), (1, [0])])

    def test_single_part_rejected(self):
        with pytest.raises(ValueError):
            kf_join([(3, [0, 0, 0])])


class TestJoinSpectrum:
    def test_empty_parts_234(self):
        values = multipartite_spectrum(PartitionSpec((2, 3, 4))).values
        assert [int(x) for x in values] == [9, 9, 7, 6, 6, 5, 5, 5, 0]

    def test_matches_char_poly_factorization(self):
        spec = PartitionSpec((2, 3, 4))
        p = char_poly(laplacian(complete_multipartite(spec)))
        prod = None
        from kirchhoff.linalg import RatPolynomial

        prod = RatPolynomial.one()
        for lam in multipartite_spectrum(spec).values:
            prod = prod * RatPolynomial.linear(lam)
        assert p == prod

    def test_single_part_unchanged(self):
        spectrum = join_spectrum([(3, [Fraction(3), Fraction(3), Fraction(0)])])
        assert spectrum.values == (3, 3, 0)

    def test_sum_is_twice_edges(self):
        for parts in [(2, 3, 4), (1, 1, 7), (5, 5)]:
            spec = PartitionSpec(parts)
            values = multipartite_spectrum(spec).values
            assert sum(values) == 2 * spec.edge_count()

    def test_kirchhoff_product_cross_check(self):
        # product of nonzero eigenvalues / n = spanning tree count
        for parts in [(2, 3, 4), (2, 2), (1, 1, 1, 1)]:
            spec = PartitionSpec(parts)
            prod = Fraction(1)
            for x in multipartite_spectrum(spec).nonzero():
                prod *= x
            assert prod / spec.n == spanning_trees(spec)

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError, match="expected"):
            join_spectrum([(2, [0]), (2, [0, 0])])


class TestDkfClosed:
    def test_k117(self):
        assert dkf_closed(PartitionSpec((7, 1, 1))) == Fraction(2060, 9)

    def test_k333(self):
        assert dkf_closed(PartitionSpec((3, 3, 3))) == 396

    def test_cocktail_party_formula(self):
        for r in range(2, 21):
            spec = PartitionSpec((2,) * r)
            assert dkf_closed(spec) == 4 * (2 * r**3 - 4 * r**2 + 3 * r - 1)

    def test_r1_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            dkf_closed(PartitionSpec((4,)))

    def test_matches_definitional_sum_on_regular_specs(self):
        from kirchhoff.oracle import degree_kirchhoff_index

        for parts in [(2, 2), (3, 3), (2, 2, 2), (1, 1, 1, 1), (3, 3, 3)]:
            spec = PartitionSpec(parts)
            assert dkf_closed(spec) == degree_kirchhoff_index(complete_multipartite(spec))

    def test_differs_from_definitional_sum_on_unequal_parts(self):
        # The closed form silently assumes regularity; on K_{2,3,4} the
        # definitional degree-weighted resistance sum is exactly 382.
        from kirchhoff.oracle import degree_kirchhoff_index

        spec = PartitionSpec((2, 3, 4))
        assert degree_kirchhoff_index(complete_multipartite(spec)) == 382
        assert dkf_closed(spec) == Fraction(30992, 81) != 382
