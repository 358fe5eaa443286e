import pytest
from hypothesis import given, settings

from conftest import CORPUS
from oracles import oracle_betti, oracle_reduced
from ratgauge.errors import BasepointError, CapacityError, ComplexParseError
from ratgauge.linalg import bareiss_rank
from ratgauge.simplicial import (
    SimplicialComplex,
    betti,
    builtin,
    coboundary,
    cone,
    disjoint_union,
    euler_characteristic,
    point,
    reduced_betti,
    simplex,
    simplex_boundary,
    suspension,
    torus7,
    wedge,
)
from strategies import complexes

S2_BETTI = {0: 1, 2: 1}
TORUS_BETTI = {0: 1, 1: 2, 2: 1}


class TestComplex:
    def test_closure_is_sorted_and_closed(self, corpus):
        for X in corpus.values():
            for k, level in enumerate(X.closure):
                assert list(level) == sorted(level)
                assert all(len(s) == k + 1 and list(s) == sorted(set(s)) for s in level)
                if k:
                    lower = set(X.closure[k - 1])
                    for s in level:
                        assert all(s[:i] + s[i + 1:] in lower for i in range(len(s)))

    def test_non_maximal_input_simplices_are_dropped(self):
        X = SimplicialComplex(((0, 1, 2), (0, 1), (2,)))
        assert X.maximal_simplices == ((0, 1, 2),)

    def test_vertex_labels_are_preserved(self):
        X = SimplicialComplex(((10, 3), (3, 42)))
        assert X.vertices == (3, 10, 42)
        assert X.closure[1] == ((3, 10), (3, 42))

    def test_rejects_duplicate_vertex(self):
        with pytest.raises(ComplexParseError, match="duplicate"):
            SimplicialComplex(((0, 0, 1),))

    def test_rejects_empty(self):
        with pytest.raises(ComplexParseError):
            SimplicialComplex(())

    def test_capacity_limit(self):
        # 2-skeleton of a 40-simplex has C(40, 3) = 9880 triangles and 91390 tetrahedra
        with pytest.raises(CapacityError, match="dimension 3"):
            SimplicialComplex((tuple(range(40)),)).closure


class TestCoboundary:
    def test_triangle_boundary_degree_zero(self):
        d0 = coboundary(simplex_boundary(2), 0)
        assert d0.shape == (3, 3)
        assert d0.entries == [[-1, 1, 0], [-1, 0, 1], [0, -1, 1]]
        assert d0.rank() == bareiss_rank(d0.entries) == 2

    def test_point_has_empty_coboundary(self):
        d0 = coboundary(point(), 0)
        assert d0.shape == (0, 1)
        assert d0.rank() == 0

    def test_tetrahedron_boundary_squares_to_zero(self):
        X = simplex_boundary(3)
        d0, d1 = coboundary(X, 0), coboundary(X, 1)
        assert d1.shape == (4, 6)
        assert (d1 @ d0).is_zero()

    def test_rows_have_k_plus_two_nonzeros(self, corpus):
        for X in corpus.values():
            for k in range(X.dim):
                assert all(len(row) == k + 2 for row in coboundary(X, k).rows)

    def test_above_top_dimension_is_empty(self):
        d = coboundary(torus7(), 2)
        assert d.shape == (0, 14)

    @settings(max_examples=60, deadline=None)
    @given(complexes())
    def test_d_squared_zero(self, X):
        for k in range(X.dim):
            assert (coboundary(X, k + 1) @ coboundary(X, k)).is_zero()


class TestBetti:
    @pytest.mark.parametrize(
        "name, expected",
        [
            ("s2", S2_BETTI),
            ("torus7", TORUS_BETTI),
            ("rp2_6", {0: 1}),
            ("klein8", {0: 1, 1: 1}),
            ("two_points", {0: 2}),
            ("s3", {0: 1, 3: 1}),
        ],
    )
    def test_frozen_values(self, name, expected):
        assert betti(builtin(name)) == expected

    @pytest.mark.parametrize("name", CORPUS)
    def test_matches_dense_oracle(self, name):
        X = builtin(name)
        assert betti(X) == oracle_betti(X.maximal_simplices)
        assert reduced_betti(X) == oracle_reduced(X.maximal_simplices)

    def test_coefficient_dimension_scales(self):
        assert betti(torus7(), coeff_dim=3) == {0: 3, 1: 6, 2: 3}

    def test_reduced(self):
        assert reduced_betti(simplex_boundary(3)) == {2: 1}
        assert reduced_betti(builtin("two_points")) == {0: 1}
        assert reduced_betti(point()) == {}

    @pytest.mark.parametrize("name, chi", [("s2", 2), ("torus7", 0), ("point", 1), ("rp2_6", 1)])
    def test_euler_characteristic(self, name, chi):
        X = builtin(name)
        assert euler_characteristic(X) == chi
        assert sum((-1) ** k * b for k, b in betti(X).items()) == chi

    @settings(max_examples=80, deadline=None)
    @given(complexes())
    def test_random_complexes_match_oracle(self, X):
        assert betti(X) == oracle_betti(X.maximal_simplices)

    @settings(max_examples=80, deadline=None)
    @given(complexes())
    def test_euler_two_ways(self, X):
        assert euler_characteristic(X) == sum((-1) ** k * b for k, b in betti(X).items())


class TestBuilders:
    def test_simplex_boundary_is_sphere(self):
        X = simplex_boundary(3)
        assert len(X.vertices) == 4
        assert betti(X) == S2_BETTI

    def test_suspension_of_circle(self):
        assert betti(suspension(simplex_boundary(2))) == S2_BETTI

    def test_disjoint_points(self):
        assert betti(disjoint_union(point(), point())) == {0: 2}

    def test_cone_is_contractible(self, corpus):
        for X in corpus.values():
            assert betti(cone(X)) == {0: 1}

    def test_full_simplex_is_contractible(self):
        assert betti(simplex(4)) == {0: 1}

    def test_wedge_bad_basepoint(self):
        with pytest.raises(BasepointError):
            wedge(point(), point(), basepoints=(0, 5))

    def test_wedge_relabels(self):
        X = wedge(torus7(), simplex_boundary(3), basepoints=(3, 2))
        assert len(X.vertices) == 7 + 4 - 1
        assert reduced_betti(X) == {1: 2, 2: 2}

    @settings(max_examples=40, deadline=None)
    @given(complexes(), complexes())
    def test_disjoint_union_additive(self, X, Y):
        assert betti(disjoint_union(X, Y)) == betti(X) + betti(Y)

    @settings(max_examples=40, deadline=None)
    @given(complexes(), complexes())
    def test_wedge_additive_reduced(self, X, Y):
        W = wedge(X, Y, (X.vertices[-1], Y.vertices[0]))
        assert reduced_betti(W) == reduced_betti(X) + reduced_betti(Y)

    @settings(max_examples=40, deadline=None)
    @given(complexes())
    def test_suspension_shifts_reduced(self, X):
        assert reduced_betti(suspension(X)) == reduced_betti(X).shift(1)

    @settings(max_examples=40, deadline=None)
    @given(complexes())
    def test_cone_random(self, X):
        assert betti(cone(X)) == {0: 1}
