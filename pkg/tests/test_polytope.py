"""Tests for polytope module."""

from itertools import combinations, product
from math import gcd

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from sympy import Matrix

from ehrhart_check.catalog import unit_cube, unit_simplex
from ehrhart_check.errors import DimensionMismatchError, EmptyPolytopeError
from ehrhart_check.linalg import bareiss_rank
from ehrhart_check.polytope import (
    Polytope,
    contains,
    contains_interior,
    dilate_vertices,
    facet_enumeration,
    make_polytope,
    normalized_volume_of_simplex,
)


def dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


@st.composite
def full_dimensional_polytopes(draw):
    """Hulls of a few points of {0, 1, 2}^d, d = 2 or 3."""
    d = draw(st.sampled_from([2, 3]))
    coordinate = st.integers(min_value=0, max_value=2)
    points = draw(st.lists(st.tuples(*[coordinate] * d), min_size=d + 1, max_size=d + 4, unique=True))
    P = make_polytope(points)
    assume(P.is_full_dimensional)
    return P


def simplex_certificates(P: Polytope) -> list[tuple[int, list[list[int]]]]:
    """Determinant sign and adjugate of every full-dimensional simplex on the vertices of P.

    x lies in kP iff for one of them all barycentric weights of (k, x) are nonnegative.
    """
    d = P.ambient_dim
    certificates = []
    for subset in combinations(P.vertices, d + 1):
        M = Matrix([[1] * (d + 1)] + [[v[i] for v in subset] for i in range(d)])
        det = M.det()
        if det != 0:
            adjugate = M.adjugate()
            rows = [[int(adjugate[r, c]) for c in range(d + 1)] for r in range(d + 1)]
            certificates.append((1 if det > 0 else -1, rows))
    return certificates


def in_dilate(certificates: list[tuple[int, list[list[int]]]], x, k: int) -> bool:
    rhs = (k, *x)
    return any(all(sign * dot(row, rhs) >= 0 for row in rows) for sign, rows in certificates)


def supporting_vertex_sets(vertices) -> set[frozenset[int]]:
    """Vertex sets of all hyperplanes through d affinely independent vertices that support the hull."""
    d = len(vertices[0])
    found = set()
    for subset in combinations(range(len(vertices)), d):
        null = Matrix([[*vertices[i], 1] for i in subset]).nullspace()
        if len(null) != 1:
            continue
        w = null[0]
        values = [sum(w[j] * v[j] for j in range(d)) + w[d] for v in vertices]
        if all(x >= 0 for x in values) or all(x <= 0 for x in values):
            found.add(frozenset(i for i, x in enumerate(values) if x == 0))
    return found


class TestMakePolytope:
    def test_redundant_points_removed(self):
        P = make_polytope([(2, 0), (0, 0), (1, 1), (0, 2), (1, 0)])
        assert P.vertices == ((0, 0), (0, 2), (2, 0))
        assert P.base_vertex == (0, 0)
        assert P.is_simplex
        assert P.is_full_dimensional

    def test_duplicates_collapse(self):
        P = make_polytope([(0, 0), (1, 0), (1, 0), (0, 1)])
        assert len(P.vertices) == 3

    def test_name_not_part_of_equality(self):
        a = make_polytope([(0,), (1,)], name="a")
        b = make_polytope([(1,), (0,)], name="b")
        assert a == b
        assert "a" in repr(a)

    def test_lower_dimensional(self):
        P = make_polytope([(0, 0), (1, 1), (2, 2)])
        assert P.vertices == ((0, 0), (2, 2))
        assert P.affine_dim == 1
        assert not P.is_full_dimensional
        assert len(P.facets.equations) == 1

    def test_single_point(self):
        P = make_polytope([(3, 4)])
        assert P.affine_dim == 0
        assert P.vertices == ((3, 4),)

    def test_empty_input(self):
        with pytest.raises(EmptyPolytopeError):
            make_polytope([])

    def test_mixed_dimensions(self):
        with pytest.raises(DimensionMismatchError):
            make_polytope([(0, 0), (1, 0, 0)])

    def test_cube(self):
        P = unit_cube(3)
        assert len(P.vertices) == 8
        assert len(P.facets) == 6
        assert not P.is_simplex


class TestFacetEnumeration:
    def test_unit_square(self):
        facets = facet_enumeration([(0, 0), (1, 0), (0, 1), (1, 1)])
        assert set(facets.inequalities) == {((-1, 0), 0), ((0, -1), 0), ((1, 0), 1), ((0, 1), 1)}
        assert facets.equations == ()

    def test_normals_are_primitive(self):
        facets = facet_enumeration([(0, 0, 0), (2, 0, 0), (0, 4, 0), (0, 0, 6)])
        assert len(facets) == 4
        for normal, _ in facets.inequalities:
            assert gcd(*normal) == 1
        assert ((6, 3, 2), 12) in facets.inequalities

    def test_dimension_check(self):
        with pytest.raises(ValueError, match="span dimension"):
            facet_enumeration([(0, 0), (1, 0)], affine_dim=2)

    @pytest.mark.parametrize("fixture", ["parity", "reeve"])
    def test_matches_subset_hyperplane_search(self, fixture, request):
        P = request.getfixturevalue(fixture)
        tight_sets = {
            frozenset(i for i, v in enumerate(P.vertices) if dot(normal, v) == rhs)
            for normal, rhs in P.facets.inequalities
        }
        assert len(tight_sets) == len(P.facets)
        assert supporting_vertex_sets(P.vertices) == tight_sets

    def test_cube_subset_hyperplane_count(self):
        assert len(supporting_vertex_sets(unit_cube(3).vertices)) == len(unit_cube(3).facets) == 6

    @given(full_dimensional_polytopes())
    @settings(max_examples=100, deadline=None)
    def test_facets_are_irredundant(self, P):
        inequalities = P.facets.inequalities
        assert len(set(inequalities)) == len(inequalities)
        for normal, rhs in inequalities:
            values = [dot(normal, v) for v in P.vertices]
            assert max(values) == rhs
            tight = [v for v, value in zip(P.vertices, values) if value == rhs]
            differences = [[a - b for a, b in zip(v, tight[0])] for v in tight[1:]]
            assert bareiss_rank(differences) == P.affine_dim - 1


class TestMembership:
    def test_contains(self):
        square = unit_cube(2)
        assert contains(square, (1, 1))
        assert not contains(square, (2, 2))
        assert contains(square, (2, 2), k=2)
        assert contains(square, (0, 0), k=0)
        assert not contains(square, (1, 0), k=0)

    def test_contains_respects_affine_hull(self):
        segment = make_polytope([(0, 0), (2, 2)])
        assert contains(segment, (1, 1))
        assert not contains(segment, (1, 0))

    def test_contains_interior(self):
        square = unit_cube(2)
        assert not contains_interior(square, (0, 0))
        assert not contains_interior(square, (1, 1))
        assert contains_interior(square, (1, 1), k=2)

    def test_relative_interior_of_segment(self):
        segment = make_polytope([(0, 0), (2, 2)])
        assert contains_interior(segment, (1, 1))
        assert not contains_interior(segment, (2, 2))

    @pytest.mark.oracle
    @given(full_dimensional_polytopes())
    @settings(max_examples=40, deadline=None)
    def test_contains_matches_simplex_cover(self, P):
        certificates = simplex_certificates(P)
        for k in (1, 2, 3):
            box = [range(-1, 2 * k + 2)] * P.ambient_dim
            for x in product(*box):
                assert contains(P, x, k) == in_dilate(certificates, x, k), (P.vertices, x, k)

    def test_wrong_dimension(self):
        with pytest.raises(DimensionMismatchError):
            contains(unit_cube(2), (1, 1, 1))

    def test_bad_dilation(self):
        with pytest.raises(ValueError):
            contains(unit_cube(2), (0, 0), k=-1)
        with pytest.raises(ValueError):
            contains_interior(unit_cube(2), (0, 0), k=0)


class TestVolume:
    def test_simplex_volume(self, reeve):
        assert normalized_volume_of_simplex(reeve) == 2
        assert normalized_volume_of_simplex(unit_simplex(4)) == 1

    def test_requires_simplex(self):
        with pytest.raises(ValueError):
            normalized_volume_of_simplex(unit_cube(2))

    def test_dilate_vertices(self, reeve):
        assert dilate_vertices(reeve, 3)[-1] == (3, 3, 6)
