"""Tests for lattice point counting and h*-vectors."""

import pytest

from ehrhart_check.catalog import GOLDENS, catalog_examples, reeve_simplex, unit_cube, unit_simplex
from ehrhart_check.config import CapsConfig
from ehrhart_check.ehrhart import (
    HStarVector,
    codegree_by_scan,
    degree_and_codegree,
    ehrhart_counts,
    ehrhart_value,
    h_star,
    h_star_from_counts,
    interior_counts,
    interior_points,
    lattice_points,
)
from ehrhart_check.errors import CapExceededError
from ehrhart_check.polytope import make_polytope


class TestHStarVector:
    def test_properties(self):
        h = HStarVector((1, 0, 1, 0))
        assert h.dimension == 3
        assert h.degree == 2
        assert h.codegree == 2
        assert h.normalized_volume == 2
        assert h[7] == 0
        assert list(h) == [1, 0, 1, 0]

    def test_point_has_degree_zero(self):
        assert HStarVector((1,)).degree == 0
        assert HStarVector((1,)).codegree == 1


class TestLatticePoints:
    def test_dilate_zero_is_origin(self, reeve):
        assert lattice_points(reeve, 0) == [(0, 0, 0)]

    def test_negative_dilate(self, reeve):
        with pytest.raises(ValueError):
            lattice_points(reeve, -1)

    def test_sorted_and_on_vertices(self, reeve):
        assert lattice_points(reeve) == list(reeve.vertices)

    def test_interior(self, square_2):
        assert interior_points(square_2) == [(1, 1)]
        assert interior_counts(square_2, 3) == (1, 9, 25)

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_box_and_fiber_agree(self, k):
        for P in catalog_examples():
            assert lattice_points(P, k, "box") == lattice_points(P, k, "fiber"), P.name

    def test_lower_dimensional_fiber(self):
        P = make_polytope([(0, 0, 1), (2, 2, 1)])
        assert lattice_points(P, 1, "fiber") == [(0, 0, 1), (1, 1, 1), (2, 2, 1)]
        assert lattice_points(P, 2, "fiber") == lattice_points(P, 2, "box")

    def test_box_cap(self):
        with pytest.raises(CapExceededError) as excinfo:
            lattice_points(unit_cube(3), 2, "box", caps=CapsConfig(max_box_points=10))
        assert excinfo.value.cap == 10

    def test_fiber_cap(self, square_2):
        with pytest.raises(CapExceededError):
            lattice_points(square_2, 2, "fiber", caps=CapsConfig(max_box_points=10))


class TestHStar:
    def test_reeve_counts(self, reeve):
        assert ehrhart_counts(reeve) == (1, 4, 11, 24)
        assert h_star_from_counts((1, 4, 11, 24)) == (1, 0, 1, 0)

    @pytest.mark.golden
    @pytest.mark.parametrize("name", sorted(GOLDENS))
    def test_goldens(self, name, request):
        fixtures = {
            "reeve": "reeve",
            "parity-4": "parity",
            "idp-156": "idp_156",
            "idp-169": "idp_169",
            "square-2": "square_2",
            "nonlevel-3": "nonlevel",
        }
        P = request.getfixturevalue(fixtures[name])
        assert h_star(P).entries == GOLDENS[name]["hstar"]

    def test_unit_polytopes(self):
        assert h_star(unit_cube(3)).entries == (1, 4, 1, 0)
        assert h_star(unit_simplex(4)).entries == (1, 0, 0, 0, 0)

    def test_reeve_family(self):
        assert h_star(reeve_simplex(5)).entries == (1, 0, 4, 0)

    def test_degree_and_codegree(self, reeve, square_2):
        assert degree_and_codegree(reeve) == (2, 2)
        assert degree_and_codegree(square_2) == (2, 1)
        assert codegree_by_scan(unit_cube(3)) == 2


class TestEhrhartPolynomial:
    @pytest.mark.parametrize("k", range(5))
    def test_matches_counts(self, square_2, k):
        assert ehrhart_value(h_star(square_2), k) == len(lattice_points(square_2, k))

    def test_reciprocity(self):
        for P in catalog_examples():
            h = h_star(P)
            d = h.dimension
            for k, interior in enumerate(interior_counts(P, 2), start=1):
                assert (-1) ** d * ehrhart_value(h, -k) == interior, P.name
