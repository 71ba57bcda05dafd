"""Tests for IDP, spanning and levelness."""

import pytest

from ehrhart_check.assertions import expect_hstar, expect_idp, expect_spanning_index
from ehrhart_check.catalog import GOLDENS, reeve_simplex, unit_cube, unit_simplex
from ehrhart_check.monoid import (
    GeneratorProfile,
    generator_profile,
    idp_degree_bound,
    is_clean_simplex,
    is_idp,
    is_level,
    level_decomposition_holds,
    spanning_criterion,
    spanning_report,
    sumset,
)
from ehrhart_check.polytope import make_polytope


class TestIdp:
    def test_reeve_witness(self, reeve):
        result = is_idp(reeve)
        assert not result
        assert result.witness == (2, (1, 1, 1))

    def test_parity_witness(self, parity):
        result = is_idp(parity)
        assert not result
        assert result.witness == (2, (0, 1, 1, 1))

    @pytest.mark.parametrize("fixture", ["idp_156", "idp_169", "square_2"])
    def test_idp_examples(self, fixture, request):
        expect_idp(request.getfixturevalue(fixture), True)

    def test_nonlevel_is_not_idp(self, nonlevel):
        expect_idp(nonlevel, False)

    def test_unit_cube(self):
        assert is_idp(unit_cube(3)).witness is None
        expect_idp(unit_cube(3), True)

    def test_degree_bound(self, reeve, square_2):
        assert idp_degree_bound(reeve) == 2
        assert idp_degree_bound(square_2) == 1


class TestGeneratorProfile:
    def test_reeve(self, reeve):
        profile = generator_profile(reeve)
        assert profile.counts == {2: 1}
        assert profile.generators[2] == ((1, 1, 1),)
        assert not profile.idp
        assert profile.max_generator_degree == 2

    def test_parity(self, parity):
        profile = generator_profile(parity)
        assert (1, 1, 1, 0) in profile.generators[2]
        assert profile.counts[2] == len(profile.generators[2])

    def test_idp_profile_is_empty(self, idp_156):
        profile = generator_profile(idp_156)
        assert profile.idp
        assert profile.max_generator_degree == 0

    def test_explicit_degree(self, reeve):
        assert generator_profile(reeve, max_degree=3).counts[3] == 0

    def test_empty_profile(self):
        assert GeneratorProfile({}).idp


class TestSpanning:
    @pytest.mark.golden
    @pytest.mark.parametrize(
        "fixture,name",
        [
            ("reeve", "reeve"),
            ("parity", "parity-4"),
            ("idp_156", "idp-156"),
            ("idp_169", "idp-169"),
            ("square_2", "square-2"),
            ("nonlevel", "nonlevel-3"),
        ],
    )
    def test_goldens(self, fixture, name, request):
        P = request.getfixturevalue(fixture)
        report = spanning_report(P)
        assert report.q == GOLDENS[name]["q"]
        assert report.deg_tilde == GOLDENS[name]["deg_tilde"]
        assert report.is_spanning is (report.q == 1)
        assert report.full_dimensional

    def test_tilde_vectors(self, reeve, parity, nonlevel):
        assert spanning_report(reeve).h_tilde.entries == (1, 0, 0, 0)
        assert spanning_report(parity).h_tilde.entries == (1, 2, 1, 0, 0)
        assert spanning_report(nonlevel).h_tilde.entries == (1, 1, 0, 0)

    def test_volume_splits(self, parity):
        report = spanning_report(parity)
        assert report.q * report.h_tilde.normalized_volume == 8

    def test_spanning_assertion(self, reeve):
        expect_spanning_index(reeve, 2)
        expect_spanning_index(unit_cube(2), 1)

    def test_lower_dimensional(self):
        P = make_polytope([(0, 0, 0), (2, 0, 0), (0, 2, 0)])
        report = spanning_report(P)
        assert not report.full_dimensional
        assert report.q == 1
        assert report.h_tilde.entries == (1, 3, 0)

    def test_lower_dimensional_non_spanning(self, reeve):
        lifted = make_polytope([v + (0,) for v in reeve.vertices])
        assert spanning_report(lifted).q == 2

    def test_criterion(self, reeve, square_2, idp_156):
        assert spanning_criterion(square_2)
        assert spanning_criterion(unit_cube(3))
        assert not spanning_criterion(reeve)
        assert not spanning_criterion(idp_156)


class TestLevel:
    def test_square_is_level(self, square_2):
        report = is_level(square_2)
        assert report.is_level
        assert report.codegree == 1
        assert report.generator_degrees == (1,)
        assert report.generators[1] == ((1, 1),)

    def test_reeve_is_level(self, reeve):
        report = is_level(reeve)
        assert report.is_level
        assert report.codegree == 2

    def test_nonlevel(self, nonlevel):
        report = is_level(nonlevel)
        assert not report.is_level
        assert report.codegree == 2
        assert max(report.generator_degrees) > 2
        assert not level_decomposition_holds(nonlevel)

    def test_decomposition(self, square_2):
        assert level_decomposition_holds(square_2)
        assert level_decomposition_holds(unit_cube(3))


class TestHelpers:
    def test_clean_simplex(self, reeve):
        triangle = make_polytope([(-1, -1), (1, 0), (0, 1)])
        assert is_clean_simplex(triangle)
        assert is_clean_simplex(reeve)
        assert not is_clean_simplex(make_polytope([(0, 0), (2, 0), (0, 2)]))
        assert not is_clean_simplex(unit_cube(2))

    def test_sumset(self):
        assert sumset([(0,), (1,)], 2) == {(0,), (1,), (2,)}
        assert sumset([], 3) == set()
        assert sumset([(1, 2)], 0) == {(0, 0)}

    def test_hstar_assertion(self):
        expect_hstar(unit_simplex(3), (1, 0, 0, 0))
        expect_hstar(reeve_simplex(3), (1, 0, 2, 0))
        with pytest.raises(AssertionError, match="Expected h"):
            expect_hstar(unit_simplex(3), (1, 1, 0, 0))
