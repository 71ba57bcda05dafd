"""Tests for graded dimensions, toric ideals and Koszul Betti numbers."""

import pytest

from ehrhart_check.catalog import unit_cube
from ehrhart_check.config import CapsConfig
from ehrhart_check.errors import CapExceededError, NotIDPError
from ehrhart_check.graded import (
    betti_table,
    graded_dims,
    koszul_betti,
    subalgebra_gap,
    toric_generator_counts,
)
from ehrhart_check.polytope import make_polytope


@pytest.fixture
def triangle():
    """conv((-1, -1), (1, 0), (0, 1)): one interior point, a single cubic relation."""
    return make_polytope([(-1, -1), (1, 0), (0, 1)], name="triangle")


class TestGradedDims:
    def test_square(self, square_2):
        dims = graded_dims(square_2, 2)
        assert dims.ring == (1, 9, 25)
        assert dims.subalgebra == (1, 9, 25)
        assert dims.symmetric == (1, 9, 45)
        assert dims.max_j == 2

    def test_reeve_gap(self, reeve):
        dims = graded_dims(reeve, 2)
        assert dims.ring[2] == 11
        assert dims.subalgebra[2] == 10
        assert subalgebra_gap(reeve, 2) == 1
        assert subalgebra_gap(reeve, 1) == 0

    def test_max_j_positive(self, reeve):
        with pytest.raises(ValueError):
            graded_dims(reeve, 0)


class TestToricGenerators:
    def test_unit_square(self):
        assert toric_generator_counts(unit_cube(2), 3) == {2: 1, 3: 0}

    def test_doubled_square_quadrics(self, square_2):
        assert toric_generator_counts(square_2, 3) == {2: 20, 3: 0}

    def test_cubic_relation(self, triangle):
        assert toric_generator_counts(triangle, 3) == {2: 0, 3: 1}

    def test_requires_idp(self, reeve):
        with pytest.raises(NotIDPError) as excinfo:
            toric_generator_counts(reeve, 2)
        assert excinfo.value.witness == (2, (1, 1, 1))

    def test_degree_cap(self, square_2):
        with pytest.raises(CapExceededError):
            toric_generator_counts(square_2, 6)

    def test_monomial_cap(self, square_2):
        with pytest.raises(CapExceededError):
            toric_generator_counts(square_2, 3, CapsConfig(koszul_nonzeros=100))


class TestKoszulBetti:
    def test_trivial_entries(self, square_2):
        assert koszul_betti(square_2, 0, 0) == 1
        assert koszul_betti(square_2, 0, 1) == 0
        assert koszul_betti(square_2, 2, 1) == 0
        assert koszul_betti(square_2, 10, 12) == 0

    def test_unit_square_quadric(self):
        assert koszul_betti(unit_cube(2), 1, 2) == 1
        assert koszul_betti(unit_cube(2), 1, 3) == 0

    def test_reeve_module_generator(self, reeve):
        assert koszul_betti(reeve, 0, 2) == 1

    @pytest.mark.parametrize("fixture", ["square_2"])
    def test_quadrics_match_toric_count(self, fixture, request):
        P = request.getfixturevalue(fixture)
        assert koszul_betti(P, 1, 2) == toric_generator_counts(P, 2)[2]

    def test_cubic_relation_matches(self, triangle):
        assert koszul_betti(triangle, 1, 3) == toric_generator_counts(triangle, 3)[3]

    @pytest.mark.slow
    @pytest.mark.parametrize("p", [1, 2, 3])
    def test_doubled_square_quadratic_strand_vanishes(self, square_2, p):
        assert koszul_betti(square_2, p, p + 2) == 0

    def test_negative_p(self, reeve):
        with pytest.raises(ValueError):
            koszul_betti(reeve, -1, 2)

    def test_cap(self, square_2):
        with pytest.raises(CapExceededError):
            koszul_betti(square_2, 2, 3, CapsConfig(koszul_nonzeros=50))

    def test_table(self):
        table = betti_table(unit_cube(2), 1, 2)
        assert [(c.p, c.j, c.value) for c in table] == [(0, 0, 1), (0, 1, 0), (0, 2, 0), (1, 1, 0), (1, 2, 1)]
