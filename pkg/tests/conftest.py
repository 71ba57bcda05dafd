"""Test configuration for pytest."""

import random
import sys
from pathlib import Path

import pytest

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from ehrhart_check import catalog  # noqa: E402
from ehrhart_check.formats import serialize_text  # noqa: E402


@pytest.fixture
def reeve():
    return catalog.reeve_simplex()


@pytest.fixture
def parity():
    return catalog.parity_polytope()


@pytest.fixture
def idp_156():
    return catalog.idp_simplex_156()


@pytest.fixture
def idp_169():
    return catalog.idp_simplex_169()


@pytest.fixture
def square_2():
    return catalog.doubled_square()


@pytest.fixture
def nonlevel():
    return catalog.nonlevel_simplex()


@pytest.fixture
def rng():
    """Seeded PRNG so randomized tests are reproducible."""
    return random.Random(20240607)


@pytest.fixture
def polytope_file(tmp_path):
    """Write a polytope (or raw text) to a file and return its path."""

    def write(polytope_or_text, name="polytope.txt"):
        text = polytope_or_text if isinstance(polytope_or_text, str) else serialize_text(polytope_or_text)
        path = tmp_path / name
        path.write_text(text)
        return path

    return write
