"""ehrhart-check - Exact Ehrhart invariants of lattice polytopes."""

__version__ = "1.0.0"

from .config import CapsConfig, Config, CorpusConfig
from .ehrhart import HStarVector, h_star, lattice_points
from .graded import koszul_betti, toric_generator_counts
from .harness import corpus_verify, implication_report
from .monoid import generator_profile, is_idp, is_level, spanning_report
from .polytope import Polytope, make_polytope

__all__ = [
    "CapsConfig",
    "Config",
    "CorpusConfig",
    "HStarVector",
    "Polytope",
    "corpus_verify",
    "generator_profile",
    "h_star",
    "implication_report",
    "is_idp",
    "is_level",
    "koszul_betti",
    "lattice_points",
    "make_polytope",
    "spanning_report",
    "toric_generator_counts",
]
