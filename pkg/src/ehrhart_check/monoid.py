"""Monoid-level predicates of lattice polytopes.

``M_P`` is the monoid generated by the lattice points of ``P × {1}`` and
``M̄_P`` its integral closure, whose degree-k part is ``kP ∩ ℤⁿ``. Points
are handled without the height coordinate; the degree is carried along
separately.
"""

import logging
from dataclasses import dataclass, field

from .config import CapsConfig
from .ehrhart import HStarVector, codegree_by_scan, h_star, interior_points, lattice_points
from .errors import ConsistencyError
from .lattice import (
    IntMatrix,
    Vector,
    coordinates_in_basis,
    lattice_basis,
    saturation_index,
    sublattice_index,
)
from .polytope import Polytope, contains, make_polytope

logger = logging.getLogger(__name__)

Witness = tuple[int, Vector]


def _sub(x: Vector, y: Vector) -> Vector:
    return tuple(p - q for p, q in zip(x, y))


def _add(x: Vector, y: Vector) -> Vector:
    return tuple(p + q for p, q in zip(x, y))


def idp_degree_bound(P: Polytope, hstar: HStarVector | None = None) -> int:
    """min(deg P, dim P - 1): M̄_P has no module generators above this degree."""
    hstar = hstar or h_star(P)
    return min(hstar.degree, P.affine_dim - 1)


@dataclass(frozen=True)
class IdpResult:
    """Outcome of :func:`is_idp`; ``witness`` is the smallest undecomposable point."""

    value: bool
    witness: Witness | None = None

    def __bool__(self) -> bool:
        return self.value


@dataclass(frozen=True)
class GeneratorProfile:
    """Minimal M_P-module generators of M̄_P in degrees >= 2."""

    counts: dict[int, int]
    generators: dict[int, tuple[Vector, ...]] = field(default_factory=dict)

    @property
    def idp(self) -> bool:
        """True when no generator sits in degree >= 2."""
        return not any(self.counts.values())

    @property
    def max_generator_degree(self) -> int:
        """Largest degree carrying a generator; 0 when only the unit is needed."""
        return max((k for k, g in self.counts.items() if g), default=0)


@dataclass(frozen=True)
class SublatticeReport:
    """P regarded inside the lattice generated by its lattice points."""

    q: int
    is_spanning: bool
    full_dimensional: bool
    basis: IntMatrix
    p_tilde: Polytope
    h_tilde: HStarVector

    @property
    def deg_tilde(self) -> int:
        """Degree of P̃."""
        return self.h_tilde.degree


@dataclass(frozen=True)
class LevelReport:
    """Degrees of the minimal generators of the interior-point module over M̄_P."""

    is_level: bool
    codegree: int
    generator_degrees: tuple[int, ...]
    generators: dict[int, tuple[Vector, ...]] = field(default_factory=dict)


def _undecomposable(P: Polytope, k: int, caps: CapsConfig | None) -> list[Vector]:
    """Points of kP that are not p + w with p ∈ P and w ∈ (k-1)P."""
    degree_one = lattice_points(P, 1, caps=caps)
    lower = set(lattice_points(P, k - 1, caps=caps))
    return [
        z
        for z in lattice_points(P, k, caps=caps)
        if not any(_sub(z, p) in lower for p in degree_one)
    ]


def is_idp(P: Polytope, caps: CapsConfig | None = None) -> IdpResult:
    """Integer decomposition property, checked degree by degree.

    Degrees 2 .. min(deg P, dim P - 1) are enough. In degree k every point
    must split off a lattice point of P from a point of (k-1)P; lower
    degrees are already known to be sums by then.
    """
    bound = idp_degree_bound(P, h_star(P, caps))
    for k in range(2, bound + 1):
        bad = _undecomposable(P, k, caps)
        if bad:
            logger.debug("%s is not IDP: %s in degree %d", P.name or "polytope", bad[0], k)
            return IdpResult(False, (k, bad[0]))
    return IdpResult(True)


def generator_profile(P: Polytope, max_degree: int | None = None, caps: CapsConfig | None = None) -> GeneratorProfile:
    """Count minimal generators of M̄_P over M_P in each degree 2 .. max_degree.

    ``max_degree`` defaults to min(deg P, dim P - 1).
    """
    if max_degree is None:
        max_degree = idp_degree_bound(P, h_star(P, caps))
    counts: dict[int, int] = {}
    generators: dict[int, tuple[Vector, ...]] = {}
    for k in range(2, max_degree + 1):
        found = _undecomposable(P, k, caps)
        counts[k] = len(found)
        generators[k] = tuple(found)
    return GeneratorProfile(counts, generators)


def spanning_report(P: Polytope, caps: CapsConfig | None = None) -> SublatticeReport:
    """Index q of the lattice generated by (P × {1}) ∩ ℤ^{n+1}, and P̃ with its h*.

    For non-full-dimensional P the index is taken inside the saturation,
    i.e. relative to the affine lattice of P.

    Raises:
        ConsistencyError: if Vol(P) != q · Vol(P̃)
    """
    points = lattice_points(P, 1, caps=caps)
    lifted = IntMatrix.from_rows([p + (1,) for p in points], cols=P.ambient_dim + 1)
    if P.is_full_dimensional:
        q = sublattice_index(lifted, P.ambient_dim + 1)
        if q == "infinite":
            raise ConsistencyError(f"lattice points of full-dimensional {P!r} do not span")
    else:
        q = saturation_index(lifted)
        logger.warning("%s is not full-dimensional; spanning is taken relative to its affine lattice", P.name or "polytope")

    base = P.base_vertex
    differences = [_sub(p, base) for p in points if p != base]
    if differences:
        difference_basis = lattice_basis(IntMatrix.from_rows(differences))
        tilde_vertices = [coordinates_in_basis(difference_basis, _sub(v, base)) for v in P.vertices]
    else:
        tilde_vertices = [()]
    p_tilde = make_polytope(tilde_vertices, name=f"{P.name}~" if P.name else None)

    hstar = h_star(P, caps)
    h_tilde = h_star(p_tilde, caps)
    if hstar.normalized_volume != q * h_tilde.normalized_volume:
        raise ConsistencyError(
            f"Vol(P) = {hstar.normalized_volume} but q·Vol(P̃) = {q}·{h_tilde.normalized_volume}"
        )
    return SublatticeReport(
        q=q,
        is_spanning=q == 1,
        full_dimensional=P.is_full_dimensional,
        basis=lattice_basis(lifted),
        p_tilde=p_tilde,
        h_tilde=h_tilde,
    )


def spanning_criterion(P: Polytope, hstar: HStarVector | None = None) -> bool:
    """h*_1 + h*_d >= h*_2 + ... + h*_{d-1}."""
    hstar = hstar or h_star(P)
    d = hstar.dimension
    return hstar[1] + hstar[d] >= sum(hstar[i] for i in range(2, d))


def is_level(P: Polytope, caps: CapsConfig | None = None) -> LevelReport:
    """Levelness from the minimal generators of the interior-point module.

    An interior point α of kP is a generator unless α = β + γ with β an
    interior point of some eP, c(P) <= e < k, and γ ∈ (k - e)P. The search
    stops at degree dim P + 1, where the canonical module's Hilbert
    numerator ends.
    """
    c = codegree_by_scan(P, caps)
    top = P.affine_dim + 1
    interior = {k: interior_points(P, k, caps) for k in range(c, top + 1)}

    generators: dict[int, tuple[Vector, ...]] = {}
    for k in range(c, top + 1):
        found = []
        for alpha in interior[k]:
            decomposes = any(
                contains(P, _sub(alpha, beta), k - e)
                for e in range(c, k)
                for beta in interior[e]
            )
            if not decomposes:
                found.append(alpha)
        if found:
            generators[k] = tuple(found)

    degrees = tuple(k for k in sorted(generators) for _ in generators[k])
    return LevelReport(
        is_level=all(k == c for k in generators),
        codegree=c,
        generator_degrees=degrees,
        generators=generators,
    )


def level_decomposition_holds(P: Polytope, caps: CapsConfig | None = None) -> bool:
    """Every interior point of kP (c <= k <= dim P + 1) is β + γ with β ∈ cP° and γ ∈ (k - c)P."""
    c = codegree_by_scan(P, caps)
    base = interior_points(P, c, caps)
    for k in range(c + 1, P.affine_dim + 2):
        for alpha in interior_points(P, k, caps):
            if not any(contains(P, _sub(alpha, beta), k - c) for beta in base):
                return False
    return True


def is_clean_simplex(P: Polytope, caps: CapsConfig | None = None) -> bool:
    """A simplex whose only boundary lattice points are its vertices."""
    if not P.is_simplex:
        return False
    boundary = set(lattice_points(P, 1, caps=caps)) - set(interior_points(P, 1, caps))
    return boundary == set(P.vertices)


def sumset(points: list[Vector], k: int) -> set[Vector]:
    """All sums of k points from ``points`` (degree-k part of M_P)."""
    if not points:
        return set()
    current = {tuple(0 for _ in points[0])}
    for _ in range(k):
        current = {_add(a, p) for a in current for p in points}
    return current
