"""Lattice polytopes given by vertices, with an exact facet description."""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from itertools import combinations
from math import gcd

from .errors import DimensionMismatchError, EmptyPolytopeError
from .lattice import IntMatrix, Vector, integer_kernel
from .linalg import bareiss_det, bareiss_rank

logger = logging.getLogger(__name__)

Halfspace = tuple[Vector, int]


@dataclass(frozen=True)
class FacetSystem:
    """Irredundant H-description ``a·x <= b`` inside the affine hull ``a·x == b``.

    All normals are primitive integer vectors.
    """

    inequalities: tuple[Halfspace, ...]
    equations: tuple[Halfspace, ...]

    def __len__(self) -> int:
        return len(self.inequalities)


@dataclass(frozen=True)
class Polytope:
    """Immutable lattice polytope.

    Vertices are lexicographically sorted, redundant points are removed
    and the facet system is computed once in :func:`make_polytope`.
    """

    ambient_dim: int
    vertices: tuple[Vector, ...]
    affine_dim: int
    facets: FacetSystem
    name: str | None = field(default=None, compare=False)

    @property
    def base_vertex(self) -> Vector:
        """The chosen base vertex v₀ (lexicographically smallest)."""
        return self.vertices[0]

    @property
    def is_full_dimensional(self) -> bool:
        """True when the affine hull is the whole ambient space."""
        return self.affine_dim == self.ambient_dim

    @property
    def is_simplex(self) -> bool:
        """True when there are exactly dim + 1 vertices."""
        return len(self.vertices) == self.affine_dim + 1

    def __repr__(self) -> str:
        label = f"{self.name!r}, " if self.name else ""
        return f"Polytope({label}dim={self.affine_dim}, vertices={list(self.vertices)})"


def _dot(a: Sequence[int], x: Sequence[int]) -> int:
    return sum(p * q for p, q in zip(a, x))


def _sub(x: Sequence[int], y: Sequence[int]) -> Vector:
    return tuple(p - q for p, q in zip(x, y))


def _primitive(v: Sequence[int]) -> tuple[Vector, int]:
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return tuple(v), 0
    return tuple(x // g for x in v), g


def _spanning_coordinates(differences: list[Vector], n: int, rank: int) -> list[int]:
    """Greedily pick ``rank`` coordinates on which the differences keep full rank."""
    chosen: list[int] = []
    for j in range(n):
        if len(chosen) == rank:
            break
        trial = chosen + [j]
        if bareiss_rank([[row[c] for c in trial] for row in differences]) == len(trial):
            chosen = trial
    return chosen


def _hull_facets(points: list[Vector], d: int) -> list[Halfspace]:
    """Facets of a full-dimensional point set in ℤ^d by brute force over d-subsets."""
    if d == 0:
        return []
    found: set[Halfspace] = set()
    for subset in combinations(range(len(points)), d):
        base = points[subset[0]]
        rows = [_sub(points[i], base) for i in subset[1:]]
        normal = [
            (-1) ** c * bareiss_det([[row[k] for k in range(d) if k != c] for row in rows])
            for c in range(d)
        ]
        normal, g = _primitive(normal)
        if g == 0:
            continue
        offset = _dot(normal, base)
        values = [_dot(normal, p) - offset for p in points]
        if all(v <= 0 for v in values):
            found.add((normal, offset))
        elif all(v >= 0 for v in values):
            found.add((tuple(-x for x in normal), -offset))
    return sorted(found)


def _affine_hull(points: list[Vector], n: int) -> tuple[int, list[int], tuple[Halfspace, ...]]:
    base = points[0]
    differences = [_sub(p, base) for p in points[1:]]
    rank = bareiss_rank(differences) if differences else 0
    coords = _spanning_coordinates(differences, n, rank) if differences else []
    kernel = integer_kernel(IntMatrix.from_rows(differences, cols=n))
    equations = []
    for i in range(kernel.rows):
        normal, _ = _primitive(kernel.row(i))
        equations.append((normal, _dot(normal, base)))
    return rank, coords, tuple(sorted(equations))


def facet_enumeration(vertices: Sequence[Vector], affine_dim: int | None = None) -> FacetSystem:
    """Complete irredundant H-description of ``conv(vertices)`` within its affine hull.

    Non-full-dimensional inputs are handled by projecting onto ``affine_dim``
    coordinates on which the projection is injective; facet normals are
    supported on those coordinates.
    """
    points = sorted(set(tuple(v) for v in vertices))
    if not points:
        raise EmptyPolytopeError("cannot enumerate facets of an empty point set")
    n = len(points[0])
    rank, coords, equations = _affine_hull(points, n)
    if affine_dim is not None and affine_dim != rank:
        raise ValueError(f"points span dimension {rank}, not {affine_dim}")

    projected = sorted(set(tuple(p[c] for c in coords) for p in points))
    inequalities = []
    for normal, offset in _hull_facets(projected, rank):
        lifted = [0] * n
        for c, value in zip(coords, normal):
            lifted[c] = value
        inequalities.append((tuple(lifted), offset))
    logger.debug("%d points in dimension %d: %d facets", len(points), rank, len(inequalities))
    return FacetSystem(tuple(sorted(inequalities)), equations)


def _is_vertex(point: Vector, facets: FacetSystem, d: int) -> bool:
    if d == 0:
        return True
    tight = [list(a) for a, b in facets.inequalities if _dot(a, point) == b]
    return len(tight) >= d and bareiss_rank(tight) == d


def make_polytope(points: Iterable[Sequence[int]], name: str | None = None) -> Polytope:
    """Convex hull of integer points, normalized to its vertices.

    Raises:
        EmptyPolytopeError: if no points are given
        DimensionMismatchError: if the points do not share an ambient dimension
    """
    pts = [tuple(int(x) for x in p) for p in points]
    if not pts:
        raise EmptyPolytopeError("a polytope needs at least one point")
    n = len(pts[0])
    for p in pts:
        if len(p) != n:
            raise DimensionMismatchError(f"point {p} is not in dimension {n}")
    pts = sorted(set(pts))

    facets = facet_enumeration(pts)
    d = len(pts[0]) - len(facets.equations)
    vertices = tuple(p for p in pts if _is_vertex(p, facets, d))
    return Polytope(ambient_dim=n, vertices=vertices, affine_dim=d, facets=facets, name=name)


def _check_dimension(P: Polytope, x: Sequence[int]) -> None:
    if len(x) != P.ambient_dim:
        raise DimensionMismatchError(
            f"point {tuple(x)} has {len(x)} coordinates, polytope lives in dimension {P.ambient_dim}"
        )


def contains(P: Polytope, x: Sequence[int], k: int = 1) -> bool:
    """True iff ``x`` lies in the dilate ``kP``."""
    _check_dimension(P, x)
    if k < 0:
        raise ValueError(f"dilation factor must be nonnegative, got {k}")
    for a, b in P.facets.equations:
        if _dot(a, x) != k * b:
            return False
    return all(_dot(a, x) <= k * b for a, b in P.facets.inequalities)


def contains_interior(P: Polytope, x: Sequence[int], k: int = 1) -> bool:
    """True iff ``x`` lies in the relative interior of ``kP``."""
    _check_dimension(P, x)
    if k < 1:
        raise ValueError(f"dilation factor must be positive, got {k}")
    for a, b in P.facets.equations:
        if _dot(a, x) != k * b:
            return False
    return all(_dot(a, x) < k * b for a, b in P.facets.inequalities)


def dilate_vertices(P: Polytope, k: int) -> list[Vector]:
    """Vertices of ``kP``."""
    return [tuple(k * c for c in v) for v in P.vertices]


def normalized_volume_of_simplex(P: Polytope) -> int:
    """d!·vol of a full-dimensional simplex, as |det| of its edge matrix."""
    if not (P.is_simplex and P.is_full_dimensional):
        raise ValueError("determinant volume needs a full-dimensional simplex")
    base = P.base_vertex
    return abs(bareiss_det([_sub(v, base) for v in P.vertices[1:]]))
