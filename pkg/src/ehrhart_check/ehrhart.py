"""Lattice points of dilates, Ehrhart counts and h*-vectors."""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb, factorial, prod
from typing import Literal

from .config import CapsConfig
from .errors import CapExceededError, ConsistencyError
from .lattice import Vector
from .polytope import FacetSystem, Polytope, contains, contains_interior, facet_enumeration

logger = logging.getLogger(__name__)

Method = Literal["auto", "box", "fiber"]

DEFAULT_CAPS = CapsConfig()

# Box scans are used up to this affine dimension, fiber enumeration above it.
BOX_SCAN_MAX_DIM = 3


@dataclass(frozen=True)
class HStarVector:
    """The h*-vector ``(h*_0, ..., h*_d)`` of a d-dimensional lattice polytope."""

    entries: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.entries[i] if 0 <= i < len(self.entries) else 0

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def dimension(self) -> int:
        """d = dim P."""
        return len(self.entries) - 1

    @property
    def degree(self) -> int:
        """Index of the last nonzero entry."""
        return max(i for i, h in enumerate(self.entries) if h)

    @property
    def codegree(self) -> int:
        """d + 1 - degree."""
        return self.dimension + 1 - self.degree

    @property
    def normalized_volume(self) -> int:
        """Sum of the entries."""
        return sum(self.entries)


def _bounding_box(P: Polytope, k: int) -> list[range]:
    return [
        range(k * min(v[i] for v in P.vertices), k * max(v[i] for v in P.vertices) + 1)
        for i in range(P.ambient_dim)
    ]


def _box_scan(P: Polytope, k: int, caps: CapsConfig) -> list[Vector]:
    box = _bounding_box(P, k)
    size = prod(len(r) for r in box)
    if size > caps.max_box_points:
        raise CapExceededError("bounding box scan", size, caps.max_box_points)
    return [x for x in product(*box) if contains(P, x, k)]


@lru_cache(maxsize=128)
def _prefix_projections(P: Polytope) -> tuple[FacetSystem, ...]:
    """Facet systems of the projections of P onto its first 1, 2, ..., n coordinates."""
    systems = []
    for i in range(1, P.ambient_dim):
        systems.append(facet_enumeration([v[:i] for v in P.vertices]))
    systems.append(P.facets)
    return tuple(systems)


def _coordinate_range(system: FacetSystem, prefix: list[int], k: int) -> range:
    i = len(prefix)
    lo: int | None = None
    hi: int | None = None
    for a, b in system.equations:
        rest = k * b - sum(a[j] * prefix[j] for j in range(i))
        if a[i] == 0:
            if rest != 0:
                return range(0)
            continue
        value, remainder = divmod(rest, a[i])
        if remainder:
            return range(0)
        lo = value if lo is None else max(lo, value)
        hi = value if hi is None else min(hi, value)
    for a, b in system.inequalities:
        rest = k * b - sum(a[j] * prefix[j] for j in range(i))
        if a[i] > 0:
            bound = rest // a[i]
            hi = bound if hi is None else min(hi, bound)
        elif a[i] < 0:
            bound = -(rest // -a[i])
            lo = bound if lo is None else max(lo, bound)
        elif rest < 0:
            return range(0)
    if lo is None or hi is None:
        raise ConsistencyError(f"projection of {system} is unbounded")
    return range(lo, hi + 1)


def _fiber_scan(P: Polytope, k: int, caps: CapsConfig) -> list[Vector]:
    systems = _prefix_projections(P)
    found: list[Vector] = []
    prefix: list[int] = []

    def descend(level: int) -> None:
        for value in _coordinate_range(systems[level], prefix, k):
            prefix.append(value)
            if level + 1 == P.ambient_dim:
                found.append(tuple(prefix))
                if len(found) > caps.max_box_points:
                    raise CapExceededError("fiber enumeration", len(found), caps.max_box_points)
            else:
                descend(level + 1)
            prefix.pop()

    descend(0)
    return found


@lru_cache(maxsize=1024)
def _points(P: Polytope, k: int, method: Method, caps: CapsConfig) -> tuple[Vector, ...]:
    if k == 0 or P.ambient_dim == 0:
        return ((0,) * P.ambient_dim,)
    if method == "auto":
        method = "box" if P.affine_dim <= BOX_SCAN_MAX_DIM else "fiber"
    pts = _box_scan(P, k, caps) if method == "box" else _fiber_scan(P, k, caps)
    logger.debug("%s: %d lattice points in %d-th dilate (%s)", P.name or "polytope", len(pts), k, method)
    return tuple(sorted(pts))


def lattice_points(
    P: Polytope, k: int = 1, method: Method = "auto", caps: CapsConfig | None = None
) -> list[Vector]:
    """Lattice points of ``kP``, sorted lexicographically.

    The 0-th dilate is the single point at the origin.
    """
    if k < 0:
        raise ValueError(f"dilation factor must be nonnegative, got {k}")
    return list(_points(P, k, method, caps or DEFAULT_CAPS))


def interior_points(P: Polytope, k: int = 1, caps: CapsConfig | None = None) -> list[Vector]:
    """Lattice points in the relative interior of ``kP``."""
    return [x for x in lattice_points(P, k, caps=caps) if contains_interior(P, x, k)]


def ehrhart_counts(P: Polytope, caps: CapsConfig | None = None) -> tuple[int, ...]:
    """``(L_P(0), ..., L_P(d))``."""
    return tuple(len(lattice_points(P, k, caps=caps)) for k in range(P.affine_dim + 1))


def interior_counts(P: Polytope, k_max: int, caps: CapsConfig | None = None) -> tuple[int, ...]:
    """``(#(1·P°), ..., #(k_max·P°))`` over the lattice."""
    return tuple(len(interior_points(P, k, caps)) for k in range(1, k_max + 1))


def h_star_from_counts(counts: tuple[int, ...]) -> tuple[int, ...]:
    """h*-entries from the first d + 1 Ehrhart counts."""
    d = len(counts) - 1
    return tuple(
        sum((-1) ** i * comb(d + 1, i) * counts[j - i] for i in range(j + 1))
        for j in range(d + 1)
    )


def h_star(P: Polytope, caps: CapsConfig | None = None) -> HStarVector:
    """The h*-vector of P.

    Raises:
        ConsistencyError: if an entry is negative or h*_0 != 1
    """
    entries = h_star_from_counts(ehrhart_counts(P, caps))
    if entries[0] != 1 or any(h < 0 for h in entries):
        raise ConsistencyError(f"impossible h*-vector {entries} for {P!r}")
    return HStarVector(entries)


def codegree_by_scan(P: Polytope, caps: CapsConfig | None = None) -> int:
    """Smallest ℓ > 0 such that ℓP has an interior lattice point."""
    for ell in range(1, P.affine_dim + 2):
        if interior_points(P, ell, caps):
            return ell
    raise ConsistencyError(f"no interior lattice point up to dilate {P.affine_dim + 1} in {P!r}")


def degree_and_codegree(P: Polytope, caps: CapsConfig | None = None) -> tuple[int, int]:
    """``(deg P, c(P))`` with the codegree found by a direct interior scan."""
    s = h_star(P, caps).degree
    c = codegree_by_scan(P, caps)
    if s + c != P.affine_dim + 1:
        raise ConsistencyError(f"degree {s} and codegree {c} do not add up to dim + 1 for {P!r}")
    return s, c


def _binomial_polynomial(t: int, d: int) -> int:
    """C(t, d) extended to all integers t as a polynomial in t."""
    return prod(t - r for r in range(d)) // factorial(d)


def ehrhart_value(hstar: HStarVector, k: int) -> int:
    """Ehrhart polynomial L_P(k), valid for every integer k."""
    d = hstar.dimension
    return sum(h * _binomial_polynomial(k + d - i, d) for i, h in enumerate(hstar.entries))
