"""Graded pieces of the Ehrhart ring, toric ideal generators and Koszul Betti numbers.

The Ehrhart ring R = k[P] is regarded as a module over S = Sym R_1, a
polynomial ring in N = #(P ∩ ℤⁿ) variables x_p. A monomial of S (or a
basis element of a Koszul term) carries a fine degree in ℤⁿ, the sum of
the points involved; all maps below preserve it, so every matrix is block
diagonal and ranks are computed block by block.
"""

import logging
from collections import defaultdict
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from math import comb

from .config import CapsConfig
from .ehrhart import DEFAULT_CAPS, lattice_points
from .errors import CapExceededError, NotIDPError
from .lattice import Vector
from .linalg import SparseRow, exact_rank
from .monoid import is_idp, sumset
from .polytope import Polytope

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GradedDims:
    """Dimensions of R_j, A_j = k[R_1]_j and Sym^j R_1 for j = 0 .. max_j."""

    ring: tuple[int, ...]
    subalgebra: tuple[int, ...]
    symmetric: tuple[int, ...]

    @property
    def max_j(self) -> int:
        return len(self.ring) - 1


@dataclass(frozen=True)
class GradedBettiCell:
    """β_{p,j} of k[P] over Sym R_1."""

    p: int
    j: int
    value: int


def _add(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def graded_dims(P: Polytope, max_j: int, caps: CapsConfig | None = None) -> GradedDims:
    """dim R_j by Ehrhart counts, dim A_j by iterated Minkowski sums of P ∩ ℤⁿ."""
    if max_j < 1:
        raise ValueError(f"max_j must be at least 1, got {max_j}")
    points = lattice_points(P, 1, caps=caps)
    n_vars = len(points)
    ring = tuple(len(lattice_points(P, j, caps=caps)) for j in range(max_j + 1))
    subalgebra = []
    current = {tuple(0 for _ in range(P.ambient_dim))}
    for j in range(max_j + 1):
        subalgebra.append(len(current))
        current = {_add(a, p) for a in current for p in points}
    symmetric = tuple(comb(n_vars + j - 1, j) for j in range(max_j + 1))
    return GradedDims(ring, tuple(subalgebra), symmetric)


def _fibres(points: list[Vector], degree: int) -> dict[Vector, list[tuple[int, ...]]]:
    """Monomials of the given degree grouped by the lattice point they evaluate to."""
    fibres: dict[Vector, list[tuple[int, ...]]] = defaultdict(list)
    zero = tuple(0 for _ in points[0])
    for monomial in combinations_with_replacement(range(len(points)), degree):
        target = zero
        for i in monomial:
            target = _add(target, points[i])
        fibres[target].append(monomial)
    return fibres


def toric_generator_counts(P: Polytope, max_j: int, caps: CapsConfig | None = None) -> dict[int, int]:
    """Number of minimal generators of the toric ideal I of P in degrees 2 .. max_j.

    In degree j this is dim I_j - dim(S_1 · I_{j-1}). I_{j-1} is spanned by
    the differences m - m₀ of monomials in a common fibre; multiplying by
    each variable spans S_1 · I_{j-1}, whose rank is taken over ℚ.

    Raises:
        NotIDPError: if P is not IDP
        CapExceededError: if max_j or the monomial count is beyond the caps
    """
    caps = caps or DEFAULT_CAPS
    if max_j > caps.toric_max_degree:
        raise CapExceededError("toric generator degree", max_j, caps.toric_max_degree)
    idp = is_idp(P, caps)
    if not idp:
        raise NotIDPError(idp.witness)

    points = lattice_points(P, 1, caps=caps)
    n_vars = len(points)
    monomials = comb(n_vars + max_j - 1, max_j)
    if monomials > caps.koszul_nonzeros:
        raise CapExceededError("toric monomials", monomials, caps.koszul_nonzeros)

    counts: dict[int, int] = {}
    previous = _fibres(points, 1)
    for j in range(2, max_j + 1):
        current = _fibres(points, j)
        index = {m: i for fibre in current.values() for i, m in enumerate(fibre)}
        blocks: dict[Vector, list[SparseRow]] = defaultdict(list)
        for target, fibre in previous.items():
            if len(fibre) < 2:
                continue
            first = fibre[0]
            for other in fibre[1:]:
                for v, point in enumerate(points):
                    a = tuple(sorted(other + (v,)))
                    b = tuple(sorted(first + (v,)))
                    blocks[_add(target, point)].append({index[a]: 1, index[b]: -1})
        ideal_dim = sum(len(f) - 1 for f in current.values())
        rank = sum(
            exact_rank(rows, len(current[target]), caps.modular_prepass)
            for target, rows in blocks.items()
        )
        counts[j] = ideal_dim - rank
        logger.debug("toric ideal degree %d: dim %d, products span %d", j, ideal_dim, rank)
        previous = current
    return counts


def _koszul_basis(n_vars: int, wedge: int, points: list[Vector]) -> Iterator[tuple[tuple[int, ...], Vector]]:
    for subset in combinations(range(n_vars), wedge):
        for z in points:
            yield subset, z


def _koszul_rank(
    degree_one: list[Vector],
    wedge: int,
    ring_degree: int,
    P: Polytope,
    caps: CapsConfig,
) -> int:
    """Rank of ∂: Λ^wedge V ⊗ R_ring_degree -> Λ^{wedge-1} V ⊗ R_{ring_degree+1}."""
    if wedge == 0 or ring_degree < 0 or wedge > len(degree_one):
        return 0
    source = lattice_points(P, ring_degree, caps=caps)
    column_ids: dict[Vector, dict[tuple[tuple[int, ...], Vector], int]] = defaultdict(dict)
    blocks: dict[Vector, list[SparseRow]] = defaultdict(list)
    for subset, z in _koszul_basis(len(degree_one), wedge, source):
        fine = z
        for i in subset:
            fine = _add(fine, degree_one[i])
        ids = column_ids[fine]
        row: SparseRow = {}
        for t, i in enumerate(subset):
            key = (subset[:t] + subset[t + 1:], _add(z, degree_one[i]))
            column = ids.setdefault(key, len(ids))
            row[column] = -1 if t % 2 else 1
        blocks[fine].append(row)
    return sum(
        exact_rank(rows, len(column_ids[fine]), caps.modular_prepass)
        for fine, rows in blocks.items()
    )


def koszul_betti(P: Polytope, p: int, j: int, caps: CapsConfig | None = None) -> int:
    """β_{p,j}(k[P]) as the homology of the Koszul strand of degree j at Λ^p.

    Raises:
        CapExceededError: if the strand has more nonzeros than the cap
    """
    caps = caps or DEFAULT_CAPS
    if p < 0:
        raise ValueError(f"homological degree must be nonnegative, got {p}")
    if j < p:
        return 0
    degree_one = lattice_points(P, 1, caps=caps)
    n_vars = len(degree_one)
    if p > n_vars:
        return 0

    middle = comb(n_vars, p) * len(lattice_points(P, j - p, caps=caps))
    incoming = comb(n_vars, p + 1) * len(lattice_points(P, j - p - 1, caps=caps)) if j > p else 0
    nonzeros = middle * p + incoming * (p + 1)
    if nonzeros > caps.koszul_nonzeros:
        raise CapExceededError(f"Koszul strand (p={p}, j={j})", nonzeros, caps.koszul_nonzeros)

    outgoing_rank = _koszul_rank(degree_one, p, j - p, P, caps)
    incoming_rank = _koszul_rank(degree_one, p + 1, j - p - 1, P, caps)
    value = middle - outgoing_rank - incoming_rank
    logger.debug("beta_{%d,%d} = %d - %d - %d", p, j, middle, outgoing_rank, incoming_rank)
    return value


def betti_table(P: Polytope, p_max: int, j_max: int, caps: CapsConfig | None = None) -> list[GradedBettiCell]:
    """All β_{p,j} with p <= p_max and p <= j <= j_max."""
    return [
        GradedBettiCell(p, j, koszul_betti(P, p, j, caps))
        for p in range(p_max + 1)
        for j in range(p, j_max + 1)
    ]


def subalgebra_gap(P: Polytope, j: int, caps: CapsConfig | None = None) -> int:
    """dim R_j - dim A_j."""
    return len(lattice_points(P, j, caps=caps)) - len(sumset(lattice_points(P, 1, caps=caps), j))
