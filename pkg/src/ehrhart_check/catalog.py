"""Named polytopes with published invariants."""

from .polytope import Polytope, make_polytope


def reeve_simplex(height: int = 2) -> Polytope:
    """Reeve tetrahedron conv(0, e1, e2, (1, 1, height)); h* = (1, 0, height - 1, 0)."""
    return make_polytope(
        [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, height)],
        name="reeve" if height == 2 else f"reeve-{height}",
    )


def parity_polytope() -> Polytope:
    """4-polytope on the even-coordinate-sum 0/1 points; h* = (1, 2, 5, 0, 0), not spanning."""
    return make_polytope(
        [
            (0, 0, 0, 0),
            (1, 1, 0, 0),
            (1, 0, 1, 0),
            (1, 0, 0, 1),
            (0, 1, 1, 0),
            (0, 1, 0, 1),
            (0, 0, 1, 1),
        ],
        name="parity-4",
    )


def idp_simplex_156() -> Polytope:
    """IDP 3-simplex with h* = (1, 5, 6, 0)."""
    return make_polytope([(0, 0, 0), (1, 0, 0), (0, 4, 0), (1, 0, 3)], name="idp-156")


def idp_simplex_169() -> Polytope:
    """IDP 3-simplex with h* = (1, 6, 9, 0)."""
    return make_polytope([(0, 0, 0), (1, 0, 0), (0, 4, 0), (1, 0, 4)], name="idp-169")


def doubled_square() -> Polytope:
    """[0, 2]²; h* = (1, 6, 1), toric ideal generated by quadrics."""
    return make_polytope([(0, 0), (2, 0), (0, 2), (2, 2)], name="square-2")


def nonlevel_simplex() -> Polytope:
    """Non-spanning 3-simplex whose P̃ has degree 1; h* = (1, 1, 2, 0), not level."""
    return make_polytope([(0, 0, 0), (2, 2, 0), (1, 0, 1), (0, 1, 1)], name="nonlevel-3")


def unit_simplex(d: int) -> Polytope:
    """conv(0, e_1, ..., e_d)."""
    vertices = [tuple(0 for _ in range(d))]
    vertices += [tuple(int(i == j) for j in range(d)) for i in range(d)]
    return make_polytope(vertices, name=f"unit-simplex-{d}")


def unit_cube(d: int = 3) -> Polytope:
    """[0, 1]^d."""
    vertices = [tuple((m >> i) & 1 for i in range(d)) for m in range(2**d)]
    return make_polytope(vertices, name=f"unit-cube-{d}")


def catalog_examples() -> list[Polytope]:
    """The five example polytopes injected into every corpus."""
    return [
        reeve_simplex(),
        parity_polytope(),
        idp_simplex_156(),
        idp_simplex_169(),
        doubled_square(),
    ]


# Expected predicate rows: A = h*_1 >= h*_2, B = h*_1 + 1 does not divide h*_2,
# C = IDP, D = spanning, E = deg P̃ != 1, F = level.
GOLDENS: dict[str, dict] = {
    "reeve": {
        "hstar": (1, 0, 1, 0),
        "predicates": {"A": False, "B": False, "C": False, "D": False, "E": True, "F": True},
        "q": 2,
        "deg_tilde": 0,
    },
    "parity-4": {
        "hstar": (1, 2, 5, 0, 0),
        "predicates": {"A": False, "B": True, "C": False, "D": False, "E": True, "F": True},
        "q": 2,
        "deg_tilde": 2,
    },
    "idp-156": {
        "hstar": (1, 5, 6, 0),
        "predicates": {"A": False, "B": False, "C": True, "D": True, "E": True, "F": True},
        "q": 1,
        "deg_tilde": 2,
    },
    "idp-169": {
        "hstar": (1, 6, 9, 0),
        "predicates": {"A": False, "B": True, "C": True, "D": True, "E": True, "F": True},
        "q": 1,
        "deg_tilde": 2,
    },
    "square-2": {
        "hstar": (1, 6, 1),
        "predicates": {"A": True, "B": True, "C": True, "D": True, "E": True, "F": True},
        "q": 1,
        "deg_tilde": 2,
    },
    "nonlevel-3": {
        "hstar": (1, 1, 2, 0),
        "predicates": {"A": False, "B": False, "C": False, "D": False, "E": False, "F": False},
        "q": 2,
        "deg_tilde": 1,
    },
}
