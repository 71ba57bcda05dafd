"""Custom assertions for polytope invariants."""

from collections.abc import Mapping, Sequence

from .catalog import GOLDENS
from .config import CapsConfig
from .ehrhart import h_star
from .monoid import is_idp, spanning_report
from .polytope import Polytope


def _label(P: Polytope) -> str:
    return P.name or repr(P)


def expect_hstar(P: Polytope, expected: Sequence[int], caps: CapsConfig | None = None):
    """Assert the h*-vector of P.

    Args:
        P: Polytope under test
        expected: Full h*-vector including trailing zeros
        caps: Optional resource caps
    """
    actual = h_star(P, caps).entries
    assert actual == tuple(expected), f"Expected h* {tuple(expected)} for {_label(P)}, got {actual}"


def expect_idp(P: Polytope, expected: bool, caps: CapsConfig | None = None):
    """Assert whether P has the integer decomposition property."""
    result = is_idp(P, caps)
    assert result.value is expected, (
        f"Expected IDP={expected} for {_label(P)}, got {result.value} (witness {result.witness})"
    )


def expect_spanning_index(P: Polytope, q: int, caps: CapsConfig | None = None):
    """Assert the index of the lattice generated by P's lattice points."""
    actual = spanning_report(P, caps).q
    assert actual == q, f"Expected index {q} for {_label(P)}, got {actual}"


def expect_predicates(actual: Mapping[str, bool], expected: Mapping[str, bool]):
    """Assert a predicate row; only keys of ``expected`` are compared."""
    wrong = {k: actual.get(k) for k, v in expected.items() if actual.get(k) != v}
    assert not wrong, f"Predicates differ: expected {dict(expected)}, got {dict(actual)} (wrong: {sorted(wrong)})"


def expect_no_violated_arrows(arrows: Mapping[str, str]):
    """Assert that no arrow of an implication report is violated."""
    violated = sorted(name for name, status in arrows.items() if status == "violated")
    assert not violated, f"Violated implications: {violated}"


def expect_golden(
    name: str,
    hstar: Sequence[int],
    predicates: Mapping[str, bool],
    q: int,
    deg_tilde: int,
):
    """Assert a computed row against the catalog golden ``name``."""
    assert name in GOLDENS, f"No golden row named '{name}'"
    golden = GOLDENS[name]
    assert tuple(hstar) == golden["hstar"], f"{name}: expected h* {golden['hstar']}, got {tuple(hstar)}"
    expect_predicates(predicates, golden["predicates"])
    assert q == golden["q"], f"{name}: expected index {golden['q']}, got {q}"
    assert deg_tilde == golden["deg_tilde"], f"{name}: expected deg P~ {golden['deg_tilde']}, got {deg_tilde}"
