"""Random corpora and systematic verification of the degree-two implication web.

Every corpus member is analyzed on its own: the invariants are computed
once, a series of named checks runs against them and the outcome is
folded into a :class:`~ehrhart_check.formats.CorpusSummary`. A failed
check is *fatal* when it contradicts a statement this package relies on
and *external* when it concerns a cited result that is only sanity-checked.

Predicates of the implication web:

    A  h*_1 >= h*_2
    B  h*_1 + 1 does not divide h*_2
    C  IDP
    D  spanning
    E  deg P~ != 1
    F  level
"""

import logging
import multiprocessing as mp
import random
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import starmap
from typing import Literal

from .assertions import expect_golden
from .catalog import GOLDENS, catalog_examples
from .config import CapsConfig, CorpusConfig
from .ehrhart import (
    DEFAULT_CAPS,
    HStarVector,
    Method,
    codegree_by_scan,
    degree_and_codegree,
    ehrhart_value,
    h_star,
    h_star_from_counts,
    interior_points,
    lattice_points,
)
from .errors import CapExceededError, ConsistencyError
from .formats import (
    BettiJson,
    CheckTally,
    CorpusSummary,
    IdpJson,
    ImplicationsJson,
    LevelJson,
    NonImplicationJson,
    ReportJson,
    SpanningJson,
    ViolationJson,
    WitnessJson,
    serialize_text,
)
from .graded import GradedBettiCell, betti_table, graded_dims, koszul_betti, toric_generator_counts
from .lattice import Vector
from .monoid import (
    GeneratorProfile,
    IdpResult,
    LevelReport,
    SublatticeReport,
    generator_profile,
    is_clean_simplex,
    is_idp,
    is_level,
    level_decomposition_holds,
    spanning_criterion,
    spanning_report,
    sumset,
)
from .polytope import Polytope, dilate_vertices, make_polytope, normalized_volume_of_simplex

logger = logging.getLogger(__name__)

Severity = Literal["fatal", "external"]
ArrowStatus = Literal["pass", "violated", "n/a"]
OracleMode = Literal["hstar", "idp"]

PREDICATES = ("A", "B", "C", "D", "E", "F")

# premise => conclusion, evaluated on degree-two polytopes
ARROWS: dict[str, tuple[str, str]] = {
    "A=>B": ("A", "B"),
    "A=>C": ("A", "C"),
    "B=>E": ("B", "E"),
    "C=>D": ("C", "D"),
    "D=>E": ("D", "E"),
}
EQUIVALENCE = "E<=>F"

# implications that fail in degree two; the corpus collects members showing it
NON_IMPLICATIONS: dict[str, tuple[tuple[str, ...], str]] = {
    "B=>A": (("B",), "A"),
    "B=>C": (("B",), "C"),
    "B=>D": (("B",), "D"),
    "C=>A": (("C",), "A"),
    "C=>B": (("C",), "B"),
    "D=>A": (("D",), "A"),
    "D=>B": (("D",), "B"),
    "D=>C": (("D",), "C"),
    "E=>B": (("E",), "B"),
    "E=>D": (("E",), "D"),
    "B&C=>A": (("B", "C"), "A"),
}

SHARPNESS_TAGS = ("reeve", "koelman")

HULL_ATTEMPTS = 20


@dataclass(frozen=True)
class ImplicationReport:
    """Predicates A-F of one polytope and the status of every arrow between them."""

    predicates: dict[str, bool]
    arrows: dict[str, ArrowStatus]
    degree_two: bool
    full_dimensional: bool = True

    @property
    def violated(self) -> list[str]:
        """Names of violated arrows."""
        return sorted(name for name, status in self.arrows.items() if status == "violated")


@dataclass(frozen=True)
class Violation:
    """A failed check on one polytope; ``vertices`` reproduce the input."""

    check: str
    severity: Severity
    polytope: str
    message: str
    vertices: tuple[Vector, ...] = ()

    def to_json(self) -> ViolationJson:
        return ViolationJson(
            check=self.check,
            severity=self.severity,
            polytope=self.polytope,
            message=self.message,
            vertices=[list(v) for v in self.vertices],
        )


@dataclass(frozen=True)
class PolytopeAnalysis:
    """Everything the corpus run learned about one member."""

    polytope: Polytope
    report: ReportJson | None
    implications: ImplicationReport | None
    applied: tuple[str, ...] = ()
    violations: tuple[Violation, ...] = ()
    sharpness: tuple[str, ...] = ()
    skipped: bool = False


@dataclass(frozen=True)
class Corpus:
    """Generated members followed by the injected catalog examples."""

    polytopes: tuple[Polytope, ...]
    generated: int
    injected: int

    @property
    def accepted(self) -> int:
        return len(self.polytopes) - self.injected

    @property
    def acceptance_rate(self) -> float:
        return self.accepted / self.generated if self.generated else 0.0


@dataclass(frozen=True)
class CorpusRun:
    """Summary plus the per-polytope reports in canonical order."""

    summary: CorpusSummary
    reports: tuple[ReportJson, ...]

    @property
    def passed(self) -> bool:
        return self.summary.passed


@dataclass(frozen=True)
class OracleComparison:
    """A fast-path value next to its brute-force counterpart."""

    mode: OracleMode
    fast: tuple
    oracle: tuple

    @property
    def match(self) -> bool:
        return self.fast == self.oracle


def _label(P: Polytope) -> str:
    return P.name or serialize_text(P).replace("\n", "; ").strip("; ")


# Implication web


def predicates_of(
    hstar: HStarVector, idp: IdpResult, spanning: SublatticeReport, level: LevelReport
) -> dict[str, bool]:
    """The predicate row A-F."""
    return {
        "A": hstar[1] >= hstar[2],
        "B": hstar[2] % (hstar[1] + 1) != 0,
        "C": idp.value,
        "D": spanning.is_spanning,
        "E": spanning.deg_tilde != 1,
        "F": level.is_level,
    }


def evaluate_arrows(
    predicates: dict[str, bool], degree_two: bool, full_dimensional: bool = True
) -> dict[str, ArrowStatus]:
    """Mark each arrow pass/violated; everything is n/a outside degree two.

    Arrows through D are n/a for polytopes that are not full-dimensional.
    """
    arrows: dict[str, ArrowStatus] = {}
    for name, (premise, conclusion) in ARROWS.items():
        if not degree_two or (not full_dimensional and "D" in (premise, conclusion)):
            arrows[name] = "n/a"
        elif predicates[premise] and not predicates[conclusion]:
            arrows[name] = "violated"
        else:
            arrows[name] = "pass"
    if not degree_two:
        arrows[EQUIVALENCE] = "n/a"
    else:
        arrows[EQUIVALENCE] = "pass" if predicates["E"] == predicates["F"] else "violated"
    return arrows


def implication_report(
    P: Polytope,
    caps: CapsConfig | None = None,
    *,
    hstar: HStarVector | None = None,
    idp: IdpResult | None = None,
    spanning: SublatticeReport | None = None,
    level: LevelReport | None = None,
) -> ImplicationReport:
    """Predicates and arrow checks for P; already computed pieces may be passed in."""
    hstar = hstar if hstar is not None else h_star(P, caps)
    idp = idp if idp is not None else is_idp(P, caps)
    spanning = spanning if spanning is not None else spanning_report(P, caps)
    level = level if level is not None else is_level(P, caps)
    predicates = predicates_of(hstar, idp, spanning, level)
    degree_two = hstar.degree == 2
    return ImplicationReport(
        predicates=predicates,
        arrows=evaluate_arrows(predicates, degree_two, P.is_full_dimensional),
        degree_two=degree_two,
        full_dimensional=P.is_full_dimensional,
    )


# Corpus generation


def random_simplex(dim: int, entry_bound: int, rng: random.Random, name: str | None = None) -> Polytope:
    """Simplex with a vertex at the origin and a random lower-triangular HNF edge matrix.

    Diagonal entries are drawn from 1..entry_bound, entries left of the
    diagonal from 0..diagonal-1; the normalized volume is the diagonal product.
    """
    if dim < 1:
        raise ValueError(f"dimension must be positive, got {dim}")
    if entry_bound < 1:
        raise ValueError(f"entry bound must be positive, got {entry_bound}")
    rows = []
    for i in range(dim):
        diagonal = rng.randint(1, entry_bound)
        below = tuple(rng.randrange(diagonal) for _ in range(i))
        rows.append(below + (diagonal,) + (0,) * (dim - i - 1))
    return make_polytope([(0,) * dim, *rows], name=name)


def random_hull(
    dim: int,
    config: CorpusConfig,
    rng: random.Random,
    caps: CapsConfig | None = None,
    name: str | None = None,
) -> Polytope:
    """Convex hull of a random subset of the lattice points of a small simplex dilate."""
    simplex = random_simplex(dim, config.entry_bound, rng)
    factor = rng.choice((1, 2))
    points = lattice_points(simplex, factor, caps=caps)
    for _ in range(HULL_ATTEMPTS):
        size = rng.randint(config.vertex_min, config.vertex_max)
        chosen = points if size >= len(points) else rng.sample(points, size)
        P = make_polytope(chosen, name=name)
        if P.affine_dim == dim:
            return P
    return make_polytope(dilate_vertices(simplex, factor), name=name)


def generate_corpus(config: CorpusConfig, caps: CapsConfig | None = None) -> Corpus:
    """Draw candidates until ``count`` pass the degree filter or the budget runs out.

    The catalog examples are appended to every nonempty corpus when
    ``inject_catalog`` is set.
    """
    caps = caps or DEFAULT_CAPS
    rng = random.Random(config.seed)
    accepted: list[Polytope] = []
    generated = 0
    while len(accepted) < config.count and generated < config.budget:
        dim = rng.randint(config.dim_min, config.dim_max)
        name = f"corpus-{generated:06d}"
        generated += 1
        try:
            if rng.random() < config.simplex_fraction:
                P = random_simplex(dim, config.entry_bound, rng, name=name)
            else:
                P = random_hull(dim, config, rng, caps, name=name)
            degree = h_star(P, caps).degree
        except CapExceededError as e:
            logger.warning("Skipping candidate %s: %s", name, e)
            continue
        if config.degree is not None and degree != config.degree:
            continue
        accepted.append(P)
        if len(accepted) % 100 == 0:
            logger.info("Accepted %d of %d candidates", len(accepted), generated)

    if len(accepted) < config.count:
        logger.warning(
            "Generation budget of %d exhausted with %d of %d polytopes", config.budget, len(accepted), config.count
        )
    injected = catalog_examples() if config.inject_catalog and config.count > 0 else []
    return Corpus(tuple(accepted) + tuple(injected), generated, len(injected))


# Per-polytope checks


class _CheckRun:
    """Records which checks applied to one polytope and which of them failed."""

    def __init__(self, P: Polytope):
        self.P = P
        self.applied: list[str] = []
        self.violations: list[Violation] = []
        self.sharpness: list[str] = []

    def check(self, name: str, holds: bool, message: str, severity: Severity = "fatal") -> None:
        self.applied.append(name)
        if holds:
            return
        label = _label(self.P)
        if severity == "fatal":
            logger.error("Check %s failed on %s: %s", name, label, message)
        else:
            logger.warning("External check %s failed on %s: %s", name, label, message)
        self.violations.append(Violation(name, severity, label, message, self.P.vertices))


@dataclass(frozen=True)
class _Facts:
    hstar: HStarVector
    codegree: int
    idp: IdpResult
    profile: GeneratorProfile
    spanning: SublatticeReport
    criterion: bool
    level: LevelReport
    implications: ImplicationReport
    n_points: int


def _hstar_suite(run: _CheckRun, f: _Facts, caps: CapsConfig) -> None:
    P, h, d = run.P, f.hstar, run.P.affine_dim
    interior = len(interior_points(P, 1, caps))
    run.check("hstar-linear-term", h[1] == f.n_points - d - 1, f"h*_1 = {h[1]} with {f.n_points} lattice points")
    run.check("hstar-top-entry", h[d] == interior, f"h*_d = {h[d]} with {interior} interior points")
    if d >= 1:
        run.check("top-entry-bound", h[d] <= h[1], f"h*_d = {h[d]} exceeds h*_1 = {h[1]}")
    if P.is_simplex and P.is_full_dimensional and d >= 1:
        det = normalized_volume_of_simplex(P)
        run.check("simplex-volume", h.normalized_volume == det, f"sum of h* is {h.normalized_volume}, determinant {det}")
    run.check(
        "codegree-identity",
        h.degree + f.codegree == d + 1,
        f"degree {h.degree} + codegree {f.codegree} != {d + 1}",
    )
    for k in (1, 2):
        expected = (-1) ** d * len(interior_points(P, k, caps))
        value = ehrhart_value(h, -k)
        run.check("reciprocity", value == expected, f"L(-{k}) = {value}, interior count gives {expected}")


def _monoid_suite(run: _CheckRun, f: _Facts, caps: CapsConfig) -> None:
    h, s, d = f.hstar, f.hstar.degree, run.P.affine_dim
    run.check(
        "idp-profile",
        f.profile.idp == f.idp.value,
        f"is_idp says {f.idp.value}, generator profile {f.profile.counts}",
    )
    if s >= 1 and h[s] <= h[1]:
        late = sorted(k for k, g in f.profile.counts.items() if k >= s and g)
        run.check("generator-degree-bound", not late, f"generators in degrees {late} although h*_{s} <= h*_1")
    beyond = sorted(k for k, g in f.profile.counts.items() if k > max(1, min(s, d - 1)) and g)
    run.check("generator-dimension-bound", not beyond, f"generators in degrees {beyond}")
    if s == 2 and h[2] <= h[1]:
        run.check("degree-two-idp", f.idp.value, f"h* = {h.entries} but not IDP (witness {f.idp.witness})")
    run.check("idp-implies-spanning", not f.idp.value or f.spanning.is_spanning, f"IDP with index {f.spanning.q}")
    if s == 2 and not f.idp.value and h[2] == h[1] + 1:
        run.sharpness.append("reeve")

    bound = max(1, min(s, d - 1))
    try:
        dims = graded_dims(run.P, bound, caps)
    except CapExceededError as e:
        logger.warning("Graded dimensions skipped on %s: %s", _label(run.P), e)
        return
    bounded = all(a <= r and a <= m for a, r, m in zip(dims.subalgebra, dims.ring, dims.symmetric))
    run.check("graded-dims-bound", bounded, f"A = {dims.subalgebra}, R = {dims.ring}, Sym = {dims.symmetric}")
    run.check(
        "graded-dims-idp",
        (dims.subalgebra == dims.ring) == f.idp.value,
        f"A = {dims.subalgebra}, R = {dims.ring} up to degree {bound}, is_idp says {f.idp.value}",
    )


def _spanning_suite(run: _CheckRun, f: _Facts) -> None:
    if not run.P.is_full_dimensional:
        return
    h, ht, s, d = f.hstar, f.spanning.h_tilde, f.hstar.degree, run.P.affine_dim
    spanning = f.spanning.is_spanning
    dominated = ht[1] == h[1] and ht[d] == h[d] and all(h[i] >= ht[i] for i in range(1, d + 1))
    run.check("sublattice-entries", dominated, f"h* = {h.entries}, h*(P~) = {ht.entries}")
    if f.criterion:
        run.check("spanning-criterion", spanning, f"h* = {h.entries} meets the criterion, index {f.spanning.q}")
    if d >= 5 and s >= 3:
        run.check("criterion-fails-high-degree", not f.criterion, f"h* = {h.entries} meets the criterion")
    if s == 2 and h[1] >= h[2]:
        run.check("degree-two-spanning", spanning, f"h* = {h.entries}, index {f.spanning.q}")
    if d == 3 and h[1] + h[3] >= h[2]:
        run.check("dimension-three-spanning", spanning, f"h* = {h.entries}, index {f.spanning.q}")
    if d == 4 and s >= 3 and h[1] + h[4] >= h[2] + h[3]:
        run.check(
            "dimension-four-spanning",
            spanning and h[1] == h[2] == h[3] == h[4],
            f"h* = {h.entries}, index {f.spanning.q}",
        )
    if spanning and s >= 2:
        low = [i for i in range(1, s) if h[1] > h[i]]
        run.check("spanning-lower-bound", not low, f"h*_1 > h*_i for i in {low}", severity="external")
    if f.spanning.deg_tilde == 1:
        # Vol(P~) = 1 + h*_1 divides Vol(P); in degree two the rest is h*_2
        rest = h.normalized_volume - 1 - h[1]
        run.check("tilde-degree-one-divisibility", rest % (h[1] + 1) == 0, f"h* = {h.entries}, h*(P~) = {ht.entries}")


def _level_suite(run: _CheckRun, f: _Facts, caps: CapsConfig) -> None:
    s = f.hstar.degree
    run.check(
        "level-codegree", f.level.codegree == f.hstar.codegree, f"scan {f.level.codegree}, h* {f.hstar.codegree}"
    )
    decomposes = level_decomposition_holds(run.P, caps)
    run.check("level-decomposition", decomposes == f.level.is_level, f"criterion {decomposes}, generators {f.level.generator_degrees}")
    if not run.P.is_full_dimensional:
        return
    if f.level.is_level:
        run.check("level-tilde-degree", f.spanning.deg_tilde != s - 1, f"level with deg P~ = {s - 1}")
    if f.spanning.deg_tilde == s - 1:
        c_tilde = codegree_by_scan(f.spanning.p_tilde, caps)
        run.check("tilde-codegree", c_tilde == f.level.codegree + 1, f"c(P~) = {c_tilde}, c(P) = {f.level.codegree}")


def _web_suite(run: _CheckRun, f: _Facts) -> None:
    if f.implications.degree_two:
        run.check("implication-web", not f.implications.violated, f"violated {f.implications.violated}")
    name = run.P.name
    if name in GOLDENS:
        try:
            expect_golden(name, f.hstar.entries, f.implications.predicates, f.spanning.q, f.spanning.deg_tilde)
        except AssertionError as e:
            run.check("golden-row", False, str(e))
        else:
            run.check("golden-row", True, "")


def _betti_suite(run: _CheckRun, f: _Facts, caps: CapsConfig) -> list[GradedBettiCell]:
    P, h, s = run.P, f.hstar, f.hstar.degree
    cells: list[GradedBettiCell] = []
    try:
        for j in sorted(f.profile.counts):
            value = koszul_betti(P, 0, j, caps)
            cells.append(GradedBettiCell(0, j, value))
            run.check("betti-generators", value == f.profile.counts[j], f"beta_0,{j} = {value}, g_{j} = {f.profile.counts[j]}")
        if s >= 1 and h[s] <= h[1]:
            for p in range(h[1] - h[s] + 1):
                value = koszul_betti(P, p, p + s, caps)
                cells.append(GradedBettiCell(p, p + s, value))
                run.check("betti-vanishing", value == 0, f"beta_{p},{p + s} = {value}")
    except CapExceededError as e:
        logger.warning("Betti suite stopped on %s: %s", _label(P), e)
    return cells


def _toric_suite(run: _CheckRun, f: _Facts, caps: CapsConfig) -> dict[int, int] | None:
    P, h, s, d = run.P, f.hstar, f.hstar.degree, run.P.affine_dim
    try:
        counts = toric_generator_counts(P, caps.toric_max_degree, caps)
    except CapExceededError as e:
        logger.warning("Toric suite skipped on %s: %s", _label(P), e)
        return None
    if s >= 1 and h[s] <= h[1] - 1:
        late = sorted(j for j, g in counts.items() if j > s and g)
        run.check("toric-degree-bound", not late, f"toric generators in degrees {late}")
    if d + 1 in counts and not is_clean_simplex(P, caps):
        run.check("toric-dimension-bound", counts[d + 1] == 0, f"{counts[d + 1]} generators in degree {d + 1}")
    if d == 2 and h[1] > 0:
        quadrics_only = not any(g for j, g in counts.items() if j >= 3)
        run.check("polygon-quadrics", quadrics_only == (h[2] < h[1]), f"h* = {h.entries}, generators {counts}")
        if not quadrics_only and h[2] == h[1]:
            run.sharpness.append("koelman")
    return counts


def _degree_map(counts: dict[int, int]) -> dict[str, int]:
    return {str(k): v for k, v in sorted(counts.items())}


def _idp_json(idp: IdpResult) -> IdpJson:
    witness = None
    if idp.witness is not None:
        degree, point = idp.witness
        witness = WitnessJson(degree=degree, point=list(point))
    return IdpJson(value=idp.value, witness=witness)


def _spanning_json(spanning: SublatticeReport, criterion: bool) -> SpanningJson:
    return SpanningJson(
        value=spanning.is_spanning,
        q=spanning.q,
        h_tilde=list(spanning.h_tilde),
        deg_tilde=spanning.deg_tilde,
        full_dimensional=spanning.full_dimensional,
        criterion=criterion,
    )


def _level_json(level: LevelReport) -> LevelJson:
    return LevelJson(value=level.is_level, codegree=level.codegree, generator_degrees=list(level.generator_degrees))


def _implications_json(report: ImplicationReport) -> ImplicationsJson:
    return ImplicationsJson(degree_two=report.degree_two, predicates=report.predicates, arrows=report.arrows)


def _betti_json(cells: Sequence[GradedBettiCell]) -> list[BettiJson]:
    unique = {(c.p, c.j): c.value for c in cells}
    return [BettiJson(p=p, j=j, value=v) for (p, j), v in sorted(unique.items())]


def _base_report(P: Polytope, hstar: HStarVector, codegree: int) -> dict:
    return {
        "name": P.name,
        "ambient": P.ambient_dim,
        "dim": P.affine_dim,
        "vertices": [list(v) for v in P.vertices],
        "hstar": list(hstar),
        "degree": hstar.degree,
        "codegree": codegree,
        "volume": hstar.normalized_volume,
    }


def analyze_polytope(
    P: Polytope, config: CorpusConfig | None = None, caps: CapsConfig | None = None
) -> PolytopeAnalysis:
    """Compute every invariant of P and run all checks that apply to it."""
    config = config or CorpusConfig()
    caps = caps or DEFAULT_CAPS
    run = _CheckRun(P)
    try:
        hstar = h_star(P, caps)
        idp = is_idp(P, caps)
        profile = generator_profile(P, max(1, min(hstar.degree, P.affine_dim)), caps)
        spanning = spanning_report(P, caps)
        level = is_level(P, caps)
    except CapExceededError as e:
        logger.warning("Skipping %s: %s", _label(P), e)
        return PolytopeAnalysis(P, None, None, skipped=True)
    except ConsistencyError as e:
        run.check("consistency", False, str(e))
        return PolytopeAnalysis(P, None, None, tuple(run.applied), tuple(run.violations))

    facts = _Facts(
        hstar=hstar,
        codegree=codegree_by_scan(P, caps),
        idp=idp,
        profile=profile,
        spanning=spanning,
        criterion=spanning_criterion(P, hstar),
        level=level,
        implications=implication_report(P, caps, hstar=hstar, idp=idp, spanning=spanning, level=level),
        n_points=len(lattice_points(P, 1, caps=caps)),
    )
    _hstar_suite(run, facts, caps)
    _monoid_suite(run, facts, caps)
    _spanning_suite(run, facts)
    _level_suite(run, facts, caps)
    _web_suite(run, facts)

    cells: list[GradedBettiCell] = []
    toric: dict[int, int] | None = None
    if facts.n_points <= config.betti_max_points:
        cells = _betti_suite(run, facts, caps)
        if config.toric and idp.value:
            toric = _toric_suite(run, facts, caps)

    report = ReportJson(
        **_base_report(P, hstar, facts.codegree),
        idp=_idp_json(idp),
        generators_by_degree=_degree_map(profile.counts),
        spanning=_spanning_json(spanning, facts.criterion),
        level=_level_json(level),
        betti=_betti_json(cells) if cells else None,
        toric_generator_degrees=_degree_map(toric) if toric is not None else None,
        implications=_implications_json(facts.implications),
        violations=[v.check for v in run.violations] or None,
    )
    return PolytopeAnalysis(
        polytope=P,
        report=report,
        implications=facts.implications,
        applied=tuple(run.applied),
        violations=tuple(run.violations),
        sharpness=tuple(run.sharpness),
    )


def build_report(
    P: Polytope,
    *,
    idp: bool = False,
    spanning: bool = False,
    level: bool = False,
    betti: tuple[int, int] | None = None,
    toric: int | None = None,
    implications: bool = False,
    caps: CapsConfig | None = None,
) -> ReportJson:
    """Report with h*, degree, codegree and volume plus the selected invariants.

    Raises:
        CapExceededError: if a selected computation is beyond the caps
        NotIDPError: if toric counts are requested for a non-IDP polytope
    """
    caps = caps or DEFAULT_CAPS
    hstar = h_star(P, caps)
    _, codegree = degree_and_codegree(P, caps)
    fields = _base_report(P, hstar, codegree)

    idp_result = is_idp(P, caps) if idp or implications else None
    spanning_result = spanning_report(P, caps) if spanning or implications else None
    level_result = is_level(P, caps) if level or implications else None
    if idp:
        fields["idp"] = _idp_json(idp_result)
        fields["generators_by_degree"] = _degree_map(generator_profile(P, caps=caps).counts)
    if spanning:
        fields["spanning"] = _spanning_json(spanning_result, spanning_criterion(P, hstar))
    if level:
        fields["level"] = _level_json(level_result)
    if betti is not None:
        p_max, j_max = betti
        fields["betti"] = _betti_json(betti_table(P, p_max, j_max, caps))
    if toric is not None:
        fields["toric_generator_degrees"] = _degree_map(toric_generator_counts(P, toric, caps))
    if implications:
        fields["implications"] = _implications_json(
            implication_report(P, caps, hstar=hstar, idp=idp_result, spanning=spanning_result, level=level_result)
        )
    return ReportJson(**fields)


# Corpus runs


def _canonical_key(analysis: PolytopeAnalysis) -> tuple[str, str]:
    return serialize_text(analysis.polytope), analysis.polytope.name or ""


def summarize(analyses: Sequence[PolytopeAnalysis], corpus: Corpus, config: CorpusConfig) -> CorpusSummary:
    """Fold per-polytope analyses into a summary."""
    predicate_counts = {name: 0 for name in PREDICATES}
    predicate_counts["degree_two"] = 0
    checks: dict[str, CheckTally] = {}
    non_implications = {name: NonImplicationJson() for name in NON_IMPLICATIONS}
    sharpness = {tag: 0 for tag in SHARPNESS_TAGS}
    violations: list[Violation] = []
    skipped = 0

    for analysis in analyses:
        if analysis.skipped:
            skipped += 1
            continue
        for name in analysis.applied:
            checks.setdefault(name, CheckTally()).applied += 1
        for violation in analysis.violations:
            checks[violation.check].violations += 1
            violations.append(violation)
        for tag in analysis.sharpness:
            sharpness[tag] += 1

        report = analysis.implications
        if report is None:
            continue
        for name, value in report.predicates.items():
            predicate_counts[name] += value
        if not report.degree_two:
            continue
        predicate_counts["degree_two"] += 1
        for name, (premises, conclusion) in NON_IMPLICATIONS.items():
            if not report.full_dimensional and "D" in premises + (conclusion,):
                continue
            if all(report.predicates[p] for p in premises) and not report.predicates[conclusion]:
                entry = non_implications[name]
                entry.count += 1
                if entry.witness is None:
                    entry.witness = _label(analysis.polytope)
                    entry.vertices = [list(v) for v in analysis.polytope.vertices]

    fatal = sum(v.severity == "fatal" for v in violations)
    external = len(violations) - fatal
    return CorpusSummary(
        config=config.model_dump(),
        generated=corpus.generated,
        accepted=corpus.accepted,
        acceptance_rate=corpus.acceptance_rate,
        injected=corpus.injected,
        skipped=skipped,
        predicate_counts=predicate_counts,
        checks=dict(sorted(checks.items())),
        non_implications=non_implications,
        sharpness=sharpness,
        violations=[v.to_json() for v in violations],
        fatal_violations=fatal,
        external_violations=external,
        passed=not violations,
    )


def corpus_verify(
    config: CorpusConfig | None = None,
    caps: CapsConfig | None = None,
    polytopes: Sequence[Polytope] | None = None,
) -> CorpusRun:
    """Generate a corpus (or take ``polytopes`` as given) and verify every member.

    Members are analyzed independently, in worker processes when
    ``config.workers > 1``; results are sorted by canonical serialization
    so the output does not depend on scheduling.
    """
    config = config or CorpusConfig()
    caps = caps or DEFAULT_CAPS
    if polytopes is None:
        corpus = generate_corpus(config, caps)
    else:
        corpus = Corpus(tuple(polytopes), generated=0, injected=len(polytopes))
    logger.info("Verifying %d polytopes (%d generated)", len(corpus.polytopes), corpus.generated)

    tasks = [(P, config, caps) for P in corpus.polytopes]
    if config.workers == 1 or len(tasks) < 2:
        analyses = list(starmap(analyze_polytope, tasks))
    else:
        with mp.get_context("spawn").Pool(processes=config.workers) as pool:
            analyses = pool.starmap(analyze_polytope, tasks)
    analyses.sort(key=_canonical_key)

    summary = summarize(analyses, corpus, config)
    logger.info(
        "Corpus done: %d checks, %d fatal and %d external violations",
        sum(t.applied for t in summary.checks.values()),
        summary.fatal_violations,
        summary.external_violations,
    )
    reports = tuple(a.report for a in analyses if a.report is not None)
    return CorpusRun(summary, reports)


# Brute-force oracles


def enforce_dimension_cap(P: Polytope, caps: CapsConfig | None = None) -> None:
    """Raise CapExceededError when P is beyond ``caps.max_dimension``."""
    caps = caps or DEFAULT_CAPS
    if P.affine_dim > caps.max_dimension:
        raise CapExceededError("polytope dimension", P.affine_dim, caps.max_dimension)


def hstar_by_method(P: Polytope, method: Method, caps: CapsConfig | None = None) -> tuple[int, ...]:
    """h* from Ehrhart counts taken with one specific enumeration method."""
    counts = tuple(len(lattice_points(P, k, method=method, caps=caps)) for k in range(P.affine_dim + 1))
    return h_star_from_counts(counts)


def idp_by_compositions(P: Polytope, caps: CapsConfig | None = None) -> IdpResult:
    """IDP by comparing kP ∩ ℤⁿ with all k-fold sums of lattice points, 2 <= k <= dim P - 1."""
    points = lattice_points(P, 1, caps=caps)
    for k in range(2, P.affine_dim):
        sums = sumset(points, k)
        missing = [z for z in lattice_points(P, k, caps=caps) if z not in sums]
        if missing:
            return IdpResult(False, (k, missing[0]))
    return IdpResult(True)


def compare_oracle(P: Polytope, mode: OracleMode, caps: CapsConfig | None = None) -> OracleComparison:
    """Run a fast path and its brute-force counterpart on a small polytope.

    Raises:
        CapExceededError: if P exceeds the oracle dimension or volume caps
    """
    caps = caps or DEFAULT_CAPS
    if P.affine_dim > caps.oracle_max_dimension:
        raise CapExceededError("oracle dimension", P.affine_dim, caps.oracle_max_dimension)
    fast_hstar = hstar_by_method(P, "fiber", caps)
    volume = sum(fast_hstar)
    if volume > caps.oracle_max_volume:
        raise CapExceededError("oracle volume", volume, caps.oracle_max_volume)
    if mode == "hstar":
        return OracleComparison(mode, fast_hstar, hstar_by_method(P, "box", caps))
    fast = is_idp(P, caps)
    oracle = idp_by_compositions(P, caps)
    return OracleComparison(mode, (fast.value, fast.witness), (oracle.value, oracle.witness))
