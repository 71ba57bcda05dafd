"""Polytope file formats and JSON report models.

Text format::

    ambient 3
    0 0 0
    1 0 0
    0 1 0
    1 1 2

Blank lines and lines starting with ``#`` are ignored. The JSON form is
``{"ambient": n, "vertices": [[...], ...], "name": "..."}``. A minimal
``amb_space N`` / ``polytope M`` vertex-list style is also accepted.
"""

import json
from collections.abc import Sequence
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, Field

from .errors import InputError
from .polytope import Polytope, make_polytope

SCHEMA_VERSION = "1.0"
SCHEMA_PATH = Path(__file__).parent / "schema" / "report.schema.json"

# Largest integer a double represents exactly; larger ones are emitted as strings.
MAX_SAFE_INTEGER = 2**53 - 1

Format = Literal["auto", "text", "json", "normaliz"]


def _parse_int(token: str, line: int, column: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise InputError(f"expected an integer, got {token!r}", line, column) from None


def _tokens(raw: str) -> list[tuple[int, str]]:
    """Whitespace-separated tokens with their 1-based columns."""
    out = []
    column = 0
    for token in raw.split():
        column = raw.index(token, column)
        out.append((column + 1, token))
        column += len(token)
    return out


def _content_lines(text: str) -> list[tuple[int, str]]:
    return [
        (number, raw)
        for number, raw in enumerate(text.splitlines(), start=1)
        if raw.strip() and not raw.lstrip().startswith("#")
    ]


def _read_vertices(lines: list[tuple[int, str]], ambient: int) -> list[tuple[int, ...]]:
    vertices = []
    for number, raw in lines:
        tokens = _tokens(raw)
        if len(tokens) != ambient:
            raise InputError(
                f"expected {ambient} coordinates, got {len(tokens)}", number, tokens[0][0]
            )
        vertices.append(tuple(_parse_int(tok, number, col) for col, tok in tokens))
    return vertices


def _header(line: tuple[int, str], keyword: str) -> int:
    number, raw = line
    tokens = _tokens(raw)
    if len(tokens) != 2 or tokens[0][1] != keyword:
        raise InputError(f"expected '{keyword} <n>'", number, tokens[0][0])
    value = _parse_int(tokens[1][1], number, tokens[1][0])
    if value < 0:
        raise InputError(f"{keyword} must be nonnegative", number, tokens[1][0])
    return value


def parse_polytope_text(text: str, name: str | None = None) -> Polytope:
    """Parse the ``ambient <n>`` text format."""
    lines = _content_lines(text)
    if not lines:
        raise InputError("empty polytope file", 1, 1)
    ambient = _header(lines[0], "ambient")
    vertices = _read_vertices(lines[1:], ambient)
    if not vertices:
        raise InputError("no vertices given", lines[0][0] + 1, 1)
    return make_polytope(vertices, name=name)


def parse_polytope_normaliz(text: str, name: str | None = None) -> Polytope:
    """Parse ``amb_space N`` followed by ``polytope M`` (or ``vertices M``) and M rows."""
    lines = _content_lines(text)
    if len(lines) < 2:
        raise InputError("expected amb_space and polytope sections", 1, 1)
    ambient = _header(lines[0], "amb_space")
    keyword = _tokens(lines[1][1])[0][1]
    if keyword not in ("polytope", "vertices"):
        raise InputError("expected 'polytope <m>' or 'vertices <m>'", lines[1][0], 1)
    count = _header(lines[1], keyword)
    rows = lines[2:2 + count]
    if len(rows) != count:
        raise InputError(f"expected {count} vertex rows, got {len(rows)}", lines[-1][0], 1)
    if keyword == "vertices":
        # homogenized rows end with a 1
        ambient_h = ambient + 1
        vertices = _read_vertices(rows, ambient_h)
        for (number, _), v in zip(rows, vertices):
            if v[-1] != 1:
                raise InputError("only lattice vertices with denominator 1 are supported", number, 1)
        vertices = [v[:-1] for v in vertices]
    else:
        vertices = _read_vertices(rows, ambient)
    return make_polytope(vertices, name=name)


def _is_json_int(value: Any) -> bool:
    # JSON true/false decode to bool, a subclass of int
    return isinstance(value, int) and not isinstance(value, bool)


def parse_polytope_json(text: str, name: str | None = None) -> Polytope:
    """Parse ``{"ambient": n, "vertices": [...], "name": ...}``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(e.msg, e.lineno, e.colno) from None
    if not isinstance(data, dict) or "ambient" not in data or "vertices" not in data:
        raise InputError("expected an object with 'ambient' and 'vertices'", 1, 1)
    ambient = data["ambient"]
    vertices = data["vertices"]
    if not _is_json_int(ambient) or not isinstance(vertices, list) or not vertices:
        raise InputError("'ambient' must be an integer and 'vertices' a nonempty list", 1, 1)
    for i, v in enumerate(vertices):
        if not isinstance(v, list) or len(v) != ambient or not all(_is_json_int(x) for x in v):
            raise InputError(f"vertex {i} is not a list of {ambient} integers", 1, 1)
    return make_polytope(vertices, name=data.get("name", name))


def parse_polytope(text: str, fmt: Format = "auto", name: str | None = None) -> Polytope:
    """Parse any supported format; ``auto`` sniffs the first content character/keyword."""
    if fmt == "auto":
        stripped = text.lstrip()
        if stripped.startswith("{"):
            fmt = "json"
        elif stripped.startswith("amb_space"):
            fmt = "normaliz"
        else:
            fmt = "text"
    parsers = {
        "text": parse_polytope_text,
        "json": parse_polytope_json,
        "normaliz": parse_polytope_normaliz,
    }
    return parsers[fmt](text, name=name)


def load_polytope(path: str | Path, fmt: Format = "auto") -> Polytope:
    """Load a polytope file; the name defaults to the file stem.

    Raises:
        InputError: if the file is not valid UTF-8 or does not parse
    """
    path = Path(path)
    data = path.read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        line_start = data.rfind(b"\n", 0, e.start) + 1
        line = data.count(b"\n", 0, e.start) + 1
        raise InputError(f"invalid UTF-8 byte 0x{data[e.start]:02x}", line, e.start - line_start + 1) from None
    return parse_polytope(text, fmt, name=path.stem)


def vertices_to_text(ambient: int, vertices: Sequence[Sequence[int]]) -> str:
    """Text format for a plain vertex list."""
    lines = [f"ambient {ambient}"]
    lines += [" ".join(str(x) for x in v) for v in vertices]
    return "\n".join(lines) + "\n"


def serialize_text(P: Polytope) -> str:
    """Canonical text form."""
    return vertices_to_text(P.ambient_dim, P.vertices)


def serialize_json(P: Polytope) -> str:
    """Canonical JSON form."""
    payload: dict[str, Any] = {"ambient": P.ambient_dim, "vertices": [list(v) for v in P.vertices]}
    if P.name:
        payload["name"] = P.name
    return json.dumps(payload)


def json_safe(value: Any) -> Any:
    """Replace integers beyond 2**53 - 1 in magnitude with decimal strings."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value) if abs(value) > MAX_SAFE_INTEGER else value
    if isinstance(value, dict):
        return {str(k): json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_safe(v) for v in value]
    return value


class WitnessJson(BaseModel):
    """A degree and a lattice point."""

    degree: int
    point: list[int]


class IdpJson(BaseModel):
    """Integer decomposition property."""

    value: bool
    witness: WitnessJson | None = None


class SpanningJson(BaseModel):
    """Sublattice report."""

    value: bool
    q: int
    h_tilde: list[int]
    deg_tilde: int
    full_dimensional: bool = True
    criterion: bool | None = None


class LevelJson(BaseModel):
    """Levelness report."""

    value: bool
    codegree: int
    generator_degrees: list[int]


class BettiJson(BaseModel):
    """One graded Betti number."""

    p: int
    j: int
    value: int


class ImplicationsJson(BaseModel):
    """Predicates A-F and the arrows between them."""

    degree_two: bool
    predicates: dict[str, bool]
    arrows: dict[str, Literal["pass", "violated", "n/a"]]


class ReportJson(BaseModel):
    """Invariants of one polytope."""

    schema_version: str = SCHEMA_VERSION
    name: str | None = None
    ambient: int
    dim: int
    vertices: list[list[int]]
    hstar: list[int] | None = None
    degree: int | None = None
    codegree: int | None = None
    volume: int | None = None
    idp: IdpJson | None = None
    generators_by_degree: dict[str, int] | None = None
    spanning: SpanningJson | None = None
    level: LevelJson | None = None
    betti: list[BettiJson] | None = None
    toric_generator_degrees: dict[str, int] | None = None
    implications: ImplicationsJson | None = None
    violations: list[str] | None = None


class ViolationJson(BaseModel):
    """A failed check on one polytope."""

    check: str
    severity: Literal["fatal", "external"]
    polytope: str
    message: str
    vertices: list[list[int]] = Field(default_factory=list)


class CheckTally(BaseModel):
    """How often a check applied and failed."""

    applied: int = 0
    violations: int = 0


class NonImplicationJson(BaseModel):
    """Corpus members showing that an implication fails."""

    count: int = 0
    witness: str | None = None
    vertices: list[list[int]] | None = None


class CorpusSummary(BaseModel):
    """Aggregate outcome of a corpus run."""

    schema_version: str = SCHEMA_VERSION
    config: dict[str, Any]
    generated: int
    accepted: int
    acceptance_rate: float
    injected: int
    skipped: int = 0
    predicate_counts: dict[str, int] = Field(default_factory=dict)
    checks: dict[str, CheckTally] = Field(default_factory=dict)
    non_implications: dict[str, NonImplicationJson] = Field(default_factory=dict)
    sharpness: dict[str, int] = Field(default_factory=dict)
    violations: list[ViolationJson] = Field(default_factory=list)
    fatal_violations: int = 0
    external_violations: int = 0
    passed: bool = True


def dump_model(model: BaseModel) -> str:
    """One-line JSON with unsafe integers turned into strings."""
    return json.dumps(json_safe(model.model_dump(exclude_none=True)))


def load_schema() -> dict:
    """The shipped ReportJson schema."""
    return json.loads(SCHEMA_PATH.read_text(encoding="utf-8"))
