"""Tests for polytope file formats and report serialization."""

import json

import jsonschema
import pytest

from ehrhart_check.errors import InputError
from ehrhart_check.formats import (
    MAX_SAFE_INTEGER,
    CorpusSummary,
    ReportJson,
    dump_model,
    json_safe,
    load_polytope,
    load_schema,
    parse_polytope,
    parse_polytope_json,
    parse_polytope_normaliz,
    parse_polytope_text,
    serialize_json,
    serialize_text,
    vertices_to_text,
)
from ehrhart_check.harness import build_report

REEVE_TEXT = """\
# Reeve tetrahedron
ambient 3
0 0 0
1 0 0

0 1 0
1 1 2
"""


class TestTextFormat:
    def test_parse(self, reeve):
        P = parse_polytope_text(REEVE_TEXT)
        assert P == reeve
        assert P.name is None

    def test_bad_token_position(self):
        with pytest.raises(InputError) as excinfo:
            parse_polytope_text("ambient 3\n0 0 0\n1 x 0\n")
        assert (excinfo.value.line, excinfo.value.column) == (3, 3)
        assert "line 3, column 3" in str(excinfo.value)

    def test_wrong_arity(self):
        with pytest.raises(InputError) as excinfo:
            parse_polytope_text("ambient 2\n0 0\n1 0 0\n")
        assert excinfo.value.line == 3

    def test_missing_header(self):
        with pytest.raises(InputError, match="ambient"):
            parse_polytope_text("0 0\n1 0\n")

    def test_empty(self):
        with pytest.raises(InputError, match="empty"):
            parse_polytope_text("# nothing here\n\n")

    def test_no_vertices(self):
        with pytest.raises(InputError, match="no vertices"):
            parse_polytope_text("ambient 2\n")

    def test_roundtrip(self, parity):
        assert parse_polytope_text(serialize_text(parity)) == parity

    def test_vertices_to_text(self):
        assert vertices_to_text(2, [(0, 0), (1, -1)]) == "ambient 2\n0 0\n1 -1\n"


class TestNormalizFormat:
    def test_polytope_section(self, reeve):
        text = "amb_space 3\npolytope 4\n0 0 0\n1 0 0\n0 1 0\n1 1 2\n"
        assert parse_polytope_normaliz(text) == reeve

    def test_homogenized_vertices(self, square_2):
        text = "amb_space 2\nvertices 4\n0 0 1\n2 0 1\n0 2 1\n2 2 1\n"
        assert parse_polytope_normaliz(text) == square_2

    def test_rational_vertices_rejected(self):
        with pytest.raises(InputError, match="denominator"):
            parse_polytope_normaliz("amb_space 1\nvertices 2\n0 1\n1 2\n")

    def test_short_section(self):
        with pytest.raises(InputError, match="expected 3 vertex rows"):
            parse_polytope_normaliz("amb_space 2\npolytope 3\n0 0\n1 0\n")

    def test_unknown_section(self):
        with pytest.raises(InputError):
            parse_polytope_normaliz("amb_space 2\ncone 2\n1 0\n0 1\n")


class TestJsonFormat:
    def test_parse(self, square_2):
        P = parse_polytope_json('{"ambient": 2, "vertices": [[0, 0], [2, 0], [0, 2], [2, 2]], "name": "sq"}')
        assert P == square_2
        assert P.name == "sq"

    def test_syntax_error_position(self):
        with pytest.raises(InputError) as excinfo:
            parse_polytope_json('{"ambient": 2,\n "vertices": [[0, 0],, [1, 0]]}')
        assert excinfo.value.line == 2

    def test_bad_vertex(self):
        with pytest.raises(InputError, match="vertex 1"):
            parse_polytope_json('{"ambient": 2, "vertices": [[0, 0], [1, "a"]]}')

    def test_missing_keys(self):
        with pytest.raises(InputError):
            parse_polytope_json('{"vertices": [[0]]}')

    @pytest.mark.parametrize(
        "text",
        [
            '{"ambient": 2, "vertices": [[0, 0], [true, 0], [0, 1]]}',
            '{"ambient": true, "vertices": [[0], [1]]}',
        ],
    )
    def test_booleans_are_not_integers(self, text):
        with pytest.raises(InputError):
            parse_polytope_json(text)

    def test_roundtrip(self, reeve):
        P = parse_polytope_json(serialize_json(reeve))
        assert P == reeve
        assert P.name == "reeve"


class TestAutoDetection:
    @pytest.mark.parametrize(
        "text",
        [
            REEVE_TEXT,
            '{"ambient": 3, "vertices": [[0,0,0],[1,0,0],[0,1,0],[1,1,2]]}',
            "amb_space 3\npolytope 4\n0 0 0\n1 0 0\n0 1 0\n1 1 2\n",
        ],
    )
    def test_sniffs_format(self, text, reeve):
        assert parse_polytope(text) == reeve

    def test_load_uses_file_stem(self, polytope_file, reeve):
        path = polytope_file(reeve, name="tetra.txt")
        P = load_polytope(path)
        assert P == reeve
        assert P.name == "tetra"

    def test_load_rejects_invalid_utf8(self, tmp_path):
        path = tmp_path / "latin1.txt"
        path.write_bytes("ambient 1\n0\n# d\xe9j\xe0\n1\n".encode("latin-1"))
        with pytest.raises(InputError) as excinfo:
            load_polytope(path)
        assert (excinfo.value.line, excinfo.value.column) == (3, 4)


class TestJsonSafe:
    def test_large_integers_become_strings(self):
        big = MAX_SAFE_INTEGER + 1
        assert json_safe({"a": [1, big, -big], "b": True}) == {"a": [1, str(big), str(-big)], "b": True}
        assert json_safe(MAX_SAFE_INTEGER) == MAX_SAFE_INTEGER

    def test_dict_keys_become_strings(self):
        assert json_safe({2: 3}) == {"2": 3}

    def test_dump_model_is_one_line(self, reeve):
        line = dump_model(build_report(reeve))
        assert "\n" not in line
        assert json.loads(line)["hstar"] == [1, 0, 1, 0]


class TestSchema:
    def test_minimal_report_validates(self, reeve):
        jsonschema.validate(json.loads(dump_model(build_report(reeve))), load_schema())

    def test_full_report_validates(self, square_2):
        report = build_report(square_2, idp=True, spanning=True, level=True, betti=(1, 2), toric=2, implications=True)
        jsonschema.validate(json.loads(dump_model(report)), load_schema())

    def test_unknown_field_rejected(self, reeve):
        payload = json.loads(dump_model(build_report(reeve)))
        payload["extra"] = 1
        with pytest.raises(jsonschema.ValidationError):
            jsonschema.validate(payload, load_schema())

    def test_model_defaults(self):
        report = ReportJson(ambient=1, dim=1, vertices=[[0], [1]])
        assert report.schema_version == load_schema()["properties"]["schema_version"]["const"]
        assert CorpusSummary(config={}, generated=0, accepted=0, acceptance_rate=0.0, injected=0).passed
