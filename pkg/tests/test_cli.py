import io
import json
from dataclasses import replace
from pathlib import Path

import jsonschema
import numpy as np
import pytest

from grassmann_tops import catalog, make_field
from grassmann_tops.cli import (
    EXIT_GUARD,
    EXIT_PRECONDITION,
    EXIT_USAGE,
    build_report,
    cmd_examples,
    format_matrix_file,
    main,
    parse_matrix_file,
    parse_matrix_text,
)
from grassmann_tops.codes import random_projective_generator
from grassmann_tops.errors import FieldError, ParseError, RangeError
from grassmann_tops.matq import MatF

SCHEMA = json.loads((Path(__file__).parents[1] / "docs" / "report_schema.json").read_text())


def write_example(tmp_path, example, name="m.txt"):
    path = tmp_path / name
    path.write_text(format_matrix_file(MatF(make_field(example.q), example.rows), comment=example.name))
    return path


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_example_a(tmp_path):
    path = write_example(tmp_path, catalog.EXAMPLE_A)
    field, m = parse_matrix_file(path)
    assert field.q == 2 and m.shape == (5, 10)
    assert m.tolist() == catalog.EXAMPLE_A.rows


def test_parse_errors():
    with pytest.raises(RangeError) as info:
        parse_matrix_text("q 2\n1 0 2\n")
    assert (info.value.line, info.value.column) == (2, 5)
    with pytest.raises(ParseError) as info:
        parse_matrix_text("q 2\n1 0 1\n1 0\n")
    assert info.value.line == 3
    with pytest.raises(ParseError):
        parse_matrix_text("# nothing\n")
    with pytest.raises(ParseError):
        parse_matrix_text("field 2\n1 0\n")
    with pytest.raises(ParseError):
        parse_matrix_text("q 2\n1 x\n")
    with pytest.raises(ParseError):
        parse_matrix_text("q 3\n")
    with pytest.raises(FieldError):
        parse_matrix_text("q 6\n1 0\n")


@pytest.mark.parametrize("q", [2, 3, 4, 9, 7])
def test_round_trip(q):
    F = make_field(q)
    m = random_projective_generator(F, 3, 5, np.random.default_rng(q))
    field, back = parse_matrix_text(format_matrix_file(m, comment="round\ntrip"))
    assert field == F and back == m


@pytest.mark.parametrize("example", catalog.EXAMPLES, ids=lambda e: e.name)
def test_report_matches_schema_and_is_deterministic(example):
    m = MatF(make_field(example.q), example.rows)
    r1 = build_report(m, with_oracle=True)
    r2 = build_report(m, with_oracle=True)
    jsonschema.validate(r1, SCHEMA)
    r1.pop("timing_seconds"), r2.pop("timing_seconds")
    r1["oracle"].pop("witness"), r2["oracle"].pop("witness")
    assert json.dumps(r1, sort_keys=True) == json.dumps(r2, sort_keys=True)


def test_classify_example_c(tmp_path, capsys):
    path = write_example(tmp_path, catalog.EXAMPLE_C)
    code, out, _ = run(capsys, "classify", str(path), "--oracle", "--json")
    assert code == 0
    report = json.loads(out)
    jsonschema.validate(report, SCHEMA)
    assert report["verdict"]["is_top"] and not report["verdict"]["is_star_too"]
    assert report["line_class"]["kind"] == "NoLine"
    assert report["oracle"]["maximal"] is True


def test_classify_text_outputs(tmp_path, capsys):
    path = write_example(tmp_path, catalog.EXAMPLE_D)
    code, out, _ = run(capsys, "classify", str(path))
    assert code == 0 and "is_top=True is_star_too=True" in out
    path = write_example(tmp_path, catalog.EXAMPLE_A)
    code, out, _ = run(capsys, "classify", str(path), "--oracle")
    assert code == 0 and "ManyLines (945)" in out and "witness" in out


def test_classify_example_a_json(tmp_path, capsys):
    path = write_example(tmp_path, catalog.EXAMPLE_A)
    code, out, _ = run(capsys, "classify", str(path), "--json")
    report = json.loads(out)
    assert code == 0 and report["oracle"] is None
    assert report["verdict"]["is_top"] is False
    assert report["line_class"] == {"kind": "ManyLines", "count": 945, "core_basis": None}


def test_classify_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("q 2\n1 1 0 1\n0 0 1 1\n")  # repeated column
    assert run(capsys, "classify", str(bad))[0] == EXIT_PRECONDITION
    small = tmp_path / "small.txt"
    small.write_text("q 2\n1 0 0\n0 1 0\n0 0 1\n")  # k = n - 1
    assert run(capsys, "classify", str(small))[0] == EXIT_PRECONDITION
    ragged = tmp_path / "ragged.txt"
    ragged.write_text("q 2\n1 0 0\n0 1\n")
    code, _, err = run(capsys, "classify", str(ragged))
    assert code == EXIT_USAGE and "line 3" in err
    assert run(capsys, "classify", str(tmp_path / "missing.txt"))[0] == EXIT_USAGE


def test_guard_exit_code(tmp_path, capsys, monkeypatch):
    import grassmann_tops.matq as matq

    monkeypatch.setattr(matq, "SUBSPACE_LIMIT", 10)
    path = write_example(tmp_path, catalog.EXAMPLE_B)
    assert run(capsys, "classify", str(path))[0] == EXIT_GUARD


def test_gaussian(capsys):
    assert run(capsys, "gaussian", "5", "4", "2")[1].strip() == "31"
    assert run(capsys, "gaussian", "4", "2", "2")[1].strip() == "35"
    assert run(capsys, "gaussian", "3", "0", "7")[1].strip() == "1"
    assert run(capsys, "gaussian", "3", "5", "2")[0] == EXIT_USAGE
    with pytest.raises(SystemExit) as info:
        main(["gaussian", "three", "1", "2"])
    assert info.value.code == EXIT_USAGE


def test_examples_command(capsys):
    code, out, _ = run(capsys, "examples")
    assert code == 0
    assert out.count("PASS") == 4 and "FAIL" not in out


def test_examples_json(capsys):
    code, out, _ = run(capsys, "examples", "--json")
    reports = json.loads(out)
    assert code == 0 and len(reports) == 4
    for r in reports:
        jsonschema.validate(r, SCHEMA)
    assert [r["label"] for r in reports] == [e.name for e in catalog.EXAMPLES]


def test_examples_detects_corruption():
    rows = [row[:] for row in catalog.EXAMPLE_C.rows]
    rows[3][9] = 0  # turns example c into example a's sibling with a different Y
    broken = replace(catalog.EXAMPLE_C, rows=rows)
    out = io.StringIO()
    assert cmd_examples(examples=[catalog.EXAMPLE_A, broken], out=out) != 0
    assert "FAIL 10-5-c" in out.getvalue()
    # a corruption that breaks projectivity is reported, not raised
    rows = [row[:] for row in catalog.EXAMPLE_D.rows]
    rows[0][5] = 0
    rows[2][5] = 0
    rows[3][5] = 0
    out = io.StringIO()
    assert cmd_examples(examples=[replace(catalog.EXAMPLE_D, rows=rows)], out=out) != 0
    assert "FAIL 6-4" in out.getvalue()
