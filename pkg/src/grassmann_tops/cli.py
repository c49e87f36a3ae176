"""Command-line front end.

    grassmann-tops classify <file> [--oracle] [--json]
    grassmann-tops gaussian <n> <k> <q>
    grassmann-tops examples [--json]

Matrix files: optional ``#`` comment lines, then a ``q <int>`` header, then
one matrix row per line as whitespace-separated integers in ``[0, q)``.
Exit codes: 0 success, 1 example mismatch, 2 parse/usage error,
3 precondition failure, 4 enumeration guard, 5 oracle disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Sequence

from . import catalog, oracle, topclique
from .codes import is_projective_matrix
from .errors import FieldError, ParseError, PreconditionError, RangeError, TooLarge
from .gf import Field, make_field
from .matq import MatF, Subspace
from .qanalog import q_binomial

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_GUARD = 4
EXIT_DISAGREEMENT = 5


# -- matrix files --------------------------------------------------------------


def parse_matrix_text(text: str) -> tuple[Field, MatF]:
    field = None
    rows: list[list[int]] = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if field is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "q":
                raise ParseError("expected header 'q <int>'", lineno, 1)
            try:
                q = int(parts[1])
            except ValueError:
                raise ParseError(f"invalid field size {parts[1]!r}", lineno, raw.index(parts[1]) + 1)
            field = make_field(q)
            continue
        row = []
        col = 0
        for token in raw.split():
            col = raw.index(token, col)
            try:
                value = int(token)
            except ValueError:
                raise ParseError(f"invalid entry {token!r}", lineno, col + 1)
            if not 0 <= value < field.q:
                raise RangeError(f"entry {value} outside [0, {field.q})", lineno, col + 1)
            row.append(value)
            col += len(token)
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(f"row has {len(row)} entries, expected {width}", lineno)
        rows.append(row)
    if field is None:
        raise ParseError("missing 'q <int>' header")
    if not rows:
        raise ParseError("matrix has no rows")
    return field, MatF(field, rows)


def parse_matrix_file(path) -> tuple[Field, MatF]:
    return parse_matrix_text(Path(path).read_text())


def format_matrix_file(m: MatF, comment: str | None = None) -> str:
    lines = [f"# {line}" for line in comment.splitlines()] if comment else []
    lines.append(f"q {m.field.q}")
    lines.extend(" ".join(str(x) for x in row) for row in m.tolist())
    return "\n".join(lines) + "\n"


# -- reports -------------------------------------------------------------------


def _basis(s: Subspace | None):
    return None if s is None else s.generator.tolist()


def build_report(m: MatF, *, with_oracle: bool = False) -> dict:
    start = time.perf_counter()
    a = topclique.analyze(m)
    line = a.line_class
    report = {
        "input": {"q": m.field.q, "n": m.cols, "k_plus_1": m.rows},
        "projective": is_projective_matrix(m),
        "w_size": len(a.w_set),
        "y_size": len(a.y_set),
        "y_vectors": [list(y) for y in a.y_set],
        "clique_size": len(a.clique),
        "clique_generators": [c.generator.tolist() for c in a.sorted_clique()],
        "span_y_dim": a.span_y_dim,
        "core": None if a.core is None else {"dim": a.core.dim, "basis": _basis(a.core)},
        "line_class": {"kind": line.kind.value, "count": line.count, "core_basis": _basis(line.core)},
        "verdict": {
            "is_top": a.verdict.is_top,
            "is_star_too": a.verdict.is_star_too,
            "reason": a.verdict.reason.value,
            "star_size": a.verdict.star_size,
        },
        "oracle": None,
    }
    if with_oracle:
        report["oracle"] = _oracle_section(m, a)
    report["timing_seconds"] = round(time.perf_counter() - start, 6)
    return report


def _oracle_section(m: MatF, a: topclique.CliqueAnalysis) -> dict:
    brute = oracle.brute_force_clique(a.u)
    section = {
        "clique_agrees": brute == a.clique,
        "duality_agrees": None,
        "maximal": None,
        "maximality_agrees": None,
        "witness": None,
    }
    if a.y_set:
        section["duality_agrees"] = oracle.verify_duality(m)
    if brute:
        maximal, witness = oracle.maximality_check(brute)
        section["maximal"] = maximal
        section["maximality_agrees"] = maximal == a.verdict.is_top
        section["witness"] = None if witness is None else witness.generator.tolist()
    return section


def oracle_agrees(report: dict) -> bool:
    section = report.get("oracle")
    if section is None:
        return True
    return all(section[key] is not False for key in ("clique_agrees", "duality_agrees", "maximality_agrees"))


def format_report(report: dict) -> str:
    inp = report["input"]
    k = inp["k_plus_1"] - 1
    lines = [
        f"U = [{inp['n']},{inp['k_plus_1']}]_{inp['q']}  (k = {k}), projective: {report['projective']}",
        f"|W| = {report['w_size']}, |Y| = {report['y_size']}, dim<Y> = {report['span_y_dim']}",
    ]
    for y in report["y_vectors"]:
        lines.append(f"  y = ({', '.join(map(str, y))})")
    lines.append(f"clique size: {report['clique_size']}")
    for g in report["clique_generators"]:
        lines.append("  C = " + " / ".join("".join(map(str, r)) if inp["q"] < 11 else " ".join(map(str, r)) for r in g))
    core = report["core"]
    lines.append("core S: none (Y empty)" if core is None else f"core S: dim {core['dim']}")
    lc = report["line_class"]
    lines.append(f"lines: {lc['kind']}" + (f" ({lc['count']})" if lc["kind"] == "ManyLines" else ""))
    v = report["verdict"]
    lines.append(f"verdict: is_top={v['is_top']} is_star_too={v['is_star_too']} ({v['reason']})")
    o = report["oracle"]
    if o is not None:
        lines.append(
            f"oracle: clique_agrees={o['clique_agrees']} duality_agrees={o['duality_agrees']} "
            f"maximal={o['maximal']} maximality_agrees={o['maximality_agrees']}"
        )
        if o["witness"] is not None:
            lines.append("  witness X = " + " / ".join("".join(map(str, r)) for r in o["witness"]))
    lines.append(f"time: {report['timing_seconds']:.3f} s")
    return "\n".join(lines)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


# -- commands ------------------------------------------------------------------


def cmd_classify(path, *, with_oracle: bool = False, as_json: bool = False, out=None) -> int:
    out = out or sys.stdout
    _, m = parse_matrix_file(path)
    report = build_report(m, with_oracle=with_oracle)
    print(_dump(report) if as_json else format_report(report), file=out)
    return EXIT_OK if oracle_agrees(report) else EXIT_DISAGREEMENT


def cmd_gaussian(n: int, k: int, q: int, *, out=None) -> int:
    out = out or sys.stdout
    if not 0 <= k <= n or q < 2:
        print(f"error: need 0 <= k <= n and q >= 2 (got n={n}, k={k}, q={q})", file=sys.stderr)
        return EXIT_USAGE
    print(q_binomial(n, k, q), file=out)
    return EXIT_OK


def _mismatches(example: catalog.Example, report: dict) -> list[str]:
    exp = example.expected
    got = {
        "y_vectors": report["y_vectors"],
        "line_kind": report["line_class"]["kind"],
        "is_top": report["verdict"]["is_top"],
        "is_star_too": report["verdict"]["is_star_too"],
    }
    problems = [f"{key}: expected {exp[key]}, got {got[key]}" for key in exp if exp[key] != got[key]]
    if not oracle_agrees(report):
        problems.append(f"oracle disagreement: {report['oracle']}")
    return problems


def cmd_examples(*, as_json: bool = False, examples: Sequence[catalog.Example] | None = None, out=None) -> int:
    out = out or sys.stdout
    examples = catalog.EXAMPLES if examples is None else examples
    reports, failed = [], False
    for ex in examples:
        try:
            m = MatF(make_field(ex.q), ex.rows)
            report = build_report(m, with_oracle=True)
            problems = _mismatches(ex, report)
        except (PreconditionError, TooLarge, ValueError) as err:
            report, problems = {"error": str(err)}, [f"{type(err).__name__}: {err}"]
        report["label"] = ex.name
        reports.append(report)
        failed |= bool(problems)
        if not as_json:
            status = "FAIL" if problems else "PASS"
            summary = "; ".join(problems) if problems else (
                f"{report['line_class']['kind']}, is_top={report['verdict']['is_top']}, "
                f"is_star_too={report['verdict']['is_star_too']}"
            )
            print(f"{status} {ex.name}: {summary}", file=out)
    if as_json:
        print(_dump(reports), file=out)
    return EXIT_MISMATCH if failed else EXIT_OK


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grassmann-tops",
        description="Classify cliques of projective codes inside a fixed (k+1)-dimensional code.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("classify", help="analyse the generator matrix in FILE")
    p.add_argument("file")
    p.add_argument("--oracle", action="store_true", help="cross-check with brute-force enumeration")
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    g = sub.add_parser("gaussian", help="print the Gaussian binomial [n choose k]_q")
    g.add_argument("n", type=int)
    g.add_argument("k", type=int)
    g.add_argument("q", type=int)
    e = sub.add_parser("examples", help="re-run the built-in worked examples with the oracle")
    e.add_argument("--json", action="store_true")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.command == "classify":
            return cmd_classify(args.file, with_oracle=args.oracle, as_json=args.json)
        if args.command == "gaussian":
            return cmd_gaussian(args.n, args.k, args.q)
        return cmd_examples(as_json=args.json)
    except (ParseError, FieldError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as err:
        print(f"error: {type(err).__name__}: {err}", file=sys.stderr)
        return EXIT_PRECONDITION
    except TooLarge as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
