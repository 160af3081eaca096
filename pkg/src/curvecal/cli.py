"""Command-line front end.

Every capability is exposed as a subcommand; ``--json`` switches the
output to the JSON schema of the owning module.  Arguments may be given
inline or as ``@path`` to read the value from a file.  All computation is
exact integer arithmetic, so identical invocations produce identical
bytes.  Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from .cobordism import chain_from_dict, normalize
from .diagrams import diagram_from_dict, diagram_to_dict, reduce_trace
from .errors import CurvecalError, InputFormatError
from .heegaard import (
    HeegaardDiagram,
    build_heegaard,
    classify,
    parse_diagram_file,
    presentation,
    report_to_dict,
)
from .intersections import (
    BasisCandidate,
    basis_matrix,
    degree_lower_bound,
    linear_expression,
    matrix_from_dict,
    matrix_to_dict,
    pairing,
    verify_basis,
)
from .words import abelianize, parse_word, set_max_exponent


class _UsageError(Exception):
    pass


def _resolve(value: str) -> str:
    """Inline value, or the content of a file when the argument is ``@path``."""
    if value.startswith("@"):
        try:
            return Path(value[1:]).read_text()
        except OSError as exc:
            raise InputFormatError(f"cannot read {value[1:]!r}: {exc}") from exc
    return value


def _load_json(text: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"invalid JSON input: {exc}") from exc


def _emit_json(payload) -> None:
    print(json.dumps(payload, ensure_ascii=False))


def _cmd_intersect(args) -> None:
    left = parse_word(_resolve(args.words[0]), args.genus)
    right = parse_word(_resolve(args.words[1]), args.genus)
    value = pairing(left, right)
    if args.as_json:
        _emit_json({"genus": args.genus, "pairing": value})
    else:
        print(value)


def _cmd_degree_bound(args) -> None:
    left = parse_word(_resolve(args.words[0]), args.genus)
    right = parse_word(_resolve(args.words[1]), args.genus)
    value = degree_lower_bound(left, right)
    if args.as_json:
        _emit_json({"genus": args.genus, "bound": value})
    else:
        print(value)


def _cmd_express(args) -> None:
    word = parse_word(_resolve(args.word), args.genus)
    expression = linear_expression(word)
    if args.as_json:
        coords = abelianize(word)
        _emit_json(
            {
                "genus": args.genus,
                "expression": expression,
                "alpha_coefficients": list(coords.m),
                "beta_coefficients": list(coords.n),
            }
        )
    else:
        print(expression)


def _cmd_basis_check(args) -> None:
    if args.matrix is not None:
        matrix = matrix_from_dict(_load_json(_resolve(args.matrix)))
    else:
        if args.genus is None or not args.theta or not args.gamma:
            raise _UsageError(
                "basis-check needs a matrix argument, or -g with --theta/--gamma words"
            )
        theta = tuple(parse_word(_resolve(t), args.genus) for t in args.theta)
        gamma = tuple(parse_word(_resolve(g), args.genus) for g in args.gamma)
        matrix = basis_matrix(BasisCandidate(args.genus, theta, gamma))
    verdict = verify_basis(matrix)
    if args.as_json:
        payload = matrix_to_dict(matrix)
        payload["unimodular"] = verdict.unimodular
        payload["sigma"] = (
            list(verdict.block_permutation)
            if verdict.block_permutation is not None
            else None
        )
        payload["diagnostics"] = verdict.diagnostics
        _emit_json(payload)
    else:
        print(f"det: {matrix.det}")
        print(f"unimodular: {'yes' if verdict.unimodular else 'no'}")
        if verdict.block_permutation is not None:
            print(f"sigma: {' '.join(str(j) for j in verdict.block_permutation)}")
        else:
            print("sigma: none")
        if verdict.diagnostics != "ok":
            print(f"note: {verdict.diagnostics}")


def _cmd_diagram_reduce(args) -> None:
    diagram = diagram_from_dict(_load_json(_resolve(args.diagram)))
    reduced, trace = reduce_trace(diagram)
    if args.as_json:
        _emit_json(
            {
                "diagram": diagram_to_dict(reduced),
                "steps": len(trace),
                "removed": [[p, q] for p, q in trace],
            }
        )
    else:
        print(f"crossings: {diagram.count} -> {reduced.count}")
        print(f"steps: {len(trace)}")
        print(f"sum: {reduced.signed_sum}")
        for p, q in trace:
            print(f"removed: {p} {q}")


def _load_heegaard(args) -> HeegaardDiagram:
    inputs = [_resolve(value) for value in args.input]
    if args.genus is None:
        if len(inputs) != 1:
            raise _UsageError("without -g, provide exactly one diagram file argument")
        return parse_diagram_file(inputs[0])
    return build_heegaard(args.genus, inputs)


def _cmd_pi1(args) -> None:
    diagram = _load_heegaard(args)
    pres = presentation(diagram)
    report = classify(diagram)
    if args.as_json:
        _emit_json(
            {
                "genus": diagram.genus,
                "generators": list(pres.generators),
                "relators": [str(r) for r in pres.relators],
                "abelianization": [list(row) for row in pres.abelianization],
                "pi1": report.pi1,
            }
        )
    else:
        print(f"presentation: {pres.render()}")
        print(f"pi1: {report.pi1}")


def _cmd_classify(args) -> None:
    diagram = _load_heegaard(args)
    report = classify(diagram)
    if args.as_json:
        _emit_json(report_to_dict(report))
    else:
        note = f" ({report.note})" if report.note else ""
        print(f"pi1: {report.pi1}{note}")
        if report.sigma is not None:
            print(f"sigma: {' '.join(str(j) for j in report.sigma)}")
            print(f"orders: {' '.join(str(r) for r in report.orders)}")
        else:
            print("sigma: none")
            print("orders: none")
        print(f"simply connected: {'yes' if report.simply_connected else 'no'}")
        print(f"finite: {'yes' if report.finite else 'no'}")
        print(f"prime: {'yes' if report.prime else 'no'}")


def _cmd_cobordism_normalize(args) -> None:
    chain = chain_from_dict(_load_json(_resolve(args.chain)))
    final, moves = normalize(chain)
    if args.as_json:
        _emit_json(
            {
                "final_type": list(final.type_vector),
                "moves": [[a, b] for a, b in moves],
            }
        )
    else:
        print(f"final type: {' '.join(str(r) for r in final.type_vector)}")
        for a, b in moves:
            print(f"cancel: {a} {b}")


def _cmd_lens_table(args) -> None:
    if args.min_p < 1 or args.max_p < args.min_p:
        raise _UsageError("lens-table needs 1 <= min <= max")
    rows = []
    for p in range(args.min_p, args.max_p + 1):
        for q in range(1, p + 1):
            if math.gcd(p, q) != 1:
                continue
            diagram = build_heegaard(1, [f"a1^{q} b1^{p}"])
            rows.append({"p": p, "q": q, "pi1": classify(diagram).pi1})
    if args.as_json:
        _emit_json(rows)
    else:
        for row in rows:
            print(f"p={row['p']} q={row['q']} pi1={row['pi1']}")


def _add_json_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", dest="as_json", action="store_true",
                        help="emit JSON instead of text")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvecal",
        description="Exact intersection calculus for curves on oriented surfaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("intersect", help="signed intersection number of two words")
    p.add_argument("-g", "--genus", type=int, required=True)
    p.add_argument("words", nargs=2, metavar="WORD")
    _add_json_flag(p)
    p.set_defaults(run=_cmd_intersect)

    p = sub.add_parser("degree-bound", help="crossing-count lower bound for two words")
    p.add_argument("-g", "--genus", type=int, required=True)
    p.add_argument("words", nargs=2, metavar="WORD")
    _add_json_flag(p)
    p.set_defaults(run=_cmd_degree_bound)

    p = sub.add_parser("express", help="linear expression of a word modulo commutators")
    p.add_argument("-g", "--genus", type=int, required=True)
    p.add_argument("word", metavar="WORD")
    _add_json_flag(p)
    p.set_defaults(run=_cmd_express)

    p = sub.add_parser("basis-check", help="verify a change-of-basis matrix or candidate")
    p.add_argument("matrix", nargs="?", metavar="MATRIX_JSON",
                   help="matrix JSON (inline or @path); omit to use --theta/--gamma")
    p.add_argument("-g", "--genus", type=int)
    p.add_argument("--theta", action="append", default=[], metavar="WORD")
    p.add_argument("--gamma", action="append", default=[], metavar="WORD")
    _add_json_flag(p)
    p.set_defaults(run=_cmd_basis_check)

    p = sub.add_parser("diagram-reduce", help="remove all bigons from a crossing diagram")
    p.add_argument("diagram", metavar="DIAGRAM_JSON")
    _add_json_flag(p)
    p.set_defaults(run=_cmd_diagram_reduce)

    p = sub.add_parser("pi1", help="fundamental-group presentation from attaching data")
    p.add_argument("-g", "--genus", type=int)
    p.add_argument("input", nargs="+", metavar="WORD_OR_FILE")
    _add_json_flag(p)
    p.set_defaults(run=_cmd_pi1)

    p = sub.add_parser("classify", help="free-product classification from attaching data")
    p.add_argument("-g", "--genus", type=int)
    p.add_argument("input", nargs="+", metavar="WORD_OR_FILE")
    _add_json_flag(p)
    p.set_defaults(run=_cmd_classify)

    p = sub.add_parser("cobordism-normalize", help="cancel unit-pairing handle pairs")
    p.add_argument("chain", metavar="CHAIN_JSON")
    _add_json_flag(p)
    p.set_defaults(run=_cmd_cobordism_normalize)

    p = sub.add_parser("lens-table", help="classification table for genus-1 diagrams")
    p.add_argument("--min", dest="min_p", type=int, default=1)
    p.add_argument("--max", dest="max_p", type=int, default=20)
    _add_json_flag(p)
    p.set_defaults(run=_cmd_lens_table)

    return parser


def main(argv=None) -> int:
    limit = os.environ.get("CURVECAL_MAX_EXP")
    if limit is not None:
        try:
            set_max_exponent(int(limit))
        except ValueError:
            print(f"error: bad CURVECAL_MAX_EXP value {limit!r}", file=sys.stderr)
            return 2
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else int(exc.code)
    try:
        args.run(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except CurvecalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
