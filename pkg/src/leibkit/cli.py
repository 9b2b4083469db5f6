"""``leibkit`` command line.

Exit codes: 0 success, 1 semantic failure (Leibniz violation or a failed
check), 2 usage, I/O or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import guard
from .algebra import check_leibniz
from .constructions import Type2Spec, counterexample, heisenberg_example, sl2, type1, type2, type_star
from .errors import LeibkitError, ParseError
from .exactla import GF, QQ, Subspace, is_prime
from .io import dumps, load
from .theorems import CHECKS, Status, format_subspace, report, run_check

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
EXAMPLES = ("heisenberg", "counter", "sl2", "type1", "type2", "typestar")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--max-enum", type=int, metavar="N", help="subspace budget for exhaustive sweeps")
    p.add_argument("--force", action="store_true", help="ignore the subspace budget")
    p.add_argument("--seed", type=int, help="seed for randomized heuristics")
    p.add_argument("--unchecked", action="store_true", help="skip Leibniz validation on load")
    p.add_argument("--workers", type=int, metavar="N", help="processes used by subspace sweeps")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="leibkit", description="Exact structure theory of small Leibniz algebras.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", parents=[common], help="parse a file and check the Leibniz identity")
    p.add_argument("path")

    p = sub.add_parser("report", parents=[common], help="print every structural invariant")
    p.add_argument("path")

    p = sub.add_parser("check", parents=[common], help="run one named check, or all")
    p.add_argument("name", help="check name or 'all'")
    p.add_argument("path")

    p = sub.add_parser("example", parents=[common], help="write a named example algebra")
    p.add_argument("name", choices=EXAMPLES)
    p.add_argument("--p", type=int, dest="p", help="characteristic (omit for Q where allowed)")
    p.add_argument("-o", "--output", help="output path (default: stdout)")
    return parser


def _apply_flags(args) -> None:
    base = guard.guard_from_env()
    limit = args.max_enum if args.max_enum is not None else base.max_subspaces
    guard.set_guard(guard.EnumerationGuard(limit, args.force))
    if args.workers is not None:
        guard.set_workers(args.workers)


def _load(args):
    return load(args.path, check=not args.unchecked)


def cmd_validate(args, out) -> int:
    A = load(args.path, check=False)
    witness = check_leibniz(A.sc, A.field)
    if args.json:
        out.write(json.dumps({"valid": witness is None, "witness": witness}) + "\n")
    elif witness is None:
        out.write(f"ok: {A.field}, dim {A.dim}\n")
    else:
        out.write("Leibniz identity fails on basis triple ({}, {}, {})\n".format(*witness))
    return EXIT_OK if witness is None else EXIT_FAIL


def cmd_report(args, out) -> int:
    rep = report(_load(args), seed=args.seed)
    if args.json:
        out.write(json.dumps(rep.to_json(), indent=2) + "\n")
    else:
        out.write(rep.to_text())
    return EXIT_OK


def _witness_json(A, w):
    if isinstance(w, Subspace):
        return format_subspace(A, w)
    if isinstance(w, tuple):
        return [_witness_json(A, x) for x in w]
    return w if w is None or isinstance(w, (bool, int, str)) else str(w)


def cmd_check(args, out) -> int:
    if args.name != "all" and args.name not in CHECKS:
        raise _UsageError(f"unknown check {args.name!r}; valid: all, " + ", ".join(CHECKS))
    A = _load(args)
    names = list(CHECKS) if args.name == "all" else [args.name]
    results = [run_check(n, A) for n in names]
    if args.json:
        rows = [
            {
                "name": r.name,
                "status": r.status.value,
                "detail": r.detail,
                "witness": _witness_json(A, r.witness),
                "hypotheses": [[h, ok] for h, ok in r.hypotheses],
            }
            for r in results
        ]
        out.write(json.dumps(rows, indent=2) + "\n")
    else:
        for r in results:
            out.write(r.line(A) + "\n")
    return EXIT_FAIL if any(r.status is Status.FAIL for r in results) else EXIT_OK


def build_example(name: str, p: int | None):
    if p is not None and not is_prime(p):
        raise _UsageError(f"--p must be prime, got {p}")
    if name in ("heisenberg", "counter"):
        if p is None:
            raise _UsageError(f"example {name} needs --p")
        return heisenberg_example(p) if name == "heisenberg" else counterexample(p)
    F = QQ if p is None else GF(p)
    if name == "sl2":
        if p == 2:
            raise _UsageError("sl2 needs characteristic other than 2")
        return sl2(F)
    if name == "type2":
        return type2(Type2Spec(1, 1, ((1,),)), F)
    # diag(1, -1) acting on a 2-dim module; the coordinate lines are ideals
    base = type1(F, [[[1, 0], [0, -1]]])
    if name == "type1":
        return base
    A1 = Subspace.coordinate(F, 3, [0])
    A2 = Subspace.coordinate(F, 3, [1])
    return type_star(base, A1, A2)


def cmd_example(args, out) -> int:
    text = dumps(build_example(args.name, args.p))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


COMMANDS = {"validate": cmd_validate, "report": cmd_report, "check": cmd_check, "example": cmd_example}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    saved = guard.get_guard(), guard.get_workers()
    try:
        args = build_parser().parse_args(argv)
        _apply_flags(args)
        return COMMANDS[args.command](args, out)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LeibkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    finally:
        guard.set_guard(saved[0])
        guard.set_workers(saved[1])


if __name__ == "__main__":
    sys.exit(main())
