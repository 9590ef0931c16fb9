"""Command-line front end.

Exit status: 0 on success, 1 on domain errors (bad input, non-orthogonal
maps, parse failures), 2 when an internal cross-check fails, most
importantly when the criterion and the witness solver disagree.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .clifford import MAX_GENERATORS, parse_multivector
from .errors import CliffordError, GeneratorCapExceeded, InvalidArgument, InvariantViolation
from .finitary import FinitaryOrthogonal, check_orthogonal, require_orthogonal
from .innerness import centralizer, decide, default_truncation, solve_witness_detailed
from .selftest import SUITES, format_table, run_all

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_INTERNAL = 2


class ParseError(CliffordError, ValueError):
    code = "PARSE_ERROR"


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors, so keep 2 free for invariant violations
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_DOMAIN, f"error[USAGE]: {message}\n")


def _add_common(p: argparse.ArgumentParser, with_input: bool = True) -> None:
    if with_input:
        p.add_argument("inline", nargs="?", help="inline JSON map, e.g. '{\"block\": [[\"1\"]], \"tail\": \"-1\"}'")
        p.add_argument("--input", metavar="FILE", help="JSON input file, or - for stdin")
    p.add_argument("--n", type=int, help="truncation size (number of generators)")
    p.add_argument("--json", action="store_true", help="machine-readable JSON output")
    p.add_argument("--max-generators", type=int, default=MAX_GENERATORS, help="generator cap (default 62)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cliffinner", description="Inner Bogolyubov automorphisms of Clifford algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_ in [
        ("check-orthogonal", "check B^T B = I for the block"),
        ("decide", "decide innerness by both routes"),
        ("witness", "search for a conjugating element only"),
    ]:
        _add_common(sub.add_parser(name, help=help_))

    p = sub.add_parser("centralizer", help="centralizer of Cl(span(v_0..v_{k-1})) in Cl(V_n)")
    _add_common(p, with_input=False)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("mul", help="evaluate a product such as 'e0e1 * e1e2'")
    p.add_argument("expr", nargs="+", help="one expression, or several factors to multiply in order")
    _add_common(p, with_input=False)

    p = sub.add_parser("selftest", help="run the oracle-equivalence sweeps and structural checks")
    p.add_argument("--json", action="store_true")
    p.add_argument("--workers", type=int, default=1, help="processes for the oracle sweeps")
    p.add_argument("--suite", action="append", choices=sorted(SUITES), help="run only these suites")
    return parser


def _read_map(args) -> FinitaryOrthogonal:
    if args.input is not None:
        text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
    elif args.inline is not None:
        text = args.inline
    else:
        raise InvalidArgument("no input: pass inline JSON or --input FILE|-")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    try:
        return FinitaryOrthogonal.from_json(data)
    except CliffordError:
        raise
    except (ValueError, TypeError) as exc:
        raise ParseError(str(exc)) from None


def _cap(args, n: int) -> int:
    if n < 0:
        raise InvalidArgument("n must be non-negative")
    cap = min(args.max_generators, MAX_GENERATORS)
    if n > cap:
        raise GeneratorCapExceeded(f"n = {n} exceeds the generator cap {cap}")
    return n


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def _yn(b: bool) -> str:
    return "yes" if b else "no"


def cmd_check_orthogonal(args) -> int:
    phi = _read_map(args)
    ok = check_orthogonal(phi)
    _emit(args, {"orthogonal": ok, "m": phi.m}, "orthogonal" if ok else "not orthogonal")
    return EXIT_OK


def cmd_decide(args) -> int:
    phi = _read_map(args)
    require_orthogonal(phi)
    n = _cap(args, args.n if args.n is not None else default_truncation(phi.m))
    v = decide(phi, n)
    payload = v.to_json()
    r = v.criterion_reason
    lines = [
        f"inner: {_yn(v.inner)}",
        f"branch: {r.branch} (k = {r.k}, quotient det = {payload['quotient_det']}, rule = {r.rule})",
        f"witness: {payload['witness'] if v.witness is not None else 'none'}",
        f"routes agree: {_yn(v.routes_agree)}",
    ]
    _emit(args, payload, "\n".join(lines))
    if not v.routes_agree:
        raise InvariantViolation("criterion and witness solver disagree")
    return EXIT_OK


def cmd_witness(args) -> int:
    phi = _read_map(args)
    require_orthogonal(phi)
    n = _cap(args, args.n if args.n is not None else default_truncation(phi.m))
    sol = solve_witness_detailed(phi, n)
    payload = {
        "witness": None if sol.witness is None else str(sol.witness),
        "window": sol.window,
        "parity": "even" if sol.parity == 0 else "odd",
        "solution_dim": sol.solution_dim,
    }
    _emit(args, payload, payload["witness"] or "none")
    return EXIT_OK


def cmd_centralizer(args) -> int:
    if args.n is None:
        raise InvalidArgument("centralizer needs --n")
    n = _cap(args, args.n)
    c = centralizer(n, args.k)
    basis = [str(b) for b in c.basis]
    payload = {"n": n, "k": args.k, "dim": c.dim, "basis": basis, "matches_formula": True}
    _emit(args, payload, "\n".join(basis))
    return EXIT_OK


def cmd_mul(args) -> int:
    n = args.n
    if n is not None:
        _cap(args, n)
    text = " * ".join(f"({e})" for e in args.expr) if len(args.expr) > 1 else args.expr[0]
    try:
        if n is None:
            n = parse_multivector(text).n
        result = parse_multivector(text, _cap(args, n))
    except CliffordError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    _emit(args, {"n": n, "product": str(result)}, str(result))
    return EXIT_OK


def cmd_selftest(args) -> int:
    results = run_all(workers=args.workers, only=args.suite)
    ok = all(r.passed for r in results)
    if args.json:
        print(json.dumps({
            "passed": ok,
            "suites": [{"name": r.name, "passed": r.passed, "cases": r.cases, "detail": r.detail} for r in results],
        }))
    else:
        print(format_table(results))
        print("ALL PASS" if ok else "FAILURES PRESENT")
    return EXIT_OK if ok else EXIT_INTERNAL


COMMANDS = {
    "check-orthogonal": cmd_check_orthogonal,
    "decide": cmd_decide,
    "witness": cmd_witness,
    "centralizer": cmd_centralizer,
    "mul": cmd_mul,
    "selftest": cmd_selftest,
}


def _report(args, exc: Exception, code: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps({"error": {"code": code, "message": str(exc)}}), file=sys.stderr)
    else:
        print(f"error[{code}]: {exc}", file=sys.stderr)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except InvariantViolation as exc:
        _report(args, exc, exc.code)
        return EXIT_INTERNAL
    except CliffordError as exc:
        _report(args, exc, exc.code)
        return EXIT_DOMAIN
    except OSError as exc:
        _report(args, exc, "IO_ERROR")
        return EXIT_DOMAIN
    except (ValueError, TypeError) as exc:
        _report(args, exc, "PARSE_ERROR")
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
