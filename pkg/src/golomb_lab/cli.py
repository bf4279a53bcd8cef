"""Command-line entry point: ``golomb-lab VERB [options]``.

Exit status: 0 success, 1 bad input, 2 a verification sweep found failures,
3 internal-consistency error.
"""
from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from . import posets
from .errors import ConsistencyError, DomainError, ResourceError
from .orbit_closures import orbit_closure
from .periodic_sets import congruence_str, golomb_closure
from .verify import SUITES, VerificationReport, lemma_suite

EXIT_OK, EXIT_USAGE, EXIT_FAILED, EXIT_INTERNAL = 0, 1, 2, 3

# verify flag -> suite parameter
RANGE_FLAGS = {
    "from": "n_from",
    "to": "n_to",
    "b_max": "b_max",
    "window": "window",
    "limit": "limit",
    "p_max": "p_max",
    "a_max": "a_max",
    "primes": "primes",
    "n_min": "n_min",
    "n_max": "n_max",
    "extra_levels": "extra_levels",
    "gen_max": "gen_max",
    "nmax": "nmax",
    "depth_min": "depth_min",
    "depth_max": "depth_max",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}\n")


def _prime_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="golomb-lab", description="Exact Golomb-topology and p-adic orbit computations.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("closure", help="Golomb closure of a + b·ℕ₀")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("orbit", help="p-adic closure of the powers of a")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")

    for verb, formats, default in (("poset", ("text", "json", "dot"), "text"), ("hasse", ("dot",), "dot")):
        p = sub.add_parser(verb, help="finite truncation of D_p or X_p")
        p.add_argument("--kind", choices=("dp", "xp"), required=True)
        p.add_argument("--p", type=int, required=True)
        p.add_argument("--nmax", type=int, help="exponent bound (dp)")
        p.add_argument("--gen-max", type=int, help="generator bound (xp)")
        p.add_argument("--format", choices=formats, default=default)

    p = sub.add_parser("verify", help="run a lemma verification sweep")
    p.add_argument("--lemma", required=True, choices=sorted(SUITES))
    p.add_argument("--from", dest="from", type=int)
    p.add_argument("--to", dest="to", type=int)
    for flag in ("b-max", "window", "limit", "p-max", "a-max", "n-min", "n-max",
                 "extra-levels", "gen-max", "nmax", "depth-min", "depth-max"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--primes", type=_prime_list)
    _add_run_flags(p)

    p = sub.add_parser("rigidity", help="reconstruct every n in a range from closure data")
    p.add_argument("--from", dest="from", type=int, default=2)
    p.add_argument("--to", dest="to", type=int, required=True)
    _add_run_flags(p)
    return parser


def _add_run_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--timing", action="store_true", help="include elapsed time (output no longer reproducible)")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, indent=2)


def _cmd_closure(args) -> tuple[int, str]:
    C = golomb_closure(args.a, args.b)
    if args.format == "json":
        return EXIT_OK, _dump({"a": args.a, "b": args.b, "closure": C.to_json(), "text": congruence_str(C)})
    return EXIT_OK, congruence_str(C)


def _cmd_orbit(args) -> tuple[int, str]:
    X = orbit_closure(args.a, args.p)
    if args.format == "json":
        return EXIT_OK, _dump(X.to_json())
    lines = [
        f"closure of {args.a}^ℕ in the {args.p}-adic topology: {X.set}",
        f"level n(X) = {X.level}",
        f"index i(X) = {X.index}",
        f"subgroup order = {X.subgroup_order}",
    ]
    if X.two_adic_branch is not None:
        lines.append(f"branch = {X.two_adic_branch.value}")
    return EXIT_OK, "\n".join(lines)


def _build_poset(args) -> posets.FinitePoset:
    if args.kind == "dp":
        if args.gen_max is not None:
            raise DomainError("--gen-max applies to --kind xp only")
        return posets.dp_elements(args.p, 2 if args.nmax is None else args.nmax)
    if args.nmax is not None:
        raise DomainError("--nmax applies to --kind dp only")
    return posets.build_xp(args.p, 33 if args.gen_max is None else args.gen_max)


def _cmd_poset(args) -> tuple[int, str]:
    P = _build_poset(args)
    if args.format == "dot":
        return EXIT_OK, posets.to_dot(P).rstrip("\n")
    if args.format == "json":
        return EXIT_OK, _dump(P.to_json())
    ups = {n.key for n in posets.upchain_elements(P)}
    lines = []
    for k, node in enumerate(P.nodes):
        covers = [P.nodes[j].label for i, j in P.hasse_edges if i == k]
        extra = f"  {node.payload.set}" if isinstance(node.payload, posets.OrbitClosure) else ""
        mark = " *" if node.key in ups else ""
        lines.append(f"{node.label}{mark}{extra}  ->  {', '.join(covers) or '-'}")
    lines.append("(* = upper set is a chain)")
    return EXIT_OK, "\n".join(lines)


def _render_report(report: VerificationReport, args) -> tuple[int, str]:
    status = EXIT_OK if report.passed else EXIT_FAILED
    if args.format == "json":
        data = report.to_json()
        if not args.timing:
            data.pop("elapsed")
        return status, _dump(data)
    head = "PASS" if report.passed else "FAIL"
    lines = [f"{head} {report.lemma_id}: {report.cases_checked} cases, {len(report.failures)} failures"]
    if args.timing:
        lines[0] += f" ({report.elapsed:.2f}s)"
    for inp, exp, got in report.failures[:20]:
        lines.append(f"  input={inp} expected={exp} got={got}")
    return status, "\n".join(lines)


def _cmd_verify(args) -> tuple[int, str]:
    params = {}
    for flag, key in RANGE_FLAGS.items():
        value = getattr(args, flag, None)
        if value is not None:
            params[key] = value
    return _render_report(lemma_suite(args.lemma, params, jobs=args.jobs), args)


def _cmd_rigidity(args) -> tuple[int, str]:
    report = lemma_suite("rigidity", {"n_from": getattr(args, "from"), "n_to": args.to}, jobs=args.jobs)
    return _render_report(report, args)


COMMANDS = {
    "closure": _cmd_closure,
    "orbit": _cmd_orbit,
    "poset": _cmd_poset,
    "hasse": _cmd_poset,
    "verify": _cmd_verify,
    "rigidity": _cmd_rigidity,
}


@dataclass
class CliResult:
    status: int
    stdout: str
    stderr: str


def dispatch(argv: Sequence[str]) -> CliResult:
    """Run one command and capture its output instead of printing it."""
    out, err = io.StringIO(), io.StringIO()
    try:
        with contextlib.redirect_stdout(out):
            args = build_parser().parse_args(list(argv))
    except UsageError as exc:
        return CliResult(EXIT_USAGE, "", str(exc))
    except SystemExit as exc:  # --help
        return CliResult(int(exc.code or 0), out.getvalue(), "")
    try:
        status, text = COMMANDS[args.verb](args)
    except (DomainError, ResourceError) as exc:
        return CliResult(EXIT_USAGE, "", f"error: {exc}\n")
    except ConsistencyError as exc:
        return CliResult(EXIT_INTERNAL, "", f"internal consistency error: {exc}\n")
    return CliResult(status, text + "\n", err.getvalue())


def main(argv: Sequence[str] | None = None) -> int:
    result = dispatch(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(result.stdout)
    sys.stderr.write(result.stderr)
    return result.status


if __name__ == "__main__":
    sys.exit(main())
