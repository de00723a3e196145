"""Command-line interface with deterministic JSON/text output.

Exit codes: 0 success, 2 usage or parse error, 3 semantic verification
failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .combinatorics import Partition, partitions_of
from .elw import elw_to_schur, verify_involution
from .hall_littlewood import (
    DEFAULT_MAX_N,
    SizeBoundError,
    hll_expansion,
    is_schur_positive,
    leftover_experiment,
)
from .quasisym import Expansion, expansion_to_poly, extract_f_expansion, fundamental
from .polynomial import SparsePoly
from .schur import straighten

ENV_MAX_N = "QUASISCHUR_MAX_N"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFY = 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(piece) for piece in text.split(","))
    except ValueError:
        raise CliError(f"expected comma-separated integers, got {text!r}")


def _parse_partition(text: str) -> Partition:
    try:
        return Partition(_parse_ints(text))
    except ValueError as exc:
        raise CliError(str(exc))


def _dump_json(doc) -> str:
    return json.dumps(doc, separators=(",", ":"), sort_keys=False)


def _read_expansion(path: str) -> Expansion:
    try:
        if path == "-":
            doc = json.load(sys.stdin)
        else:
            with open(path, encoding="utf-8") as handle:
                doc = json.load(handle)
        return Expansion.from_json_dict(doc)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise CliError(f"cannot read expansion document: {exc}")


def _read_poly(path: str) -> SparsePoly:
    try:
        if path == "-":
            doc = json.load(sys.stdin)
        else:
            with open(path, encoding="utf-8") as handle:
                doc = json.load(handle)
        return SparsePoly.from_json_dict(doc)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise CliError(f"cannot read polynomial document: {exc}")


def _resolve_max_n(args) -> int:
    if args.max_n is not None:
        return args.max_n
    env = os.environ.get(ENV_MAX_N)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise CliError(f"{ENV_MAX_N} must be an integer, got {env!r}")
    return DEFAULT_MAX_N


def _expansion_text(e: Expansion) -> str:
    return str(e)


def cmd_straighten(args) -> int:
    gamma = _parse_ints(args.gamma)
    if any(g < 0 for g in gamma):
        raise CliError("weak composition parts must be non-negative")
    result = straighten(gamma)
    if args.json:
        print(_dump_json(result.to_json_dict()))
    else:
        print(result)
    return EXIT_OK


def cmd_fundamental(args) -> int:
    alpha = _parse_ints(args.alpha)
    try:
        poly = fundamental(alpha, args.vars or sum(alpha))
    except ValueError as exc:
        raise CliError(str(exc))
    if args.text:
        print(poly)
    else:
        print(_dump_json(poly.to_json_dict()))
    return EXIT_OK


def cmd_fexpand(args) -> int:
    poly = _read_poly(args.input)
    try:
        expansion = extract_f_expansion(poly)
    except ValueError as exc:
        raise CliError(str(exc))
    if args.text:
        print(_expansion_text(expansion))
    else:
        print(_dump_json(expansion.to_json_dict()))
    return EXIT_OK


def cmd_toschur(args) -> int:
    expansion = _read_expansion(args.input)
    if expansion.basis != "F":
        raise CliError(f"expected an F-basis expansion, got basis {expansion.basis!r}")
    if args.verify_symmetric and not expansion.is_zero():
        n = expansion.degree
        poly = expansion_to_poly(expansion, n)
        for i in range(1, n):
            if poly.swap_variables(i, i + 1) != poly:
                raise CliError(
                    f"input is not symmetric: swapping x{i} and x{i + 1} changes it",
                    code=EXIT_VERIFY,
                )
    result = elw_to_schur(expansion)
    if args.text:
        print(_expansion_text(result))
    else:
        print(_dump_json(result.to_json_dict()))
    return EXIT_OK


def cmd_verify_involution(args) -> int:
    alpha = _parse_ints(args.alpha)
    if any(a < 1 for a in alpha):
        raise CliError("composition parts must be positive")
    max_n = _resolve_max_n(args)
    if sum(alpha) > max_n:
        raise CliError(f"weight {sum(alpha)} exceeds bound {max_n}")
    report = verify_involution(alpha)
    print(_dump_json(report.to_json_dict()))
    return EXIT_OK if report.passed() else EXIT_VERIFY


def cmd_hll(args) -> int:
    mu = _parse_partition(args.mu)
    max_n = _resolve_max_n(args)
    try:
        if args.experiment:
            report = leftover_experiment(mu, max_n=max_n)
            print(_dump_json(report.to_json_dict()))
        else:
            expansion = hll_expansion(mu, max_n=max_n)
            if args.text:
                print(_expansion_text(expansion))
            else:
                print(_dump_json(expansion.to_json_dict()))
    except SizeBoundError as exc:
        raise CliError(str(exc))
    return EXIT_OK


def cmd_positivity(args) -> int:
    max_n = _resolve_max_n(args)
    if args.n > max_n:
        raise CliError(f"weight {args.n} exceeds bound {max_n}")
    results = []
    all_positive = True
    for mu in partitions_of(args.n):
        expansion = hll_expansion(mu, max_n=max_n)
        positive = is_schur_positive(expansion)
        all_positive = all_positive and positive
        results.append({"mu": list(mu), "positive": positive})
    print(_dump_json({"n": args.n, "shapes": results, "all_positive": all_positive}))
    return EXIT_OK if all_positive else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasischur",
        description="Exact F-to-Schur expansion conversion and related checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("straighten", help="normal form of a composition-indexed Schur function")
    p.add_argument("gamma", help="weak composition, e.g. 1,3,0")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.set_defaults(func=cmd_straighten)

    p = sub.add_parser("fundamental", help="expand a fundamental quasisymmetric polynomial")
    p.add_argument("alpha", help="composition, e.g. 2,1")
    p.add_argument("--vars", type=int, default=None, help="variable count (default: weight)")
    p.add_argument("--text", action="store_true", help="human-readable output")
    p.set_defaults(func=cmd_fundamental)

    p = sub.add_parser("fexpand", help="extract the F-expansion of a polynomial document")
    p.add_argument("input", nargs="?", default="-", help="polynomial JSON file or - for stdin")
    p.add_argument("--text", action="store_true")
    p.set_defaults(func=cmd_fexpand)

    p = sub.add_parser("toschur", help="convert an F-expansion to a Schur expansion")
    p.add_argument("input", nargs="?", default="-", help="expansion JSON file or - for stdin")
    p.add_argument("--verify-symmetric", action="store_true",
                   help="abort unless the expanded polynomial is symmetric")
    p.add_argument("--text", action="store_true")
    p.set_defaults(func=cmd_toschur)

    p = sub.add_parser("verify-involution", help="run the four involution checks")
    p.add_argument("alpha", help="composition, e.g. 2,3,3")
    p.add_argument("--max-n", type=int, default=None)
    p.set_defaults(func=cmd_verify_involution)

    p = sub.add_parser("hll", help="Schur expansion of the modified Hall-Littlewood polynomial")
    p.add_argument("mu", help="partition, e.g. 3,3,3")
    p.add_argument("--experiment", action="store_true",
                   help="run the Schensted leftover experiment and report the discrepancy")
    p.add_argument("--text", action="store_true")
    p.add_argument("--max-n", type=int, default=None)
    p.set_defaults(func=cmd_hll)

    p = sub.add_parser("positivity", help="check Schur positivity for all shapes of a weight")
    p.add_argument("n", type=int)
    p.add_argument("--max-n", type=int, default=None)
    p.set_defaults(func=cmd_positivity)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
