"""Command line surface.

Subcommands: ``gen`` (emit symbols), ``complexity`` (one of the four
profiles), ``extremes`` (per-length alternation min/max), ``verify`` (run a
registered claim check), ``conjecture`` (run a scanner), and ``kernel``
(exact subsequence-space rank of a profile).

All emitted indices are 1-based, matching the library convention and the
"n a(n)" b-file format. Exit codes: 0 success / clean report, 1 a check
found counterexamples, 2 usage or configuration error, 3 window
certification failure (partial results go to stderr as JSON).

Sequences are named ``tm`` or ``pf``, or given as a path to a spec file of
``key = value`` lines (``#`` comments allowed)::

    kind = builtin | morphic | toeplitz
    name = tm | pf            # builtin only
    alphabet_size = <int>     # morphic, toeplitz
    seed = <symbol>           # morphic
    image.<symbol> = <word>   # morphic, one per symbol, e.g. image.0 = 01
    period = <word>           # toeplitz
    preperiod = <word>        # toeplitz, optional

Words are digit strings (or comma-separated integers for alphabets past
ten). The env var REDUXWORDS_MAX_PREFIX caps how many symbols any sequence
will materialize (default 2**26).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .complexity import (
    WindowPolicy,
    abelian_complexity,
    alternation_extremes,
    factor_complexity,
    reduced_abelian_complexity,
    reduced_factor_complexity,
)
from .errors import (
    CapacityError,
    ConfigurationError,
    ReduxwordsError,
    SpecFileError,
    StabilizationError,
    WordDomainError,
)
from .sequences import BUILTIN_SEQUENCES, SequenceHandle, load_sequence_spec
from .theorems import CLAIMS, profile_kernel_rank, verify

KIND_ENGINES = {
    "factor": factor_complexity,
    "abelian": abelian_complexity,
    "red": reduced_factor_complexity,
    "abred": reduced_abelian_complexity,
}

EXIT_OK = 0
EXIT_COUNTEREXAMPLES = 1
EXIT_USAGE = 2
EXIT_CERTIFICATION = 3


def _resolve_sequence(token: str) -> SequenceHandle:
    if token in BUILTIN_SEQUENCES:
        return BUILTIN_SEQUENCES[token]()
    return load_sequence_spec(token)


def _policy_from_args(args: argparse.Namespace) -> WindowPolicy:
    if getattr(args, "fixed_window", None) is not None:
        return WindowPolicy(
            initial_multiplier=args.window_multiplier,
            max_doublings=args.max_doublings,
            mode="fixed",
            fixed_length=args.fixed_window,
        )
    return WindowPolicy(
        initial_multiplier=args.window_multiplier,
        max_doublings=args.max_doublings,
    )


def _add_policy_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--window-multiplier", type=int, default=32,
        help="initial scan window is this many times n_max (default 32)",
    )
    parser.add_argument(
        "--max-doublings", type=int, default=6,
        help="window doublings to attempt before giving up (default 6)",
    )
    parser.add_argument(
        "--fixed-window", type=int, default=None, metavar="LENGTH",
        help="scan exactly this prefix length once, skipping certification",
    )


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _emit_rows(rows, header: str, fmt: str, metadata: dict) -> None:
    out = sys.stdout
    if fmt == "csv":
        out.write(header + "\n")
        for row in rows:
            out.write(",".join(str(v) for v in row) + "\n")
    elif fmt == "bfile":
        for row in rows:
            out.write(" ".join(str(v) for v in row) + "\n")
    elif fmt == "json":
        fields = header.split(",")
        records = [dict(zip(fields, row), **metadata) for row in rows]
        out.write(json.dumps(records, indent=2) + "\n")
    else:
        raise ConfigurationError(f"unknown format {fmt!r}")


# -- subcommands ----------------------------------------------------------------

def _cmd_gen(args: argparse.Namespace) -> int:
    handle = _resolve_sequence(args.sequence)
    if args.start < 1:
        raise ConfigurationError(f"--start must be >= 1, got {args.start}")
    if args.count < 0:
        raise ConfigurationError(f"--count must be >= 0, got {args.count}")
    if args.count == 0:
        return EXIT_OK
    upto = args.start + args.count - 1
    symbols = handle.prefix_symbols(upto)[args.start - 1 :]
    if args.format == "raw":
        if handle.alphabet_size <= 10:
            sys.stdout.write("".join(str(s) for s in symbols) + "\n")
        else:
            sys.stdout.write(" ".join(str(s) for s in symbols) + "\n")
        return EXIT_OK
    rows = [(n, s) for n, s in zip(range(args.start, upto + 1), symbols)]
    _emit_rows(rows, "n,value", args.format, {"sequence": handle.name, "kind": "symbols"})
    return EXIT_OK


def _cmd_complexity(args: argparse.Namespace) -> int:
    handle = _resolve_sequence(args.sequence)
    engine = KIND_ENGINES[args.kind]
    profile = engine(handle, args.n_max, _policy_from_args(args))
    metadata = {
        "sequence": handle.name,
        "kind": profile.kind,
        "certified_window": profile.certified_window,
    }
    _emit_rows(profile.as_rows(), "n,value", args.format, metadata)
    return EXIT_OK


def _cmd_extremes(args: argparse.Namespace) -> int:
    handle = _resolve_sequence(args.sequence)
    table = alternation_extremes(handle, args.n_max, _policy_from_args(args))
    metadata = {
        "sequence": handle.name,
        "kind": "alternation_extremes",
        "certified_window": table.certified_window,
    }
    _emit_rows(table.as_rows(), "n,min,max", args.format, metadata)
    return EXIT_OK


def _report_to_json(report) -> dict:
    claim = CLAIMS.get(report.claim_id)
    return {
        "claim_id": report.claim_id,
        "claim_kind": claim.kind if claim else None,
        "n_lo": report.n_lo,
        "n_hi": report.n_hi,
        "status": report.status,
        "counterexamples": _jsonable(report.counterexamples),
        "declared_exceptions": _jsonable(report.declared_exceptions),
        "details": _jsonable(report.details),
    }


def _summarize(report) -> str:
    extras = []
    if report.declared_exceptions:
        pts = ", ".join(f"n={n} -> {v}" for n, v in sorted(report.declared_exceptions.items()))
        extras.append(f"declared exceptions: {pts}")
    if report.counterexamples:
        extras.append(f"{len(report.counterexamples)} counterexamples")
        first = report.counterexamples[0]
        extras.append(f"first at n={first[0]}: expected {first[1]}, got {first[2]}")
    suffix = f" ({'; '.join(extras)})" if extras else ""
    return f"{report.claim_id}: {report.status} over n={report.n_lo}..{report.n_hi}{suffix}"


def _run_claims(claim_ids, n_max, policy, as_json: bool) -> int:
    reports = [verify(cid, n_max, policy) for cid in claim_ids]
    if as_json:
        payload = [_report_to_json(r) for r in reports]
        sys.stdout.write(json.dumps(payload if len(payload) > 1 else payload[0], indent=2) + "\n")
    else:
        for report in reports:
            sys.stdout.write(_summarize(report) + "\n")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_COUNTEREXAMPLES


def _cmd_verify(args: argparse.Namespace) -> int:
    policy = _policy_from_args(args)
    if args.claim == "all":
        ids = [cid for cid, c in CLAIMS.items() if c.kind != "conjecture"]
    else:
        ids = [args.claim]
    return _run_claims(ids, args.n_max, policy, args.json)


def _cmd_conjecture(args: argparse.Namespace) -> int:
    policy = _policy_from_args(args)
    conjecture_ids = [cid for cid, c in CLAIMS.items() if c.kind == "conjecture"]
    if args.claim == "all":
        ids = conjecture_ids
    elif args.claim in conjecture_ids:
        ids = [args.claim]
    else:
        raise ConfigurationError(
            f"{args.claim!r} is not a conjecture id; choices: {', '.join(conjecture_ids)}, all"
        )
    return _run_claims(ids, args.n_max, policy, args.json)


def _cmd_kernel(args: argparse.Namespace) -> int:
    handle = _resolve_sequence(args.sequence)
    engine = KIND_ENGINES[args.kind]
    profile = engine(handle, args.n_max, _policy_from_args(args))
    estimate = profile_kernel_rank(profile, base=args.base, depth=args.depth, terms=args.terms)
    if args.json:
        payload = {
            "sequence": handle.name,
            "kind": profile.kind,
            "n_max": args.n_max,
            "base": estimate.base,
            "depth": estimate.depth,
            "terms": estimate.terms,
            "ranks": list(estimate.ranks),
            "stabilized": estimate.stabilized,
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        ranks = ", ".join(str(r) for r in estimate.ranks)
        sys.stdout.write(
            f"{profile.kind} profile of {handle.name}, n <= {args.n_max}: "
            f"subsequence-space ranks by depth = [{ranks}]\n"
        )
        if estimate.stabilized:
            sys.stdout.write("rank stopped growing at the deepest level scanned\n")
        else:
            sys.stdout.write("rank still growing at the deepest level scanned\n")
    return EXIT_OK


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reduxwords",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a stretch of a sequence")
    p.add_argument("sequence", help="tm, pf, or a spec-file path")
    p.add_argument("--start", type=int, default=1, help="first index, 1-based (default 1)")
    p.add_argument("--count", type=int, required=True, help="how many symbols")
    p.add_argument("--format", choices=("raw", "csv", "json", "bfile"), default="raw")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("complexity", help="compute a complexity profile")
    p.add_argument("sequence", help="tm, pf, or a spec-file path")
    p.add_argument("kind", choices=sorted(KIND_ENGINES))
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json", "bfile"), default="csv")
    _add_policy_flags(p)
    p.set_defaults(func=_cmd_complexity)

    p = sub.add_parser("extremes", help="per-length min/max window alternation counts")
    p.add_argument("sequence", help="tm, pf, or a spec-file path")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_policy_flags(p)
    p.set_defaults(func=_cmd_extremes)

    p = sub.add_parser("verify", help="check a registered claim against the engines")
    p.add_argument("claim", help=f"claim id or 'all'; ids: {', '.join(sorted(CLAIMS))}")
    p.add_argument("--n-max", type=int, default=None, help="override the claim's default range")
    p.add_argument("--json", action="store_true", help="emit the structured report")
    _add_policy_flags(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("conjecture", help="scan an open statement and report evidence")
    p.add_argument("claim", help="conjecture id or 'all'")
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--json", action="store_true")
    _add_policy_flags(p)
    p.set_defaults(func=_cmd_conjecture)

    p = sub.add_parser("kernel", help="exact rank of a profile's arithmetic subsequences")
    p.add_argument("sequence", help="tm, pf, or a spec-file path")
    p.add_argument("--kind", choices=sorted(KIND_ENGINES), default="red")
    p.add_argument("--n-max", type=int, default=2048)
    p.add_argument("--base", type=int, default=2)
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--terms", type=int, default=64)
    p.add_argument("--json", action="store_true")
    _add_policy_flags(p)
    p.set_defaults(func=_cmd_kernel)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except StabilizationError as exc:
        payload = {
            "error": "stabilization-failure",
            "message": str(exc),
            "window": exc.window,
            "partial_values": _jsonable(exc.partial_values),
        }
        sys.stderr.write(json.dumps(payload, indent=2) + "\n")
        return EXIT_CERTIFICATION
    except (SpecFileError, ConfigurationError, WordDomainError, CapacityError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except ReduxwordsError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
