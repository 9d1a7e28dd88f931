"""``folded-rs`` command line.

Exit codes: 0 success / all bounds held, 1 usage or input error, 2 a list-size
bound or post-condition failed, 3 an enumeration limit was hit.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from fractions import Fraction
from pathlib import Path

from . import decoder
from .bounds import bound_report, decoding_radius, frs_list_bound
from .errors import ContractViolation, EnumerationLimitExceeded, ParameterError, ParseError
from .experiment import all_passed, parse_config, render_csv, run_experiment
from .frs import FoldedWord, FrsParams, corrupt, encode
from .poly import Poly
from .subspace import DEFAULT_LIMIT

EXIT_OK, EXIT_USAGE, EXIT_CONTRACT, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_params(path: str) -> FrsParams:
    try:
        return FrsParams.from_text(_read(path))
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def _load_word(path: str, params: FrsParams) -> FoldedWord:
    try:
        return FoldedWord.from_text(_read(path), params)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def cmd_encode(args) -> int:
    params = _load_params(args.params)
    text = args.message if args.message is not None else _read(args.message_file)
    if len(text.split()) > params.msg_len:
        raise UsageError(f"message has {len(text.split())} coefficients, code allows {params.msg_len}")
    f = Poly.from_text(params.field, text)
    _emit(encode(params, f).to_text(), args.out)
    return EXIT_OK


def format_outcome(params: FrsParams, k: int, out: decoder.DecodeOutcome, guaranteed_radius: Fraction) -> str:
    lines = [f"radius: {out.radius}", f"interpolation_degree: {out.stats['interpolation_degree']}"]
    H = out.subspace
    if H is None:
        lines.append("subspace: inconsistent")
    else:
        lines.append(f"subspace_dim: {H.dim}")
        lines.append(f"offset: {H.offset.to_text()}")
        lines.extend(f"basis[{j}]: {b.to_text()}" for j, b in enumerate(H.basis, 1))
    lines.append(f"strategy: {out.stats['strategy']}")
    lines.append(f"list_size: {len(out.list)}")
    lines.extend(f"list[{j}]: {f.to_text()}" for j, f in enumerate(out.list, 1))
    bound = frs_list_bound(k)
    if out.radius <= guaranteed_radius:
        verdict = "ok" if len(out.list) <= bound else "VIOLATED"
        lines.append(f"bound: list_size {len(out.list)} <= (k-1)^2+1 = {bound} ({verdict})")
    else:
        lines.append(f"bound: radius {out.radius} exceeds {guaranteed_radius}; (k-1)^2+1 = {bound} not guaranteed")
    if not out.stats["complete"]:
        lines.append("note: radius beyond the interpolation guarantee; the list may be incomplete")
    return "\n".join(lines) + "\n"


def cmd_decode(args) -> int:
    params = _load_params(args.params)
    if not 1 <= args.k <= params.m:
        raise UsageError(f"--k must satisfy 1 <= k <= m={params.m}")
    g = _load_word(args.word, params)
    guaranteed_radius = decoding_radius(params.m, args.k, params.rate)
    out = decoder.decode(params, args.k, g, radius=args.radius, limit=args.limit, strategy=args.strategy)
    _emit(format_outcome(params, args.k, out, guaranteed_radius), args.out)
    if out.radius <= guaranteed_radius and len(out.list) > frs_list_bound(args.k):
        return EXIT_CONTRACT
    return EXIT_OK


def cmd_corrupt(args) -> int:
    params = _load_params(args.params)
    w = _load_word(args.word, params)
    _emit(corrupt(params, w, args.errors, args.seed).to_text(), args.out)
    return EXIT_OK


def cmd_experiment(args) -> int:
    cfg = parse_config(_read(args.config))
    overrides = {k: v for k, v in (("seed", args.seed), ("trials", args.trials),
                                   ("limit", args.limit), ("radius", args.radius),
                                   ("jobs", args.jobs)) if v is not None}
    if overrides:
        cfg = dataclasses.replace(cfg, **overrides)
    records = run_experiment(cfg)
    _emit(render_csv(cfg, records), args.out or cfg.out)
    return EXIT_OK if all_passed(records) else EXIT_CONTRACT


def cmd_bounds(args) -> int:
    if (args.m is None) != (args.R is None):
        raise UsageError("--m and --R must be given together")
    report = bound_report(args.k, m=args.m, R=args.R, d=args.d)
    _emit(report.to_csv() if args.csv else report.to_text(), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .acceptance import run_all

    results = run_all(set(args.only) if args.only else None)
    for r in results:
        print(r.line(), flush=True)
    return EXIT_OK if all(r.passed for r in results) else EXIT_CONTRACT


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="folded-rs", description="Folded Reed-Solomon list decoding harness.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("encode", help="encode a message polynomial")
    e.add_argument("--params", required=True, help="file with one line 'q gamma m n msg_len'")
    src = e.add_mutually_exclusive_group(required=True)
    src.add_argument("--message", help="coefficients, lowest degree first, e.g. '0 1'")
    src.add_argument("--message-file")
    e.add_argument("--out")
    e.set_defaults(func=cmd_encode)

    d = sub.add_parser("decode", help="list decode a received word")
    d.add_argument("--params", required=True)
    d.add_argument("--k", type=int, required=True)
    d.add_argument("--word", required=True, help="N lines of m integers")
    d.add_argument("--radius", type=_fraction, help="override the k/(k+1)(1 - mR/(m-k+1)) radius")
    d.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="enumeration cap")
    d.add_argument("--strategy", choices=("exhaustive", "frequency", "pinning"))
    d.add_argument("--out")
    d.set_defaults(func=cmd_decode)

    c = sub.add_parser("corrupt", help="replace exactly E folded symbols")
    c.add_argument("--params", required=True)
    c.add_argument("--word", required=True)
    c.add_argument("--errors", type=int, required=True)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--out")
    c.set_defaults(func=cmd_corrupt)

    x = sub.add_parser("experiment", help="run seeded trials from a key=value config, write CSV")
    x.add_argument("config")
    x.add_argument("--seed", type=int)
    x.add_argument("--trials", type=int)
    x.add_argument("--radius", type=_fraction)
    x.add_argument("--limit", type=int)
    x.add_argument("--jobs", type=int)
    x.add_argument("--out")
    x.set_defaults(func=cmd_experiment)

    b = sub.add_parser("bounds", help="print radii and list-size bounds")
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--m", type=int)
    b.add_argument("--R", type=_fraction, help="rate, e.g. 1/6")
    b.add_argument("--d", type=int, help="subspace dimension (default k-1)")
    b.add_argument("--csv", action="store_true")
    b.add_argument("--out")
    b.set_defaults(func=cmd_bounds)

    v = sub.add_parser("verify", help="run the acceptance criteria")
    v.add_argument("--only", type=int, nargs="+", metavar="N")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ContractViolation as exc:
        print(f"contract violation: {exc}", file=sys.stderr)
        return EXIT_CONTRACT
    except EnumerationLimitExceeded as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (UsageError, ParameterError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
