"""Command-line entry point: ``aacm verify | scan | table``."""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .arith import fundamental_discriminant, is_prime
from .bernoulli import (
    bernoulli_mod_p,
    build_psi,
    euler_mod_p,
    gen_bernoulli_mod_p,
    quadratic_character,
)
from .errors import AACMError, DomainError
from .lp import lp_interpolation, lp_one_log_sum, lp_series
from .report import TAGS
from .scan import MODES, ScanConfig, read_config_file, run_scan
from .verify import verify_all

EXIT_OK, EXIT_USAGE, EXIT_FAIL, EXIT_DEGENERATE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage errors with exit code 1 instead of 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _exit_code(verdicts: list[str]) -> int:
    if "fail" in verdicts:
        return EXIT_FAIL
    if verdicts and "pass" not in verdicts:
        return EXIT_DEGENERATE
    return EXIT_OK


def cmd_verify(args) -> int:
    reports = verify_all(args.d, args.p, [args.theorem] if args.theorem else None)
    if not reports:
        print(f"no applicable congruence for d={args.d}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        for r in reports:
            print(json.dumps(r.to_dict(), sort_keys=True, default=str))
    else:
        for r in reports:
            print(r.line())
        status = {r.witness["status"] for r in reports if r.theorem_tag == "CAACM"}
        if status:
            print(f"CAACM for d={args.d}: {status.pop()}")
    return _exit_code([r.verdict for r in reports])


def cmd_scan(args) -> int:
    opts = read_config_file(args.config) if args.config else {}
    for key in ("start", "stop", "mode", "jobs", "precision", "period_bound", "output", "lp_limit"):
        val = getattr(args, key)
        if val is not None:
            opts[key] = val
    if args.resume:
        opts["resume"] = True
    cfg = ScanConfig(**opts)
    try:
        summary = run_scan(cfg)
    except OSError as exc:
        print(f"cannot write output: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for line in summary.lines():
        print(line, file=sys.stderr if cfg.output is None else sys.stdout)
    return EXIT_FAIL if summary.failed_checks else EXIT_OK


def _table_rows(args):
    kind, p = args.kind, args.p
    if kind == "bernoulli":
        yield ["n", "value"]
        for n in range(args.n_max + 1):
            if n and n % (p - 1) == 0:
                continue
            yield [n, bernoulli_mod_p(n, p)]
    elif kind == "euler":
        yield ["n", "value"]
        for n in range(0, args.n_max + 1, 2):
            yield [n, euler_mod_p(n, p, args.convention)]
    elif kind == "genbernoulli":
        if args.d is not None:
            chi = build_psi(args.d, p)
        elif args.disc is not None:
            chi = quadratic_character(args.disc)
        else:
            raise DomainError("genbernoulli needs --d (psi_m) or --disc")
        yield ["n", "value"]
        for n in range(args.n_max + 1):
            yield [n, gen_bernoulli_mod_p(n, chi, p)]
    else:
        if args.d is None:
            raise DomainError("lp needs --d")
        chi = quadratic_character(fundamental_discriminant(args.d).D)
        yield ["d", "p", "n", "interpolation_mod_p", "series_mod_p", "log_sum_mod_p", "agree"]
        # chi_D omega^(-n) is quadratic at n = (p-1)/2; all three values agree mod p by rigidity
        n = (p - 1) // 2
        interp = lp_interpolation(n, chi, p).value.value
        series = lp_series(1 - n, chi, p).value.value
        log_sum = lp_one_log_sum(chi, p).value
        yield [args.d, p, n, interp, series, log_sum, int(interp == series == log_sum)]


def cmd_table(args) -> int:
    if args.p is None or args.p < 3 or not is_prime(args.p):
        raise DomainError("--p must be an odd prime")
    writer = csv.writer(sys.stdout, lineterminator="\n")
    for row in _table_rows(args):
        writer.writerow(row)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="aacm", description="Ankeny-Artin-Chowla type congruences and scans.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="verify every applicable congruence for one d")
    v.add_argument("--d", type=int, required=True)
    v.add_argument("--p", type=int)
    v.add_argument("--theorem", choices=TAGS)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("scan", help="scan a range of d, JSON lines out")
    s.add_argument("--from", dest="start", type=int)
    s.add_argument("--to", dest="stop", type=int)
    s.add_argument("--mode", choices=MODES)
    s.add_argument("--jobs", type=int)
    s.add_argument("--precision", type=int)
    s.add_argument("--period-bound", dest="period_bound", type=int)
    s.add_argument("--lp-limit", dest="lp_limit", type=int)
    s.add_argument("--output")
    s.add_argument("--resume", action="store_true")
    s.add_argument("--config", help="key=value file; flags override it")
    s.set_defaults(func=cmd_scan)

    t = sub.add_parser("table", help="CSV tables of B_n, E_n, B_(n,chi), L_p mod p")
    t.add_argument("--kind", choices=("bernoulli", "euler", "genbernoulli", "lp"), required=True)
    t.add_argument("--p", type=int)
    t.add_argument("--n-max", dest="n_max", type=int, default=10)
    t.add_argument("--d", type=int)
    t.add_argument("--disc", type=int)
    t.add_argument("--convention", choices=("cosh", "cos"), default="cosh")
    t.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (AACMError, ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
