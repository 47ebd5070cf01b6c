"""Command line entry point: ``qdiamond <verb> [options]``.

Exit status is 0 on success, 1 when any verification fails and 2 on usage
errors (reported before any computation starts).
"""
from __future__ import annotations

import argparse
import sys
import time
from typing import Optional, Sequence

import numpy as np

from qdiamond import catalog as cat
from qdiamond import congruences as cg
from qdiamond.diamonds import dk_series
from qdiamond.eta import EtaQuotient, eta_quotient_series, partition_series
from qdiamond.series import ZZ, Zmod, from_coeffs, mul
from qdiamond.theta import LemmaId, verify_lemma

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _modulus(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"modulus must be >= 2, got {text}")
    return value


def _int_list(kind):
    def parse(text: str) -> list[int]:
        return [kind(t) for t in text.split(",") if t.strip()]
    return parse


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qdiamond",
        description="q-series expansions and congruence checks for d_k(n), "
                    "the coefficients of f_2^k / f_1^(3k+1).")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    p = sub.add_parser("expand", help="print coefficients of an eta quotient")
    p.add_argument("--eta", required=True, help='factors as "r^e" tokens, e.g. "2^2 1^-7"')
    p.add_argument("--order", type=_positive, required=True)
    p.add_argument("--mod", type=_modulus)

    p = sub.add_parser("verify-lemma", help="check theta-series identities")
    p.add_argument("--id", default="all",
                   help="identity name or 'all': " + ", ".join(t.value for t in LemmaId))
    p.add_argument("--order", type=_positive, default=2000)

    p = sub.add_parser("verify", help="check d_k(An+B) = 0 (mod M) below a bound")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--A", type=_positive, required=True)
    p.add_argument("--B", type=_nonnegative, required=True)
    p.add_argument("--mod", type=_modulus, required=True)
    p.add_argument("--bound", type=_positive, default=20000)

    p = sub.add_parser("catalog", help="verify every published congruence")
    p.add_argument("--bound", type=_positive, default=20000)
    p.add_argument("--j-max", type=_nonnegative, default=2)
    p.add_argument("--workers", type=_positive)

    p = sub.add_parser("families", help="generate and verify a prime family")
    p.add_argument("--p", type=_positive, required=True)
    p.add_argument("--kind", choices=("pm2", "pm1", "ramanujan"), required=True)
    p.add_argument("--j", type=_nonnegative, default=0, help="lift to j = 0..J")
    p.add_argument("--bound", type=_positive, default=20000)

    p = sub.add_parser("smoot", help="check the d_2 powers-of-3 family")
    p.add_argument("--alpha-max", type=_positive, required=True)
    p.add_argument("--bound", type=_positive, default=100000)

    p = sub.add_parser("scan", help="search for vanishing progressions")
    p.add_argument("--k", type=_int_list(_positive), nargs="+", required=True)
    p.add_argument("--A-max", type=_positive, required=True)
    p.add_argument("--mods", type=_int_list(_modulus), nargs="+", required=True)
    p.add_argument("--bound", type=_positive, default=5000)
    p.add_argument("--min-survivors", type=_positive)
    p.add_argument("--out", help="write JSON lines here instead of stdout")
    p.add_argument("--workers", type=_positive)

    p = sub.add_parser("bench", help="time multiplication and expansion kernels")
    p.add_argument("--order", type=_positive, default=20000)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _validate(parser: argparse.ArgumentParser, args) -> None:
    if args.verb == "expand":
        try:
            args.eta = EtaQuotient.parse(args.eta)
        except ValueError as exc:
            parser.error(str(exc))
    elif args.verb == "verify-lemma":
        if args.id != "all":
            try:
                args.id = LemmaId.from_name(args.id)
            except ValueError as exc:
                parser.error(str(exc))
    elif args.verb == "verify":
        if args.B >= args.A:
            parser.error(f"--B must be < --A (got B={args.B}, A={args.A})")
        if args.bound < args.A + args.B:
            parser.error("--bound must be at least A + B")
    elif args.verb == "families":
        if args.kind == "ramanujan" and args.p not in (5, 7, 11):
            parser.error("--kind ramanujan needs --p 5, 7 or 11")
        if args.kind != "ramanujan" and (args.p < 5 or not cg.is_prime(args.p)):
            parser.error("--p must be a prime >= 5")
        if args.bound < 2 * args.p:
            parser.error("--bound must be at least 2p")
    elif args.verb == "smoot":
        if args.bound < 2 * 3 ** args.alpha_max:
            parser.error("--bound too small for --alpha-max")
    elif args.verb == "scan":
        args.k = sorted({k for group in args.k for k in group})
        args.mods = sorted({m for group in args.mods for m in group})
        if not args.k or not args.mods:
            parser.error("--k and --mods need at least one value")
        if args.bound < 10 * args.A_max:
            parser.error("--bound must be at least 10 * --A-max")


def _cmd_expand(args, out) -> int:
    ring = ZZ if args.mod is None else Zmod(args.mod)
    s = eta_quotient_series(args.eta, args.order, ring)
    out.write("".join(f"{n}\t{c}\n" for n, c in enumerate(s.tolist())))
    return EXIT_OK


def _cmd_verify_lemma(args, out) -> int:
    tags = list(LemmaId) if args.id == "all" else [args.id]
    ok = True
    for tag in tags:
        report = verify_lemma(tag, args.order)
        ok &= report.passed
        out.write(f"{report}\n")
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_verify(args, out) -> int:
    report = cg.verify(cg.Congruence(args.k, args.A, args.B, args.mod), args.bound)
    out.write(f"{report}\n")
    return EXIT_OK if report.holds else EXIT_FAIL


def _write_table(reports, out) -> bool:
    out.write(f"{'k':>4} {'A':>4} {'B':>4} {'M':>4}  {'status':<18} {'checked':>8}  family\n")
    for r in reports:
        c = r.claim
        out.write(f"{c.k:>4} {c.A:>4} {c.B:>4} {c.M:>4}  {r.status:<18} {r.checked:>8}  "
                  f"{c.family}\n")
    held = sum(r.holds for r in reports)
    out.write(f"{held}/{len(reports)} hold up to bound {reports[0].bound if reports else 0}\n")
    for r in reports:
        if not r.holds:
            out.write(f"{r}\n")
    return held == len(reports)


def _cmd_catalog(args, out) -> int:
    claims = cat.paper_catalog(range(args.j_max + 1))
    reports = cg.verify_many(claims, args.bound, args.workers)
    return EXIT_OK if _write_table(reports, out) else EXIT_FAIL


def _cmd_families(args, out) -> int:
    if args.kind == "pm2":
        base = cg.family_p_minus_2(args.p)
    elif args.kind == "pm1":
        base = cg.family_p_minus_1(args.p)
    else:
        base = [cg.family_ramanujan(args.p)]
    claims = [cg.lift(c, j) for j in range(args.j + 1) for c in base]
    reports = cg.verify_many(claims, args.bound)
    return EXIT_OK if _write_table(reports, out) else EXIT_FAIL


def _cmd_smoot(args, out) -> int:
    reports = cg.smoot_check(args.alpha_max, args.bound)
    for alpha, r in enumerate(reports, start=1):
        out.write(f"alpha={alpha}: {'pass' if r.holds else 'FAIL'}: {r}\n")
    return EXIT_OK if all(r.holds for r in reports) else EXIT_FAIL


def _cmd_scan(args, out) -> int:
    found = cg.scan(args.k, args.A_max, args.mods, args.bound, args.min_survivors,
                    args.workers)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            cg.write_jsonl(found, args.bound, fh)
        out.write(f"{len(found)} congruences written to {args.out}\n")
    else:
        cg.write_jsonl(found, args.bound, out)
    return EXIT_OK


def _timed(fn, repeat=1):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _cmd_bench(args, out) -> int:
    n = args.order
    rng = np.random.default_rng(args.seed)
    ring = Zmod(1_000_003)
    a = from_coeffs(ring, rng.integers(0, ring.modulus, n))
    b = from_coeffs(ring, rng.integers(0, ring.modulus, n))
    small = min(n, 2000)
    za = from_coeffs(ZZ, rng.integers(-9, 10, small))
    zb = from_coeffs(ZZ, rng.integers(-9, 10, small))
    rows = [
        ("dense mul mod 1000003, schoolbook", n, lambda: mul(a, b)),
        ("dense mul mod 1000003, kronecker", n, lambda: mul(a, b, fast=True)),
        ("dense mul over Z, schoolbook", small, lambda: mul(za, zb)),
        ("dense mul over Z, kronecker", small, lambda: mul(za, zb, fast=True)),
        ("partition series mod 1000003", n, lambda: partition_series(n, ring)),
        ("d_2 expansion mod 2187", n,
         lambda: eta_quotient_series(EtaQuotient([(2, 2), (1, -7)]), n, Zmod(2187))),
        ("d_11 expansion mod 11", n,
         lambda: eta_quotient_series(EtaQuotient([(2, 11), (1, -34)]), n, Zmod(11))),
    ]
    dk_series(1, 8, Zmod(3))  # compile kernels outside the timings
    out.write(f"{'operation':<36} {'order':>8} {'seconds':>10}\n")
    for name, order, fn in rows:
        out.write(f"{name:<36} {order:>8} {_timed(fn):>10.4f}\n")
    same = mul(a, b) == mul(a, b, fast=True) and mul(za, zb) == mul(za, zb, fast=True)
    out.write(f"schoolbook and kronecker agree: {same}\n")
    return EXIT_OK if same else EXIT_FAIL


_COMMANDS = {
    "expand": _cmd_expand,
    "verify-lemma": _cmd_verify_lemma,
    "verify": _cmd_verify,
    "catalog": _cmd_catalog,
    "families": _cmd_families,
    "smoot": _cmd_smoot,
    "scan": _cmd_scan,
    "bench": _cmd_bench,
}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _validate(parser, args)
    except SystemExit as exc:
        return int(exc.code or 0)
    return _COMMANDS[args.verb](args, out if out is not None else sys.stdout)


def run() -> None:
    sys.exit(main())
