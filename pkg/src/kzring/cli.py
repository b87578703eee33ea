"""Command-line interface: ``python -m kzring <command> ...``.

All results are JSON on stdout; diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from typing import Optional, Sequence

from . import checks
from .core import as_rational
from .lie import Weight, dominant_weights
from .motive import local_exponents
from .ring import Expansion, Fusion, Representation, context, galois_for_variant, pi_map, pi_predict

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_BAD_PARTITION = 3
EXIT_LEVEL = 4
EXIT_KAPPA = 5
EXIT_CACHE = 6
EXIT_UNKNOWN_CHECK = 7

CACHE_FORMAT = 1


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def parse_partition(n: int, text: str) -> Weight:
    try:
        parts = [int(x) for x in text.split(",")] if text.strip() else []
    except ValueError:
        raise CliError(EXIT_BAD_PARTITION, f"malformed partition {text!r}: parts must be integers")
    if len(parts) > n:
        raise CliError(EXIT_BAD_PARTITION, f"malformed partition {text!r}: more than {n} parts")
    if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise CliError(EXIT_BAD_PARTITION, f"malformed partition {text!r}: parts must be weakly decreasing and nonnegative")
    return Weight.of(n, parts)


def parse_weights(n: int, text: Optional[str]) -> list[Weight]:
    if not text:
        return []
    return [parse_partition(n, chunk) for chunk in text.split(";")]


def parse_kappa(text: str):
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError, TypeError):
        raise CliError(EXIT_KAPPA, f"malformed kappa {text!r}")


def build_context(args):
    if args.mode == "rep":
        if args.kappa is None:
            raise CliError(EXIT_USAGE, "--kappa is required in rep mode")
        kappa = parse_kappa(args.kappa)
        if kappa <= 0:
            raise CliError(EXIT_KAPPA, f"kappa must be positive in rep mode, got {kappa}")
        return context(args.n, Representation(kappa))
    if args.level is None:
        raise CliError(EXIT_USAGE, "--level is required in fusion mode")
    if args.level < 1:
        raise CliError(EXIT_LEVEL, "fusion level must be at least 1")
    try:
        big = args.level + args.n
        return context(args.n, Fusion(args.level, args.galois % big))
    except ValueError as exc:
        raise CliError(EXIT_USAGE, str(exc))


def check_levels(ctx, weights: Sequence[Weight]):
    if ctx.is_fusion:
        for w in weights:
            if w.level > ctx.level:
                raise CliError(EXIT_LEVEL, f"level violation: {w} has level {w.level} > {ctx.level}")


def mode_header(ctx) -> dict:
    if ctx.is_fusion:
        return {"mode": "fusion", "level": ctx.level, "galois": ctx.mode.galois}
    return {"mode": "rep", "kappa": str(ctx.kappa)}


def cmd_mult(args) -> int:
    ctx = build_context(args)
    weights = parse_weights(args.n, args.weights)
    if not weights:
        raise CliError(EXIT_USAGE, "--weights needs at least one partition")
    check_levels(ctx, weights)
    if args.nu is not None:
        nu = parse_partition(args.n, args.nu)
        check_levels(ctx, [nu])
        print(dumps(ctx.npoint(weights, nu).to_json()))
    else:
        print(dumps(ctx.product(weights).to_json()))
    return EXIT_OK


def _sample(args) -> checks.SampleSpec:
    return checks.SampleSpec(max_boxes=args.max_boxes, samples=args.samples, seed=args.seed)


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise CliError(EXIT_USAGE, f"--{name.replace('_', '-')} is required for check {args.check}")


def run_check(args) -> checks.CheckReport:
    name = args.check
    if name not in checks.CHECKS:
        raise CliError(EXIT_UNKNOWN_CHECK, f"unknown check {name!r}; known: {', '.join(sorted(checks.CHECKS))}")
    n = args.n
    if name in ("assoc", "bracketing", "classical", "effective"):
        ctx = build_context(args)
        return checks.CHECKS[name](ctx, _sample(args))
    if name == "fusion-purity":
        _need(args, "level")
        return checks.check_fusion_purity(n, args.level, _sample(args))
    if name == "purity":
        return checks.check_purity_integer_inverse(n, args.m, _sample(args))
    if name in ("kappa-shift", "negative-kappa"):
        _need(args, "kappa")
        kappa = parse_kappa(args.kappa)
        if name == "kappa-shift":
            if kappa <= 0:
                raise CliError(EXIT_KAPPA, "kappa must be positive")
            return checks.check_kappa_shift(n, kappa, _sample(args))
        return checks.check_negative_kappa(n, kappa, _sample(args), level=args.level)
    if name == "pi":
        _need(args, "level")
        return checks.check_pi(n, args.level, args.variant, args.max)
    if name == "pi-mult":
        _need(args, "level")
        return checks.check_pi_multiplicative(n, args.level, args.galois, _sample(args))
    if name == "fold":
        _need(args, "level")
        return checks.check_fold_length(n, args.level, _sample(args))
    if name == "pieri-truncation":
        _need(args, "level")
        return checks.check_pieri_truncation(n, args.level)
    _need(args, "level", "weights", "nu")
    weights = parse_weights(n, args.weights)
    nu = parse_partition(n, args.nu)
    if name == "hodge-filtration":
        return checks.check_hodge_filtration(n, args.level, weights, nu)
    if name == "weight-bounds":
        return checks.check_weight_bounds_galois(n, args.level, weights, nu)
    return checks.bgg_euler_report(n, args.level, weights, nu)


def cmd_check(args) -> int:
    report = run_check(args)
    print(dumps(report.to_json()))
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def entry_checksum(left: list[int], right: list[int], product: list) -> str:
    payload = dumps({"left": left, "right": right, "product": product})
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


class CacheFile:
    """Append-only JSON-lines table: a header line, then one line per product."""

    def __init__(self, path: str, header: dict):
        self.path = path
        self.header = header
        self.entries: dict[tuple, dict] = {}

    def load(self) -> int:
        """Read and verify an existing file; returns the number of verified entries."""
        if not os.path.exists(self.path):
            return 0
        with open(self.path, encoding="utf-8") as fh:
            lines = [line for line in fh.read().splitlines() if line.strip()]
        if not lines:
            return 0
        try:
            header = json.loads(lines[0])
        except json.JSONDecodeError as exc:
            raise CliError(EXIT_CACHE, f"cache {self.path}: unreadable header ({exc})")
        if header != self.header:
            raise CliError(EXIT_CACHE, f"cache {self.path}: header {dumps(header)} does not match {dumps(self.header)}")
        for lineno, line in enumerate(lines[1:], start=2):
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CliError(EXIT_CACHE, f"cache {self.path} line {lineno}: {exc}")
            if entry_checksum(rec["left"], rec["right"], rec["product"]) != rec["checksum"]:
                raise CliError(EXIT_CACHE, f"cache {self.path} line {lineno}: checksum mismatch")
            self.entries[(tuple(rec["left"]), tuple(rec["right"]))] = rec
        return len(self.entries)

    def append(self, records: list[dict]):
        new_file = not os.path.exists(self.path) or os.path.getsize(self.path) == 0
        with open(self.path, "a", encoding="utf-8") as fh:
            if new_file:
                fh.write(dumps(self.header) + "\n")
            for rec in records:
                fh.write(dumps(rec) + "\n")
                self.entries[(tuple(rec["left"]), tuple(rec["right"]))] = rec

    def expansions(self) -> dict[tuple[Weight, Weight], Expansion]:
        n = self.header["n"]
        return {
            (Weight(n, left), Weight(n, right)): Expansion.from_json(n, rec["product"])
            for (left, right), rec in self.entries.items()
        }


def cmd_table(args) -> int:
    ctx = build_context(args)
    header = {"format": CACHE_FORMAT, "n": args.n, "max_boxes": args.max_boxes, **mode_header(ctx)}
    cache = CacheFile(args.out, header)
    verified = cache.load()
    for (a, b), e in cache.expansions().items():
        ctx._star.setdefault((a, b), e)
    weights = list(dominant_weights(args.n, max_boxes=args.max_boxes, max_level=ctx.level))
    fresh = []
    for a in weights:
        for b in weights:
            if (a.parts, b.parts) in cache.entries:
                continue
            product = ctx.star(a, b).to_json()
            left, right = a.to_json(), b.to_json()
            fresh.append({"left": left, "right": right, "product": product, "checksum": entry_checksum(left, right, product)})
    if fresh or not os.path.exists(args.out):
        cache.append(fresh)
    print(dumps({"path": args.out, "entries": len(cache.entries), "added": len(fresh), "verified": verified}))
    return EXIT_OK


def cmd_exponents(args) -> int:
    kappa = parse_kappa(args.kappa)
    if kappa == 0:
        raise CliError(EXIT_KAPPA, "kappa must be nonzero")
    weights = parse_weights(args.n, args.weights)
    if not weights:
        raise CliError(EXIT_USAGE, "--weights needs at least one partition")
    out = [
        {"target": e.target.to_json(), "exponent": str(e.exponent), "residue": str(e.residue)}
        for e in local_exponents(args.n, kappa, weights)
    ]
    print(dumps(out))
    return EXIT_OK


def cmd_pi(args) -> int:
    if args.level is None or args.level < 1:
        raise CliError(EXIT_LEVEL, "--level must be at least 1")
    weights = parse_weights(args.n, args.weights)
    if len(weights) != 1:
        raise CliError(EXIT_USAGE, "--weights must name exactly one partition")
    lam = weights[0]
    b = galois_for_variant(args.n, args.level, args.variant) if args.variant else args.galois
    try:
        computed = pi_map(args.n, args.level, b, lam)
    except ValueError as exc:
        raise CliError(EXIT_USAGE, str(exc))
    out = {"weight": lam.to_json(), "level": args.level, "galois": b % (args.level + args.n), "computed": computed.to_json()}
    big = args.level + args.n
    variant = args.variant or {1: "standard", big - 1: "conjugate"}.get(b % big)
    if variant:
        predicted = pi_predict(args.n, args.level, variant, lam)
        out["variant"] = variant
        out["predicted"] = predicted.to_json()
        out["agrees"] = computed.same_value(predicted)
    print(dumps(out))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kzring", description="Enriched representation and fusion rings of sl_n.")
    sub = parser.add_subparsers(dest="command", required=True)

    def ring_flags(p):
        p.add_argument("--n", type=int, required=True, help="rank parameter of sl_n")
        p.add_argument("--mode", choices=("rep", "fusion"), default="rep")
        p.add_argument("--kappa", help="positive rational r/s (rep mode)")
        p.add_argument("--level", type=int, help="fusion level")
        p.add_argument("--galois", type=int, default=1, help="Galois parameter b, a unit mod level+n")

    p = sub.add_parser("mult", help="products and n-point coefficients")
    ring_flags(p)
    p.add_argument("--weights", required=True, help='partitions, e.g. "7,5;9,5"')
    p.add_argument("--nu", help="read off a single coefficient")
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("check", help="run a consistency check")
    ring_flags(p)
    p.add_argument("--check", required=True, help=", ".join(sorted(checks.CHECKS)))
    p.add_argument("--variant", choices=("standard", "conjugate"), default="standard")
    p.add_argument("--max", type=int, default=30, help="weight bound for the pi check")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-boxes", type=int, default=4)
    p.add_argument("--m", type=int, default=1, help="kappa = 1/m for the purity check")
    p.add_argument("--weights")
    p.add_argument("--nu")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("table", help="cache all pairwise products up to a box bound")
    ring_flags(p)
    p.add_argument("--max-boxes", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("exponents", help="local monodromy exponents at a collision")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kappa", required=True)
    p.add_argument("--weights", required=True)
    p.set_defaults(func=cmd_exponents)

    p = sub.add_parser("pi", help="image of a class in the fusion ring next to its prediction")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--galois", type=int, default=1)
    p.add_argument("--variant", choices=("standard", "conjugate"))
    p.add_argument("--weights", required=True)
    p.set_defaults(func=cmd_pi)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "n", 2) < 2:
        print("error: --n must be at least 2", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
