"""Command-line frontend.

Commands::

    chowseries series     --preset divisor-chow --n 2 --max-d 8
    chowseries certify    --preset divisor-chow --n 2 --max-d 12
    chowseries recurrence --preset euler-chow --n 2 --max-d 24 --slice eval:-1
    chowseries selftest   --seed 0

Exit codes: 0 for any completed run (including an Inconclusive verdict and
a "none found" recurrence search); 2 for unusable input (unknown preset,
malformed file, empty slice); 3 when the truncation is too small to carry
any evidence at all.  Verdicts and tables go to stdout, errors to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import ChowSeriesError
from .generators import (
    BettiProfile,
    divisor_chow_series,
    euler_chow_series,
    zero_cycle_series,
)
from .laurent import LaurentPoly
from .rationality import (
    ReportConfig,
    Verdict,
    VerdictKind,
    bivariate_view,
    denominator_from_recurrence,
    find_recurrence,
    rationality_report,
)
from .selftest import run_selftest
from .serialize import (
    dumps,
    poly_to_dict,
    series_from_dict,
    series_to_dict,
    verdict_to_dict,
)
from .series import GradedPolynomial, GradedSeries, witness_check


class CliInputError(Exception):
    pass


DEFAULT_MAX_D = 12
DEFAULT_MAX_S = 20


def _load_series(args) -> GradedSeries:
    if args.input:
        try:
            with open(args.input, "r", encoding="utf-8") as handle:
                data = json.load(handle)
        except OSError as exc:
            raise CliInputError(f"cannot read {args.input}: {exc}")
        except json.JSONDecodeError as exc:
            raise CliInputError(f"malformed JSON in {args.input}: {exc}")
        return series_from_dict(data)
    preset = args.preset
    if preset is None:
        raise CliInputError("either --preset or --input is required")
    max_d = args.max_d
    if preset in ("divisor-chow", "euler-chow"):
        if args.n is None:
            raise CliInputError(f"preset {preset} requires --n")
        if args.n < 1:
            raise CliInputError(f"--n must be >= 1, got {args.n}")
        builder = divisor_chow_series if preset == "divisor-chow" else euler_chow_series
        return builder(args.n, max_d)
    if preset == "zero-cycles":
        if not args.betti:
            raise CliInputError("preset zero-cycles requires --betti (even Betti numbers, e.g. 1,1)")
        try:
            numbers = tuple(int(x) for x in args.betti.split(","))
            profile = BettiProfile(numbers)
        except ValueError as exc:
            raise CliInputError(f"bad --betti value {args.betti!r}: {exc}")
        return zero_cycle_series(profile, max_d)
    raise CliInputError(f"unknown preset {preset!r}")


def _poly_terms_str(poly: LaurentPoly, max_s: int | None):
    pairs = poly.to_pairs()
    if max_s is not None:
        shown = [p for p in pairs if p[0] <= max_s]
        hidden = len(pairs) - len(shown)
    else:
        shown, hidden = list(pairs), 0
    body = ",".join(f"{e}:{c}" for e, c in shown)
    if hidden:
        body += f",...(+{hidden} terms with s-exp > {max_s})"
    return "{" + body + "}", hidden


def render_series_text(series: GradedSeries, max_s: int | None) -> str:
    lines = [f"rank: {series.rank}, truncation: {list(series.truncation)}"]
    truncated_any = False
    for lam, poly in series.entries():
        body, hidden = _poly_terms_str(poly, max_s)
        truncated_any = truncated_any or hidden > 0
        label = f"d={lam[0]}" if series.rank == 1 else f"lambda={list(lam)}"
        lines.append(f"{label}: {body}")
    if truncated_any:
        lines.append(f"note: displayed s-exponents capped at {max_s}; JSON output is complete")
    return "\n".join(lines)


def render_rank1_poly(poly: GradedPolynomial) -> str:
    if poly.is_zero:
        return "0"
    parts = []
    for lam, coeff in poly.items():
        d = lam[0]
        if d == 0:
            parts.append(f"({coeff})")
        elif d == 1:
            parts.append(f"({coeff})*t")
        else:
            parts.append(f"({coeff})*t^{d}")
    return " + ".join(parts)


def render_verdict_text(verdict: Verdict) -> str:
    lines = [f"verdict: {verdict.kind.value}"]
    cert = verdict.certificate
    if cert is not None:
        lines.append(f"support points (s-exponents): {', '.join(map(str, cert.support))}")
        lines.append(f"gaps (zero rows between support points): {', '.join(map(str, cert.gaps))}")
        lines.append(
            "gaps, inclusive-difference convention: "
            + ", ".join(map(str, cert.gaps_inclusive))
        )
        lines.append(f"growth evidence: {cert.growth.describe()}")
    witness = verdict.witness
    if witness is not None:
        lines.append(f"witness f: {render_rank1_poly(witness.denominator)}")
        lines.append(f"witness g: {render_rank1_poly(witness.numerator)}")
        lines.append(f"checked truncation: {list(witness.checked_truncation)}")
    if verdict.reason:
        lines.append(f"reason: {verdict.reason}")
    if verdict.diagnostic:
        lines.append(f"diagnostic: {verdict.diagnostic}")
    return "\n".join(lines)


def cmd_series(args) -> int:
    series = _load_series(args)
    if args.format == "json":
        sys.stdout.write(dumps(series_to_dict(series)))
    else:
        print(render_series_text(series, args.max_s))
    return 0


def cmd_certify(args) -> int:
    series = _load_series(args)
    verdict = rationality_report(series, ReportConfig(max_order=args.max_order))
    if args.format == "json":
        sys.stdout.write(dumps(verdict_to_dict(verdict)))
    else:
        print(render_verdict_text(verdict))
    if verdict.kind is VerdictKind.INCONCLUSIVE and verdict.truncation_limited:
        return 3
    return 0


def _slice_sequence(series: GradedSeries, selector: str):
    """Extract a rational sequence from a rank-1 series: ``eval:A`` fixes
    s = A (exact), ``row:K`` takes the coefficient row of s^K."""
    kind, _, value = selector.partition(":")
    if kind == "eval":
        try:
            at = int(value)
        except ValueError:
            raise CliInputError(f"bad slice {selector!r}: eval needs an integer")
        return [series.coefficient(d).evaluate(at) for d in range(series.truncation[0] + 1)]
    if kind == "row":
        try:
            row_index = int(value)
        except ValueError:
            raise CliInputError(f"bad slice {selector!r}: row needs an integer")
        row = bivariate_view(series).row(row_index)
        return [row.coefficient(d) for d in range(series.truncation[0] + 1)]
    raise CliInputError(f"bad slice {selector!r}: use eval:<int> or row:<int>")


def cmd_recurrence(args) -> int:
    series = _load_series(args)
    if series.rank != 1:
        raise CliInputError(f"recurrence search needs a rank-1 series, got rank {series.rank}")
    seq = _slice_sequence(series, args.slice)
    if not any(seq):
        print("slice is empty (all coefficients zero)", file=sys.stderr)
        return 2
    order_cap = min(args.max_order, len(seq) // 2)
    capped = order_cap < args.max_order
    if order_cap < 1:
        print("slice too short to fit any recurrence", file=sys.stderr)
        return 2
    recurrence = find_recurrence(seq, order_cap)
    payload: dict = {
        "slice": args.slice,
        "sequence_length": len(seq),
        "max_order": order_cap,
    }
    if recurrence is None:
        payload["recurrence"] = None
        if args.format == "json":
            sys.stdout.write(dumps(payload))
        else:
            print(f"no recurrence of order <= {order_cap} found")
            if capped:
                print(f"note: order capped at {order_cap} by the {len(seq)} available terms")
        return 0
    f = denominator_from_recurrence(recurrence)
    slice_series = GradedSeries(
        1, series.truncation, {(d,): LaurentPoly.term(c) for d, c in enumerate(seq) if c}
    )
    g_data = {
        lam: poly
        for lam, poly in (slice_series * f).entries()
        if lam[0] < max(len(recurrence), 1)
    }
    g = GradedPolynomial(1, g_data)
    verified = witness_check(f, slice_series, g)
    payload.update(
        {
            "recurrence": [str(c) for c in recurrence],
            "f": poly_to_dict(f),
            "g": poly_to_dict(g),
            "verified": verified,
        }
    )
    if args.format == "json":
        sys.stdout.write(dumps(payload))
    else:
        print(f"order {len(recurrence)} recurrence: x(n) = "
              + " + ".join(f"({c})*x(n-{i})" for i, c in enumerate(recurrence, start=1)))
        print(f"f: {render_rank1_poly(f)}")
        print(f"g: {render_rank1_poly(g)}")
        print(f"verified by convolution: {verified}")
    return 0


def cmd_selftest(args) -> int:
    results = run_selftest(seed=args.seed)
    failed = 0
    for name, ok, detail in results:
        status = "ok" if ok else "FAIL"
        print(f"{status:4s} {name}: {detail}")
        if not ok:
            failed += 1
    print(f"{len(results) - failed}/{len(results)} checks passed (seed {args.seed})")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chowseries",
        description="Exact graded series of cycle spaces and rationality certification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_source_flags(p):
        p.add_argument("--preset", choices=["divisor-chow", "euler-chow", "zero-cycles"])
        p.add_argument("--input", help="path to a series JSON file")
        p.add_argument("--n", type=int, help="ambient projective dimension for presets")
        p.add_argument("--max-d", type=int, default=DEFAULT_MAX_D, dest="max_d",
                       help=f"degree truncation (default {DEFAULT_MAX_D})")
        p.add_argument("--betti", help="comma-separated even Betti numbers for zero-cycles")
        p.add_argument("--format", choices=["text", "json"], default="text")

    p_series = sub.add_parser("series", help="compute and print a series")
    add_source_flags(p_series)
    p_series.add_argument("--max-s", type=int, default=DEFAULT_MAX_S, dest="max_s",
                          help="cap displayed s-exponents in text mode")
    p_series.set_defaults(func=cmd_series)

    p_certify = sub.add_parser("certify", help="run the rationality pipeline")
    add_source_flags(p_certify)
    p_certify.add_argument("--max-order", type=int, default=12, dest="max_order",
                           help="recurrence search order bound")
    p_certify.set_defaults(func=cmd_certify)

    p_rec = sub.add_parser("recurrence", help="search a slice for a linear recurrence")
    add_source_flags(p_rec)
    p_rec.add_argument("--max-order", type=int, default=12, dest="max_order")
    p_rec.add_argument("--slice", default="eval:-1",
                       help="slice selector: eval:<int> (fix s) or row:<int> (fixed s-exponent)")
    p_rec.set_defaults(func=cmd_recurrence)

    p_self = sub.add_parser("selftest", help="run the seeded property checks")
    p_self.add_argument("--seed", type=int, default=0)
    p_self.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CliInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ChowSeriesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
