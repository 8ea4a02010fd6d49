"""Command-line front end.

Subcommands: snf, ghs, verify, conjecture, fpp. Global options --seed,
--format {json,csv,text}, --out PATH, and --config PATH (flags override the
config file, which overrides built-in defaults). Verification exits 0 when
nothing is violated, 1 on any violated verdict, 2 on usage or I/O errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from contextlib import contextmanager

from . import formats
from .dag import family, longest_path_length
from .errors import GhsLabError, InvalidParamsError, ParseError
from .ghs import (
    DEFAULT_FPP_DET_CAP,
    build,
    cokernel_order_counts,
    constant_diagonal,
    fpp_point_orders,
    fpp_points,
)
from .intmat import det, is_hnf, snf
from .verify import (
    VIOLATED,
    append_counterexample_log,
    conjecture_exhaustive,
    conjecture_random,
    family_reports,
    check_cyclic_cokernel,
    check_exact_largest,
    check_largest_bound,
    check_pairwise_coprime,
    sweep_bipartite,
    sweep_bound_and_exact,
    sweep_bound_random,
    sweep_cyclic_random,
)

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_USAGE = 2

_DEFAULTS = {
    "seed": 0,
    "format": "text",
    "out": None,
    "primes": None,
    "n": None,
    "n_min": 1,
    "n_max": 4,
    "m": None,
    "m_lo": 2,
    "m_hi": 8,
    "d_lo": 1,
    "d_hi": 12,
    "i": None,
    "i_max": 5,
    "a": None,
    "b": None,
    "max_part": 3,
    "random": None,
    "det_cap": DEFAULT_FPP_DET_CAP,
    "hard_cap": 7,
    "d": None,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        _merge_config(args)
        return args.handler(args)
    except (GhsLabError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ghslab",
        description="Exact Smith-form toolkit for diagonal-plus-DAG matrices.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="seed for random sweeps")
    common.add_argument("--format", choices=("json", "csv", "text"), default=None)
    common.add_argument("--out", default=None, help="output path (default stdout)")
    common.add_argument("--config", default=None, help="JSON config file; flags override it")

    sub = parser.add_subparsers(dest="command", required=True)

    p_snf = sub.add_parser("snf", parents=[common], help="Smith normal form of a matrix file")
    p_snf.add_argument("matrix", help="matrix JSON file")
    p_snf.add_argument("--transforms", action="store_true", help="also print the transforms")
    p_snf.set_defaults(handler=_cmd_snf)

    p_ghs = sub.add_parser(
        "ghs", parents=[common], help="build an instance and report its invariants"
    )
    p_ghs.add_argument("instance", nargs="?", help="instance JSON file")
    p_ghs.add_argument(
        "--family",
        choices=("path", "complete", "B", "C", "bipartite_matching", "bipartite_complete"),
    )
    p_ghs.add_argument("--i", type=int, default=None, help="family index for B/C")
    p_ghs.add_argument("--n", type=int, default=None, help="vertex count for path/complete")
    p_ghs.add_argument("--a", type=int, default=None, help="first bipartite part size")
    p_ghs.add_argument("--b", type=int, default=None, help="second bipartite part size")
    p_ghs.add_argument("--m", type=int, default=None, help="constant diagonal value")
    p_ghs.add_argument("--d", default=None, help="comma-separated diagonal, e.g. 2,5,3")
    p_ghs.set_defaults(handler=_cmd_ghs)

    p_verify = sub.add_parser(
        "verify", parents=[common], help="stream theorem verdicts as JSON lines"
    )
    p_verify.add_argument(
        "--suite",
        required=True,
        choices=("all", "cyclic", "bound", "exact", "bipartite", "families"),
    )
    p_verify.add_argument("--instance", default=None, help="run on one instance file")
    p_verify.add_argument("--random", type=int, default=None, help="random instance count")
    p_verify.add_argument("--n-max", type=int, default=None, help="exhaustive graph size cap")
    p_verify.add_argument("--n-min", type=int, default=None)
    p_verify.add_argument("--m", type=int, default=None, help="family suite diagonal")
    p_verify.add_argument("--i-max", type=int, default=None, help="family suite index cap")
    p_verify.add_argument("--m-lo", type=int, default=None)
    p_verify.add_argument("--m-hi", type=int, default=None)
    p_verify.add_argument("--d-lo", type=int, default=None)
    p_verify.add_argument("--d-hi", type=int, default=None)
    p_verify.add_argument("--max-part", type=int, default=None, help="bipartite part cap")
    p_verify.add_argument("--primes", default=None, help="comma-separated primes")
    p_verify.set_defaults(handler=_cmd_verify)

    p_conj = sub.add_parser(
        "conjecture", parents=[common], help="sweep the unit-count conjecture"
    )
    p_conj.add_argument("--exhaustive", action="store_true", help="sweep all labeled graphs")
    p_conj.add_argument("--random", type=int, default=None, help="random graph count")
    p_conj.add_argument("--n", type=int, default=None, help="graph order for random sweeps")
    p_conj.add_argument("--n-min", type=int, default=None)
    p_conj.add_argument("--n-max", type=int, default=None)
    p_conj.add_argument("--primes", default=None, help="comma-separated primes")
    p_conj.add_argument("--hard-cap", type=int, default=None, help="exhaustive n ceiling")
    p_conj.set_defaults(handler=_cmd_conjecture)

    p_fpp = sub.add_parser(
        "fpp", parents=[common], help="fundamental parallelepiped points and group"
    )
    p_fpp.add_argument("instance", help="instance JSON file")
    p_fpp.add_argument("--det-cap", type=int, default=None, help="enumeration cap")
    p_fpp.add_argument("--points", action="store_true", help="also print the point list")
    p_fpp.set_defaults(handler=_cmd_fpp)

    return parser


def _merge_config(args: argparse.Namespace) -> None:
    # Precedence: explicit flags > config file > _DEFAULTS.
    layered = dict(_DEFAULTS)
    if getattr(args, "config", None):
        with open(args.config, encoding="utf-8") as fh:
            try:
                cfg = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ParseError(f"config file: {exc}") from exc
        if not isinstance(cfg, dict):
            raise ParseError("config file must hold a JSON object")
        for key, value in cfg.items():
            layered[key.replace("-", "_")] = value
    for key, value in layered.items():
        if getattr(args, key, _MISSING) is None:
            setattr(args, key, value)


_MISSING = object()


def _parse_primes(spec) -> tuple[int, ...]:
    if spec is None:
        return (2, 3, 5)
    if isinstance(spec, (list, tuple)):
        return tuple(int(x) for x in spec)
    try:
        return tuple(int(tok) for tok in str(spec).split(",") if tok.strip())
    except ValueError:
        raise ParseError(f"bad prime list: {spec!r}") from None


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(args, lines) -> None:
    text = "".join(line + "\n" for line in lines)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


@contextmanager
def _writer(args):
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            yield fh
    else:
        yield sys.stdout


def _cmd_snf(args) -> int:
    res = snf(formats.parse_matrix_json(_read(args.matrix)))
    diag = [str(x) for x in res.diagonal]
    if args.format == "json":
        payload = {"diagonal": diag}
        if args.transforms:
            payload["left"] = [[str(x) for x in row] for row in res.left.entries]
            payload["right"] = [[str(x) for x in row] for row in res.right.entries]
        lines = [json.dumps(payload, sort_keys=True, separators=(",", ":"))]
    elif args.format == "csv":
        lines = ["diagonal", ";".join(diag)]
    else:
        lines = [" ".join(diag)]
        if args.transforms:
            lines.append("S:")
            lines += [" ".join(str(x) for x in row) for row in res.left.entries]
            lines.append("T:")
            lines += [" ".join(str(x) for x in row) for row in res.right.entries]
    _emit(args, lines)
    return EXIT_OK


def _load_instance(args):
    if args.instance:
        return formats.parse_instance_json(_read(args.instance))
    if not args.family:
        raise ParseError("provide an instance file or --family")
    g = family(args.family, n=args.n, i=args.i, a=args.a, b=args.b)
    if args.d is not None:
        d = [int(tok) for tok in str(args.d).split(",") if tok.strip()]
    elif args.m is not None:
        d = [args.m] * g.n
    else:
        raise ParseError("family instances need --m or --d")
    return build(d, g)


def _cmd_ghs(args) -> int:
    inst = _load_instance(args)
    alphas = snf(inst.matrix).diagonal
    nonunit = [x for x in alphas if x != 1]
    h = longest_path_length(inst.g)
    m = constant_diagonal(inst)
    hermite = is_hnf(inst.matrix)
    if args.format == "json":
        payload = {
            "matrix": [[str(x) for x in row] for row in inst.matrix.entries],
            "snf": [str(x) for x in alphas],
            "nonunit": [str(x) for x in nonunit],
            "h": h,
            "hnf": hermite,
        }
        if m is not None:
            payload["bound"] = str(m**h)
            payload["bound_met"] = alphas[-1] == m**h
        lines = [json.dumps(payload, sort_keys=True, separators=(",", ":"))]
    elif args.format == "csv":
        lines = [
            "snf;nonunit;h;hnf",
            ";".join(
                (
                    " ".join(str(x) for x in alphas),
                    " ".join(str(x) for x in nonunit),
                    str(h),
                    str(hermite).lower(),
                )
            ),
        ]
    else:
        lines = ["A:"]
        lines += [" ".join(str(x) for x in row) for row in inst.matrix.entries]
        lines.append("snf: " + " ".join(str(x) for x in alphas))
        lines.append("nonunit: " + " ".join(str(x) for x in nonunit))
        lines.append(f"h: {h}")
        lines.append(f"hnf: {str(hermite).lower()}")
        if m is not None:
            met = "met" if alphas[-1] == m**h else "strict"
            lines.append(f"bound: alpha_n = {alphas[-1]} <= m^h = {m ** h} ({met})")
    _emit(args, lines)
    return EXIT_OK


def _render_report(report, fmt: str) -> str:
    if fmt == "csv":
        return ",".join(
            (
                report.claim,
                report.verdict,
                str(report.instance.get("n", "")),
                " ".join(report.instance.get("d", [])),
                " ".join(f"{i}-{j}" for i, j in report.instance.get("edges", [])),
                ";".join(report.witness.get("snf", [])),
            )
        )
    if fmt == "text":
        return f"[{report.verdict}] {report.claim} n={report.instance.get('n')}"
    return report.to_json()


_SUITE_CLAIMS = {
    "bound": ("largest-invariant-factor-bound",),
    "exact": ("largest-invariant-factor-exact",),
}


def _suite_reports(args):
    rng = random.Random(args.seed)
    suite = args.suite
    primes = _parse_primes(args.primes if args.primes is not None else "2,3,5,7")
    keep = _SUITE_CLAIMS.get(suite)

    def wanted(report):
        return keep is None or report.claim in keep

    if args.instance:
        if suite in ("families", "bipartite"):
            raise ParseError(f"suite {suite!r} has no single-instance mode")
        inst = formats.parse_instance_json(_read(args.instance))
        if suite in ("cyclic", "all"):
            yield check_cyclic_cokernel(inst)
            yield check_pairwise_coprime(inst)
        if suite in ("bound", "exact", "all") and constant_diagonal(inst) is not None:
            for report in (check_largest_bound(inst), check_exact_largest(inst)):
                if wanted(report):
                    yield report
        return
    if suite in ("families", "all"):
        yield from family_reports(args.m if args.m is not None else 6, args.i_max)
    if suite in ("cyclic", "all"):
        yield from sweep_cyclic_random(
            args.random or 500, rng, d_range=(args.d_lo, args.d_hi)
        )
    if suite in ("bound", "exact", "all"):
        if args.random:
            stream = sweep_bound_random(args.random, rng, m_range=(args.m_lo, args.m_hi))
        else:
            stream = sweep_bound_and_exact(
                args.n_max, range(args.m_lo, args.m_hi + 1), n_min=args.n_min
            )
        for report in stream:
            if wanted(report):
                yield report
    if suite in ("bipartite", "all"):
        yield from sweep_bipartite(
            args.max_part, args.max_part, range(args.m_lo, args.m_hi + 1), primes
        )


def _cmd_verify(args) -> int:
    fmt = args.format
    any_violated = False
    with _writer(args) as out:
        if fmt == "csv":
            out.write("claim,verdict,n,d,edges,snf\n")
        for report in _suite_reports(args):
            if report.verdict == VIOLATED:
                any_violated = True
            out.write(_render_report(report, fmt) + "\n")
    return EXIT_VIOLATED if any_violated else EXIT_OK


def _cmd_conjecture(args) -> int:
    primes = _parse_primes(args.primes)
    for p in primes:
        if p < 2:
            raise InvalidParamsError(f"bad prime {p}")
    if args.random:
        rng = random.Random(args.seed)
        cases = conjecture_random(args.random, args.n or 6, primes, rng)
    else:
        if args.n_max > args.hard_cap:
            raise InvalidParamsError(
                f"exhaustive sweep capped at n = {args.hard_cap}; raise --hard-cap to override"
            )
        cases = conjecture_exhaustive(args.n_min, args.n_max, primes)
    held = 0
    violations = []
    for case in cases:
        if case.holds:
            held += 1
        else:
            violations.append(case)
    if violations and args.out:
        append_counterexample_log(args.out, violations)
    total = held + len(violations)
    if args.format == "json":
        summary = json.dumps(
            {
                "cases": total,
                "holds": held,
                "violated": len(violations),
                "primes": list(primes),
            },
            sort_keys=True,
            separators=(",", ":"),
        )
        print(summary)
    elif args.format == "csv":
        print("cases,holds,violated")
        print(f"{total},{held},{len(violations)}")
    else:
        print(f"cases: {total}")
        print(f"holds: {held}")
        print(f"violated: {len(violations)}")
        if violations and args.out:
            print(f"log: {args.out}")
    return EXIT_VIOLATED if violations else EXIT_OK


def _cmd_fpp(args) -> int:
    inst = formats.parse_instance_json(_read(args.instance))
    volume = det(inst.matrix)
    points = fpp_points(inst, args.det_cap)
    observed = fpp_point_orders(inst, args.det_cap)
    alphas = snf(inst.matrix).diagonal
    predicted = cokernel_order_counts(alphas)
    match = observed == predicted
    group = " x ".join(f"Z/{a}" for a in alphas if a != 1) or "trivial"
    if args.format == "json":
        payload = {
            "det": str(volume),
            "point_count": len(points),
            "snf": [str(a) for a in alphas],
            "group": group,
            "orders_match": match,
        }
        if args.points:
            payload["points"] = [[str(c) for c in z] for z in points]
        lines = [json.dumps(payload, sort_keys=True, separators=(",", ":"))]
    elif args.format == "csv":
        lines = ["det,points,group,orders_match", f"{volume},{len(points)},{group},{match}"]
    else:
        lines = [
            f"det: {volume}",
            f"points: {len(points)}",
            f"group: {group}",
            f"orders_match: {str(match).lower()}",
        ]
        if args.points:
            lines.append(json.dumps([[str(c) for c in z] for z in points], separators=(",", ":")))
    _emit(args, lines)
    return EXIT_OK if match else EXIT_VIOLATED
