"""Batch command-line front end.

Subcommands: verify, groebner, hilbert, character, socle, challenge, points,
triangle.  All numeric output is exact (integers or rational strings) and
byte-identical across runs and parallelism settings: jobs may race, but
reports are emitted in sorted key order.

Exit codes: 0 all selected checks pass, 1 at least one failure, 2 usage
error, 3 resource limit hit.  ``ARTINFORGE_PAIR_CAP`` is the fallback for
``--pair-cap``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import paperlab, quotient, reptheory
from .errors import ResourceLimitError
from .groebner import DEFAULT_PAIR_CAP, buchberger
from .polyarith import DEGLEX, GREVLEX, LEX, Ideal

_ORDERS = {"grevlex": GREVLEX, "lex": LEX, "deglex": DEGLEX}

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _parse_n_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad n range {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty n range {text!r}")
    return a, b


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    common.add_argument(
        "--pair-cap",
        type=int,
        default=None,
        help="S-pair queue bound (default: ARTINFORGE_PAIR_CAP or 10^6)",
    )
    common.add_argument(
        "--allow-large-n",
        action="store_true",
        help="permit n = 8 (computations grow steeply)",
    )

    parser = argparse.ArgumentParser(
        prog="artinforge",
        description="exact verification workbench for a family of binomial "
        "ideals and their Artinian quotients",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="run registered claims")
    p.add_argument("--n", type=_parse_n_range, default=(2, 6), metavar="A..B")
    p.add_argument("--claims", default="all", help="comma list of claim ids or 'all'")
    p.add_argument("--jobs", type=int, default=1, help="parallel claim jobs")
    p.add_argument(
        "--timings", action="store_true", help="include millis in JSON reports"
    )

    p = sub.add_parser("groebner", parents=[common], help="print a reduced basis")
    p.add_argument("--ideal", choices=("I", "J", "K", "L", "Q"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--order", choices=tuple(_ORDERS), default="grevlex")

    p = sub.add_parser("hilbert", parents=[common], help="print a Hilbert series")
    p.add_argument("--ideal", choices=("I", "J", "K"), required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("character", parents=[common], help="print a class function")
    p.add_argument(
        "--kind",
        choices=("xn", "powerset", "half-powerset", "subset", "trivial"),
        required=True,
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None, help="subset size (kind=subset)")

    p = sub.add_parser("socle", parents=[common], help="socle dimension of R/J or R/K")
    p.add_argument("--ideal", choices=("J", "K"), required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser(
        "challenge", parents=[common], help="graded character of R/K as t-series"
    )
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("points", parents=[common], help="list the point configuration")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("triangle", parents=[common], help="symmetrised triangle rows")
    p.add_argument("--n", type=_parse_n_range, required=True, metavar="A..B")

    return parser


def _check_n(parser, args, values) -> bool:
    for n in values:
        if not 2 <= n <= 8:
            parser.error(f"n={n} outside the supported range 2..8")
        if n == 8 and not args.allow_large_n:
            parser.error("n=8 requires --allow-large-n")
    return True


def _resolve_cap(args) -> "int | None":
    if args.pair_cap is not None:
        return args.pair_cap
    env = os.environ.get("ARTINFORGE_PAIR_CAP")
    return int(env) if env else None


def _named_gb(name: str, n: int, order, cap):
    if name == "I":
        return buchberger(paperlab.build_ideal("I", n), order, cap)
    if name == "J":
        init = paperlab._gb_J(n, cap if cap is not None else DEFAULT_PAIR_CAP)
        if order is GREVLEX:
            return init
        return buchberger(Ideal(init.ring, init.elements), order, cap)
    if name == "K":
        return buchberger(paperlab._ideal_K(n), order, cap)
    if name == "L":
        return buchberger(paperlab.build_ideal("L", n), order, cap)
    if name == "Q":
        return buchberger(paperlab.build_ideal("Q", n), order, cap)
    raise ValueError(name)


def _emit(lines) -> None:
    for line in lines:
        sys.stdout.write(line + "\n")


def _cmd_verify(parser, args) -> int:
    lo, hi = args.n
    _check_n(parser, args, range(lo, hi + 1))
    if args.claims == "all":
        claims = sorted(paperlab.CLAIMS)
    else:
        claims = [c.strip() for c in args.claims.split(",") if c.strip()]
        for c in claims:
            if c not in paperlab.CLAIMS:
                parser.error(f"unknown claim id {c!r}")
        claims = sorted(set(claims))
    cap = _resolve_cap(args)
    jobs = [(claim, n) for claim in claims for n in range(lo, hi + 1)]

    def run_one(job):
        claim, n = job
        return paperlab.verify(claim, n, cap)

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(run_one, jobs))
    else:
        reports = [run_one(job) for job in jobs]
    reports.sort(key=lambda r: (r.claim, r.n))

    if args.format == "json":
        _emit(
            json.dumps(r.to_json_dict(include_millis=args.timings), sort_keys=True)
            for r in reports
        )
    else:
        for r in reports:
            line = f"{r.status:<8}{r.claim:<24}n={r.n}"
            if r.witness:
                line += f"  [{r.witness}]"
            sys.stdout.write(line + "\n")
    counts = {
        status: sum(1 for r in reports if r.status == status)
        for status in ("pass", "fail", "skipped")
    }
    print(
        f"{counts['pass']} pass, {counts['fail']} fail, "
        f"{counts['skipped']} skipped",
        file=sys.stderr,
    )
    return EXIT_FAIL if counts["fail"] else EXIT_OK


def _cmd_groebner(parser, args) -> int:
    _check_n(parser, args, (args.n,))
    gb = _named_gb(args.ideal, args.n, _ORDERS[args.order], _resolve_cap(args))
    rendered = [gb.ring.fmt(g, gb.order) for g in gb.elements]
    if args.format == "json":
        _emit(
            [
                json.dumps(
                    {
                        "ideal": args.ideal,
                        "n": args.n,
                        "order": args.order,
                        "basis": rendered,
                    },
                    sort_keys=True,
                )
            ]
        )
    else:
        _emit(rendered)
    return EXIT_OK


def _cmd_hilbert(parser, args) -> int:
    _check_n(parser, args, (args.n,))
    cap = _resolve_cap(args)
    gb = _named_gb(args.ideal, args.n, GREVLEX, cap)
    series = quotient.hilbert_series(quotient.standard_monomials(gb))
    if args.format == "json":
        _emit(
            [
                json.dumps(
                    {"coefficients": series, "ideal": args.ideal, "n": args.n},
                    sort_keys=True,
                )
            ]
        )
    else:
        _emit([" ".join(str(c) for c in series)])
    return EXIT_OK


def _cmd_character(parser, args) -> int:
    _check_n(parser, args, (args.n,))
    n = args.n
    if args.kind == "xn":
        cf = reptheory.xn_character(n)
    elif args.kind == "powerset":
        cf = reptheory.powerset_character(n)
    elif args.kind == "half-powerset":
        if n % 2 == 0:
            parser.error("--kind half-powerset requires odd n")
        cf = reptheory.half_powerset_character(n)
    elif args.kind == "trivial":
        cf = reptheory.trivial_character(n)
    else:
        if args.k is None:
            parser.error("--kind subset requires --k")
        if not 0 <= args.k <= n:
            parser.error(f"--k must lie in 0..{n}")
        cf = reptheory.subset_character(n, args.k)
    if args.format == "json":
        _emit([json.dumps(cf.to_dict(), sort_keys=True)])
    else:
        _emit(
            f"({','.join(str(p) for p in lam)}): {value}"
            for lam, value in cf.values.items()
        )
    return EXIT_OK


def _cmd_socle(parser, args) -> int:
    _check_n(parser, args, (args.n,))
    cap = _resolve_cap(args)
    eff = cap if cap is not None else DEFAULT_PAIR_CAP
    q = (
        paperlab._quotient_J(args.n, eff)
        if args.ideal == "J"
        else paperlab._quotient_K(args.n, eff)
    )
    dim, gorenstein = quotient.socle_dimension(q)
    if args.format == "json":
        _emit(
            [
                json.dumps(
                    {
                        "gorenstein": gorenstein,
                        "ideal": args.ideal,
                        "n": args.n,
                        "socle_dimension": dim,
                    },
                    sort_keys=True,
                )
            ]
        )
    else:
        _emit([f"socle_dimension={dim} gorenstein={str(gorenstein).lower()}"])
    return EXIT_OK


def _cmd_challenge(parser, args) -> int:
    _check_n(parser, args, (args.n,))
    series = paperlab.challenge_series(args.n, _resolve_cap(args))
    if args.format == "json":
        _emit([json.dumps(series.to_dict(), sort_keys=True)])
    else:
        lines = []
        for degree, cf in series.terms:
            values = ", ".join(
                f"({','.join(str(p) for p in lam)}): {v}"
                for lam, v in cf.values.items()
            )
            lines.append(f"t^{degree}: {values}")
        _emit(lines)
    return EXIT_OK


def _cmd_points(parser, args) -> int:
    _check_n(parser, args, (args.n,))
    if args.n < 3:
        parser.error("points requires n >= 3")
    pts = paperlab.enumerate_points(args.n)
    if args.format == "json":
        payload = [
            {"origin": True}
            if p.is_origin
            else {"origin": False, "root_index": p.k, "signs": list(p.eps)}
            for p in pts
        ]
        _emit([json.dumps({"count": len(pts), "points": payload}, sort_keys=True)])
    else:
        lines = []
        for p in pts:
            if p.is_origin:
                lines.append("origin")
            else:
                signs = "".join("+" if e == 1 else "-" for e in p.eps)
                lines.append(f"k={p.k} eps={signs}")
        _emit(lines)
    return EXIT_OK


def _cmd_triangle(parser, args) -> int:
    lo, hi = args.n
    _check_n(parser, args, range(lo, hi + 1))
    rows = {n: paperlab.bernoulli(n) for n in range(lo, hi + 1)}
    if args.format == "json":
        _emit(
            [
                json.dumps({"n": n, "row": rows[n]}, sort_keys=True)
                for n in range(lo, hi + 1)
            ]
        )
    else:
        _emit(" ".join(str(c) for c in rows[n]) for n in range(lo, hi + 1))
    return EXIT_OK


_COMMANDS = {
    "verify": _cmd_verify,
    "groebner": _cmd_groebner,
    "hilbert": _cmd_hilbert,
    "character": _cmd_character,
    "socle": _cmd_socle,
    "challenge": _cmd_challenge,
    "points": _cmd_points,
    "triangle": _cmd_triangle,
}


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](parser, args)
    except SystemExit as exc:  # argparse reports usage errors itself
        code = exc.code
        return code if isinstance(code, int) else EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


def main() -> None:
    sys.exit(run())
