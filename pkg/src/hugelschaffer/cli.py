"""Command-line front end.

Subcommands: ``area``, ``bounds``, ``sample``, ``approx-table``,
``pi-series``, ``verify``.  Output is deterministic byte-for-byte for
fixed flags: floats are printed with 17 significant digits (or JSON's
shortest round-trip repr), keys keep a fixed order, lines end with LF.

Exit codes: 0 success, 1 domain or verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from decimal import Decimal, getcontext
from fractions import Fraction
from typing import Optional

from . import area as area_mod
from . import curve as curve_mod
from . import oracle as oracle_mod
from . import taylor as taylor_mod
from .elliptic import (
    AREA_SERIES,
    D_SERIES,
    DomainError,
    E_SERIES,
    K_SERIES,
    SeriesTarget,
    series_coeff,
    series_eval,
    target_value,
)
from .taylor import ApproxKind

# 30-digit reference used for the pi-series error column.
PI_30 = Decimal("3.14159265358979323846264338328")

_TARGETS = {"K": K_SERIES, "E": E_SERIES, "D": D_SERIES, "A": AREA_SERIES}


def _fmt(x: float) -> str:
    return format(x, ".17g")


def _rational_pi_str(pi_coeff: Fraction, const_coeff: Fraction) -> str:
    """Exact coefficient as 'p/q + p/q*pi' style text."""
    parts = []
    if const_coeff != 0:
        parts.append(str(const_coeff))
    if pi_coeff != 0:
        mag = abs(pi_coeff)
        piece = "pi" if mag == 1 else f"{mag}*pi"
        if not parts:
            parts.append(piece if pi_coeff > 0 else f"-{piece}")
        else:
            parts.append(f"+ {piece}" if pi_coeff > 0 else f"- {piece}")
    if not parts:
        return "0"
    return " ".join(parts)


def _emit_json(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=2))
    sys.stdout.write("\n")


def _emit_kv(pairs: list[tuple[str, object]], fmt: str) -> None:
    if fmt == "json":
        _emit_json(dict(pairs))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([k for k, _ in pairs])
        writer.writerow(
            [_fmt(v) if isinstance(v, float) else v for _, v in pairs]
        )
        sys.stdout.write(buf.getvalue())
    else:
        for k, v in pairs:
            sys.stdout.write(f"{k} = {_fmt(v) if isinstance(v, float) else v}\n")


def _params(args) -> curve_mod.CurveParams:
    return curve_mod.CurveParams(a=args.a, b=args.b, w=args.w)


# ---------------------------------------------------------------------------
# subcommands


def cmd_area(args) -> int:
    params = _params(args)
    shape = curve_mod.derive(params)
    exact = area_mod.area_exact(params)
    if args.method == "exact":
        total = exact.total
    elif args.method == "series":
        total = area_mod.area_series(params, tol=args.tol)
    else:
        kind = ApproxKind.FIRST if args.kind == "first" else ApproxKind.SECOND
        total = area_mod.area_taylor(params, args.n, kind, beta=args.beta)
    diff = (8.0 / 3.0) * exact.scale * shape.k
    pairs = [
        ("total", total),
        ("part1", 0.5 * (total - diff)),
        ("part2", 0.5 * (total + diff)),
        ("part_diff", diff),
        ("q", shape.q),
        ("k", shape.k),
        ("u", shape.u),
        ("gamma", shape.gamma),
        ("method", args.method),
    ]
    _emit_kv(pairs, args.format)
    return 0


def cmd_bounds(args) -> int:
    params = _params(args)
    cert = area_mod.bounds(params)
    pairs = [
        ("lower_coarse", cert.lower_coarse),
        ("lower_refined", cert.lower_refined),
        ("exact", cert.exact_total),
        ("upper_refined", cert.upper_refined),
        ("upper_coarse", cert.upper_coarse),
        ("delta", cert.delta),
        ("delta_printed", cert.delta_printed),
        ("delta_printed_consistent", cert.delta_printed_consistent),
        ("nabla", cert.nabla),
        ("nabla_piecewise", cert.nabla_piecewise),
    ]
    _emit_kv(pairs, args.format)
    return 0


def _svg_path(points) -> str:
    cmds = [f"M {_fmt(points[0].x)} {_fmt(-points[0].y)}"]
    cmds += [f"L {_fmt(p.x)} {_fmt(-p.y)}" for p in points[1:]]
    return " ".join(cmds) + " Z"


def cmd_sample(args) -> int:
    params = _params(args)
    shape = curve_mod.derive(params)
    points = curve_mod.sample_egg(params, args.n)
    ts = [2.0 * math.pi * j / (args.n - 1) for j in range(args.n)]

    if args.format == "svg":
        extent = max(params.a, shape.q * params.b)
        margin = 0.1 * extent
        r = extent + margin
        lines = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'viewBox="{_fmt(-r)} {_fmt(-r)} {_fmt(2 * r)} {_fmt(2 * r)}">',
            f'<path d="{_svg_path(points)}" fill="none" stroke="black" '
            f'stroke-width="{_fmt(extent / 200.0)}"/>',
        ]
        if args.circles:
            lines.append(
                f'<circle cx="0" cy="0" r="{_fmt(params.a)}" fill="none" '
                f'stroke="gray" stroke-width="{_fmt(extent / 400.0)}"/>'
            )
            lines.append(
                f'<circle cx="{_fmt(shape.u)}" cy="0" r="{_fmt(shape.q * params.b)}" '
                f'fill="none" stroke="gray" stroke-width="{_fmt(extent / 400.0)}"/>'
            )
        lines.append("</svg>")
        sys.stdout.write("\n".join(lines) + "\n")
        return 0

    if args.format == "json":
        payload = {
            "points": [
                {"t": t, "x": p.x, "y": p.y} for t, p in zip(ts, points)
            ]
        }
        if args.circles:
            k1, k2 = curve_mod.construction_circles(params, args.n)
            payload["circle1"] = [{"x": p.x, "y": p.y} for p in k1]
            payload["circle2"] = [{"x": p.x, "y": p.y} for p in k2]
        _emit_json(payload)
        return 0

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["t", "x", "y"])
    for t, p in zip(ts, points):
        writer.writerow([_fmt(t), _fmt(p.x), _fmt(p.y)])
    sys.stdout.write(buf.getvalue())
    return 0


def cmd_approx_table(args) -> int:
    target = _TARGETS[args.target]
    n = args.max_degree
    first = taylor_mod.first_taylor(target, n)
    second = taylor_mod.second_taylor(target, n, args.beta)
    beta_eff = second.beta

    coeff_dump = [
        (f"x^{2 * i}", _rational_pi_str(series_coeff(target, i), Fraction(0)))
        for i in range(n // 2 + 1)
    ]
    corrections = []
    for j in range(n + 1):
        appr = taylor_mod.second_taylor(target, j, args.beta)
        corr = appr.terms[-1]
        if corr.is_exact():
            corrections.append((j, _rational_pi_str(corr.pi_coeff, corr.const_coeff)))
        else:
            corrections.append((j, _fmt(corr.value())))

    grid = [
        beta_eff * (i + 1) / (args.grid_size + 1) for i in range(args.grid_size)
    ]
    rows = []
    for x in grid:
        f = target_value(target, x)
        tv = taylor_mod.eval_approx(first, x)
        sv = taylor_mod.eval_approx(second, x)
        rows.append((x, f, tv, sv, tv - f, sv - f))

    header = ["x", "f", "first", "second", "err_first", "err_second"]
    if args.format == "json":
        _emit_json(
            {
                "target": args.target,
                "degree": n,
                "beta": beta_eff,
                "series_coefficients": [
                    {"power": p, "value": v} for p, v in coeff_dump
                ],
                "second_kind_corrections": [
                    {"degree": j, "value": v} for j, v in corrections
                ],
                "rows": [dict(zip(header, row)) for row in rows],
            }
        )
        return 0
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])
        sys.stdout.write(buf.getvalue())
        return 0
    sys.stdout.write(f"target {args.target}, degree {n}, beta {_fmt(beta_eff)}\n")
    sys.stdout.write("series coefficients:\n")
    for p, v in coeff_dump:
        sys.stdout.write(f"  {p}: {v}\n")
    sys.stdout.write("second-kind correction coefficients:\n")
    for j, v in corrections:
        sys.stdout.write(f"  degree {j}: {v}\n")
    sys.stdout.write(" ".join(h.rjust(24) for h in header) + "\n")
    for row in rows:
        sys.stdout.write(" ".join(_fmt(v).rjust(24) for v in row) + "\n")
    return 0


def cmd_pi_series(args) -> int:
    getcontext().prec = 40
    partial = area_mod.inv_pi_partial(args.terms)
    inv_pi = 1 / PI_30
    abs_error = abs(Decimal(repr(partial)) - inv_pi)
    # magnitude of the last term added to the sum
    r = 1.0
    for i in range(1, args.terms + 1):
        r *= ((2 * i - 1) / (2 * i)) ** 2
    last_term = 0.375 * r / ((2 * args.terms - 1) * (args.terms + 1))
    pairs = [
        ("terms", args.terms),
        ("partial_sum", partial),
        ("abs_error", float(abs_error)),
        ("last_term", last_term),
    ]
    _emit_kv(pairs, args.format)
    return 0


# ---------------------------------------------------------------------------
# verification battery


def _verification_checks() -> list[tuple[str, float, float]]:
    """(name, margin, tolerance) triples; a check passes iff margin <= tol."""
    import random

    from .elliptic import complete_D, complete_E, complete_K

    checks: list[tuple[str, float, float]] = []

    grid = [i / 100.0 for i in range(5, 100, 5)]
    checks.append(
        (
            "identity K-E-k^2*D",
            max(
                abs(complete_K(k) - complete_E(k) - k * k * complete_D(k))
                for k in grid
            ),
            1e-12,
        )
    )
    checks.append(
        (
            "series/direct agreement K",
            max(
                abs(series_eval(K_SERIES, k, 1e-16) - complete_K(k))
                for k in grid
                if k <= 0.9
            ),
            1e-11,
        )
    )

    fixtures_ok = (
        series_coeff(K_SERIES, 2) == Fraction(9, 128)
        and series_coeff(E_SERIES, 2) == Fraction(-3, 128)
        and series_coeff(D_SERIES, 3) == Fraction(175, 4096)
        and series_coeff(AREA_SERIES, 5) == Fraction(-147, 131072)
    )
    checks.append(("table coefficient fixtures", 0.0 if fixtures_ok else 1.0, 0.0))

    rng = random.Random(20240229)
    worst = 0.0
    for _ in range(10):
        a = rng.uniform(1.0, 4.0)
        b = rng.uniform(1.0, 4.0)
        for w in (rng.uniform(0.2, 0.95) * a, rng.uniform(1.1, 3.0) * a):
            params = curve_mod.CurveParams(a=a, b=b, w=w)
            exact = area_mod.area_exact(params).total
            quad = oracle_mod.quad_area(params).total
            worst = max(worst, abs(exact - quad) / exact)
    checks.append(("oracle area agreement", worst, 1e-8))

    worst = max(
        max(area_mod.check_J_relations(k).values()) for k in (0.1, 0.5, 0.9)
    )
    checks.append(("J-relation margins", worst, 1e-8))

    chain_ok = all(
        taylor_mod.verify_chain(t, 10, beta, [0.1 * i for i in range(1, 10)]).ok
        for t, beta in (
            (K_SERIES, 0.95),
            (D_SERIES, 0.95),
            (E_SERIES, 1.0),
            (AREA_SERIES, 1.0),
        )
    )
    checks.append(("two-sided chains", 0.0 if chain_ok else 1.0, 0.0))

    worst = 0.0
    for _ in range(200):
        a = rng.uniform(0.5, 4.0)
        b = rng.uniform(0.5, 4.0)
        w = rng.uniform(0.2, 6.0)
        t = rng.uniform(0.0, 2.0 * math.pi)
        params = curve_mod.CurveParams(a=a, b=b, w=w)
        q = curve_mod.derive(params).q
        res = abs(curve_mod.implicit_Fq(params, curve_mod.point_at(params, t)))
        worst = max(worst, res / (a * a * b * b * q * q))
    checks.append(("on-curve residual", worst, 1e-9))

    worst = 0.0
    for a, b, w in ((4.0, 3.0, 2.0), (2.0, 3.0, 4.0), (1.5, 1.0, 1.2)):
        cert = area_mod.bounds(curve_mod.CurveParams(a=a, b=b, w=w))
        ordered = (
            cert.lower_coarse
            <= cert.lower_refined
            <= cert.exact_total
            <= cert.upper_refined
            <= cert.upper_coarse
        )
        if not ordered:
            worst = 1.0
    checks.append(("bounds ordering", worst, 0.0))

    checks.append(
        ("1/pi partial error at N=10^4", abs(area_mod.inv_pi_partial(10**4) - 1.0 / math.pi), 1e-8)
    )
    return checks


def cmd_verify(args) -> int:
    checks = _verification_checks()
    results = [
        {
            "name": name,
            "margin": margin,
            "tolerance": tol,
            "passed": margin <= max(tol, args.tol),
        }
        for name, margin, tol in checks
    ]
    all_ok = all(r["passed"] for r in results)
    if args.format == "json":
        _emit_json({"passed": all_ok, "checks": results})
    else:
        for r in results:
            status = "PASS" if r["passed"] else "FAIL"
            sys.stdout.write(
                f"{status} {r['name']}: margin {_fmt(r['margin'])} "
                f"(tol {_fmt(max(r['tolerance'], args.tol))})\n"
            )
        sys.stdout.write(("all checks passed" if all_ok else "FAILURES present") + "\n")
    return 0 if all_ok else 1


# ---------------------------------------------------------------------------
# argument parsing


def _add_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--w", type=float, required=True)


def _add_format(p: argparse.ArgumentParser, choices=("human", "csv", "json")) -> None:
    p.add_argument("--format", choices=choices, default="human")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hugelschaffer",
        description="Egg areas of Hügelschäffer curves via elliptic integrals "
        "and Taylor enclosures",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("area", help="exact/series/Taylor area of the egg part")
    _add_params(p)
    p.add_argument("--method", choices=("exact", "series", "taylor"), default="exact")
    p.add_argument("--n", type=int, default=4, help="Taylor degree")
    p.add_argument("--kind", choices=("first", "second"), default="first")
    p.add_argument("--beta", type=float, default=1.0)
    p.add_argument("--tol", type=float, default=1e-14)
    _add_format(p)
    p.set_defaults(func=cmd_area)

    p = sub.add_parser("bounds", help="two-sided area bounds certificate")
    _add_params(p)
    _add_format(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("sample", help="sample the egg parametrization")
    _add_params(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--circles", action="store_true")
    _add_format(p, choices=("human", "csv", "json", "svg"))
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("approx-table", help="Taylor approximants and errors")
    p.add_argument("--target", choices=tuple(_TARGETS), required=True)
    p.add_argument("--max-degree", type=int, default=10)
    p.add_argument("--beta", type=float, default=1.0)
    p.add_argument("--grid-size", type=int, default=9)
    _add_format(p)
    p.set_defaults(func=cmd_approx_table)

    p = sub.add_parser("pi-series", help="partial sums of the 1/pi series")
    p.add_argument("--terms", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_pi_series)

    p = sub.add_parser("verify", help="run the oracle cross-check battery")
    p.add_argument("--tol", type=float, default=0.0)
    _add_format(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "sample" and args.n < 2:
        parser.error("--n must be at least 2")
    if args.command == "pi-series" and args.terms < 1:
        parser.error("--terms must be at least 1")
    try:
        return args.func(args)
    except (DomainError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
