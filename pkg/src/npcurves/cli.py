"""Command-line front end: ``npcurves <subcommand> [options]``.

Exit status is 0 on success, 1 for mathematical/domain errors (with the error
code on stderr) and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import construct, eo, npoly, strata, zeta
from .curves import parse_curve
from .errors import NPCurvesError, ParseError
from .ffield import DEFAULT_CAP


def _emit(args, payload, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest field size to enumerate")
    common.add_argument("--threads", type=int, default=1, help="worker processes for point counting")
    common.add_argument("--verify-extra", type=int, default=0, metavar="K",
                        help="also count N_{g+1}..N_{g+K} and check them against L")
    return common


# ---------------------------------------------------------------------------


def cmd_count(args) -> int:
    spec = parse_curve(args.curve)
    upto = args.s or max(spec.genus, 1)
    counts = zeta.count_points(spec, upto, args.cap, args.threads)
    payload = {"curve": spec.describe(), "q": spec.q, "g": spec.genus, "N": counts}
    lines = [f"{spec.equation()}  over GF({spec.q}), genus {spec.genus}", "s  N_s"]
    lines += [f"{s}  {n}" for s, n in enumerate(counts, start=1)]
    _emit(args, payload, "\n".join(lines))
    return 0


def _lpoly(args, spec):
    return zeta.l_polynomial(spec, cap=args.cap, verify_extra=args.verify_extra, workers=args.threads)


def cmd_zeta(args) -> int:
    spec = parse_curve(args.curve)
    L = _lpoly(args, spec)
    text = f"L(T) = {L}\nq = {L.q}, g = {L.g}, N = {list(L.counts)}"
    _emit(args, L.to_json(), text)
    return 0


def _parse_lpoly(text: str) -> list[int]:
    try:
        return [int(c) for c in text.replace(" ", "").split(",") if c]
    except ValueError:
        raise ParseError(f"--lpoly expects comma-separated integers, got {text!r}") from None


def cmd_np(args) -> int:
    if args.curve:
        L = _lpoly(args, parse_curve(args.curve))
    elif args.lpoly and args.q:
        coeffs = _parse_lpoly(args.lpoly)
        if len(coeffs) % 2 == 0:
            raise ParseError("an L-polynomial has odd length 2g+1")
        L = zeta.LPolynomial(args.q, (len(coeffs) - 1) // 2, tuple(coeffs))
    else:
        raise ParseError("np needs --curve, or --lpoly together with --q")
    poly = npoly.newton_polygon(L)
    _emit(args, poly.to_json(), f"{poly}\n{poly.ascii()}")
    return 0


def cmd_classify(args) -> int:
    spec = parse_curve(args.curve)
    L = _lpoly(args, spec)
    poly = npoly.newton_polygon(L)
    payload = {
        "curve": spec.describe(),
        "g": spec.genus,
        "p_rank": poly.p_rank,
        "supersingular": poly.is_supersingular,
        "slopes": poly.to_json()["slopes"],
    }
    text = (
        f"{spec.equation()}  over GF({spec.q}), genus {spec.genus}\n"
        f"slopes: {poly}\np-rank: {poly.p_rank}\nsupersingular: {'yes' if poly.is_supersingular else 'no'}"
    )
    _emit(args, payload, text)
    return 0


def cmd_eo(args) -> int:
    rows = eo.table(args.g)
    if args.format == "json":
        print(json.dumps({"g": args.g, "count": len(rows), "types": [r.to_json() for r in rows]}, indent=2))
    else:
        print(eo.format_table(rows))
    return 0


def _slopes_arg(text: str) -> npoly.NewtonPolygon:
    # "1/4x4,3/4x4" or "0,1/2,1/2,1"
    slopes = []
    for part in text.replace(" ", "").split(","):
        if not part:
            continue
        val, _, mult = part.partition("x")
        try:
            slopes += [Fraction(val)] * (int(mult) if mult else 1)
        except ValueError:
            raise ParseError(f"bad slope entry {part!r}") from None
    return npoly.NewtonPolygon.from_slopes(slopes)


def _report_line(r: strata.StratumReport) -> str:
    ci = f"  c={r.c} i={r.i}" if r.c is not None else ""
    return f"{str(r.xi):<40} sdim={r.sdim:<3} codim={r.codim}{ci}"


def cmd_strata(args) -> int:
    if args.example == "ecidim":
        reports = [strata.report(npoly.two_slope(3, 1)), strata.report(npoly.two_slope(3, 2))]
    elif args.slopes:
        reports = [strata.report(_slopes_arg(args.slopes))]
    elif args.delta_g:
        g_star = strata.first_g_exceeding_moduli_dim()
        rows = [{"g": g, "delta_g": strata.delta_g(g), "dim_M_g": 3 * g - 3} for g in range(2, args.g + 1)]
        payload = {"rows": rows, "first_g_exceeding": g_star}
        text = "\n".join(f"g={r['g']:<3} delta_g={r['delta_g']:<4} 3g-3={r['dim_M_g']}" for r in rows)
        _emit(args, payload, text + f"\nleast g with delta_g > 3g-3: {g_star}")
        return 0
    elif args.g is not None:
        if args.p_rank is not None:
            dims = strata.p_rank_stratum_dims(args.g, args.p_rank)
            payload = {"g": args.g, "f": args.p_rank, "A_g": dims[0], "M_g": dims[1], "H_g": dims[2]}
            _emit(args, payload, f"dim A_g^f = {dims[0]}, dim M_g^f = {dims[1]}, dim H_g^f = {dims[2]}")
            return 0
        reports = strata.all_reports(args.g)
    else:
        raise ParseError("strata needs --g, --slopes or --example")
    payload = {"strata": [r.to_json() for r in reports]}
    _emit(args, payload, "\n".join(_report_line(r) for r in reports))
    return 0


def cmd_construct(args) -> int:
    plan = construct.ckp_plan(args.p, args.delta)
    payload = {"plan": plan.to_json()}
    lines = [
        f"p={plan.p} delta={plan.delta} digits(base p, low first)={construct.base_p_digits(plan.delta, plan.p)}",
        f"target genus {plan.genus_target}; runs:",
    ]
    for run in plan.runs:
        lines.append(
            f"  s={run.s} r={run.r} u={run.u} d={run.d}: {run.count} factors of genus {run.genus_each}"
            f" (additive degree {plan.p ** run.u})"
        )
    lines.append(f"genus sum {plan.genus_sum} == target: {plan.genus_sum == plan.genus_target}")
    if args.instantiate or args.verify:
        specs = construct.instantiate_factors(plan, cap=args.cap)
        payload["factors"] = [s.describe() for s in specs]
        lines.append(f"{len(specs)} factor curves over GF({specs[0].q})")
        if args.verify:
            checks = construct.verify_supersingular_factors(specs, cap=args.cap, workers=args.threads)
            payload["verification"] = [c.to_json() for c in checks]
            for c in checks:
                lines.append(f"  {c.curve.equation():<28} g={c.curve.genus:<3} {c.polygon}")
            lines.append("all factors supersingular")
        else:
            lines += [f"  {s.equation()}" for s in specs]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_catalog(args) -> int:
    data = construct.catalog()
    if args.format == "json":
        print(json.dumps(data, indent=2))
        return 0
    lines = [f"catalog version {data['version']}"]
    for c in data["curves"]:
        sl = ", ".join(f"{n}/{d} x{m}" for n, d, m in c["slopes"])
        lines.append(f"{c['name']:<12} {c['curve']:<42} g={c['g']:<3} slopes {sl}")
    for row in data["igusa"]:
        lines.append(f"igusa p={row['p']:<3} lambda_count={row['lambda_count']} iso_classes={row['iso_classes']}")
    for rule in data["elliptic_rules"]:
        lines.append(f"{rule['name']:<7} {rule['curve']}: {rule['rule']}")
    print("\n".join(lines))
    return 0


def cmd_selftest(args) -> int:
    from .selftest import run_all

    results = run_all(cap=args.cap)
    ok = all(r.passed for r in results)
    if args.format == "json":
        print(json.dumps({"passed": ok, "checks": [r.to_json() for r in results]}, indent=2))
    else:
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'}  {r.name}" + ("" if r.passed else f"  ({r.detail})"))
        print(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return 0 if ok else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="npcurves", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="point counts N_1..N_s")
    p.add_argument("--curve", required=True)
    p.add_argument("--s", type=int, default=0, help="largest s (default: the genus)")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("zeta", parents=[common], help="L-polynomial")
    p.add_argument("--curve", required=True)
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("np", parents=[common], help="Newton polygon")
    p.add_argument("--curve")
    p.add_argument("--lpoly", help="comma-separated c_0..c_2g")
    p.add_argument("--q", type=int)
    p.set_defaults(func=cmd_np)

    p = sub.add_parser("classify", parents=[common], help="p-rank, slopes, supersingularity")
    p.add_argument("--curve", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("eo", parents=[common], help="Ekedahl-Oort types of length g")
    p.add_argument("--g", type=int, required=True)
    p.set_defaults(func=cmd_eo)

    p = sub.add_parser("strata", parents=[common], help="stratum dimensions")
    p.add_argument("--g", type=int)
    p.add_argument("--all", action="store_true", help="every symmetric polygon of height 2g (default with --g)")
    p.add_argument("--slopes", help="e.g. '1/4x4,3/4x4'")
    p.add_argument("--example", choices=("ecidim",))
    p.add_argument("--delta-g", action="store_true", help="delta_g against 3g-3 for g up to --g")
    p.add_argument("--p-rank", type=int, help="p-rank stratum dimensions for this f")
    p.set_defaults(func=cmd_strata)

    p = sub.add_parser("construct", parents=[common], help="supersingular fiber-product plan")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--instantiate", action="store_true")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("catalog", parents=[common], help="known examples")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("selftest", parents=[common], help="check the published examples")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "strata" and args.delta_g and args.g is None:
        args.g = 12
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 2
    except NPCurvesError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
