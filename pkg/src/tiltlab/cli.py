"""Command-line front end.

Exit status: 0 on success, 1 when a check finds violations, 2 on bad input.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path
from typing import Any, Callable, Optional

from . import curve as C
from . import io as tio
from .kclass import euler_pairing, hyperplane_class, k_mul, random_integral_class, structure_sheaf, twist_B
from .lattice import FIXTURES, SurfaceData, validate_surface
from .moduli import s_equivalent, sigma_graded, total_class, uhlenbeck_equivalent, validate_polystable
from .svg import plot_walls
from .tilt import INF, StabilityParams, central_charge, mu_B, tilt_slope, vertical_beta
from .vertical import (
    chi_with_u,
    curve_power_sides,
    proportionality_sides,
    u_class,
    wz_multiplier,
)
from .walls import Bounds, Region, check_nested, enumerate_candidate_walls

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


class Violation(Exception):
    def __init__(self, payload: Any) -> None:
        super().__init__("violations found")
        self.payload = payload


def _num(x) -> str:
    return "+inf" if x == INF else tio.rat(x)


def _surface(args) -> SurfaceData:
    if args.surface in FIXTURES:
        s = FIXTURES[args.surface]
    else:
        s = tio.load_surface(args.surface)
    problems = validate_surface(s)
    if problems and args.command != "validate-surface":
        raise tio.InputError("invalid surface: " + "; ".join(problems))
    return s


def _need(args, name: str):
    val = getattr(args, name)
    if val is None:
        raise tio.InputError(f"--{name.replace('_', '-')} is required for {args.command}")
    return val


def _class(args, s, name="cls"):
    return tio.parse_kclass(_need(args, name), s)


def _B(args, s):
    return tio.parse_divisor(args.B, s) if args.B else s.zero_divisor()


def _region(args) -> Region:
    parts = _need(args, "region").split(",")
    if len(parts) != 3:
        raise tio.InputError("--region expects beta_min,beta_max,alpha_max")
    return Region(*(tio.parse_rat(p) for p in parts))


def _bounds(args) -> Bounds:
    parts = _need(args, "bounds").split(",")
    if len(parts) != 2:
        raise tio.InputError("--bounds expects max_rank,max_c")
    try:
        return Bounds(int(parts[0]), int(parts[1]))
    except ValueError as exc:
        raise tio.InputError(f"bad --bounds: {exc}") from exc


# -- subcommands ------------------------------------------------------------

def cmd_validate_surface(args, s):
    problems = validate_surface(s)
    report = {"ok": not problems, "violations": problems}
    if problems:
        raise Violation(report)
    return report


def cmd_euler(args, s):
    a = _class(args, s)
    b = tio.parse_kclass(args.other, s) if args.other else structure_sheaf(s)
    return {"chi": tio.rat(euler_pairing(a, b, s))}


def cmd_twist(args, s):
    return tio.kclass_to_dict(twist_B(_class(args, s), _B(args, s), s))


def cmd_slope(args, s):
    a, B = _class(args, s), _B(args, s)
    out = {"mu_B": _num(mu_B(a, B, s))}
    if args.alpha is not None and args.beta is not None:
        p = StabilityParams(tio.parse_rat(args.alpha), tio.parse_rat(args.beta), B)
        out["nu"] = _num(tilt_slope(a, p, s))
    return out


def cmd_charge(args, s):
    p = StabilityParams(tio.parse_rat(_need(args, "alpha")), tio.parse_rat(_need(args, "beta")), _B(args, s))
    z = central_charge(_class(args, s), p, s)
    return {"re": tio.rat(z.re), "im": tio.rat(z.im), "params": tio.params_to_dict(p)}


def cmd_vertical_wall(args, s):
    b0 = vertical_beta(_class(args, s), _B(args, s), s)
    if args.format == "json":
        return {"beta0": tio.rat(b0)}
    return tio.rat(b0)


def _walls(args, s):
    v, B = _class(args, s), _B(args, s)
    region = _region(args)
    walls = enumerate_candidate_walls(v, B, s, region, _bounds(args))
    return v, B, region, walls


def cmd_walls(args, s):
    v, B, _, walls = _walls(args, s)
    crossings = check_nested(walls, v, B, s)
    if args.format == "csv":
        if crossings:
            raise Violation({"crossings": [[tio.wall_to_dict(a), tio.wall_to_dict(b)] for a, b in crossings]})
        return tio.walls_to_csv(walls)
    report = {
        "walls": [tio.wall_to_dict(w) for w in walls],
        "nested": not crossings,
        "crossings": [[tio.wall_to_dict(a), tio.wall_to_dict(b)] for a, b in crossings],
    }
    if crossings:
        raise Violation(report)
    return report


def cmd_plot_walls(args, s):
    v, B, region, walls = _walls(args, s)
    out = Path(_need(args, "out"))
    plot_walls(walls, region, out)
    sidecar = out.with_suffix(".json")
    sidecar.write_text(tio.dumps([tio.wall_to_dict(w) for w in walls]))
    return {"svg": str(out), "sidecar": str(sidecar), "walls": len(walls)}


def cmd_u_class(args, s):
    v, B = _class(args, s), _B(args, s)
    h = hyperplane_class(s)
    return {
        "u": tio.kclass_to_dict(u_class(v, s)),
        "beta0": tio.rat(vertical_beta(v, B, s)),
        "chi_v_h": tio.rat(euler_pairing(v, h, s)),
        "chi_v_h2": tio.rat(euler_pairing(v, k_mul(h, h, s), s)),
    }


def cmd_check_identities(args, s):
    v, B = _class(args, s), _B(args, s)
    alpha = tio.parse_rat(args.alpha) if args.alpha is not None else 1
    seed = _need(args, "seed")
    rng = random.Random(seed)
    u = u_class(v, s)
    identity = {}
    failures: list[dict] = []
    for a in range(1, args.a_max + 1):
        lhs, rhs = curve_power_sides(v, a, s)
        identity[str(a)] = lhs == rhs
        if lhs != rhs:
            failures.append({"check": "w - w(-a) = a^2 u", "a": a,
                             "lhs": tio.kclass_to_dict(lhs), "rhs": tio.kclass_to_dict(rhs)})
    prop_failures = []
    for _ in range(args.samples):
        a = random_integral_class(rng, s)
        lhs, rhs = proportionality_sides(a, v, alpha, B, s)
        if lhs != rhs:
            prop_failures.append({"class": tio.kclass_to_dict(a), "lhs": tio.rat(lhs), "rhs": tio.rat(rhs)})
        closed, hrr = chi_with_u(a, v, B, s), euler_pairing(a, u, s)
        if closed != hrr:
            failures.append({"check": "chi(a.u) closed form", "class": tio.kclass_to_dict(a),
                             "lhs": tio.rat(closed), "rhs": tio.rat(hrr)})
    report = {
        "u": tio.kclass_to_dict(u),
        "beta0": tio.rat(vertical_beta(v, B, s)),
        "alpha": tio.rat(alpha),
        "multiplier": tio.rat(wz_multiplier(v, alpha, B, s)),
        "seed": seed,
        "samples": args.samples,
        "identity_a2u": identity,
        "proportionality_failures": prop_failures,
        "other_failures": failures,
    }
    if prop_failures or failures:
        raise Violation(report)
    return report


def _curve_report(v, a, m, s):
    g = C.curve_genus(a, s)
    vC = C.restrict_class(v, a, s)
    G = C.complement_class(v, a, m, s)
    return {
        "a": a,
        "m": m,
        "genus": g,
        "flenner_min": C.flenner_min_degree(int(v.ch0), s) if v.ch0 >= 1 and v.ch0.denominator == 1 else None,
        "v_restricted": tio.curve_class_to_list(vC),
        "G": tio.curve_class_to_list(G),
        "chi_vG": tio.rat(C.curve_chi(vC, G, g)),
    }


def cmd_restrict(args, s):
    v = _class(args, s)
    a = _need(args, "a")
    if v.ch0 > 0:
        report = _curve_report(v, a, args.m, s)
        if report["chi_vG"] != "0":
            raise Violation(report)
        return report
    g = C.curve_genus(a, s)
    return {"a": a, "genus": g, "v_restricted": tio.curve_class_to_list(C.restrict_class(v, a, s))}


def cmd_g_class(args, s):
    v = _class(args, s)
    a = _need(args, "a")
    report = _curve_report(v, a, args.m, s)
    expected_rank = args.m * a * v.ch0 * s.degree
    report["rank_expected"] = tio.rat(expected_rank)
    surface_route = C.complement_class_from_surface(v, a, args.m, s)
    report["G_from_surface"] = tio.curve_class_to_list(surface_route)
    if (report["chi_vG"] != "0" or report["G"][0] != tio.rat(expected_rank)
            or report["G_from_surface"] != report["G"]):
        raise Violation(report)
    return report


def cmd_flenner(args, s):
    r = args.rank
    if r is None:
        r = int(_class(args, s).ch0)
    return {"deg_X": tio.rat(s.degree), "r": r, "a": C.flenner_min_degree(r, s)}


def cmd_seshadri(args, s):
    parts = _need(args, "F").split(",")
    if len(parts) != 2:
        raise tio.InputError("--F expects rank,degree")
    F = C.CurveKClass(tio.parse_rat(parts[0]), tio.parse_rat(parts[1]))
    g = _need(args, "g")
    r = args.r or 1
    if args.least:
        r, d = C.least_seshadri_rank(F, g, r)
    else:
        try:
            d = C.seshadri_degree(F, r, g)
        except C.NonIntegralDegree as exc:
            raise Violation({"F": tio.curve_class_to_list(F), "r": r, "g": g, "error": str(exc)})
    E = C.CurveKClass(r, d)
    return {"F": tio.curve_class_to_list(F), "g": g, "r": r, "d": d, "chi": tio.rat(C.curve_chi(E, F, g))}


def cmd_classify(args, s):
    m1 = tio.load_mock(_need(args, "points"))
    obj = sigma_graded(m1)
    report: dict[str, Any] = {
        "polystable": tio.polystable_to_dict(obj),
        "total_class": tio.kclass_to_dict(total_class(obj, s)),
    }
    bad = False
    if args.cls:
        v = _class(args, s)
        problems = validate_polystable(obj, v, _B(args, s), s)
        report["violations"] = problems
        bad = bool(problems)
    if args.compare:
        m2 = tio.load_mock(args.compare)
        uhl = uhlenbeck_equivalent(m1, m2)
        seq = s_equivalent(obj, sigma_graded(m2))
        report["uhlenbeck_equivalent"] = uhl
        report["s_equivalent"] = seq
        bad = bad or uhl != seq
    if bad:
        raise Violation(report)
    return report


COMMANDS: dict[str, Callable] = {
    "validate-surface": cmd_validate_surface,
    "euler": cmd_euler,
    "twist": cmd_twist,
    "slope": cmd_slope,
    "charge": cmd_charge,
    "vertical-wall": cmd_vertical_wall,
    "walls": cmd_walls,
    "u-class": cmd_u_class,
    "check-identities": cmd_check_identities,
    "restrict": cmd_restrict,
    "flenner": cmd_flenner,
    "seshadri": cmd_seshadri,
    "g-class": cmd_g_class,
    "classify": cmd_classify,
    "plot-walls": cmd_plot_walls,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tiltlab", description="Exact tilt-stability numerics on polarized surfaces.")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--surface", required=True, help="surface JSON file, or S1 / S2")
    parser.add_argument("--class", dest="cls", help="K-class: JSON file, inline JSON, or ch0,c1..,ch2")
    parser.add_argument("--other", help="second class for euler (default O_X)")
    parser.add_argument("--alpha")
    parser.add_argument("--beta")
    parser.add_argument("--B", help='twist divisor, e.g. "[1/2]" or "1/2,1/2"')
    parser.add_argument("--region", help="beta_min,beta_max,alpha_max")
    parser.add_argument("--bounds", help="max_rank,max_c")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--samples", type=int, default=50)
    parser.add_argument("--a-max", dest="a_max", type=int, default=4)
    parser.add_argument("--a", type=int)
    parser.add_argument("--m", type=int, default=1)
    parser.add_argument("--rank", type=int)
    parser.add_argument("--F", help="curve class rank,degree")
    parser.add_argument("--g", type=int)
    parser.add_argument("--r", type=int)
    parser.add_argument("--least", action="store_true", help="seshadri: search the least admissible r")
    parser.add_argument("--points", help="point description JSON")
    parser.add_argument("--compare", help="second point description JSON")
    parser.add_argument("--out")
    parser.add_argument("--format", choices=["json", "csv", "svg"])
    return parser


def _emit(result: Any, args, stream) -> None:
    text = result if isinstance(result, str) else tio.dumps(result)
    if not text.endswith("\n"):
        text += "\n"
    if args.out and args.command != "plot-walls":
        Path(args.out).write_text(text)
    else:
        stream.write(text)


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        s = _surface(args)
        result = COMMANDS[args.command](args, s)
    except Violation as v:
        _emit(v.payload, args, sys.stdout)
        return EXIT_VIOLATION
    except (tio.InputError, ValueError, OSError) as exc:
        print(f"tiltlab: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _emit(result, args, sys.stdout)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
