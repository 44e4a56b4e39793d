"""Command-line front end.

Subcommands: eisenstein | sigma | eta | witten | localize-s2 | selfcheck.

Output is deterministic: numbers are printed with 15 significant digits,
JSON keys are sorted, and timings are only emitted when explicitly
requested with --timings.  Exit codes: 0 on success, 1 on validation
errors, 2 on tolerance failures in localize-s2 and selfcheck.

Environment overrides: WITTENLOC_RADIUS and WITTENLOC_TOL supply default
summation radius and tolerance; WITTENLOC_BACKEND=python selects the
NumPy kernels.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
import time

from . import __version__
from .cohomology import integrate, real_witten_class, witten_class
from .equivariant import (
    s2_example,
    verify_closedness_s2,
    witten_genus,
    witten_genus_symbolic,
)
from .kernels import backend_name
from .lattice import (
    ArgumentChoice,
    Lattice,
    default_radius,
    dedekind_eta,
    eisenstein_auto_many,
    g2_regularized,
    g2_via_eta,
    sigma_direct,
    sigma_series,
)
from .manifest import ManifestError, load_manifest
from .selfcheck import run_all


def fmt(x):
    """15 significant digits; complex as re+imi."""
    if isinstance(x, complex):
        re_part = f"{x.real:.15g}"
        sign = "+" if x.imag >= 0 or math.isnan(x.imag) else "-"
        return f"{re_part}{sign}{abs(x.imag):.15g}i"
    return f"{float(x):.15g}"


def parse_complex(text):
    s = str(text).strip().replace(" ", "").replace("i", "j")
    try:
        return complex(s)
    except ValueError:
        s = re.sub(r"(?<![0-9.])j", "1j", s)
        return complex(s)


def _jsonable(value):
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _emit_json(record, args, timings):
    if getattr(args, "timings", False):
        record["timings"] = timings
    print(json.dumps(_jsonable(record), sort_keys=True, indent=2))


def _env_float(name, fallback):
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return float(raw)
    except ValueError:
        raise ValueError(f"environment variable {name}={raw!r} is not a number")


class _Parser(argparse.ArgumentParser):
    # validation failures exit 1 per the CLI contract (argparse uses 2)
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _lattice_from_args(args):
    if getattr(args, "tau", None) is not None:
        if args.omega1 is not None or args.omega2 is not None:
            raise ValueError("give either --tau or --omega1/--omega2, not both")
        return Lattice.from_tau(parse_complex(args.tau))
    if args.omega1 is not None and args.omega2 is not None:
        return Lattice(parse_complex(args.omega1), parse_complex(args.omega2))
    if args.omega1 is None and args.omega2 is None:
        return Lattice.square()
    raise ValueError("--omega1 and --omega2 must be given together")


def _add_lattice_flags(sub):
    sub.add_argument("--tau", help="modular parameter (lattice Z + tau Z)")
    sub.add_argument("--omega1", help="first basis vector")
    sub.add_argument("--omega2", help="second basis vector")


def cmd_eisenstein(args):
    lattice = _lattice_from_args(args)
    two_k = args.two_k
    t0 = time.perf_counter()
    if two_k == 2:
        value = g2_regularized(lattice)
        cross = g2_via_eta(lattice.tau) / (lattice.omega1 * lattice.omega1)
        diff = abs(value - cross)
        elapsed = time.perf_counter() - t0
        if args.json:
            _emit_json(
                {
                    "command": "eisenstein",
                    "inputs_echo": {
                        "omega1": lattice.omega1,
                        "omega2": lattice.omega2,
                        "two_k": 2,
                    },
                    "values": {"g2": value, "eta_formula": cross},
                    "error_estimates": {"eta_cross_check": diff},
                },
                args,
                {"seconds": elapsed},
            )
        else:
            print("regularized G_2 (iterated sum via closed form)")
            print(f"  lattice           = ({fmt(lattice.omega1)}, {fmt(lattice.omega2)})")
            print(f"  value             = {fmt(value)}")
            print(f"  eta cross-check   = {fmt(cross)}")
            print(f"  |difference|      = {fmt(diff)}")
        return 0
    if two_k % 2 != 0 or two_k < 4:
        raise ValueError(
            "--two-k must be 2 or an even integer >= 4 "
            "(odd lattice sums vanish identically)"
        )
    radius = args.radius if args.radius is not None else _env_float(
        "WITTENLOC_RADIUS", default_radius(lattice)
    )
    value, err = eisenstein_auto_many(
        lattice, [two_k], radius=radius, max_doublings=0
    )[two_k]
    elapsed = time.perf_counter() - t0
    if args.json:
        _emit_json(
            {
                "command": "eisenstein",
                "inputs_echo": {
                    "omega1": lattice.omega1,
                    "omega2": lattice.omega2,
                    "two_k": two_k,
                    "radius": radius,
                },
                "values": {f"G{two_k}": value},
                "error_estimates": {"radius_halving": err},
            },
            args,
            {"seconds": elapsed},
        )
    else:
        print(f"Eisenstein sum G_{two_k}")
        print(f"  lattice           = ({fmt(lattice.omega1)}, {fmt(lattice.omega2)})")
        print(f"  radius            = {fmt(radius)}")
        print(f"  value             = {fmt(value)}")
        print(f"  doubling estimate = {fmt(err)}")
    return 0


def cmd_eta(args):
    tau = parse_complex(args.tau)
    value = dedekind_eta(tau, args.order)
    if args.json:
        _emit_json(
            {
                "command": "eta",
                "inputs_echo": {"tau": tau, "order": args.order},
                "values": {"eta": value},
            },
            args,
            {},
        )
    else:
        print(f"eta({fmt(tau)}) = {fmt(value)}  (product order {args.order})")
    return 0


def cmd_sigma(args):
    lattice = _lattice_from_args(args)
    radius = args.radius if args.radius is not None else _env_float(
        "WITTENLOC_RADIUS", 100.0 * math.sqrt(lattice.volume)
    )
    series = sigma_series(lattice, args.order)
    scale = 0.4 * lattice.min_norm()
    count = args.points
    zs = [
        (0.25 + 0.75 * k / max(count - 1, 1))
        * scale
        * complex(math.cos(2 * math.pi * k / count), math.sin(2 * math.pi * k / count))
        for k in range(count)
    ]
    rows = []
    worst = 0.0
    for z in zs:
        direct = sigma_direct(z, lattice, radius)
        via_series = series(z)
        gap = abs(direct - via_series)
        worst = max(worst, gap)
        rows.append((z, via_series, direct, gap))
    if args.json:
        _emit_json(
            {
                "command": "sigma",
                "inputs_echo": {
                    "omega1": lattice.omega1,
                    "omega2": lattice.omega2,
                    "order": args.order,
                    "radius": radius,
                },
                "values": {
                    "coefficients": list(series.coeffs),
                    "evaluations": [
                        {"z": z, "series": s, "direct": d, "gap": g}
                        for z, s, d, g in rows
                    ],
                },
                "error_estimates": {"max_disagreement": worst},
            },
            args,
            {},
        )
        return 0
    print(f"sigma Taylor coefficients (order {args.order})")
    for n, c in enumerate(series.coeffs):
        print(f"  z^{n:<2} {fmt(complex(c))}")
    print(f"evaluations vs direct product (radius {fmt(radius)})")
    for z, s, d, g in rows:
        print(f"  z = {fmt(z)}  series = {fmt(s)}  direct = {fmt(d)}  gap = {fmt(g)}")
    print(f"max disagreement = {fmt(worst)}")
    return 0


def _class_components(cls, top_degree, order=None):
    """(j, component string) for degrees 2j up to the truncation."""
    j_max = top_degree // 2
    if order is not None:
        j_max = min(j_max, order)
    rows = []
    for j in range(0, j_max + 1):
        comp = cls.homogeneous_component(2 * j)
        rows.append((j, str(comp)))
    return rows


def cmd_witten(args):
    manifest = load_manifest(args.manifest)
    if args.emit_manifest:
        sys.stdout.write(manifest.dumps())
        return 0
    lattice = manifest.lattice
    m = manifest.manifold
    if args.arg_base is not None:
        arg_choice = ArgumentChoice(float(args.arg_base))
    else:
        arg_choice = manifest.arg_choice
    if not m.string_flag and arg_choice is None:
        print(
            "warning: manifold is not rationally string; the result depends "
            "on the argument choice, using the canonical base angle "
            f"{fmt(ArgumentChoice.for_lattice(lattice).base_angle)}",
            file=sys.stderr,
        )
    tol = args.tol if args.tol is not None else _env_float("WITTENLOC_TOL", 1e-10)
    t0 = time.perf_counter()
    if args.real:
        cls = real_witten_class(m, lattice, symbolic=args.symbolic, tol=tol,
                                radius=args.radius)
        label = "Wit_R"
    else:
        cls = witten_class(m, lattice, arg_choice, symbolic=args.symbolic,
                           tol=tol, radius=args.radius)
        label = "Wit"
    if args.symbolic:
        genus_value, xi_power = (
            (integrate(cls), -(m.dimension // 2))
            if args.real
            else witten_genus_symbolic(m)
        )
        genus_text = str(genus_value)
    elif args.real:
        genus_value = complex(integrate(cls))
        xi_power = -(m.dimension // 2)
        genus_text = fmt(genus_value)
    else:
        result = witten_genus(m, lattice, arg_choice, tol=tol, radius=args.radius)
        genus_value, xi_power = result.value, result.xi_power
        genus_text = fmt(genus_value)
    elapsed = time.perf_counter() - t0
    components = _class_components(cls, m.ring.top_degree, args.order)
    if args.json:
        _emit_json(
            {
                "command": "witten",
                "inputs_echo": {
                    "manifest": os.path.basename(args.manifest),
                    "dimension": m.dimension,
                    "string": m.string_flag,
                    "real": bool(args.real),
                    "symbolic": bool(args.symbolic),
                },
                "values": {
                    "components": {f"{label}_{j}": text for j, text in components},
                    "genus": genus_text,
                    "xi_power": xi_power,
                },
                "error_estimates": {},
            },
            args,
            {"seconds": elapsed},
        )
        return 0
    print(f"manifold: dimension {m.dimension}, string = {m.string_flag}")
    for j, text in components:
        print(f"  {label}_{j} = {text}")
    print(f"genus = {genus_text} at xibar^{xi_power}")
    return 0


def cmd_localize_s2(args):
    weights = [parse_complex(w) for w in (args.weight or ["1", "i", "3+2i"])]
    tol = args.tol if args.tol is not None else _env_float("WITTENLOC_TOL", 1e-6)
    four_pi = 4.0 * math.pi
    ok = True
    rows = []
    t0 = time.perf_counter()
    for lam in weights:
        result = s2_example(lam, quadrature_points=args.quad_points)
        residual = verify_closedness_s2(
            lam, sample_points=None, step=args.step
        )
        lhs_gap = abs(result.lhs_numeric - four_pi)
        rhs_gap = abs(result.rhs_exact - four_pi)
        ok = ok and lhs_gap <= tol and rhs_gap == 0.0 and residual <= tol
        rows.append((lam, result, lhs_gap, rhs_gap, residual))
    elapsed = time.perf_counter() - t0
    if args.json:
        _emit_json(
            {
                "command": "localize-s2",
                "inputs_echo": {
                    "weights": weights,
                    "tol": tol,
                    "quad_points": args.quad_points,
                },
                "values": [
                    {
                        "weight": lam,
                        "lhs": r.lhs_numeric,
                        "rhs": r.rhs_exact,
                        "closedness_residual": res,
                    }
                    for lam, r, _, _, res in rows
                ],
                "error_estimates": {
                    "max_lhs_gap": max(g for _, _, g, _, _ in rows),
                    "max_rhs_gap": max(g for _, _, _, g, _ in rows),
                    "max_closedness_residual": max(r for *_, r in rows),
                },
                "status": "pass" if ok else "fail",
            },
            args,
            {"seconds": elapsed},
        )
        return 0 if ok else 2
    print(f"two-sphere localization check (tolerance {fmt(tol)})")
    for lam, result, lhs_gap, rhs_gap, residual in rows:
        print(f"  weight {fmt(lam)}:")
        print(f"    quadrature lhs       = {fmt(result.lhs_numeric)}")
        print(f"    localization rhs     = {fmt(result.rhs_exact)}")
        print(f"    |lhs - 4pi|          = {fmt(lhs_gap)}")
        print(f"    |rhs - 4pi|          = {fmt(rhs_gap)}")
        print(f"    closedness residual  = {fmt(residual)}")
    print("PASS" if ok else "FAIL")
    return 0 if ok else 2


def cmd_selfcheck(args):
    t0 = time.perf_counter()
    results = run_all()
    elapsed = time.perf_counter() - t0
    ok = all(r.passed for r in results)
    if args.json:
        _emit_json(
            {
                "command": "selfcheck",
                "values": [
                    {"name": r.name, "passed": r.passed, "detail": r.detail}
                    for r in results
                ],
                "status": "pass" if ok else "fail",
            },
            args,
            {"seconds": elapsed},
        )
        return 0 if ok else 2
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.detail}")
    print(f"{'PASS' if ok else 'FAIL'}  ({backend_name()} kernels)")
    return 0 if ok else 2


def build_parser():
    parser = _Parser(prog="wittenloc", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("eisenstein", parents=[], help="lattice power sums G_{2k}")
    _add_lattice_flags(p)
    p.add_argument("--two-k", type=int, required=True, help="even exponent (2 or >= 4)")
    p.add_argument("--radius", type=float, help="summation radius")
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=cmd_eisenstein)

    p = subs.add_parser("eta", help="Dedekind eta function")
    p.add_argument("--tau", required=True)
    p.add_argument("--order", type=int, default=40)
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=cmd_eta)

    p = subs.add_parser("sigma", help="Weierstrass sigma: series and product")
    _add_lattice_flags(p)
    p.add_argument("--order", type=int, default=16)
    p.add_argument("--radius", type=float)
    p.add_argument("--points", type=int, default=8)
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=cmd_sigma)

    p = subs.add_parser("witten", help="Witten class and genus from a manifest")
    p.add_argument("manifest", help="path to a JSON manifest")
    p.add_argument("--symbolic", action="store_true",
                   help="keep lattice sums as symbols G4, G6, ...")
    p.add_argument("--real", action="store_true",
                   help="use the Pontryagin-root (square-root) class")
    p.add_argument("--arg-base", type=float,
                   help="argument choice base angle in radians")
    p.add_argument("--order", type=int,
                   help="highest printed component index (default dim/2)")
    p.add_argument("--tol", type=float)
    p.add_argument("--radius", type=float)
    p.add_argument("--emit-manifest", action="store_true",
                   help="re-serialize the validated manifest and exit")
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=cmd_witten)

    p = subs.add_parser("localize-s2", help="two-sphere localization check")
    p.add_argument("--weight", action="append",
                   help="nonzero weight, repeatable (default: 1, i, 3+2i)")
    p.add_argument("--tol", type=float)
    p.add_argument("--quad-points", type=int, default=64)
    p.add_argument("--step", type=float, default=1e-5)
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=cmd_localize_s2)

    p = subs.add_parser("selfcheck", help="run the built-in verification battery")
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=cmd_selfcheck)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code or 0
    try:
        return args.func(args)
    except (ManifestError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
