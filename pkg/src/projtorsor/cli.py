"""Command line: ``projtorsor {ternary,gamma,laws,render,run} ...``.

Exit status: 0 when every check came out as expected, 1 when some did
not, 2 on unreadable input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import sweeps
from .grassmann_gamma import (
    GammaInstance,
    gamma_bruteforce,
    gamma_lattice_collinear,
    gamma_lattice_generic,
    general_position,
)
from .render import FigureError, FigureSpec, render_construction
from .runner import (
    Scenario,
    chart_config,
    decode_hyperplane,
    decode_lattice_point,
    load_scenario,
    run,
)
from .scenario_io import (
    ScenarioError,
    decode_point,
    decode_subspace,
    dumps,
    encode_point,
    encode_scalar,
)
from .subspace_lattice import incident, join
from .ternary_geometry import GeometryError, chart_formula, ternary_lattice

SEED_ENV = "PROJTORSOR_SEED"


def env_seed():
    """Seed from the environment, or None when unset."""
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise ScenarioError(f"{SEED_ENV}={raw!r} is not an integer") from None


def _read_json(path):
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    except OSError as exc:
        raise ScenarioError(f"{path}: {exc.strerror}") from exc


def _emit(doc, args, text=None):
    out = dumps(doc) if (args.json or text is None) else text
    if args.out:
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)


# -- ternary ---------------------------------------------------------------------


def cmd_ternary_eval(args) -> int:
    sc = _read_json(args.scenario)
    geo = sc.get("geometry", {})
    pts = sc.get("points", {})
    if geo.get("kind") == "lattice":
        p, n = int(geo["p"]), int(geo.get("n", 3))
        a, b = decode_hyperplane(geo["a"], p, n), decode_hyperplane(geo["b"], p, n)
        x, y, z = (decode_lattice_point(pts[k], p, n) for k in "xyz")
        w = ternary_lattice(x, y, z, a, b)
        doc = {"w": w.to_json(), "collinear": incident(z, join(x, y))}
    elif geo.get("kind") == "chart":
        cfg = chart_config(geo)
        x, y, z = (decode_point(pts[k], cfg.kind) for k in "xyz")
        w = chart_formula(x, y, z, cfg)
        doc = {"w": encode_point(w)}
        if not cfg.is_zero:
            doc["beta_w"] = encode_scalar(cfg.value(w))
    else:
        raise ScenarioError("geometry.kind must be 'lattice' or 'chart'")
    _emit(doc, args, f"w = {json.dumps(doc['w'])}\n")
    return 0


def cmd_ternary_sweep(args) -> int:
    check = args.check
    if check == "oracle":
        samples = None if args.exhaustive else args.trials
        res = sweeps.oracle_sweep(args.p, samples, args.seed)
        ok = res["mismatches"] == 0
    elif check == "torsor":
        res = sweeps.torsor_sweep(args.p)
        ok = not res["failures"]
    elif check == "u":
        res = sweeps.u_independence_sweep(args.p)
        ok = res["discrepancies"] == 0 and res["non_points"] == 0
    else:
        res = sweeps.table_identity_sweep(args.p)
        ok = res["symmetry_failures"] == 0 and res["parallelogram_failures"] == 0
    _emit({"check": check, "ok": ok, **res}, args)
    return 0 if ok else 1


# -- gamma ----------------------------------------------------------------------


def cmd_gamma_eval(args) -> int:
    sc = _read_json(args.scenario)
    try:
        inst = GammaInstance.from_json(sc)
    except (KeyError, TypeError) as exc:
        raise ScenarioError(f"bad Gamma instance: {exc}") from exc
    method = args.method
    if method == "brute":
        g = gamma_bruteforce(inst)
    elif method == "lattice":
        g = gamma_lattice_generic(inst)
    else:
        if "u" not in sc:
            raise ScenarioError("collinear method needs a point 'u'")
        g = gamma_lattice_collinear(inst, decode_subspace(sc["u"]))
    doc = {"method": method, "gamma": g.to_json(),
           "general_position": general_position(inst.x, inst.y, inst.z)}
    _emit(doc, args, f"Gamma = {json.dumps(g.to_json()['rows'])}\n")
    return 0


def cmd_gamma_sweep(args) -> int:
    if args.check == "generic":
        res = sweeps.gamma_generic_sweep(args.p, args.n)
        ok = res["containment_failures"] == 0 and res["equality_failures"] == 0
    elif args.check == "recovery":
        res = sweeps.gamma_recovery_sweep(args.p, args.n, args.trials, args.seed)
        ok = res["meet_failures"] == 0 and res["join_failures"] == 0
    else:
        res = sweeps.gamma_collinear_sweep(args.p, args.n)
        ok = (res["inside_U_ab"]["part2_failures"] == res["inside_U_ab"]["part3_failures"] == 0
              and res["outside_U_ab"]["part2_failures"] == res["outside_U_ab"]["part3_failures"] == 0)
    _emit({"check": args.check, "ok": ok, **res}, args)
    return 0 if ok else 1


# -- laws / run -------------------------------------------------------------------


def _print_reports(doc) -> str:
    lines = [f"scenario {doc['scenario']} (seed {doc['seed']})"]
    for r in doc["reports"]:
        if "error" in r:
            lines.append(f"  {r['law']:<10s} ERROR {r['error']}")
            continue
        status = "pass" if r["passed"] else "fail"
        mark = "ok" if r["as_expected"] else "UNEXPECTED"
        lines.append(f"  {r['law']:<10s} {status:<5s} expected {r['expected']:<5s} "
                     f"{mark:<10s} {r['mode']} {r['trials']}")
    lines.append("all as expected" if doc["ok"] else "some results were not as expected")
    return "\n".join(lines) + "\n"


def cmd_laws_check(args) -> int:
    sc = load_scenario(args.structure)
    if args.laws:
        laws = [s.strip() for s in args.laws.split(",") if s.strip()]
        expect = {it["law"]: it.get("expect", "pass") for it in sc.items}
        items = [{"law": law, "expect": expect.get(law, "pass")} for law in laws]
        sc = Scenario.from_json({"schema": 1, "name": sc.name, "structure": sc.structure,
                                 "items": items, "seed": sc.seed, "trials": sc.trials})
    doc = run(sc, seed=args.seed, trials=args.trials)
    _emit(doc, args, _print_reports(doc))
    return 0 if doc["ok"] else 1


def cmd_run(args) -> int:
    sc = load_scenario(args.scenario)
    doc = run(sc, seed=args.seed, trials=args.trials)
    _emit(doc, args, _print_reports(doc))
    return 0 if doc["ok"] else 1


# -- render ------------------------------------------------------------------------


def _pair(text):
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected two comma-separated rationals, got {text!r}")
    return parts


def cmd_render(args) -> int:
    if args.scenario:
        fig = _read_json(args.scenario).get("figure", {})
    else:
        fig = {}
    for k in ("x", "y", "z", "beta"):
        v = getattr(args, k)
        if v is not None:
            fig[k] = v
    missing = [k for k in "xyz" if k not in fig]
    if missing:
        raise ScenarioError(f"figure lacks points {missing}")
    figure = FigureSpec(fig["x"], fig["y"], fig["z"], fig.get("beta", (0, 0)),
                      width=int(fig.get("width", 480)), height=int(fig.get("height", 480)))
    svg = render_construction(figure)
    if args.out:
        Path(args.out).write_text(svg)
    else:
        sys.stdout.write(svg)
    return 0


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None,
                        help=f"run seed (default: ${SEED_ENV} or 0)")
    common.add_argument("--trials", type=int, default=None, help="sampled trials per law")
    common.add_argument("--json", action="store_true", help="print JSON instead of a summary")
    common.add_argument("--out", help="write output to this file")

    ap = argparse.ArgumentParser(prog="projtorsor", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    t = sub.add_parser("ternary", help="the ternary product (xyz)_ab").add_subparsers(dest="action", required=True)
    te = t.add_parser("eval", parents=[common])
    te.add_argument("--scenario", required=True)
    te.set_defaults(func=cmd_ternary_eval)
    ts = t.add_parser("sweep", parents=[common])
    ts.add_argument("--p", type=int, default=3)
    ts.add_argument("--exhaustive", action="store_true")
    ts.add_argument("--check", choices=("oracle", "torsor", "u", "identities"), default="oracle")
    ts.set_defaults(func=cmd_ternary_sweep)

    g = sub.add_parser("gamma", help="the five-argument map Gamma").add_subparsers(dest="action", required=True)
    ge = g.add_parser("eval", parents=[common])
    ge.add_argument("--scenario", required=True)
    ge.add_argument("--method", choices=("brute", "lattice", "collinear"), default="brute")
    ge.set_defaults(func=cmd_gamma_eval)
    gs = g.add_parser("sweep", parents=[common])
    gs.add_argument("--p", type=int, default=2)
    gs.add_argument("--n", type=int, default=3)
    gs.add_argument("--exhaustive", action="store_true")
    gs.add_argument("--check", choices=("generic", "recovery", "collinear"), default="generic")
    gs.set_defaults(func=cmd_gamma_sweep)

    lw = sub.add_parser("laws", help="identity checks").add_subparsers(dest="action", required=True)
    lc = lw.add_parser("check", parents=[common])
    lc.add_argument("--structure", required=True, help="scenario file or bundled scenario name")
    lc.add_argument("--laws", help="comma-separated law names, e.g. T0,T1,MT,moufang")
    lc.set_defaults(func=cmd_laws_check)

    r = sub.add_parser("render", parents=[common], help="SVG of the construction")
    r.add_argument("--scenario")
    r.add_argument("--x", type=_pair)
    r.add_argument("--y", type=_pair)
    r.add_argument("--z", type=_pair)
    r.add_argument("--beta", type=_pair)
    r.set_defaults(func=cmd_render)

    ru = sub.add_parser("run", parents=[common], help="run a scenario file")
    ru.add_argument("--scenario", required=True)
    ru.set_defaults(func=cmd_run)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.seed is None:
            args.seed = env_seed()
        if args.command not in ("laws", "run"):
            args.seed = args.seed or 0
            args.trials = args.trials or 10 ** 4
        return args.func(args)
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GeometryError, FigureError, ValueError, KeyError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
