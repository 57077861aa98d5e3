"""Scenario files: load, build the structure, run the requested laws.

A scenario (``"schema": 1``) names a structure and a list of items::

    {"schema": 1, "name": "...", "seed": 0, "trials": 10000,
     "structure": {"kind": "lattice", "p": 3, "n": 3, "pairs": "all"},
     "items": [{"law": "T1"}, {"law": "comm", "expect": "fail"}]}

Structure kinds: ``lattice`` (U_ab of PG(n-1, p); ``pairs`` "all" or
explicit ``a``/``b``), ``chart`` (``scalar`` kind and ``beta``) and
``unit_loop`` (nonzero octonions with (xyz) = (x y^-1) z).
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from pathlib import Path

from .exact_algebra import OCTONION
from .loop_laws import (
    LAW_BUNDLES,
    CheckReport,
    TernaryTable,
    binary_from_ternary,
    check_law,
    merge_reports,
    octonion_unit_loop,
    roundtrip_binary,
    roundtrip_ternary,
    search_counterexample,
    ternary_from_binary,
)
from .scenario_io import (
    SCHEMA,
    ScenarioError,
    decode_kind,
    decode_point,
    decode_scalar,
    decode_subspace,
)
from .structures import (
    chart_table,
    check_beta_homomorphism,
    octonion_chart_carrier,
    pg_hyperplane_pairs,
    pg_ternary_table,
)
from .subspace_lattice import ProjectiveSpace
from .ternary_geometry import ChartConfig

BUNDLED = Path(__file__).parent / "scenarios"
LOOP_LAWS = {"moufang", "auxiliary", "assoc", "comm"}
KNOWN_LAWS = set(LAW_BUNDLES) | {"beta_hom", "roundtrip"}


@dataclass
class Scenario:
    name: str
    structure: dict
    items: list
    seed: int = 0
    trials: int = 10 ** 4
    extra: dict = field(default_factory=dict)

    @classmethod
    def from_json(cls, d: dict) -> "Scenario":
        if not isinstance(d, dict):
            raise ScenarioError("scenario must be a JSON object")
        if d.get("schema") != SCHEMA:
            raise ScenarioError(f"unsupported schema {d.get('schema')!r}; expected {SCHEMA}")
        for key in ("structure", "items"):
            if key not in d:
                raise ScenarioError(f"scenario lacks {key!r}")
        items = d["items"]
        if not isinstance(items, list):
            raise ScenarioError("items must be a list")
        for it in items:
            if not isinstance(it, dict) or "law" not in it:
                raise ScenarioError(f"bad item {it!r}")
            if it["law"] not in KNOWN_LAWS:
                raise ScenarioError(f"unknown law {it['law']!r}")
            if it.get("expect", "pass") not in ("pass", "fail"):
                raise ScenarioError(f"expect must be 'pass' or 'fail' in {it!r}")
        return cls(d.get("name", "scenario"), d["structure"], items,
                   int(d.get("seed", 0)), int(d.get("trials", 10 ** 4)))


def load_scenario(path) -> Scenario:
    """Read a scenario; bare names resolve to the bundled scenarios."""
    p = Path(path)
    if not p.exists():
        for cand in (BUNDLED / p.name, BUNDLED / f"{p.name}.json"):
            if cand.exists():
                p = cand
                break
    try:
        data = json.loads(p.read_text())
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{p}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    except OSError as exc:
        raise ScenarioError(f"{p}: {exc.strerror}") from exc
    return Scenario.from_json(data)


def item_seed(seed: int, index: int) -> int:
    """Per-item seed derived from the run seed; independent of execution order."""
    return random.Random(f"{seed}:{index}").getrandbits(31)


# -- structures -------------------------------------------------------------------


def decode_hyperplane(obj, p: int, n: int):
    if isinstance(obj, dict) and "form" in obj:
        return ProjectiveSpace(p, n).hyperplane(obj["form"])
    H = decode_subspace(obj)
    if H.rank != n - 1:
        raise ScenarioError("a and b must be hyperplanes")
    return H


def decode_lattice_point(obj, p: int, n: int):
    if isinstance(obj, list):
        return ProjectiveSpace(p, n).point(obj)
    return decode_subspace(obj)


def chart_config(desc: dict) -> ChartConfig:
    kind = decode_kind(desc.get("scalar", "rational"))
    beta = desc.get("beta")
    if not isinstance(beta, list):
        raise ScenarioError("chart needs a beta list")
    return ChartConfig(kind, tuple(kind.coerce(decode_scalar(c, kind)) for c in beta))


def lattice_tables(desc: dict):
    p, n = int(desc.get("p", 3)), int(desc.get("n", 3))
    if desc.get("pairs", "all") == "all" and "a" not in desc:
        pairs = pg_hyperplane_pairs(p, n)
    else:
        pairs = [(decode_hyperplane(desc["a"], p, n), decode_hyperplane(desc["b"], p, n))]
    return [(a, b, pg_ternary_table(p, a, b, n)) for a, b in pairs]


def build_structures(desc: dict):
    """List of (context, structure) pairs; context labels the instance in reports."""
    kind = desc.get("kind")
    if kind == "lattice":
        return [({"a": a.to_json(), "b": b.to_json()}, T) for a, b, T in lattice_tables(desc)]
    if kind == "chart":
        cfg = chart_config(desc)
        if cfg.kind.name == "gf":
            return [({}, chart_table(cfg))]
        if cfg.kind != OCTONION:
            raise ScenarioError("sampled charts are octonion charts")
        return [({}, octonion_chart_carrier(cfg))]
    if kind == "unit_loop":
        return [({}, ternary_from_binary(octonion_unit_loop()))]
    raise ScenarioError(f"unknown structure kind {kind!r}")


# -- running --------------------------------------------------------------------


def _origins(s, item, rng):
    if isinstance(s, TernaryTable):
        o = item.get("origin", "all")
        return list(range(s.N)) if o == "all" else [int(o)]
    count = int(item.get("origins", 1))
    return [s.sample(rng) for _ in range(count)]


def _run_one(s, item, seed, trials, desc) -> CheckReport:
    law, expect = item["law"], item.get("expect", "pass")
    if law == "beta_hom":
        return check_beta_homomorphism(chart_config(desc), trials=trials, seed=seed)
    if law == "roundtrip":
        rng = random.Random(seed)
        reps = [roundtrip_ternary(s, None, trials=trials, seed=seed)]
        for o in _origins(s, item, rng):
            reps.append(roundtrip_binary(binary_from_ternary(s, o), trials=trials, seed=seed))
        return merge_reports("roundtrip", reps)
    if law in LOOP_LAWS:
        rng = random.Random(seed)
        reps = []
        for k, o in enumerate(_origins(s, item, rng)):
            loop = binary_from_ternary(s, o)
            reps.append(_check(loop, law, expect, trials, seed + k))
        return merge_reports(law, reps)
    return _check(s, law, expect, trials, seed)


def _check(s, law, expect, trials, seed) -> CheckReport:
    if expect == "fail" and not getattr(s, "finite", False):
        reps = [search_counterexample(s, ident, trials, seed + k)
                for k, ident in enumerate(LAW_BUNDLES[law])]
        return merge_reports(law, reps)
    return check_law(s, law, trials, seed)


def run(scenario: Scenario, seed: int | None = None, trials: int | None = None) -> dict:
    """Run every item; returns the JSON-ready report document."""
    seed = scenario.seed if seed is None else seed
    trials = scenario.trials if trials is None else trials
    structures = build_structures(scenario.structure)
    results = []
    for idx, item in enumerate(scenario.items):
        s_item = item_seed(seed, idx)
        n_trials = int(item.get("trials", trials))
        try:
            reps = [_run_one(s, item, s_item, n_trials, scenario.structure)
                    for _, s in structures]
            rep = merge_reports(item["law"], reps)
            for (ctx, _), r in zip(structures, reps):
                if r.failures and ctx:
                    for f in r.failures:
                        f.setdefault("context", ctx)
            rep.failures = rep.failures[:3]
            rep.trials = sum(r.trials for r in reps)
            rep.seed = None if rep.mode == "exhaustive" else s_item
            rep.expected = item.get("expect", "pass")
            entry = rep.to_dict()
        except (ValueError, TypeError, ArithmeticError) as exc:
            entry = {"law": item["law"], "expected": item.get("expect", "pass"),
                     "error": f"{type(exc).__name__}: {exc}", "passed": False}
        entry["as_expected"] = ("error" not in entry and
                                entry["passed"] == (entry["expected"] == "pass"))
        results.append(entry)
    return {
        "schema": SCHEMA,
        "scenario": scenario.name,
        "seed": seed,
        "ok": all(r["as_expected"] for r in results),
        "reports": results,
    }
