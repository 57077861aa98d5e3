"""Acceptance criteria, one test each.

Every test records a one-line verdict; the lines are printed in the
terminal summary of a pytest run and when this file is run directly.
"""
import random
import sys
import time

import pytest

from projtorsor import sweeps
from projtorsor.exact_algebra import GF, OCTONION
from projtorsor.loop_laws import (
    EXTRA_IDS,
    T1_IDS,
    binary_from_ternary,
    check_binary_identities,
    check_identity,
    check_law,
    roundtrip_binary,
    roundtrip_ternary,
    search_counterexample,
)
from projtorsor.runner import BUNDLED, load_scenario, run
from projtorsor.scenario_io import decode_point, dumps
from projtorsor.structures import (
    chart_table,
    check_beta_homomorphism,
    octonion_chart_carrier,
    octonion_chart_config,
    pg_hyperplane_pairs,
    pg_ternary_table,
    reference_chart_formula,
)
from projtorsor.ternary_geometry import ChartConfig, chart_formula

VERDICTS = {}


def verdict(key, ok, detail):
    VERDICTS[key] = f"criterion {key:<14s} {'PASS' if ok else 'FAIL'}  {detail}"
    return ok


def test_01_torsor_exhaustive():
    t = time.perf_counter()
    r = sweeps.torsor_sweep(3)
    dt = time.perf_counter() - t
    ok = r["pairs"] == 169 and not r["failures"] and dt < 10
    verdict("1", ok, f"{r['pairs']} pairs, {r['quintuples']} quintuples, "
                     f"{len(r['failures'])} failing pairs, {dt:.1f}s (limit 10s)")
    assert ok


def test_02_oracle_equivalence():
    full = sweeps.oracle_sweep(3)
    s5 = sweeps.oracle_sweep(5, 10 ** 4, seed=5)
    s7 = sweeps.oracle_sweep(7, 10 ** 4, seed=7)
    bad = full["mismatches"] + s5["mismatches"] + s7["mismatches"]
    ok = bad == 0 and s5["checked"] >= 10 ** 4 and s7["checked"] >= 10 ** 4
    verdict("2", ok, f"PG(2,3) exhaustive {full['checked']}, PG(2,5) {s5['checked']}, "
                     f"PG(2,7) {s7['checked']} sampled, {bad} mismatches")
    assert ok


def test_03_u_independence():
    r = sweeps.u_independence_sweep(5)
    ok = r["triples"] > 0 and r["discrepancies"] == 0 and r["non_points"] == 0
    verdict("3", ok, f"{r['triples']} collinear triples over PG(2,5), "
                     f"{r['discrepancies']} discrepancies, {r['non_points']} non-point results")
    assert ok


def test_04_gamma_generic():
    t = time.perf_counter()
    r = sweeps.gamma_generic_sweep(2, 3)
    dt = time.perf_counter() - t
    ok = r["containment_failures"] == 0 and r["equality_failures"] == 0 and dt < 60
    verdict("4", ok, f"{r['tuples']} tuples, containment failures {r['containment_failures']}, "
                     f"{r['general_position']} in general position, equality failures "
                     f"{r['equality_failures']} (x- or z-condition: "
                     f"{r['equality_failures_x_or_z_condition']}), {dt:.1f}s")
    assert r["containment_failures"] == 0
    assert r["equality_failures"] == 0, r["first"]


def test_05_gamma_recovery():
    r = sweeps.gamma_recovery_sweep(3, 3, 500, seed=0)
    ok = r["meet_failures"] == 0 and r["join_failures"] == 0
    verdict("5", ok, f"{r['samples']} GF(3)^3 instances, meet failures {r['meet_failures']}, "
                     f"join failures {r['join_failures']}")
    assert ok


def test_06_gamma_collinear():
    r = sweeps.gamma_collinear_sweep(3, 3)
    inside, outside = r["inside_U_ab"], r["outside_U_ab"]
    bad = sum(d["part2_failures"] + d["part3_failures"] for d in (inside, outside))
    ok = bad == 0 and r["part2_vs_part3_disagreements"] == 0 and inside["instances"] > 0
    verdict("6", ok, f"{inside['instances']} instances with u in U_ab "
                     f"(+{outside['instances']} with u elsewhere), {bad} failures, "
                     f"{r['part2_vs_part3_disagreements']} disagreements between the two forms")
    assert ok


def test_07_octonion_moufang():
    C = octonion_chart_carrier()
    t = time.perf_counter()
    reps = {law: check_law(C, law, trials=10 ** 4, seed=k) for k, law in enumerate(("MT0", "MT1", "MT2"))}
    reps["beta"] = check_beta_homomorphism(octonion_chart_config(), C, trials=10 ** 4, seed=3)
    dt = time.perf_counter() - t
    ok = all(r.passed for r in reps.values()) and dt < 30
    parts = ", ".join(f"{k} {'pass' if r.passed else 'fail'}" for k, r in reps.items())
    verdict("7", ok, f"{parts}; 10^4 samples each (failing laws stop at the first "
                     f"re-validated witness), {dt:.1f}s")
    assert ok, {k: r.witness for k, r in reps.items() if not r.passed}


def test_08_separation_witnesses():
    cfg = octonion_chart_config()
    C = octonion_chart_carrier(cfg)
    r = search_counterexample(C, T1_IDS[0], trials=10 ** 4)
    t1_ok = False
    if not r.passed:
        w = r.witness
        x, y, z, u, v = (decode_point(w["args"][k], OCTONION) for k in "xyzuv")
        t = lambda p, q, s: reference_chart_formula(p, q, s, cfg)
        t1_ok = t(x, y, t(z, u, v)) != t(x, t(u, z, y), v)
    g7 = ChartConfig.projection(GF(7))
    T = chart_table(g7)
    rc = check_identity(binary_from_ternary(T, 0), EXTRA_IDS["comm"])
    comm_ok = False
    if not rc.passed:
        e = T.labels[0]
        pt = lambda lab: tuple(GF(7).coerce(c) for c in lab)
        x, y = (pt(rc.witness["args"][k]) for k in "xy")
        E = pt(e)
        comm_ok = chart_formula(x, E, y, g7) != chart_formula(y, E, x, g7)
    ok = t1_ok and comm_ok
    verdict("8", ok, f"octonion T1 witness after {r.trials} candidates, re-validated: {t1_ok}; "
                     f"GF(7) noncommutativity witness {rc.witness['args'] if rc.witness else None}, "
                     f"re-validated: {comm_ok}")
    assert ok


def test_09a_roundtrips_finite():
    tables = [pg_ternary_table(3, a, b) for a, b in pg_hyperplane_pairs(3)]
    tables.append(chart_table(ChartConfig.projection(GF(7))))
    bad_t = bad_b = bad_ids = origins = 0
    for T in tables:
        bad_t += not roundtrip_ternary(T).passed
        for e in range(T.N):
            loop = binary_from_ternary(T, e)
            origins += 1
            bad_b += not roundtrip_binary(loop).passed
            bad_ids += sum(not r.passed for r in check_binary_identities(loop).values())
    ok = bad_t == bad_b == bad_ids == 0
    verdict("9 finite", ok, f"{len(tables)} tables, {origins} origins; failing round trips "
                            f"{bad_t} + {bad_b}, failing identity checks {bad_ids}")
    assert ok


def test_09b_roundtrips_octonion_chart():
    C = octonion_chart_carrier()
    rng = random.Random(9)
    n = 1000
    bad_t = bad_b = 0
    for k in range(n):
        o = C.sample(rng)
        bad_t += not roundtrip_ternary(C, o, trials=1, seed=k).passed
        bad_b += not roundtrip_binary(binary_from_ternary(C, o), trials=1, seed=k).passed
    failing = set()
    for k in range(10):
        loop = binary_from_ternary(C, C.sample(rng))
        failing |= {name for name, r in check_binary_identities(loop, trials=200, seed=k).items()
                    if not r.passed}
    ok = bad_t == bad_b == 0 and not failing
    verdict("9 octonion", ok, f"{n} sampled origins: ternary round trip failed at {bad_t}, "
                              f"binary round trip failed at {bad_b}; identities failing on some "
                              f"of 10 origins: {sorted(failing) or 'none'}")
    assert ok


def test_10_determinism():
    names = sorted(p.name for p in BUNDLED.glob("*.json"))
    same = []
    for name in names:
        sc = load_scenario(name)
        same.append(dumps(run(sc, seed=11)) == dumps(run(sc, seed=11)))
    ok = all(same) and len(names) == 4
    verdict("10", ok, f"{sum(same)}/{len(names)} bundled scenarios byte-identical across two runs")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
