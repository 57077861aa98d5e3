"""Concrete ternary structures for the law checkers.

* :func:`pg_ternary_table`: U_ab in PG(n-1, p) via the lattice construction;
* :func:`chart_table`: U_ab of a GF(p) chart via the closed form;
* :func:`octonion_chart_carrier`: rational octonion chart, sampled;
* :func:`check_beta_homomorphism`: beta((xyz)) against
  (beta(z) beta(y)^-1) beta(x).
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .exact_algebra import (
    GF,
    OCTONION,
    Octonion,
    ScalarKind,
    cayley_dickson_product,
    inv,
    random_octonion,
)
from .loop_laws import CheckReport, SampledCarrier, TernaryTable
from .scenario_io import encode_point, encode_scalar
from .subspace_lattice import ProjectiveSpace
from .ternary_geometry import (
    ChartConfig,
    chart_formula,
    ternary_lattice,
    u_ab,
)


def pg_ternary_table(p: int, a, b, n: int = 3) -> TernaryTable:
    """Ternary table of U_ab computed with meets and joins only."""
    pts = u_ab(a, b)
    name = f"U_ab in PG({n - 1},{p})"
    return TernaryTable.from_function(pts, lambda x, y, z: ternary_lattice(x, y, z, a, b), name)


def pg_hyperplane_pairs(p: int, n: int = 3):
    H = ProjectiveSpace(p, n).hyperplanes()
    return list(itertools.product(H, H))


def chart_points(kind: ScalarKind, m: int = 2, cfg: ChartConfig | None = None):
    """All chart points of GF(p)^m inside U_ab, lexicographic."""
    if kind.name != "gf":
        raise ValueError("only prime-field charts are finite")
    pts = [tuple(kind.coerce(c) for c in v) for v in itertools.product(range(kind.p), repeat=m)]
    return [x for x in pts if cfg is None or cfg.contains(x)]


def chart_table(cfg: ChartConfig) -> TernaryTable:
    pts = chart_points(cfg.kind, cfg.m, cfg)
    T = TernaryTable.from_function(pts, lambda x, y, z: chart_formula(x, y, z, cfg),
                                   name=f"{cfg.kind} chart beta={[int(c) for c in cfg.beta]}")
    T.labels = [tuple(int(c) for c in x) for x in pts]
    return T


# -- octonion chart -------------------------------------------------------------


def _fr(o: Octonion) -> list:
    return list(o.coords)


def _cd_inverse(x: list) -> list:
    n = sum(c * c for c in x)
    return [x[0] / n] + [-c / n for c in x[1:]]


def reference_chart_formula(x, y, z, cfg: ChartConfig):
    """The closed form evaluated with the recursive Cayley-Dickson product on Fraction lists."""
    def value(pt):
        acc = [Fraction(0)] * 8
        for c, xi in zip(cfg._coeffs, pt):
            acc = [s + Fraction(c) * t for s, t in zip(acc, _fr(xi))]
        return acc

    if cfg.is_zero:
        return tuple(xi - yi + zi for xi, yi, zi in zip(x, y, z))
    s = cayley_dickson_product(value(z), _cd_inverse(value(y)))
    out = []
    for xi, yi, zi in zip(x, y, z):
        d = [a - b for a, b in zip(_fr(xi), _fr(yi))]
        w = [a + b for a, b in zip(cayley_dickson_product(s, d), _fr(zi))]
        out.append(Octonion(w))
    return tuple(out)


def octonion_chart_config(m: int = 2) -> ChartConfig:
    """beta = first coordinate."""
    return ChartConfig.projection(OCTONION, m)


def structured_chart_points(cfg: ChartConfig):
    """Chart points whose coordinates are basis units, tried first in searches."""
    units = [Octonion.unit(i) for i in range(8)]
    if cfg.is_zero:
        return [(u,) + (Octonion.real(0),) * (cfg.m - 1) for u in units]
    # beta(x) runs through the basis units: nonassociativity shows up at once
    k, c = next((k, c) for k, c in enumerate(cfg._coeffs) if c)
    pts = []
    for u in units:
        x = [Octonion.real(0)] * cfg.m
        x[k] = u * Fraction(1, c)
        pts.append(tuple(x))
    return pts


def octonion_chart_carrier(cfg: ChartConfig | None = None) -> SampledCarrier:
    cfg = cfg or octonion_chart_config()

    def sample(rng: random.Random):
        while True:
            x = tuple(random_octonion(rng, nonzero=False) for _ in range(cfg.m))
            if cfg.contains(x):
                return x

    return SampledCarrier(
        "octonion chart",
        sample=sample,
        op=lambda x, y, z: chart_formula(x, y, z, cfg),
        reference_op=lambda x, y, z: reference_chart_formula(x, y, z, cfg),
        structured=structured_chart_points(cfg),
        encode=encode_point,
    )


def check_beta_homomorphism(cfg: ChartConfig, carrier: SampledCarrier | None = None,
                            trials: int = 10 ** 4, seed: int = 0) -> CheckReport:
    """beta((xyz)) == (beta(z) beta(y)^-1) beta(x) on sampled chart triples."""
    if cfg.is_zero:
        raise ValueError("beta is the zero form")
    carrier = carrier or (octonion_chart_carrier(cfg) if cfg.kind == OCTONION else None)
    rng = random.Random(seed)
    if carrier is None:
        sample = cfg.random_point
    else:
        sample = carrier.sample
    fails = []
    for _ in range(trials):
        x, y, z = sample(rng), sample(rng), sample(rng)
        got = cfg.value(chart_formula(x, y, z, cfg))
        want = (cfg.value(z) * inv(cfg.value(y))) * cfg.value(x)
        if got != want:
            fails.append({"identity": "beta((xyz))=(beta(z)beta(y)^-1)beta(x)",
                          "args": {k: encode_point(v) for k, v in zip("xyz", (x, y, z))},
                          "lhs": encode_scalar(got), "rhs": encode_scalar(want)})
            break
    return CheckReport("beta homomorphism", "sampled", trials, fails, seed)
