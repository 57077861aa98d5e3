"""
Over the octonions
==================

The closed form (beta(z) beta(y)^-1)(x - y) + z still makes sense with
octonion coordinates. Which laws survive? beta stays a homomorphism and
(xxy) = y = (yxx) holds, but the torsor law and the ternary Moufang law
MT1 both break; the nonzero octonions under (xyz) = (x y^-1) z do satisfy
MT0-MT2.
"""
from projtorsor.exact_algebra import Octonion
from projtorsor.loop_laws import (
    MT1,
    T1_IDS,
    check_identity,
    check_law,
    check_MT,
    octonion_unit_loop,
    search_counterexample,
    ternary_from_binary,
)
from projtorsor.structures import check_beta_homomorphism, octonion_chart_carrier, octonion_chart_config
from projtorsor.ternary_geometry import chart_formula

cfg = octonion_chart_config()
C = octonion_chart_carrier(cfg)

print(check_beta_homomorphism(cfg, C, trials=500).summary())
print(check_law(C, "MT0", trials=500).summary())

t1 = search_counterexample(C, T1_IDS[0], trials=5000)
print(t1.summary(), "after", t1.trials, "candidates")
print("  witness, first coordinates:", {k: v[0] for k, v in t1.witness["args"].items()})

print(check_identity(C, MT1, trials=100).summary())

# A small MT1 violation built from basis units
e = Octonion.unit
zero = Octonion()
x, y, v, u = (e(0), zero), (e(1), zero), (e(2), zero), (e(2) + e(4), zero)
t = lambda p, q, r: chart_formula(p, q, r, cfg)
lhs, rhs = t(u, v, t(x, y, x)), t(t(u, v, x), y, x)
print("  (uv(xyx)) first coordinate:", [str(c) for c in lhs[0].coords])
print("  ((uvx)yx) first coordinate:", [str(c) for c in rhs[0].coords])

U = ternary_from_binary(octonion_unit_loop())
print("unit loop:", check_MT(U, trials=300).summary())
