"""
Coordinates for the ternary product
===================================

In an affine chart the lattice construction becomes the closed form
(beta(z) beta(y)^-1)(x - y) + z, with beta the linear form whose zero set
is b. This script compares the two over GF(5), then moves the origin.
"""
import random

from projtorsor.exact_algebra import GF, Mod
from projtorsor.subspace_lattice import ProjectiveSpace
from projtorsor.ternary_geometry import (
    ChartConfig,
    binary_with_origin,
    chart_formula,
    difference,
    rebase,
    ternary_lattice,
    ternary_via_chart,
    translate,
    u_ab,
)

rng = random.Random(1)
plane = ProjectiveSpace(5, 3)
H = plane.hyperplanes()
same = 0
for _ in range(2000):
    a, b = rng.choice(H), rng.choice(H)
    x, y, z = (rng.choice(u_ab(a, b)) for _ in range(3))
    same += ternary_lattice(x, y, z, a, b) == ternary_via_chart(x, y, z, a, b)
print(f"lattice vs chart over PG(2,5): {same}/2000 agree")

# The worked GF(7) example: beta = first coordinate
cfg = ChartConfig.projection(GF(7))
pt = lambda *v: tuple(Mod(c, 7) for c in v)
print("(xyz) for x=(2,1), y=(3,1), z=(4,5):", chart_formula(pt(2, 1), pt(3, 1), pt(4, 5), cfg))

# Centre the chart at y: b becomes {beta' = 1} and xz = (1 - beta'(z)) x + z
x, y, z = pt(2, 1), pt(3, 1), pt(4, 5)
c2 = rebase(cfg, y)
w = translate(binary_with_origin(difference(x, y), difference(z, y), c2), y)
print("same value from the product with origin y:", w)
