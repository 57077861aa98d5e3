"""
Gamma on all subspaces
======================

Gamma(x, a, y, b, z) extends the ternary product to subspaces of any
dimension. We compute it by brute force, recover meet and join from it,
and compare it with the meet/join expression on every 5-tuple of GF(2)^3.
"""
from projtorsor import sweeps
from projtorsor.grassmann_gamma import GammaInstance, gamma_bruteforce, lattice_generic
from projtorsor.subspace_lattice import join, meet, span, zero

S = lambda *rows: span(3, 3, rows)
x, a, y, b = S((1, 0, 0)), S((1, 0, 0), (0, 1, 0)), S((0, 0, 1)), S((0, 1, 1))
print("Gamma(x,a,y,x,a) == x ^ a:", gamma_bruteforce(GammaInstance(x, a, y, x, a)) == meet(x, a))
print("Gamma(a,a,y,b,b) == b v a:", gamma_bruteforce(GammaInstance(a, a, y, b, b)) == join(b, a))

# Every 5-tuple of subspaces of GF(2)^3
r = sweeps.gamma_generic_sweep(2, 3)
print(f"{r['tuples']} tuples; Gamma inside the lattice expression everywhere: "
      f"{r['containment_failures'] == 0}")
print(f"general position: {r['general_position']}, where the two differ: {r['equality_failures']}")
print(f"  ... of those with x ^ (y v z) = 0 or z ^ (x v y) = 0: {r['equality_failures_x_or_z_condition']}")

# The smallest disagreement: only y ^ (x v z) = 0 holds
x = z = span(2, 3, [(0, 0, 1)])
O = zero(2, 3)
inst = GammaInstance(x, O, O, O, z)
print("x = z = <001>, a = y = b = 0:")
print("  Gamma   ", gamma_bruteforce(inst))
print("  lattice ", lattice_generic(x, O, O, O, z))
