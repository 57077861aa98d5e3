"""Exhaustive and sampled sweeps over finite geometries.

Each sweep returns a plain dict of counts plus the first offending
instance (``None`` when there is none), so results serialize directly
into reports.
"""
from __future__ import annotations

import itertools
import random

import numpy as np

from .grassmann_gamma import (
    collinear_part2,
    collinear_part3,
    gamma_bruteforce,
    gamma_grid,
    GammaInstance,
    lattice_generic,
    subspace_masks,
)
from .loop_laws import TernaryTable, binary_from_ternary, check_T0, check_T1, check_identity, EXTRA_IDS
from .structures import pg_hyperplane_pairs, pg_ternary_table
from .subspace_lattice import ProjectiveSpace, all_subspaces, indexed_lattice, join, meet
from .ternary_geometry import collinear_expression, ternary_lattice, ternary_via_chart, u_ab


def _js(S):
    return None if S is None else S.to_json()


# -- ternary product ---------------------------------------------------------------


def torsor_sweep(p: int = 3) -> dict:
    """T0 and both T1 equalities on U_ab for every hyperplane pair of PG(2, p)."""
    pairs = pg_hyperplane_pairs(p)
    failures = []
    quintuples = 0
    for a, b in pairs:
        T = pg_ternary_table(p, a, b)
        for check in (check_T0, check_T1):
            r = check(T)
            if not r.passed:
                failures.append({"a": _js(a), "b": _js(b), "report": r.to_dict()})
        quintuples += T.N ** 5
    return {"pairs": len(pairs), "quintuples": quintuples, "failures": failures}


def oracle_sweep(p: int, samples: int | None = None, seed: int = 0) -> dict:
    """Lattice construction against the chart closed form.

    ``samples=None`` runs every triple of U_ab for every hyperplane pair;
    otherwise that many (pair, triple) draws.
    """
    space = ProjectiveSpace(p, 3)
    H = space.hyperplanes()
    checked = 0
    first = None
    mismatches = 0

    def one(x, y, z, a, b):
        nonlocal checked, mismatches, first
        checked += 1
        w1 = ternary_lattice(x, y, z, a, b)
        w2 = ternary_via_chart(x, y, z, a, b)
        if w1 != w2:
            mismatches += 1
            if first is None:
                first = {k: _js(v) for k, v in zip("xyzab", (x, y, z, a, b))}

    if samples is None:
        for a, b in itertools.product(H, H):
            U = u_ab(a, b)
            for x, y, z in itertools.product(U, repeat=3):
                one(x, y, z, a, b)
    else:
        rng = random.Random(seed)
        for _ in range(samples):
            a, b = rng.choice(H), rng.choice(H)
            U = u_ab(a, b)
            one(rng.choice(U), rng.choice(U), rng.choice(U), a, b)
    return {"p": p, "checked": checked, "mismatches": mismatches, "first": first}


def table_identity_sweep(p: int = 3) -> dict:
    """Swap symmetry and the fake-parallelogram equivalences on every U_ab table."""
    H = ProjectiveSpace(p, 3).hyperplanes()
    tables = {(a, b): pg_ternary_table(p, a, b) for a, b in itertools.product(H, H)}
    sym_bad = para_bad = 0
    checked = 0
    for (a, b), T in tables.items():
        Tb = tables[(b, a)].table
        Ta = T.table
        sym_bad += int((Tb != Ta.transpose(2, 1, 0)).sum())
        N = T.N
        x, y, z = np.indices((N, N, N))
        w = Ta
        para_bad += int(((Ta[z, w, x] != y) | (Ta[y, x, w] != z) | (Ta[w, z, y] != x)).sum())
        checked += N ** 3
    return {"triples": checked, "symmetry_failures": sym_bad, "parallelogram_failures": para_bad}


def isotope_sweep(p: int = 3) -> dict:
    """Every origin of every U_ab table of PG(2, p) gives a group; records orders."""
    orders = set()
    nonassoc = 0
    for a, b in pg_hyperplane_pairs(p):
        T = pg_ternary_table(p, a, b)
        for e in range(T.N):
            r = check_identity(binary_from_ternary(T, e), EXTRA_IDS["assoc"])
            nonassoc += not r.passed
            orders.add(T.N)
    return {"orders": sorted(orders), "non_associative_origins": nonassoc}


def u_independence_sweep(p: int = 5) -> dict:
    """Collinear construction for every admissible u, every collinear triple with x != y.

    Admissible u: off x v y, off a and off b. Points u on b (still off
    x v y and a) are evaluated separately and their results tallied.
    """
    L = indexed_lattice(p, 3)
    S = ProjectiveSpace(p, 3)
    P = L.of(S.points())
    H = L.of(S.hyperplanes())
    leq = L.leq
    triples = disc = non_points = 0
    onb_total = onb_zero = onb_agree = 0
    first = None
    for a in H:
        for b in H:
            U = P[~leq(P, a) & ~leq(P, b)]
            X, Y = np.meshgrid(U, U, indexing="ij")
            X, Y = X.ravel(), Y.ravel()
            keep = X != Y
            X, Y = X[keep], Y[keep]
            line = L.J[X, Y]
            i, j = np.nonzero(leq(U[None, :], line[:, None]))
            X2, Y2, Z2, L2 = X[i], Y[i], U[j], line[i]
            cand = ~leq(P[None, :], L2[:, None]) & ~leq(P[None, :], a)
            ti, uj = np.nonzero(cand)
            R = collinear_expression(X2[ti], Y2[ti], Z2[ti], a, b, P[uj], join=L.join, meet=L.meet)
            onb = leq(P[uj], b)
            strict = ~onb
            non_points += int((L.rank[R[strict]] != 1).sum())
            lo = np.full(len(X2), np.iinfo(np.int64).max)
            hi = np.full(len(X2), -1)
            np.minimum.at(lo, ti[strict], R[strict])
            np.maximum.at(hi, ti[strict], R[strict])
            bad = lo != hi
            disc += int(bad.sum())
            triples += len(X2)
            if bad.any() and first is None:
                k = int(np.argmax(bad))
                first = {n: _js(L.subspaces[v]) for n, v in
                         zip("xyzab", (X2[k], Y2[k], Z2[k], a, b))}
            onb_total += int(onb.sum())
            onb_zero += int((L.rank[R[onb]] == 0).sum())
            onb_agree += int((R[onb] == lo[ti[onb]]).sum())
    return {
        "p": p,
        "triples": triples,
        "discrepancies": disc,
        "non_points": non_points,
        "first": first,
        "u_on_b": {"evaluations": onb_total, "zero_subspace": onb_zero, "agreeing": onb_agree},
    }


# -- Gamma ---------------------------------------------------------------------


def _gp_flags(L, xi, yi, zi):
    J, M, z0 = L.J, L.M, L.zero
    return (M[xi, J[yi, zi]] == z0, M[yi, J[xi, zi]] == z0, M[zi, J[xi, yi]] == z0)


def gamma_generic_sweep(p: int = 2, n: int = 3) -> dict:
    """Lattice expression against brute-force Gamma on every 5-tuple of subspaces."""
    L = indexed_lattice(p, n)
    subs = L.subspaces
    k = len(subs)
    G = gamma_grid(subs, subs, subs, subs, subs)
    masks = subspace_masks(p, n)
    if not np.isin(np.unique(G), masks).all():
        raise RuntimeError("a witness set is not a subspace")
    ix = np.indices((k,) * 5, sparse=True)
    xi, ai, yi, bi, zi = ix
    E = masks[lattice_generic(xi, ai, yi, bi, zi, join=L.join, meet=L.meet)]
    contained = (G & ~E) == 0
    equal = G == E
    cx, cy, cz = _gp_flags(L, xi, yi, zi)
    gp = np.broadcast_to(cx | cy | cz, G.shape)
    xz = np.broadcast_to(cx | cz, G.shape)
    fail = gp & ~equal
    first = None
    if fail.any():
        pos = tuple(int(c[0]) for c in np.nonzero(fail))
        x, a, y, b, z = (subs[i] for i in pos)
        first = {
            "instance": GammaInstance(x, a, y, b, z).to_json(),
            "gamma": gamma_bruteforce(GammaInstance(x, a, y, b, z)).to_json(),
            "lattice": lattice_generic(x, a, y, b, z).to_json(),
        }
    return {
        "p": p,
        "n": n,
        "tuples": int(G.size),
        "containment_failures": int((~contained).sum()),
        "general_position": int(gp.sum()),
        "equality_failures": int(fail.sum()),
        "equality_failures_x_or_z_condition": int((fail & xz).sum()),
        "first": first,
    }


def gamma_recovery_sweep(p: int, n: int, samples: int = 500, seed: int = 0) -> dict:
    """Gamma(x,a,y,x,a) = x ^ a and Gamma(a,a,y,b,b) = b v a on random instances."""
    subs = all_subspaces(p, n)
    rng = random.Random(seed)
    bad_meet = bad_join = 0
    first = None
    for _ in range(samples):
        x, a, y, b = (rng.choice(subs) for _ in range(4))
        ok1 = gamma_bruteforce(GammaInstance(x, a, y, x, a)) == meet(x, a)
        ok2 = gamma_bruteforce(GammaInstance(a, a, y, b, b)) == join(b, a)
        bad_meet += not ok1
        bad_join += not ok2
        if not (ok1 and ok2) and first is None:
            first = {k: _js(v) for k, v in zip("xayb", (x, a, y, b))}
    return {"p": p, "n": n, "samples": samples, "meet_failures": bad_meet,
            "join_failures": bad_join, "first": first, "seed": seed}


def gamma_collinear_sweep(p: int = 3, n: int = 3) -> dict:
    """Nested and short collinear forms against brute force.

    Instances: hyperplanes a, b; rank-1 x != y; rank-1 z inside x v y; every
    rank-1 u off a, b and x v y. Counts are split by whether x, y, z all lie
    in U_ab.
    """
    L = indexed_lattice(p, n)
    S = ProjectiveSpace(p, n)
    pts, hyps = S.points(), S.hyperplanes()
    P, H = L.of(pts), L.of(hyps)
    G = gamma_grid(pts, hyps, pts, hyps, pts)
    masks = subspace_masks(p, n)
    mask_index = {int(m): i for i, m in enumerate(masks)}
    leq = L.leq
    out = {"inside": [0, 0, 0], "outside": [0, 0, 0]}  # instances, part2 bad, part3 bad
    parts_disagree = 0
    first = None
    k = len(P)
    for ia, a in enumerate(H):
        for ib, b in enumerate(H):
            offab = ~leq(P, a) & ~leq(P, b)
            for ix_, iy_ in itertools.permutations(range(k), 2):
                x, y = P[ix_], P[iy_]
                line = L.J[x, y]
                us = P[offab & ~leq(P, line)]
                for iz_ in np.nonzero(leq(P, line))[0]:
                    z = P[iz_]
                    gam = mask_index[int(G[ix_, ia, iy_, ib, iz_])]
                    r2 = collinear_part2(x, a, y, b, z, us, join=L.join, meet=L.meet)
                    r3 = collinear_part3(x, a, y, b, z, us, join=L.join, meet=L.meet)
                    inside = bool(offab[ix_] and offab[iy_] and offab[iz_])
                    tally = out["inside" if inside else "outside"]
                    tally[0] += len(us)
                    b2, b3 = int((r2 != gam).sum()), int((r3 != gam).sum())
                    tally[1] += b2
                    tally[2] += b3
                    parts_disagree += int((r2 != r3).sum())
                    if (b2 or b3) and first is None:
                        first = {"x": _js(pts[ix_]), "y": _js(pts[iy_]), "z": _js(pts[iz_]),
                                 "a": _js(hyps[ia]), "b": _js(hyps[ib]), "inside_U_ab": inside}
    return {
        "p": p,
        "n": n,
        "inside_U_ab": dict(zip(("instances", "part2_failures", "part3_failures"), out["inside"])),
        "outside_U_ab": dict(zip(("instances", "part2_failures", "part3_failures"), out["outside"])),
        "part2_vs_part3_disagreements": parts_disagree,
        "first": first,
    }


def gamma_torsor_sweep(p: int = 3) -> dict:
    """Gamma on points and hyperplanes of PG(2, p) agrees with the ternary product on U_ab."""
    S = ProjectiveSpace(p, 3)
    pts, hyps = S.points(), S.hyperplanes()
    G = gamma_grid(pts, hyps, pts, hyps, pts)
    masks = subspace_masks(p, 3)
    pos = {int(m): s for m, s in zip(masks, all_subspaces(p, 3))}
    pidx = {s: i for i, s in enumerate(pts)}
    checked = bad = 0
    for ia, a in enumerate(hyps):
        for ib, b in enumerate(hyps):
            T = pg_ternary_table(p, a, b)
            U = T.labels
            for (i, x), (j, y), (k, z) in itertools.product(list(enumerate(U)), repeat=3):
                checked += 1
                g = pos[int(G[pidx[x], ia, pidx[y], ib, pidx[z]])]
                bad += g != U[T.table[i, j, k]]
    return {"p": p, "checked": checked, "mismatches": bad}


def remark_negative_instance() -> dict:
    """Planes x, y, z of GF(2)^4 (never in general position) where lattice != Gamma."""
    L = indexed_lattice(2, 4)
    planes = [s for s in L.subspaces if s.rank == 2]
    hyps = [s for s in L.subspaces if s.rank == 3]
    for x, y, z in itertools.permutations(planes, 3):
        for a, b in itertools.product(hyps, hyps):
            inst = GammaInstance(x, a, y, b, z)
            g = gamma_bruteforce(inst)
            e = lattice_generic(x, a, y, b, z)
            if g != e:
                return {"instance": inst.to_json(), "gamma": g.to_json(), "lattice": e.to_json()}
    return {}
