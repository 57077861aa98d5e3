"""The five-argument map Gamma(x, a, y, b, z) on subspaces of GF(p)^n.

Gamma is the set of omega admitting a witness

    xi in x, alpha in a, eta in y, beta in b, zeta in z
    omega = zeta + alpha = alpha + eta + beta = xi + beta

and is computed here by enumeration. Vectors of GF(p)^n are encoded as
integers (lexicographic base-p digits) and subsets as bitmasks, so a
witness search is a handful of integer operations per (alpha, xi) pair.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .subspace_lattice import (
    Subspace,
    all_subspaces,
    incident,
    join,
    meet,
    span,
)

MAX_SPACE = 3 ** 4
MAX_WORK = 10 ** 8


class GammaTooLarge(ValueError):
    pass


class NotASubspaceError(RuntimeError):
    """The witness set failed closure; indicates a bug, never expected."""


@dataclass(frozen=True)
class GammaInstance:
    x: Subspace
    a: Subspace
    y: Subspace
    b: Subspace
    z: Subspace

    def __post_init__(self):
        amb = {(s.p, s.n) for s in self.parts}
        if len(amb) != 1:
            raise ValueError("all five subspaces must share one ambient space")

    @property
    def parts(self):
        return (self.x, self.a, self.y, self.b, self.z)

    @property
    def p(self):
        return self.x.p

    @property
    def n(self):
        return self.x.n

    def to_json(self) -> dict:
        return {k: getattr(self, k).to_json() for k in "xaybz"}

    @classmethod
    def from_json(cls, d: dict) -> "GammaInstance":
        return cls(*(Subspace.from_json(d[k]) for k in "xaybz"))


@dataclass(frozen=True)
class GammaWitness:
    omega: tuple
    xi: tuple
    alpha: tuple
    eta: tuple
    beta: tuple
    zeta: tuple

    def is_valid(self, inst: GammaInstance, p: int) -> bool:
        def add(*vs):
            return tuple(sum(c) % p for c in zip(*vs))

        return (
            inst.x.contains_vector(self.xi)
            and inst.a.contains_vector(self.alpha)
            and inst.y.contains_vector(self.eta)
            and inst.b.contains_vector(self.beta)
            and inst.z.contains_vector(self.zeta)
            and self.omega == add(self.zeta, self.alpha)
            == add(self.alpha, self.eta, self.beta)
            == add(self.xi, self.beta)
        )


class _Space:
    """Integer encoding of GF(p)^n with precomputed subtraction."""

    def __init__(self, p: int, n: int):
        self.p, self.n = p, n
        self.size = p ** n
        self.vecs = list(itertools.product(range(p), repeat=n))
        idx = np.arange(self.size)
        digits = np.array(self.vecs, dtype=np.int64).reshape(self.size, n)
        diff = (digits[:, None, :] - digits[None, :, :]) % p
        weights = p ** np.arange(n - 1, -1, -1)
        self.sub = (diff @ weights).astype(np.int64)  # sub[i, j] = v_i - v_j
        self.idx = idx

    def encode(self, v) -> int:
        out = 0
        for c in v:
            out = out * self.p + c % self.p
        return out


@lru_cache(maxsize=None)
def _space(p: int, n: int) -> _Space:
    return _Space(p, n)


@lru_cache(maxsize=1 << 14)
def _members(S: Subspace) -> tuple[int, ...]:
    sp = _space(S.p, S.n)
    return tuple(sorted(sp.encode(v) for v in S.vectors()))


@lru_cache(maxsize=1 << 14)
def _mask(S: Subspace) -> int:
    m = 0
    for i in _members(S):
        m |= 1 << i
    return m


@lru_cache(maxsize=1 << 16)
def _translate_mask(S: Subspace, v: int) -> int:
    """Bitmask of the coset v + S."""
    sp = _space(S.p, S.n)
    m = 0
    for s in _members(S):
        m |= 1 << int(sp.sub[v, sp.sub[0, s]])
    return m


def _check_size(inst: GammaInstance):
    p, n = inst.p, inst.n
    if p ** n > MAX_SPACE:
        raise GammaTooLarge(f"|GF({p})^{n}| = {p ** n} exceeds {MAX_SPACE}")
    work = p ** n * p ** inst.a.rank * p ** inst.x.rank
    if work > MAX_WORK:
        raise GammaTooLarge(f"{work} membership tests exceed {MAX_WORK}")


def gamma_mask(inst: GammaInstance) -> int:
    """Bitmask of the witness set, before any subspace check.

    For each alpha in a and xi in x with eta = xi - alpha in y, the
    admissible omega are (alpha + z) intersect (xi + b): then zeta = omega
    - alpha in z, beta = omega - xi in b and omega - alpha - beta = eta.
    """
    _check_size(inst)
    sp = _space(inst.p, inst.n)
    ymask = _mask(inst.y)
    xs = _members(inst.x)
    out = 0
    for al in _members(inst.a):
        for xi in xs:
            if (ymask >> int(sp.sub[xi, al])) & 1:
                out |= _translate_mask(inst.z, al) & _translate_mask(inst.b, xi)
    return out


def gamma_witnesses(inst: GammaInstance, omega) -> list[GammaWitness]:
    """All witnesses for one omega, by direct enumeration over alpha and xi."""
    sp = _space(inst.p, inst.n)
    w = sp.encode(omega)
    out = []
    for al in _members(inst.a):
        ze = int(sp.sub[w, al])
        if not (_mask(inst.z) >> ze) & 1:
            continue
        for xi in _members(inst.x):
            be = int(sp.sub[w, xi])
            if not (_mask(inst.b) >> be) & 1:
                continue
            et = int(sp.sub[sp.sub[w, al], be])
            if (_mask(inst.y) >> et) & 1:
                v = sp.vecs
                out.append(GammaWitness(v[w], v[xi], v[al], v[et], v[be], v[ze]))
    return out


def mask_to_subspace(mask: int, p: int, n: int) -> Subspace:
    """Canonical subspace with exactly these members; raises if the set is not one."""
    sp = _space(p, n)
    elems = [i for i in range(sp.size) if (mask >> i) & 1]
    if 0 not in elems:
        raise NotASubspaceError("witness set does not contain 0")
    for i in elems:
        for j in elems:
            if not (mask >> int(sp.sub[i, sp.sub[0, j]])) & 1:
                raise NotASubspaceError("witness set not closed under addition")
    # closure under + and containing 0 gives closure under scaling over GF(p)
    S = span(p, n, [sp.vecs[i] for i in elems])
    if _mask(S) != mask:
        raise NotASubspaceError("witness set differs from its span")
    return S


def gamma_bruteforce(inst: GammaInstance) -> Subspace:
    return mask_to_subspace(gamma_mask(inst), inst.p, inst.n)


def general_position(x: Subspace, y: Subspace, z: Subspace) -> bool:
    return (
        not meet(x, join(y, z)).rank
        or not meet(y, join(x, z)).rank
        or not meet(z, join(x, y)).rank
    )


def lattice_generic(x, a, y, b, z, join=join, meet=meet):
    """((x v y) ^ a v z) ^ ((z v y) ^ b v x); join/meet are pluggable."""
    return meet(join(meet(join(x, y), a), z), join(meet(join(z, y), b), x))


def gamma_lattice_generic(inst: GammaInstance, check: bool = True) -> Subspace:
    """Lattice expression for Gamma on general-position triples.

    The expression always contains the brute-force Gamma. Equality holds
    when x ^ (y v z) = 0 or z ^ (x v y) = 0; when y ^ (x v z) = 0 is the
    only zero meet it can fail (GF(2)^3 has such tuples, see
    :func:`projtorsor.sweeps.gamma_generic_sweep`).
    """
    x, a, y, b, z = inst.parts
    if check and not general_position(x, y, z):
        raise ValueError("x, y, z are not in general position")
    return lattice_generic(x, a, y, b, z)


def _xyu(x, a, y, b, u, join=join, meet=meet):
    return meet(join(meet(join(x, y), a), u), join(meet(join(u, y), b), x))


def collinear_part2(x, a, y, b, z, u, join=join, meet=meet):
    xyu = _xyu(x, a, y, b, u, join, meet)
    left = join(meet(join(xyu, u), a), z)
    right = join(meet(join(z, u), b), xyu)
    return meet(left, right)


def collinear_part3(x, a, y, b, z, u, join=join, meet=meet):
    return meet(join(x, y), join(meet(join(z, u), b), _xyu(x, a, y, b, u, join, meet)))


def admissible_u(inst: GammaInstance, u: Subspace) -> bool:
    L = join(inst.x, inst.y)
    return (
        u.rank == 1
        and not incident(u, inst.a)
        and not incident(u, inst.b)
        and meet(u, L).rank == 0
    )


def part3_applies(inst: GammaInstance) -> bool:
    n = inst.n
    return (
        inst.a.rank == n - 1
        and inst.b.rank == n - 1
        and inst.x.rank == inst.y.rank == inst.z.rank == 1
        and inst.x != inst.y
    )


def gamma_lattice_collinear(inst: GammaInstance, u: Subspace, form: str = "auto") -> Subspace:
    """Lattice form of Gamma when z lies in x v y, via an auxiliary point u.

    ``form`` is "part2" (the general nested expression), "part3" (the short
    form for hyperplanes a, b and points x != y) or "auto" (part3 when it
    applies).
    """
    x, a, y, b, z = inst.parts
    if not incident(z, join(x, y)):
        raise ValueError("z is not contained in x v y")
    if not admissible_u(inst, u):
        raise ValueError("u must be a point of U_ab with u ^ (x v y) = 0")
    if form == "auto":
        form = "part3" if part3_applies(inst) else "part2"
    if form == "part3":
        if not part3_applies(inst):
            raise ValueError("short form needs hyperplanes a, b and points x != y")
        return collinear_part3(x, a, y, b, z, u)
    if form == "part2":
        return collinear_part2(x, a, y, b, z, u)
    raise ValueError(f"unknown form {form!r}")


# -- batch evaluation ---------------------------------------------------------


def gamma_grid(xs, as_, ys, bs, zs) -> np.ndarray:
    """Gamma bitmasks for the whole product xs x as_ x ys x bs x zs.

    Same witness enumeration as :func:`gamma_mask`, vectorized over the
    five index axes. Needs p**n <= 64 so masks fit in uint64.
    """
    p, n = xs[0].p, xs[0].n
    sp = _space(p, n)
    if sp.size > 64:
        raise GammaTooLarge("batch evaluation needs p**n <= 64")
    size = sp.size

    def member_table(subs):
        t = np.zeros((len(subs), size), dtype=bool)
        for i, s in enumerate(subs):
            t[i, list(_members(s))] = True
        return t

    X, A, Y = member_table(xs), member_table(as_), member_table(ys)

    def coset_masks(subs):
        out = np.zeros((size, len(subs)), dtype=np.uint64)
        for v in range(size):
            for i, s in enumerate(subs):
                out[v, i] = _translate_mask(s, v)
        return out

    Zt, Bt = coset_masks(zs), coset_masks(bs)
    out = np.zeros((len(xs), len(as_), len(ys), len(bs), len(zs)), dtype=np.uint64)
    for al in range(size):
        a_ok = A[:, al]
        if not a_ok.any():
            continue
        for xi in range(size):
            x_ok = X[:, xi]
            if not x_ok.any():
                continue
            y_ok = Y[:, int(sp.sub[xi, al])]
            cond = x_ok[:, None, None] & a_ok[None, :, None] & y_ok[None, None, :]
            if not cond.any():
                continue
            contrib = Bt[xi][:, None] & Zt[al][None, :]
            out |= np.where(cond[..., None, None], contrib[None, None, None], np.uint64(0))
    return out


def lattice_grid(subs, join_t, meet_t, xi, ai, yi, bi, zi):
    """Generic lattice expression on index arrays, using precomputed tables."""
    J, M = join_t, meet_t
    return M[J[M[J[xi, yi], ai], zi], J[M[J[zi, yi], bi], xi]]


def lattice_tables(subs):
    """Join and meet tables over a list of subspaces closed under both."""
    pos = {s: i for i, s in enumerate(subs)}
    k = len(subs)
    J = np.empty((k, k), dtype=np.int64)
    M = np.empty((k, k), dtype=np.int64)
    for i, s in enumerate(subs):
        for j, t in enumerate(subs):
            J[i, j] = pos[join(s, t)]
            M[i, j] = pos[meet(s, t)]
    return J, M


def subspace_masks(p: int, n: int) -> np.ndarray:
    return np.array([_mask(s) for s in all_subspaces(p, n)], dtype=np.uint64)
