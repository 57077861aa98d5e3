"""The ternary product (xyz)_ab on U_ab = X minus (a union b).

Two routes compute the same point:

* lattice route: meets and joins of subspaces of GF(p)^n
  (:func:`ternary_lattice` and friends);
* chart route: the closed form ``(beta(z) beta(y)^-1) (x - y) + z`` in an
  affine chart V_a with a linear form beta cutting out b
  (:func:`chart_formula`). This route works over any scalar kind,
  octonions included.

:class:`LatticeChart` translates between the two for PG(n-1, p).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .exact_algebra import (
    Mod,
    Octonion,
    Scalar,
    ScalarKind,
    inv,
    random_scalar,
)
from .subspace_lattice import (
    Subspace,
    incident,
    join,
    meet,
    normal_form,
    points_of,
    ProjectiveSpace,
    span,
)


class GeometryError(ValueError):
    pass


class CollinearError(GeometryError):
    """The generic construction was asked for a collinear triple."""


class DegenerateInputError(GeometryError):
    """A point lies on a or b (outside U_ab)."""


class NoAdmissiblePointError(GeometryError):
    pass


class LatticeFault(RuntimeError):
    """A lattice expression produced a non-point where a point is guaranteed."""


ChartPoint = tuple


# -- lattice route -----------------------------------------------------------


def is_point(s: Subspace) -> bool:
    return s.rank == 1


def on_a_or_b(x: Subspace, a: Subspace, b: Subspace) -> bool:
    return incident(x, a) or incident(x, b)


def collinear(x: Subspace, y: Subspace, z: Subspace) -> bool:
    return join(join(x, y), z).rank <= 2


def _check_inputs(pts, a, b):
    n = a.n
    if a.rank != n - 1 or b.rank != n - 1:
        raise GeometryError("a and b must be hyperplanes")
    for s in pts:
        if not is_point(s):
            raise GeometryError(f"{s} is not a point")
        if on_a_or_b(s, a, b):
            raise DegenerateInputError(f"{s} lies on a or b")


def _expect_point(w: Subspace) -> Subspace:
    if w.rank != 1:
        raise LatticeFault(f"expected a point, got rank {w.rank}")
    return w


def generic_expression(x, y, z, a, b, join=join, meet=meet):
    """((x v y) ^ a v z) ^ ((z v y) ^ b v x), no preconditions checked.

    ``join``/``meet`` may be swapped for the table lookups of an
    :class:`~projtorsor.subspace_lattice.IndexedLattice`.
    """
    return meet(join(meet(join(x, y), a), z), join(meet(join(z, y), b), x))


def collinear_expression(x, y, z, a, b, u, join=join, meet=meet):
    """(x v y) ^ [((z v u) ^ b) v (((x v y) ^ a v u) ^ ((u v y) ^ b v x))]."""
    L = join(x, y)
    xyu = meet(join(meet(L, a), u), join(meet(join(u, y), b), x))
    return meet(L, join(meet(join(z, u), b), xyu))


def ternary_lattice_generic(x, y, z, a, b) -> Subspace:
    """Intersection of the parallel to x v y through z (in V_a) with the
    parallel to z v y through x (in V_b)."""
    _check_inputs((x, y, z), a, b)
    if collinear(x, y, z):
        raise CollinearError("x, y, z are collinear")
    return _expect_point(generic_expression(x, y, z, a, b))


def admissible_points(x, y, a, b, allow_on_b: bool = False) -> list[Subspace]:
    """Points u off x v y and off a (and off b unless allowed), in enumeration order."""
    L = join(x, y)
    out = []
    for u in points_of(ProjectiveSpace(a.p, a.n)):
        if incident(u, L) or incident(u, a):
            continue
        if not allow_on_b and incident(u, b):
            continue
        out.append(u)
    return out


def ternary_lattice_collinear(x, y, z, a, b, u: Optional[Subspace] = None,
                              allow_u_on_b: bool = False) -> Subspace:
    _check_inputs((x, y, z), a, b)
    if not collinear(x, y, z):
        raise GeometryError("x, y, z are not collinear")
    if x == y == z:
        return x
    if x == y:
        # x = y != z: swap roles, (xyz)_ab := (zyx)_ba
        return ternary_lattice_collinear(z, y, x, b, a, u, allow_u_on_b)
    L = join(x, y)
    if u is None:
        cands = admissible_points(x, y, a, b)
        if not cands:
            raise NoAdmissiblePointError("no point off x v y, a and b")
        u = cands[0]
    else:
        if not is_point(u) or incident(u, L) or incident(u, a):
            raise GeometryError("u must be a point off x v y and off a")
        if incident(u, b) and not allow_u_on_b:
            raise GeometryError("u lies on b")
    return _expect_point(collinear_expression(x, y, z, a, b, u))


def ternary_lattice(x, y, z, a, b) -> Subspace:
    if collinear(x, y, z):
        return ternary_lattice_collinear(x, y, z, a, b)
    return ternary_lattice_generic(x, y, z, a, b)


def u_ab(a: Subspace, b: Subspace) -> list[Subspace]:
    """Points of U_ab in enumeration order."""
    return [x for x in points_of(ProjectiveSpace(a.p, a.n)) if not on_a_or_b(x, a, b)]


# -- chart route -------------------------------------------------------------


@dataclass(frozen=True)
class ChartConfig:
    """Affine chart K^m of V_a with a linear form beta; beta = 0 means a = b.

    ``origin`` is informational (the chart point used as origin, if any).
    Over octonions the coefficients of beta must be real, so that beta is
    linear for left scalar multiplication.
    """

    kind: ScalarKind
    beta: tuple
    origin: Optional[tuple] = None
    _coeffs: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.beta) < 2:
            raise ValueError("charts need affine dimension m >= 2")
        coeffs = tuple(self.kind.coerce(c) for c in self.beta)
        object.__setattr__(self, "beta", coeffs)
        if self.kind.name == "octonion":
            if not all(c.is_real() for c in coeffs):
                raise ValueError("octonion chart forms need real coefficients")
            coeffs = tuple(c.coords[0] for c in coeffs)
        object.__setattr__(self, "_coeffs", coeffs)
        if self.origin is not None:
            object.__setattr__(self, "origin", self.point(self.origin))

    @property
    def m(self) -> int:
        return len(self.beta)

    @property
    def is_zero(self) -> bool:
        return not any(self.beta)

    @classmethod
    def projection(cls, kind: ScalarKind, m: int = 2) -> "ChartConfig":
        """beta = first coordinate, so b is the 'vertical axis'."""
        return cls(kind, (1,) + (0,) * (m - 1))

    @classmethod
    def translation(cls, kind: ScalarKind, m: int = 2) -> "ChartConfig":
        return cls(kind, (0,) * m)

    def point(self, coords: Sequence) -> ChartPoint:
        if len(coords) != self.m:
            raise ValueError(f"chart point needs {self.m} coordinates")
        return tuple(self.kind.coerce(c) for c in coords)

    def value(self, x: ChartPoint) -> Scalar:
        """beta(x)."""
        acc = self.kind.zero()
        for c, xi in zip(self._coeffs, x):
            if c:
                acc = acc + xi * c if self.kind.name == "octonion" else acc + c * xi
        return acc

    def contains(self, x: ChartPoint) -> bool:
        """Membership in U_ab: beta(x) invertible (always true when a = b)."""
        return self.is_zero or bool(self.value(x))

    def random_point(self, rng: random.Random) -> ChartPoint:
        while True:
            x = tuple(random_scalar(self.kind, rng) for _ in range(self.m))
            if self.contains(x):
                return x


def _require_in_chart(cfg: ChartConfig, *pts):
    for x in pts:
        if not cfg.contains(x):
            raise DegenerateInputError(f"beta({x}) is not invertible")


def chart_formula(x: ChartPoint, y: ChartPoint, z: ChartPoint, cfg: ChartConfig) -> ChartPoint:
    """(beta(z) beta(y)^-1) (x - y) + z, scalar acting on the left componentwise."""
    if cfg.is_zero:
        return tuple(xi - yi + zi for xi, yi, zi in zip(x, y, z))
    _require_in_chart(cfg, x, y, z)
    s = cfg.value(z) * inv(cfg.value(y))
    return tuple(s * (xi - yi) + zi for xi, yi, zi in zip(x, y, z))


def binary_with_origin(x: ChartPoint, z: ChartPoint, cfg: ChartConfig) -> ChartPoint:
    """xz = (1 - beta(z)) x + z in a chart centred at the origin y, where b = {beta = 1}."""
    one = cfg.kind.one()
    s = one - cfg.value(z)
    return tuple(s * xi + zi for xi, zi in zip(x, z))


def rebase(cfg: ChartConfig, y: ChartPoint) -> ChartConfig:
    """Chart centred at y with b = {beta' = 1}; fields only.

    With x' = x - y this gives binary_with_origin(x', z', cfg') + y ==
    chart_formula(x, y, z, cfg).
    """
    if not cfg.kind.commutative:
        raise TypeError("rebasing is only defined over commutative scalars")
    if cfg.is_zero:
        return ChartConfig(cfg.kind, cfg.beta, origin=y)
    by = cfg.value(y)
    if not by:
        raise DegenerateInputError("origin lies on b")
    f = -inv(by)
    return ChartConfig(cfg.kind, tuple(f * c for c in cfg.beta), origin=y)


def difference(x: ChartPoint, y: ChartPoint) -> ChartPoint:
    return tuple(xi - yi for xi, yi in zip(x, y))


def translate(x: ChartPoint, y: ChartPoint) -> ChartPoint:
    return tuple(xi + yi for xi, yi in zip(x, y))


class HomomorphismError(AssertionError):
    pass


def beta_of_ternary(x, y, z, cfg: ChartConfig) -> Scalar:
    """beta((xyz)), checked against (beta(z) beta(y)^-1) beta(x)."""
    if cfg.is_zero:
        raise ValueError("beta is the zero form (a = b)")
    w = chart_formula(x, y, z, cfg)
    got = cfg.value(w)
    want = (cfg.value(z) * inv(cfg.value(y))) * cfg.value(x)
    if got != want:
        raise HomomorphismError(f"beta((xyz)) = {got!r} but expected {want!r}")
    return got


# -- coordinatizing PG(n-1, p) ----------------------------------------------


class LatticeChart:
    """Affine coordinates on V_a for hyperplanes a, b of PG(n-1, p).

    Points off a are represented by v with alpha(v) = 1 (alpha the form of
    a), written relative to an origin o in b (any point of V_a when a = b);
    dropping the pivot coordinate of alpha leaves m = n - 1 coordinates.
    The form of b then restricts to a linear form in these coordinates.
    """

    def __init__(self, a: Subspace, b: Subspace):
        p, n = a.p, a.n
        if a.rank != n - 1 or b.rank != n - 1:
            raise GeometryError("a and b must be hyperplanes")
        self.a, self.b, self.p, self.n = a, b, p, n
        self.alpha = normal_form(a)
        self.k = next(i for i, c in enumerate(self.alpha) if c)
        phi = normal_form(b)
        if a == b:
            o = [0] * n
            o[self.k] = 1
        else:
            o_pt = next(q for q in points_of(ProjectiveSpace(p, n))
                        if incident(q, b) and not incident(q, a))
            o = self._affine(o_pt.rows[0])
        self.origin_vec = tuple(o)
        kind = ScalarKind("gf", p)
        beta = [(phi[j] - phi[self.k] * self.alpha[j]) % p for j in range(n) if j != self.k]
        self.config = ChartConfig(kind, tuple(Mod(c, p) for c in beta))

    def _affine(self, v):
        t = sum(a * c for a, c in zip(self.alpha, v)) % self.p
        if t == 0:
            raise DegenerateInputError(f"{list(v)} lies on a")
        s = pow(t, -1, self.p)
        return [c * s % self.p for c in v]

    def embed(self, x: Subspace) -> ChartPoint:
        v = self._affine(x.rows[0])
        d = [(c - o) % self.p for c, o in zip(v, self.origin_vec)]
        return tuple(Mod(c, self.p) for j, c in enumerate(d) if j != self.k)

    def lift(self, cp: ChartPoint) -> Subspace:
        p = self.p
        if len(cp) != self.n - 1:
            raise ValueError("wrong number of chart coordinates")
        vals = [int(c) % p for c in cp]
        d = vals[: self.k] + [0] + vals[self.k:]
        d[self.k] = -sum(a * c for a, c in zip(self.alpha, d)) % p
        v = [(o + c) % p for o, c in zip(self.origin_vec, d)]
        return span(p, self.n, [v])


@lru_cache(maxsize=4096)
def lattice_chart(a: Subspace, b: Subspace) -> LatticeChart:
    return LatticeChart(a, b)


def embed_chart(x: Subspace, a: Subspace, b: Subspace) -> ChartPoint:
    return lattice_chart(a, b).embed(x)


def lift_chart(cp: ChartPoint, a: Subspace, b: Subspace) -> Subspace:
    return lattice_chart(a, b).lift(cp)


def ternary_via_chart(x, y, z, a, b) -> Subspace:
    ch = lattice_chart(a, b)
    return ch.lift(chart_formula(ch.embed(x), ch.embed(y), ch.embed(z), ch.config))


def rational_point(*coords) -> ChartPoint:
    return tuple(Fraction(c) for c in coords)


def octonion_point(*coords) -> ChartPoint:
    return tuple(c if isinstance(c, Octonion) else Octonion.real(c) for c in coords)
