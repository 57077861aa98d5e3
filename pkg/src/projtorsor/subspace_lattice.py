"""Linear subspaces of GF(p)^n in reduced row-echelon form.

A :class:`Subspace` is canonical: two subspaces are equal exactly when
their row tuples are equal, so they can be hashed, cached and compared
structurally. Projectively, rank-1 subspaces are points and rank n-1
subspaces are hyperplanes of PG(n-1, p).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .exact_algebra import is_prime


class AmbientMismatchError(ValueError):
    pass


def rref(rows: Iterable[Sequence[int]], p: int, n: int) -> tuple[tuple[int, ...], ...]:
    """Reduced row-echelon form over GF(p), leading entries 1, zero rows dropped."""
    m = [[c % p for c in r] for r in rows]
    for r in m:
        if len(r) != n:
            raise AmbientMismatchError(f"vector {r} does not lie in GF({p})^{n}")
    out = []
    col = 0
    while m and col < n:
        piv = next((r for r in m if r[col]), None)
        if piv is None:
            col += 1
            continue
        m.remove(piv)
        s = pow(piv[col], -1, p)
        piv = [c * s % p for c in piv]
        for rows_ in (m, out):
            for i, r in enumerate(rows_):
                f = r[col]
                if f:
                    rows_[i] = [(a - f * b) % p for a, b in zip(r, piv)]
        out.append(piv)
        m = [r for r in m if any(r)]
        col += 1
    return tuple(tuple(r) for r in out)


@dataclass(frozen=True)
class Subspace:
    p: int
    n: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, c in enumerate(r) if c) for r in self.rows)

    def contains_vector(self, v: Sequence[int]) -> bool:
        v = [c % self.p for c in v]
        for r, piv in zip(self.rows, self.pivots):
            f = v[piv]
            if f:
                v = [(a - f * b) % self.p for a, b in zip(v, r)]
        return not any(v)

    def vectors(self) -> list[tuple[int, ...]]:
        """All p**rank vectors of the subspace."""
        p, n = self.p, self.n
        out = []
        for coeffs in itertools.product(range(p), repeat=self.rank):
            v = [0] * n
            for c, r in zip(coeffs, self.rows):
                if c:
                    v = [(a + c * b) % p for a, b in zip(v, r)]
            out.append(tuple(v))
        return out

    def to_json(self) -> dict:
        return {"p": self.p, "n": self.n, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, d: dict) -> "Subspace":
        return span(d["p"], d["n"], d["rows"])

    def __repr__(self):
        return f"Subspace(GF({self.p})^{self.n}, rows={[list(r) for r in self.rows]})"


def span(p: int, n: int, vectors: Iterable[Sequence[int]] = ()) -> Subspace:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return Subspace(p, n, rref(vectors, p, n))


def zero(p: int, n: int) -> Subspace:
    return Subspace(p, n, ())


def whole(p: int, n: int) -> Subspace:
    return span(p, n, [[int(i == j) for j in range(n)] for i in range(n)])


def _check_ambient(A: Subspace, B: Subspace):
    if (A.p, A.n) != (B.p, B.n):
        raise AmbientMismatchError(f"GF({A.p})^{A.n} vs GF({B.p})^{B.n}")


@lru_cache(maxsize=1 << 16)
def annihilator(A: Subspace) -> Subspace:
    """{v : r . v = 0 for every row r of A}, the orthogonal complement."""
    p, n = A.p, A.n
    piv = A.pivots
    free = [j for j in range(n) if j not in piv]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for r, c in zip(A.rows, piv):
            v[c] = -r[f] % p
        basis.append(v)
    return span(p, n, basis)


@lru_cache(maxsize=1 << 18)
def join(A: Subspace, B: Subspace) -> Subspace:
    _check_ambient(A, B)
    if not A.rows:
        return B
    if not B.rows:
        return A
    return Subspace(A.p, A.n, rref(A.rows + B.rows, A.p, A.n))


@lru_cache(maxsize=1 << 18)
def meet(A: Subspace, B: Subspace) -> Subspace:
    _check_ambient(A, B)
    if A == B:
        return A
    return annihilator(join(annihilator(A), annihilator(B)))


@lru_cache(maxsize=1 << 18)
def incident(A: Subspace, B: Subspace) -> bool:
    """True when A is contained in B."""
    _check_ambient(A, B)
    return all(B.contains_vector(r) for r in A.rows)


def normalized_vectors(p: int, n: int) -> list[tuple[int, ...]]:
    """Nonzero vectors whose first nonzero entry is 1, in lexicographic order."""
    return [v for v in itertools.product(range(p), repeat=n) if any(v) and v[next(i for i, c in enumerate(v) if c)] == 1]


def normalize(v: Sequence[int], p: int) -> tuple[int, ...]:
    lead = next(c for c in v if c % p)
    s = pow(lead, -1, p)
    return tuple(c * s % p for c in v)


@dataclass(frozen=True)
class ProjectiveSpace:
    """PG(n-1, p): the lattice of subspaces of GF(p)^n, n >= 3."""

    p: int
    n: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.n < 3:
            raise ValueError("projective dimension must be at least two (n >= 3)")

    def point(self, v: Sequence[int]) -> Subspace:
        s = span(self.p, self.n, [v])
        if s.rank != 1:
            raise ValueError(f"{v} is the zero vector")
        return s

    def hyperplane(self, form: Sequence[int]) -> Subspace:
        """Kernel of the linear form with the given coefficients."""
        return annihilator(self.point(form))

    def points(self) -> list[Subspace]:
        return points_of(self)

    def hyperplanes(self) -> list[Subspace]:
        return hyperplanes_of(self)

    def lines(self) -> list[Subspace]:
        return _lines(self.p, self.n)


@lru_cache(maxsize=None)
def _points(p: int, n: int) -> tuple[Subspace, ...]:
    return tuple(Subspace(p, n, (v,)) for v in normalized_vectors(p, n))


@lru_cache(maxsize=None)
def _hyperplanes(p: int, n: int) -> tuple[Subspace, ...]:
    return tuple(annihilator(pt) for pt in _points(p, n))


@lru_cache(maxsize=None)
def _lines(p: int, n: int) -> tuple[Subspace, ...]:
    pts = _points(p, n)
    return tuple(sorted({join(x, y) for x, y in itertools.combinations(pts, 2)}, key=lambda s: s.rows))


def points_of(space: ProjectiveSpace) -> list[Subspace]:
    """Rank-1 subspaces, ordered lexicographically by normalized coordinates."""
    return list(_points(space.p, space.n))


def hyperplanes_of(space: ProjectiveSpace) -> list[Subspace]:
    """Rank n-1 subspaces, ordered lexicographically by their normalized defining form."""
    return list(_hyperplanes(space.p, space.n))


def normal_form(H: Subspace) -> tuple[int, ...]:
    """Normalized linear form whose kernel is the hyperplane H."""
    if H.rank != H.n - 1:
        raise ValueError("not a hyperplane")
    return annihilator(H).rows[0]


@lru_cache(maxsize=None)
def all_subspaces(p: int, n: int) -> tuple[Subspace, ...]:
    """Every subspace of GF(p)^n, sorted by (rank, rows)."""
    found = {zero(p, n)}
    frontier = [zero(p, n)]
    pts = _points(p, n)
    while frontier:
        nxt = []
        for S in frontier:
            for pt in pts:
                T = join(S, pt)
                if T not in found:
                    found.add(T)
                    nxt.append(T)
        frontier = nxt
    return tuple(sorted(found, key=lambda s: (s.rank, s.rows)))


def dim_formula_holds(A: Subspace, B: Subspace) -> bool:
    return A.rank + B.rank == join(A, B).rank + meet(A, B).rank


class IndexedLattice:
    """All subspaces of GF(p)^n with precomputed join/meet tables.

    ``join`` and ``meet`` accept integer indices or numpy index arrays, so
    lattice expressions written against them evaluate many instances at
    once.
    """

    def __init__(self, p: int, n: int):
        import numpy as np

        self.p, self.n = p, n
        self.subspaces = all_subspaces(p, n)
        self.index = {s: i for i, s in enumerate(self.subspaces)}
        k = len(self.subspaces)
        self.J = np.empty((k, k), dtype=np.int64)
        self.M = np.empty((k, k), dtype=np.int64)
        for i, s in enumerate(self.subspaces):
            for j in range(i, k):
                t = self.subspaces[j]
                self.J[i, j] = self.J[j, i] = self.index[join(s, t)]
                self.M[i, j] = self.M[j, i] = self.index[meet(s, t)]
        self.rank = np.array([s.rank for s in self.subspaces], dtype=np.int64)
        self.zero = self.index[zero(p, n)]

    def __len__(self):
        return len(self.subspaces)

    def join(self, a, b):
        return self.J[a, b]

    def meet(self, a, b):
        return self.M[a, b]

    def leq(self, a, b):
        """a contained in b."""
        return self.M[a, b] == a

    def of(self, subs):
        import numpy as np

        return np.array([self.index[s] for s in subs], dtype=np.int64)


@lru_cache(maxsize=8)
def indexed_lattice(p: int, n: int) -> IndexedLattice:
    return IndexedLattice(p, n)
