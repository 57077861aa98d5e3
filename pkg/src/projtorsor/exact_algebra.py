"""Exact scalars: prime fields GF(p), rationals and rational octonions.

Rationals are plain :class:`fractions.Fraction` values. Prime-field
elements are :class:`Mod`, octonions are :class:`Octonion`. The module
level functions (:func:`add`, :func:`mul`, :func:`inv`, ...) refuse to mix
scalar kinds; the operator overloads on the classes are the fast path used
inside the geometry code.

Octonion multiplication is the Cayley-Dickson doubling

    (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c))

applied three times starting from the rationals. The resulting basis table
(row i, column j holds e_i * e_j)::

          e0   e1   e2   e3   e4   e5   e6   e7
    e0 |  e0   e1   e2   e3   e4   e5   e6   e7
    e1 |  e1  -e0   e3  -e2   e5  -e4  -e7   e6
    e2 |  e2  -e3  -e0   e1   e6   e7  -e4  -e5
    e3 |  e3   e2  -e1  -e0   e7  -e6   e5  -e4
    e4 |  e4  -e5  -e6  -e7  -e0   e1   e2   e3
    e5 |  e5   e4  -e7   e6  -e1  -e0  -e3   e2
    e6 |  e6   e7   e4  -e5  -e2   e3  -e0  -e1
    e7 |  e7  -e6   e5   e4  -e3  -e2   e1  -e0

(the table is regenerated from :func:`cayley_dickson_product` at import
time and checked against this text in the test suite).
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union


class KindMismatchError(TypeError):
    """Operands belong to different scalar rings."""


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    if p < 2:
        return False
    for d in range(2, math.isqrt(p) + 1):
        if p % d == 0:
            return False
    return True


class Mod:
    """Element of the prime field GF(p)."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise KindMismatchError(f"GF({self.p}) vs GF({other.p})")
            return other.v
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Mod(-self.v, self.p)

    def inverse(self) -> "Mod":
        if self.v == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return Mod(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        if isinstance(other, int):
            other = Mod(other, self.p)
        return self * other.inverse()

    def __eq__(self, other):
        if isinstance(other, Mod):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return (self.v - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Mod({self.v}, {self.p})"


def cayley_dickson_product(x: Sequence, y: Sequence) -> list:
    """Reference product of two coordinate vectors of length 2**k.

    Slow and recursive; used to build the octonion table and to re-check
    counterexamples along an independent route.
    """
    n = len(x)
    if n == 1:
        return [x[0] * y[0]]
    h = n // 2
    a, b = x[:h], x[h:]
    c, d = y[:h], y[h:]
    ac = cayley_dickson_product(a, c)
    db = cayley_dickson_product(_cd_conj(d), b)
    da = cayley_dickson_product(d, a)
    bc = cayley_dickson_product(b, _cd_conj(c))
    return [s - t for s, t in zip(ac, db)] + [s + t for s, t in zip(da, bc)]


def _cd_conj(x: Sequence) -> list:
    return [x[0]] + [-t for t in x[1:]]


def _basis_table():
    table = {}
    for i in range(8):
        for j in range(8):
            ei = [0] * 8
            ej = [0] * 8
            ei[i] = 1
            ej[j] = 1
            prod = cayley_dickson_product(ei, ej)
            (k,) = [k for k in range(8) if prod[k]]
            table[i, j] = (k, prod[k])
    return table


OCTONION_TABLE = _basis_table()

# per output coordinate: the (i, j, sign) terms contributing to it
_PRODUCT_TERMS = tuple(
    tuple((i, j, s) for (i, j), (k2, s) in sorted(OCTONION_TABLE.items()) if k2 == k)
    for k in range(8)
)


class Octonion:
    """Octonion with rational coordinates over the basis e0..e7.

    Stored as eight integer numerators over one positive common
    denominator, kept in lowest terms.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, coords: Sequence = (0,) * 8, den: int = 1):
        if len(coords) != 8:
            raise ValueError("an octonion needs 8 coordinates")
        if den != 1 or not all(isinstance(c, int) for c in coords):
            fr = [Fraction(c) / den for c in coords]
            den = math.lcm(*(f.denominator for f in fr))
            coords = [int(f * den) for f in fr]
        self._set(tuple(coords), den)

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj._set(num, den)
        return obj

    def _set(self, num, den):
        if den < 0:
            num = tuple(-c for c in num)
            den = -den
        g = math.gcd(den, *num)
        if g > 1:
            num = tuple(c // g for c in num)
            den //= g
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def unit(cls, i: int) -> "Octonion":
        c = [0] * 8
        c[i] = 1
        return cls(c)

    @classmethod
    def real(cls, r) -> "Octonion":
        return cls([r] + [0] * 7)

    @property
    def coords(self) -> tuple:
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_real(self) -> bool:
        return not any(self.num[1:])

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Octonion.real(other)
        if not isinstance(other, Octonion):
            return NotImplemented
        d1, d2 = self.den, other.den
        if d1 == d2:
            return Octonion._raw(tuple(a + b for a, b in zip(self.num, other.num)), d1)
        return Octonion._raw(
            tuple(a * d2 + b * d1 for a, b in zip(self.num, other.num)), d1 * d2
        )

    __radd__ = __add__

    def __neg__(self):
        return Octonion._raw(tuple(-a for a in self.num), self.den)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Octonion.real(other)
        if not isinstance(other, Octonion):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Octonion._raw(tuple(a * other for a in self.num), self.den)
        if isinstance(other, Fraction):
            return Octonion._raw(
                tuple(a * other.numerator for a in self.num), self.den * other.denominator
            )
        if not isinstance(other, Octonion):
            return NotImplemented
        a, b = self.num, other.num
        out = tuple(sum(s * a[i] * b[j] for i, j, s in terms) for terms in _PRODUCT_TERMS)
        return Octonion._raw(out, self.den * other.den)

    def __rmul__(self, other):
        # scalars from int/Fraction are central
        return self.__mul__(other)

    def conj(self) -> "Octonion":
        n = self.num
        return Octonion._raw((n[0],) + tuple(-c for c in n[1:]), self.den)

    def norm(self) -> Fraction:
        return Fraction(sum(c * c for c in self.num), self.den * self.den)

    def inverse(self) -> "Octonion":
        nsq = sum(c * c for c in self.num)
        if nsq == 0:
            raise ZeroDivisionError("zero octonion has no inverse")
        # conj(x)/N(x) = conj(num)/den / (nsq/den^2) = conj(num)*den / nsq
        n = self.num
        return Octonion._raw(
            (n[0] * self.den,) + tuple(-c * self.den for c in n[1:]), nsq
        )

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Octonion.real(other)
        if not isinstance(other, Octonion):
            return NotImplemented
        return self.den == other.den and self.num == other.num

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return any(self.num)

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coords):
            if c:
                terms.append(f"{c}*e{i}")
        return "Octonion(" + (" + ".join(terms) or "0") + ")"


Scalar = Union[Mod, Fraction, Octonion]


@dataclass(frozen=True)
class ScalarKind:
    """Which ring a scalar lives in: ``"gf"`` (with p), ``"rational"`` or ``"octonion"``."""

    name: str
    p: int | None = None

    def __post_init__(self):
        if self.name not in ("gf", "rational", "octonion"):
            raise ValueError(f"unknown scalar kind {self.name!r}")
        if self.name == "gf" and (self.p is None or not is_prime(self.p)):
            raise ValueError(f"GF kind needs a prime modulus, got {self.p}")

    @property
    def commutative(self) -> bool:
        return self.name != "octonion"

    def zero(self) -> Scalar:
        return self.coerce(0)

    def one(self) -> Scalar:
        return self.coerce(1)

    def coerce(self, value) -> Scalar:
        """Bring an int, Fraction or matching scalar into this ring."""
        if self.name == "gf":
            if isinstance(value, Mod):
                if value.p != self.p:
                    raise KindMismatchError(f"GF({value.p}) value for GF({self.p})")
                return value
            if isinstance(value, Fraction):
                return Mod(value.numerator, self.p) / Mod(value.denominator, self.p)
            return Mod(int(value), self.p)
        if self.name == "rational":
            if isinstance(value, (Mod, Octonion)):
                raise KindMismatchError(f"{value!r} is not rational")
            return Fraction(value)
        if isinstance(value, Octonion):
            return value
        if isinstance(value, Mod):
            raise KindMismatchError(f"{value!r} is not an octonion")
        return Octonion.real(Fraction(value))

    def __str__(self):
        return f"GF({self.p})" if self.name == "gf" else self.name


RATIONAL = ScalarKind("rational")
OCTONION = ScalarKind("octonion")


def GF(p: int) -> ScalarKind:
    return ScalarKind("gf", p)


def kind_of(a) -> ScalarKind:
    if isinstance(a, Mod):
        return ScalarKind("gf", a.p)
    if isinstance(a, Octonion):
        return OCTONION
    if isinstance(a, (Fraction, int)):
        return RATIONAL
    raise TypeError(f"not a scalar: {a!r}")


def _same_kind(a, b) -> ScalarKind:
    ka, kb = kind_of(a), kind_of(b)
    if ka != kb:
        raise KindMismatchError(f"{ka} vs {kb}")
    return ka


def add(a: Scalar, b: Scalar) -> Scalar:
    _same_kind(a, b)
    return a + b


def sub(a: Scalar, b: Scalar) -> Scalar:
    _same_kind(a, b)
    return a - b


def mul(a: Scalar, b: Scalar) -> Scalar:
    _same_kind(a, b)
    return a * b


def inv(a: Scalar) -> Scalar:
    if isinstance(a, (Mod, Octonion)):
        return a.inverse()
    if a == 0:
        raise ZeroDivisionError("0 has no inverse")
    return 1 / Fraction(a)


def conj(a: Scalar) -> Scalar:
    if isinstance(a, Octonion):
        return a.conj()
    kind_of(a)
    return a


def norm(a: Scalar):
    """a * conj(a); a nonnegative Fraction for rationals and octonions."""
    if isinstance(a, Octonion):
        return a.norm()
    kind_of(a)
    return a * a


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.choice((1, 2, 3)))


def random_octonion(rng: random.Random, nonzero: bool = True) -> Octonion:
    """Coordinates n/d with n in [-9, 9], d in {1, 2, 3}; resampled on zero."""
    while True:
        o = Octonion([random_rational(rng) for _ in range(8)])
        if o or not nonzero:
            return o


def random_scalar(kind: ScalarKind, rng: random.Random, nonzero: bool = False) -> Scalar:
    while True:
        if kind.name == "gf":
            s = Mod(rng.randrange(kind.p), kind.p)
        elif kind.name == "rational":
            s = random_rational(rng)
        else:
            s = random_octonion(rng, nonzero=False)
        if s or not nonzero:
            return s


def associator(a: Scalar, b: Scalar, c: Scalar) -> Scalar:
    return (a * b) * c - a * (b * c)
