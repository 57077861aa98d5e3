"""Identity checkers for torsors, ternary Moufang loops and Moufang loops.

Structures come in two flavours:

* :class:`TernaryTable` / :class:`TableLoop`: finite, numpy-backed, checked
  exhaustively whenever the search space allows;
* :class:`SampledCarrier` / :class:`Loop`: infinite carriers (octonion
  charts, the octonion unit loop) checked on seeded random samples.

Every identity is written once as a pair of functions of an ``ops`` object
(``t`` ternary, ``mul``, ``inv``, ``e``) and is evaluated by both
backends. Every reported counterexample is re-evaluated along a scalar
path before it is accepted.
"""
from __future__ import annotations

import itertools
import operator
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Sequence

import numpy as np

from .exact_algebra import Octonion, random_octonion
from .scenario_io import encode_scalar

EXHAUSTIVE_LIMIT = 10 ** 7
DEFAULT_TRIALS = 10 ** 4


# -- reports ------------------------------------------------------------------


@dataclass
class CheckReport:
    law: str
    mode: str
    trials: int
    failures: list = field(default_factory=list)
    seed: Optional[int] = None
    expected: str = "pass"

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def witness(self):
        return self.failures[0] if self.failures else None

    @property
    def as_expected(self) -> bool:
        return self.passed == (self.expected == "pass")

    def to_dict(self) -> dict:
        return {
            "law": self.law,
            "mode": self.mode,
            "trials": self.trials,
            "passed": self.passed,
            "expected": self.expected,
            "failures": self.failures,
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CheckReport":
        return cls(d["law"], d["mode"], d["trials"], list(d["failures"]), d.get("seed"),
                   d.get("expected", "pass"))

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.law:<28s} {status} ({self.mode}, {self.trials} trials)"


def merge_reports(law: str, reports: Sequence[CheckReport]) -> CheckReport:
    """Combine sub-reports; failures keep the order of ``reports``."""
    modes = {r.mode for r in reports}
    out = CheckReport(law, modes.pop() if len(modes) == 1 else "mixed",
                      max((r.trials for r in reports), default=0),
                      seed=reports[0].seed if reports else None)
    for r in reports:
        out.failures.extend(r.failures)
    return out


# -- identities ---------------------------------------------------------------


@dataclass(frozen=True)
class Identity:
    name: str
    variables: str
    lhs: Callable
    rhs: Callable
    needs: str = "t"  # "t" ternary only, "loop" binary only, "both"

    @property
    def arity(self) -> int:
        return len(self.variables)


def _I(name, variables, lhs, rhs, needs="t"):
    return Identity(name, variables, lhs, rhs, needs)


T0_IDS = (
    _I("T0 (xxy)=y", "xy", lambda o, x, y: o.t(x, x, y), lambda o, x, y: y),
    _I("T0 (yxx)=y", "xy", lambda o, x, y: o.t(y, x, x), lambda o, x, y: y),
)
T1_IDS = (
    _I("T1 (xy(zuv))=(x(uzy)v)", "xyzuv",
       lambda o, x, y, z, u, v: o.t(x, y, o.t(z, u, v)),
       lambda o, x, y, z, u, v: o.t(x, o.t(u, z, y), v)),
    _I("T1 (x(uzy)v)=((xyz)uv)", "xyzuv",
       lambda o, x, y, z, u, v: o.t(x, o.t(u, z, y), v),
       lambda o, x, y, z, u, v: o.t(o.t(x, y, z), u, v)),
)
MT1 = _I("MT1 (uv(xyx))=((uvx)yx)", "uvxy",
         lambda o, u, v, x, y: o.t(u, v, o.t(x, y, x)),
         lambda o, u, v, x, y: o.t(o.t(u, v, x), y, x))
MT2 = _I("MT2 (xy(xyz))=((xyx)yz)", "xyz",
         lambda o, x, y, z: o.t(x, y, o.t(x, y, z)),
         lambda o, x, y, z: o.t(o.t(x, y, x), y, z))
MT_IDS = T0_IDS + (MT1, MT2)

MOUFANG_IDS = (
    _I("M1 z(x(zy))=((zx)z)y", "xyz",
       lambda o, x, y, z: o.mul(z, o.mul(x, o.mul(z, y))),
       lambda o, x, y, z: o.mul(o.mul(o.mul(z, x), z), y), "loop"),
    _I("M2 x(z(yz))=((xz)y)z", "xyz",
       lambda o, x, y, z: o.mul(x, o.mul(z, o.mul(y, z))),
       lambda o, x, y, z: o.mul(o.mul(o.mul(x, z), y), z), "loop"),
    _I("N1 (zx)(yz)=(z(xy))z", "xyz",
       lambda o, x, y, z: o.mul(o.mul(z, x), o.mul(y, z)),
       lambda o, x, y, z: o.mul(o.mul(z, o.mul(x, y)), z), "loop"),
    _I("N2 (zx)(yz)=z((xy)z)", "xyz",
       lambda o, x, y, z: o.mul(o.mul(z, x), o.mul(y, z)),
       lambda o, x, y, z: o.mul(z, o.mul(o.mul(x, y), z)), "loop"),
    _I("LIP x^-1(xy)=y", "xy",
       lambda o, x, y: o.mul(o.inv(x), o.mul(x, y)), lambda o, x, y: y, "loop"),
    _I("RIP (xy)y^-1=x", "xy",
       lambda o, x, y: o.mul(o.mul(x, y), o.inv(y)), lambda o, x, y: x, "loop"),
    _I("right Bol ((xy)z)y=x((yz)y)", "xyz",
       lambda o, x, y, z: o.mul(o.mul(o.mul(x, y), z), y),
       lambda o, x, y, z: o.mul(x, o.mul(o.mul(y, z), y)), "loop"),
    _I("left alternative (xx)y=x(xy)", "xy",
       lambda o, x, y: o.mul(o.mul(x, x), y), lambda o, x, y: o.mul(x, o.mul(x, y)), "loop"),
    _I("left neutral ex=x", "x", lambda o, x: o.mul(o.e, x), lambda o, x: x, "loop"),
    _I("right neutral xe=x", "x", lambda o, x: o.mul(x, o.e), lambda o, x: x, "loop"),
    _I("right inverse xx^-1=e", "x", lambda o, x: o.mul(x, o.inv(x)), lambda o, x: o.e, "loop"),
    _I("left inverse x^-1x=e", "x", lambda o, x: o.mul(o.inv(x), x), lambda o, x: o.e, "loop"),
)

# the chain of auxiliary identities linking (xyz) with x.y=(xey), x^-1=(exe)
AUXILIARY_IDS = (
    _I("aux x.y^-1=(xye)", "xy",
       lambda o, x, y: o.mul(x, o.inv(y)), lambda o, x, y: o.t(x, y, o.e), "both"),
    _I("aux (x.y^-1).z^-1=(xyz^-1)", "xyz",
       lambda o, x, y, z: o.mul(o.mul(x, o.inv(y)), o.inv(z)),
       lambda o, x, y, z: o.t(x, y, o.inv(z)), "both"),
    _I("aux (x^-1)^-1.x^-1=e", "x",
       lambda o, x: o.mul(o.inv(o.inv(x)), o.inv(x)), lambda o, x: o.e, "both"),
    _I("aux ((x^-1)^-1 x y^-1)=y^-1", "xy",
       lambda o, x, y: o.t(o.inv(o.inv(x)), x, o.inv(y)),
       lambda o, x, y: o.inv(y), "both"),
    _I("aux (xy(y^-1)^-1)=x", "xy",
       lambda o, x, y: o.t(x, y, o.inv(o.inv(y))), lambda o, x, y: x, "both"),
    _I("aux (x^-1)^-1=x", "x", lambda o, x: o.inv(o.inv(x)), lambda o, x: x, "both"),
    _I("aux e^-1=e", "x", lambda o, x: o.inv(o.e), lambda o, x: o.e, "both"),
    _I("aux (x.y^-1).z=(xyz)", "xyz",
       lambda o, x, y, z: o.mul(o.mul(x, o.inv(y)), z), lambda o, x, y, z: o.t(x, y, z), "both"),
)

EXTRA_IDS = {
    "assoc": _I("associativity (xy)z=x(yz)", "xyz",
                lambda o, x, y, z: o.mul(o.mul(x, y), z),
                lambda o, x, y, z: o.mul(x, o.mul(y, z)), "loop"),
    "comm": _I("commutativity xy=yx", "xy",
               lambda o, x, y: o.mul(x, y), lambda o, x, y: o.mul(y, x), "loop"),
}


# -- structures ---------------------------------------------------------------


class TernaryTable:
    """Finite set {0..N-1} with a ternary operation given as an N x N x N array."""

    finite = True

    def __init__(self, table, labels: Optional[Sequence] = None, name: str = "table"):
        table = np.asarray(table, dtype=np.int64)
        N = table.shape[0]
        if table.shape != (N, N, N):
            raise ValueError("ternary table must be N x N x N")
        if table.min(initial=0) < 0 or table.max(initial=0) >= N:
            raise ValueError("table is not closed")
        self.table = table
        self.labels = list(labels) if labels is not None else list(range(N))
        self.name = name

    @property
    def N(self) -> int:
        return self.table.shape[0]

    def t(self, x, y, z):
        return self.table[x, y, z]

    op = t

    @classmethod
    def from_function(cls, elements: Sequence, op: Callable, name: str = "table") -> "TernaryTable":
        pos = {e: i for i, e in enumerate(elements)}
        N = len(elements)
        T = np.empty((N, N, N), dtype=np.int64)
        for i, x in enumerate(elements):
            for j, y in enumerate(elements):
                for k, z in enumerate(elements):
                    w = op(x, y, z)
                    if w not in pos:
                        raise ValueError(f"({x} {y} {z}) = {w} leaves the carrier")
                    T[i, j, k] = pos[w]
        return cls(T, elements, name)

    @classmethod
    def cyclic(cls, n: int) -> "TernaryTable":
        """Z/n with (xyz) = x - y + z."""
        i = np.arange(n)
        return cls((i[:, None, None] - i[None, :, None] + i[None, None, :]) % n, name=f"Z/{n}")

    def label(self, i):
        return self.labels[int(i)]


@dataclass
class SampledCarrier:
    """An infinite ternary structure known through a sampler and an evaluator.

    ``reference_op`` (optional) recomputes the operation along an
    independent path and is used to re-validate counterexamples.
    ``structured`` lists distinguished elements tried before random ones
    when hunting for a counterexample.
    """

    name: str
    sample: Callable[[random.Random], Any]
    op: Callable
    reference_op: Optional[Callable] = None
    structured: Sequence = ()
    encode: Callable = repr

    finite = False

    def t(self, x, y, z):
        return self.op(x, y, z)


class TableLoop:
    """Finite loop from an N x N multiplication table and an inverse vector."""

    finite = True

    def __init__(self, M, I, e: int, ternary: Optional[TernaryTable] = None, labels=None, name="loop"):
        self.M = np.asarray(M, dtype=np.int64)
        self.I = np.asarray(I, dtype=np.int64)
        self.e = int(e)
        self.ternary = ternary
        self.labels = list(labels) if labels is not None else list(range(len(self.I)))
        self.name = name

    @property
    def N(self) -> int:
        return len(self.I)

    def mul(self, x, y):
        return self.M[x, y]

    def inv(self, x):
        return self.I[x]

    def t(self, x, y, z):
        if self.ternary is None:
            raise TypeError("this loop carries no ternary structure")
        return self.ternary.t(x, y, z)

    def label(self, i):
        return self.labels[int(i)]

    @classmethod
    def from_group_table(cls, M, name="group") -> "TableLoop":
        M = np.asarray(M, dtype=np.int64)
        N = M.shape[0]
        e = next(i for i in range(N) if (M[i] == np.arange(N)).all())
        I = np.array([next(j for j in range(N) if M[i, j] == e) for i in range(N)])
        return cls(M, I, e, name=name)


@dataclass
class Loop:
    """A loop given by callables, with a sampler for randomized checks."""

    name: str
    mul: Callable
    inv: Callable
    e: Any
    sample: Callable[[random.Random], Any]
    ternary: Optional[SampledCarrier] = None
    structured: Sequence = ()
    encode: Callable = repr
    reference_mul: Optional[Callable] = None

    finite = False

    def t(self, x, y, z):
        if self.ternary is None:
            raise TypeError("this loop carries no ternary structure")
        return self.ternary.op(x, y, z)


def octonion_unit_loop() -> Loop:
    """Nonzero rational octonions under multiplication."""
    return Loop(
        "octonion unit loop",
        mul=operator.mul,
        inv=Octonion.inverse,
        e=Octonion.real(1),
        sample=lambda rng: random_octonion(rng),
        structured=[Octonion.unit(i) for i in range(8)],
        encode=encode_scalar,
    )


# -- constructions --------------------------------------------------------------


def binary_from_ternary(s, e):
    """Loop x.y = (x e y), x^-1 = (e x e) with neutral element e."""
    if isinstance(s, TernaryTable):
        if not 0 <= int(e) < s.N:
            raise ValueError(f"origin {e} is not in the carrier")
        e = int(e)
        M = s.table[:, e, :].copy()
        I = s.table[e, np.arange(s.N), e].copy()
        return TableLoop(M, I, e, ternary=s, labels=s.labels, name=f"{s.name} @ {s.label(e)}")
    return Loop(
        f"{s.name} @ origin",
        mul=lambda x, y: s.op(x, e, y),
        inv=lambda x: s.op(e, x, e),
        e=e,
        sample=s.sample,
        ternary=s,
        structured=s.structured,
        encode=s.encode,
        reference_mul=(lambda x, y: s.reference_op(x, e, y)) if s.reference_op else None,
    )


def isotope_product(s, y):
    """x o z = (x y z): the loop with origin y."""
    return binary_from_ternary(s, y)


def ternary_from_binary(loop):
    """(xyz) = (x y^-1) z."""
    if isinstance(loop, TableLoop):
        N = loop.N
        i = np.arange(N)
        T = loop.M[loop.M[i[:, None], loop.I[None, :]][:, :, None], i[None, None, :]]
        return TernaryTable(T, loop.labels, name=f"ternary({loop.name})")
    ref = None
    if loop.reference_mul is not None:
        rm = loop.reference_mul
        ref = lambda x, y, z: rm(rm(x, loop.inv(y)), z)
    return SampledCarrier(
        f"ternary({loop.name})",
        sample=loop.sample,
        op=lambda x, y, z: loop.mul(loop.mul(x, loop.inv(y)), z),
        reference_op=ref,
        structured=loop.structured,
        encode=loop.encode,
    )


# -- evaluation engine ------------------------------------------------------------


class _Ops:
    def __init__(self, s, e=None):
        self.s = s
        self.e = getattr(s, "e", e) if e is None else e

    def t(self, x, y, z):
        return self.s.t(x, y, z)

    def mul(self, x, y):
        return self.s.mul(x, y)

    def inv(self, x):
        return self.s.inv(x)


class _ScalarTableOps(_Ops):
    """Pure-Python evaluation on a table, used to re-check witnesses."""

    def t(self, x, y, z):
        T = self.s.table if isinstance(self.s, TernaryTable) else self.s.ternary.table
        return int(T.item(int(x), int(y), int(z)))

    def mul(self, x, y):
        return int(self.s.M.item(int(x), int(y)))

    def inv(self, x):
        return int(self.s.I.item(int(x)))


class _ReferenceOps(_Ops):
    """Evaluate with the structure's reference operation, when it has one."""

    def t(self, x, y, z):
        s = self.s
        op = getattr(s, "reference_op", None)
        if op is None and getattr(s, "ternary", None) is not None:
            op = s.ternary.reference_op or s.ternary.op
        if op is None:
            op = s.t
        return op(x, y, z)

    def mul(self, x, y):
        rm = getattr(self.s, "reference_mul", None)
        return (rm or self.s.mul)(x, y)


def _encode(s, x):
    if getattr(s, "finite", False):
        return s.label(x) if hasattr(s, "label") else int(x)
    return s.encode(x)


def _witness(s, ident: Identity, args, lhs, rhs) -> dict:
    return {
        "identity": ident.name,
        "args": {v: _jsonable(_encode(s, a)) for v, a in zip(ident.variables, args)},
        "lhs": _jsonable(_encode(s, lhs)),
        "rhs": _jsonable(_encode(s, rhs)),
    }


def _jsonable(v):
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, tuple):
        return [_jsonable(c) for c in v]
    if isinstance(v, list):
        return [_jsonable(c) for c in v]
    if hasattr(v, "to_json"):
        return v.to_json()
    return v


def revalidate(s, ident: Identity, args, e=None) -> bool:
    """True when the identity genuinely fails at ``args`` (independent recomputation)."""
    if getattr(s, "finite", False):
        o = _ScalarTableOps(s, e)
    else:
        o = _ReferenceOps(s, e)
    args = [int(a) for a in args] if getattr(s, "finite", False) else list(args)
    return ident.lhs(o, *args) != ident.rhs(o, *args)


def _check_table(s, ident: Identity, max_failures: int, mode: str, trials: int,
                 rng: Optional[np.random.Generator], e=None) -> tuple[int, list]:
    N = s.N
    o = _Ops(s, e)
    if mode == "exhaustive":
        grids = np.indices((N,) * ident.arity, sparse=True)
        count = N ** ident.arity
    else:
        grids = [rng.integers(0, N, size=trials) for _ in range(ident.arity)]
        count = trials
    shape = np.broadcast_shapes(*(g.shape for g in grids))
    lhs = np.broadcast_to(ident.lhs(o, *grids), shape)
    rhs = np.broadcast_to(ident.rhs(o, *grids), shape)
    bad = np.argwhere(lhs != rhs)
    failures = []
    for pos in bad[:max_failures]:
        pos = tuple(pos)
        args = [int(np.broadcast_to(g, shape)[pos]) for g in grids]
        if not revalidate(s, ident, args, e):
            raise RuntimeError(f"witness for {ident.name} did not re-validate: {args}")
        failures.append(_witness(s, ident, args, lhs[pos], rhs[pos]))
    return count, failures


def _check_sampled(s, ident: Identity, trials: int, rng: random.Random, max_failures: int,
                   e=None, structured_first: bool = False, structured_limit: int = 0):
    o = _Ops(s, e)
    failures = []

    def candidates():
        if structured_first and s.structured:
            for args in itertools.islice(itertools.product(s.structured, repeat=ident.arity),
                                         structured_limit):
                yield list(args)
        while True:
            yield [s.sample(rng) for _ in range(ident.arity)]

    done = 0
    for args in itertools.islice(candidates(), trials):
        done += 1
        lhs = ident.lhs(o, *args)
        rhs = ident.rhs(o, *args)
        if lhs != rhs:
            if not revalidate(s, ident, args, e):
                raise RuntimeError(f"witness for {ident.name} did not re-validate")
            failures.append(_witness(s, ident, args, lhs, rhs))
            if len(failures) >= max_failures:
                break
    return done, failures


def check_identity(s, ident: Identity, trials: int = DEFAULT_TRIALS, seed: int = 0,
                   mode: str = "auto", max_failures: int = 1, e=None,
                   structured_first: bool = False, structured_limit: int = 4096,
                   expected: str = "pass") -> CheckReport:
    """Check one identity on a finite table or a sampled carrier."""
    if getattr(s, "finite", False):
        small = s.N ** 5 <= EXHAUSTIVE_LIMIT or s.N ** ident.arity <= EXHAUSTIVE_LIMIT
        if mode == "auto":
            mode = "exhaustive" if small else "sampled"
        elif mode == "sampled" and s.N ** 5 <= EXHAUSTIVE_LIMIT:
            raise ValueError(f"table of size {s.N} must be checked exhaustively")
        rng = np.random.default_rng(seed) if mode == "sampled" else None
        count, failures = _check_table(s, ident, max_failures, mode, trials, rng, e)
        return CheckReport(ident.name, mode, count, failures,
                           seed if mode == "sampled" else None, expected)
    if mode == "exhaustive":
        raise ValueError("infinite carriers can only be sampled")
    rng = random.Random(seed)
    count, failures = _check_sampled(s, ident, trials, rng, max_failures, e,
                                     structured_first, structured_limit)
    return CheckReport(ident.name, "sampled", count, failures, seed, expected)


def _bundle(law, s, idents, trials, seed, **kw) -> CheckReport:
    reports = [check_identity(s, ident, trials, seed + k, **kw) for k, ident in enumerate(idents)]
    out = merge_reports(law, reports)
    out.seed = None if out.mode == "exhaustive" else seed
    out.expected = kw.get("expected", "pass")
    return out


def check_T0(s, trials: int = DEFAULT_TRIALS, seed: int = 0, **kw) -> CheckReport:
    return _bundle("T0", s, T0_IDS, trials, seed, **kw)


def check_T1(s, trials: int = DEFAULT_TRIALS, seed: int = 0, **kw) -> CheckReport:
    return _bundle("T1", s, T1_IDS, trials, seed, **kw)


def check_MT(s, trials: int = DEFAULT_TRIALS, seed: int = 0, **kw) -> CheckReport:
    """MT0 (= T0), MT1 and MT2 together."""
    return _bundle("MT", s, MT_IDS, trials, seed, **kw)


def check_binary_identities(loop, trials: int = DEFAULT_TRIALS, seed: int = 0,
                            auxiliary: bool = True, **kw) -> dict[str, CheckReport]:
    """Moufang, inverse-property, Bol and alternative laws of a loop.

    When the loop was built from a ternary structure, the auxiliary
    identities linking the two are checked as well.
    """
    idents = list(MOUFANG_IDS)
    if auxiliary and loop.ternary is not None:
        idents += AUXILIARY_IDS
    return {
        ident.name: check_identity(loop, ident, trials, seed + k, **kw)
        for k, ident in enumerate(idents)
    }


def search_counterexample(s, ident: Identity, trials: int = DEFAULT_TRIALS, seed: int = 0,
                          structured_limit: int = 4096, e=None) -> CheckReport:
    """Hunt for a violation, trying structured elements before random ones."""
    return check_identity(s, ident, trials, seed, structured_first=True,
                          structured_limit=structured_limit, e=e, expected="fail")


# -- round trips ---------------------------------------------------------------


def roundtrip_ternary(s, e=None, trials: int = DEFAULT_TRIALS, seed: int = 0) -> CheckReport:
    """ternary -> binary(e) -> ternary reproduces (xyz).

    Tables are compared in full (every origin when ``e`` is None). On a
    carrier each trial draws x, y, z and, when ``e`` is None, a fresh origin.
    """
    if isinstance(s, TernaryTable):
        origins = range(s.N) if e is None else [int(e)]
        fails = []
        for o in origins:
            back = ternary_from_binary(binary_from_ternary(s, o))
            bad = np.argwhere(back.table != s.table)
            fails += [{"identity": "ternary round trip", "origin": int(o),
                       "args": [int(c) for c in bad[0]]}] if len(bad) else []
        return CheckReport("ternary->binary->ternary", "exhaustive",
                           len(origins) * s.N ** 3, fails[:1])
    rng = random.Random(seed)
    fails = []
    for _ in range(trials):
        o = s.sample(rng) if e is None else e
        back = ternary_from_binary(binary_from_ternary(s, o))
        x, y, z = (s.sample(rng) for _ in range(3))
        got = back.op(x, y, z)
        if got != s.op(x, y, z):
            if s.reference_op is not None and got == s.reference_op(x, y, z):
                raise RuntimeError("round-trip witness did not re-validate")
            fails.append({"identity": "ternary round trip", "origin": s.encode(o),
                          "args": [s.encode(v) for v in (x, y, z)]})
            break
    return CheckReport("ternary->binary->ternary", "sampled", trials, fails, seed)


def roundtrip_binary(loop, trials: int = DEFAULT_TRIALS, seed: int = 0) -> CheckReport:
    """binary -> ternary -> binary(e) reproduces product and inverse."""
    t = ternary_from_binary(loop)
    again = binary_from_ternary(t, loop.e)
    if isinstance(loop, TableLoop):
        fails = []
        if not (again.M == loop.M).all():
            fails.append({"identity": "product round trip"})
        if not (again.I == loop.I).all():
            fails.append({"identity": "inverse round trip"})
        return CheckReport("binary->ternary->binary", "exhaustive", loop.N ** 2, fails)
    rng = random.Random(seed)
    fails = []
    for _ in range(trials):
        x, y = loop.sample(rng), loop.sample(rng)
        if again.mul(x, y) != loop.mul(x, y) or again.inv(x) != loop.inv(x):
            fails.append({"identity": "binary round trip", "args": [loop.encode(x), loop.encode(y)]})
            break
    return CheckReport("binary->ternary->binary", "sampled", trials, fails, seed)


LAW_BUNDLES = {
    "T0": T0_IDS,
    "T1": T1_IDS,
    "MT0": T0_IDS,
    "MT1": (MT1,),
    "MT2": (MT2,),
    "MT": MT_IDS,
    "moufang": MOUFANG_IDS,
    "auxiliary": AUXILIARY_IDS,
    "assoc": (EXTRA_IDS["assoc"],),
    "comm": (EXTRA_IDS["comm"],),
}


def check_law(s, law: str, trials: int = DEFAULT_TRIALS, seed: int = 0, **kw) -> CheckReport:
    """Check a named law bundle (see LAW_BUNDLES)."""
    try:
        idents = LAW_BUNDLES[law]
    except KeyError:
        raise ValueError(f"unknown law {law!r}; known: {sorted(LAW_BUNDLES)}") from None
    return _bundle(law, s, idents, trials, seed, **kw)
