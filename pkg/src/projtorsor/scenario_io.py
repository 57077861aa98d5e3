"""JSON encodings for scalars, chart points, subspaces and reports.

Scalar literals:

* prime field: ``{"gf": p, "val": k}``
* rational: ``"n/d"`` (or ``"n"``)
* octonion: a list of 8 rational strings, coefficients of e0..e7
"""
from __future__ import annotations

import json
from fractions import Fraction

from .exact_algebra import Mod, Octonion, ScalarKind, GF, OCTONION, RATIONAL
from .subspace_lattice import Subspace

SCHEMA = 1


class ScenarioError(ValueError):
    """Malformed scenario or literal."""


def _frac_str(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def encode_scalar(s):
    if isinstance(s, Mod):
        return {"gf": s.p, "val": s.v}
    if isinstance(s, Octonion):
        return [_frac_str(c) for c in s.coords]
    if isinstance(s, (Fraction, int)) and not isinstance(s, bool):
        return _frac_str(Fraction(s))
    if isinstance(s, tuple):
        return [encode_scalar(c) for c in s]
    raise ScenarioError(f"cannot encode {s!r}")


def _parse_fraction(text) -> Fraction:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise ScenarioError(f"bad rational literal {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ScenarioError(f"bad rational literal {text!r}") from exc


def decode_scalar(obj, kind: ScalarKind | None = None):
    """Parse a scalar literal; ``kind`` disambiguates bare integers."""
    if isinstance(obj, dict):
        if set(obj) != {"gf", "val"}:
            raise ScenarioError(f"bad prime-field literal {obj!r}")
        try:
            return Mod(int(obj["val"]), int(obj["gf"]))
        except (TypeError, ValueError) as exc:
            raise ScenarioError(f"bad prime-field literal {obj!r}") from exc
    if isinstance(obj, list):
        if len(obj) != 8:
            raise ScenarioError("octonion literal needs 8 coordinates")
        return Octonion([_parse_fraction(c) for c in obj])
    q = _parse_fraction(obj)
    if kind is not None and kind != RATIONAL:
        return kind.coerce(q)
    return q


def decode_kind(obj) -> ScalarKind:
    """"rational", "octonion" or {"gf": p}."""
    if obj == "rational":
        return RATIONAL
    if obj == "octonion":
        return OCTONION
    if isinstance(obj, dict) and "gf" in obj:
        return GF(int(obj["gf"]))
    raise ScenarioError(f"unknown scalar kind {obj!r}")


def encode_kind(kind: ScalarKind):
    return {"gf": kind.p} if kind.name == "gf" else kind.name


def encode_point(pt):
    return [encode_scalar(c) for c in pt]


def decode_point(obj, kind: ScalarKind):
    if not isinstance(obj, list):
        raise ScenarioError(f"chart point must be a list, got {obj!r}")
    return tuple(kind.coerce(decode_scalar(c, kind)) for c in obj)


def encode_subspace(S: Subspace) -> dict:
    return S.to_json()


def decode_subspace(obj) -> Subspace:
    try:
        return Subspace.from_json(obj)
    except (KeyError, TypeError, ValueError) as exc:
        raise ScenarioError(f"bad subspace {obj!r}: {exc}") from exc


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, separators=(",", ": ")) + "\n"
