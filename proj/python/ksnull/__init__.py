"""Python front end for the ksnull core.

Exact values are accepted as ``int``, ``fractions.Fraction`` or ``"p/q"``
strings and returned as ``int`` / ``Fraction``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence, Union

from . import _core
from ._core import BudgetError, KsnullError, NotOnRationalSphere

__version__ = _core.__version__

Exact = Union[int, Fraction, str]

__all__ = [
    "BudgetError",
    "KsnullError",
    "NotOnRationalSphere",
    "approximate_triad",
    "approximate_vector",
    "color",
    "ks_check",
    "nullify",
    "orbit",
    "snap",
    "sphere_point",
    "to_decimal",
]


def _q(v: Exact) -> str:
    if isinstance(v, float):
        raise TypeError("floats are not exact; pass a Fraction or a 'p/q' string")
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return str(v)


def _point(j: dict) -> dict:
    out = {k: int(j[k]) for k in ("x", "y", "z", "n")}
    out["color"] = j["color"]
    return out


def _witness(j: dict) -> dict:
    j = dict(j)
    j["result"] = _point(j["result"])
    j["rotation"] = [[Fraction(e) for e in row] for row in j["rotation"]]
    j["certified_angle_bound"] = Fraction(j["certified_angle_bound"])
    if j.get("equator_parameter") is not None:
        j["equator_parameter"] = Fraction(j["equator_parameter"])
    return j


def sphere_point(x: int, y: int, z: int) -> dict:
    """Primitive triple, norm ``n`` and z-parity color of ``(x, y, z)``."""
    return _point(json.loads(_core.sphere_point(str(x), str(y), str(z))))


def color(x: int, y: int, z: int) -> str:
    """``"yes"`` iff the primitive representative has odd z."""
    return sphere_point(x, y, z)["color"]


def approximate_vector(center: Sequence[Exact], eps: Exact, color: str = "yes", radius: Exact = 0,
                       budget: int = 20000) -> dict:
    c = [_q(v) for v in center]
    return _witness(json.loads(_core.approximate_vector(c, _q(radius), _q(eps), color, budget)))


def approximate_triad(centers: Sequence[Sequence[Exact]], eps: Exact, radius: Exact = 0,
                      budget: int = 20000) -> dict:
    cs = [[_q(v) for v in c] for c in centers]
    j = json.loads(_core.approximate_triad(cs, _q(radius), _q(eps), budget))
    return {"members": [_point(p) for p in j["members"]], "witnesses": [_witness(w) for w in j["witnesses"]]}


def orbit(steps: int, generators: str = "x") -> list:
    return [dict(_point(p), word=p["word"]) for p in json.loads(_core.orbit(steps, generators))]


def ks_check(text: str, mode: str = "triads+pairs", order: str = "most-constrained",
             budget: int = 50_000_000) -> dict:
    return json.loads(_core.ks_check(text, mode, order, budget))


def nullify(text: str, eps: Exact, budget: int = 20000) -> dict:
    return json.loads(_core.nullify(text, _q(eps), budget))


def snap(text: str, eps: Exact, budget: int = 20000) -> str:
    return _core.snap(text, _q(eps), budget)


def to_decimal(value: Exact, digits: int = 12) -> str:
    return _core.to_decimal(_q(value), digits)
