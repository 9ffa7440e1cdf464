"""Exact boolean operations on polygons with degenerate intersections.

Polygons are given as a list of contours, each a list of ``(x, y)`` pairs,
or as a dict in the polygon file format (``{"contours": ..., "hand": ...,
"rule": ...}``). Coordinates may be ints, floats, ``Fraction`` or decimal
strings; they are converted to exact rationals.

>>> r = clip([[(0, 0), (2, 0), (2, 2), (0, 2)]], [[(1, 1), (3, 1), (3, 3), (1, 3)]], "intersection")
>>> r.contours[0][0]
((Fraction(1, 1), Fraction(1, 1)), (Fraction(2, 1), Fraction(1, 1)), 'subject')
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Optional, Sequence, Tuple, Union

from . import _fixclip
from ._fixclip import FixclipError, InternalError, InvalidInput, ScopeViolation

__all__ = [
    "clip",
    "intersection",
    "union",
    "difference",
    "verify",
    "flags",
    "render_svg",
    "Result",
    "FixclipError",
    "InvalidInput",
    "ScopeViolation",
    "InternalError",
]

Coordinate = Union[int, float, str, Fraction]
PolygonLike = Union[dict, Sequence[Sequence[Tuple[Coordinate, Coordinate]]]]
Point = Tuple[Fraction, Fraction]
Edge = Tuple[Point, Point, str]


def _coord(v: Coordinate) -> Any:
    if isinstance(v, Fraction):
        return str(v) if v.denominator != 1 else v.numerator
    if isinstance(v, bool):
        raise TypeError("coordinates must be numbers or strings")
    return v


def _polygon_text(p: PolygonLike) -> str:
    if isinstance(p, str):
        return p
    if isinstance(p, dict):
        doc = dict(p)
    else:
        doc = {"contours": p}
    doc["contours"] = [[[_coord(x), _coord(y)] for x, y in contour] for contour in doc["contours"]]
    return json.dumps(doc)


def _point(pair: Sequence[str]) -> Point:
    return Fraction(pair[0]), Fraction(pair[1])


@dataclass(frozen=True)
class Result:
    """Result border: closed contours with the interior on their left."""

    op: str
    contours: List[List[Edge]]
    text: str

    @property
    def empty(self) -> bool:
        return not self.contours

    def rings(self) -> List[List[Point]]:
        return [[e[0] for e in c] for c in self.contours]

    def area(self) -> Fraction:
        total = Fraction(0)
        for ring in self.rings():
            for (x0, y0), (x1, y1) in zip(ring, ring[1:] + ring[:1]):
                total += x0 * y1 - x1 * y0
        return total / 2


def _result(text: str) -> Result:
    doc = json.loads(text)
    contours = [
        [(_point(e["from"]), _point(e["to"]), e["origin"]) for e in c["edges"]] for c in doc["contours"]
    ]
    return Result(doc["op"], contours, text)


def clip(
    clipper: PolygonLike,
    subject: PolygonLike,
    op: str = "intersection",
    *,
    rule: Optional[str] = None,
    simplify: bool = False,
) -> Result:
    """Boolean operation of two polygons. ``difference`` is subject minus clipper."""
    return _result(_fixclip.clip_json(_polygon_text(clipper), _polygon_text(subject), op, rule, simplify))


def intersection(clipper: PolygonLike, subject: PolygonLike, **kw: Any) -> Result:
    return clip(clipper, subject, "intersection", **kw)


def union(clipper: PolygonLike, subject: PolygonLike, **kw: Any) -> Result:
    return clip(clipper, subject, "union", **kw)


def difference(clipper: PolygonLike, subject: PolygonLike, **kw: Any) -> Result:
    return clip(clipper, subject, "difference", **kw)


def verify(
    clipper: PolygonLike,
    subject: PolygonLike,
    result: Result,
    *,
    samples: int = 1000,
    seed: int = 1,
    rule: Optional[str] = None,
) -> List[Point]:
    """Sample points where ``result`` disagrees with the inputs (empty when it agrees)."""
    witnesses = _fixclip.verify_json(
        _polygon_text(clipper), _polygon_text(subject), result.op, result.text, samples, seed, rule
    )
    return [_point(w) for w in witnesses]


def flags(clipper: PolygonLike, subject: PolygonLike, op: str = "intersection", *, rule: Optional[str] = None):
    """``(role, flag, (x, y))`` for every en/ex vertex after marking."""
    return [
        (role, flag, (Fraction(x), Fraction(y)))
        for role, flag, x, y in _fixclip.flags_json(_polygon_text(clipper), _polygon_text(subject), op, rule)
    ]


def render_svg(clipper: PolygonLike, subject: PolygonLike, op: str = "intersection", *, rule: Optional[str] = None) -> str:
    return _fixclip.svg_json(_polygon_text(clipper), _polygon_text(subject), op, rule)
