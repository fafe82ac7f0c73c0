"""Exact planar predicates over rational coordinates.

Coordinates are Python ``int`` or :class:`fractions.Fraction`; every
predicate is evaluated exactly.  The segment from ``s`` to ``t`` is
perturbed symbolically by moving ``s`` an infinitesimal distance along
the left normal of ``t - s``; no epsilon is ever stored as a number.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, NamedTuple, Sequence, Union

from .errors import (
    DegenerateInputError,
    InvalidAnchorError,
    InvalidBodyError,
    NoIntersectionError,
)

Rational = Union[int, Fraction]


def rational(value) -> Rational:
    """Coerce ``value`` to an exact rational, collapsing integral fractions to ``int``."""
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        raise TypeError("floating point coordinates are not accepted; use Fraction")
    if isinstance(value, _RationalABC):
        value = Fraction(value)
    elif isinstance(value, str):
        value = Fraction(value)
    else:
        raise TypeError(f"cannot interpret {value!r} as a rational")
    return value.numerator if value.denominator == 1 else value


class Point(NamedTuple):
    x: Rational
    y: Rational

    @classmethod
    def of(cls, x, y) -> "Point":
        return cls(rational(x), rational(y))

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def orient(a: Point, b: Point, c: Point) -> int:
    """Sign of the cross product ``(b - a) x (c - a)``: +1 left turn, -1 right, 0 collinear."""
    return _sign((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]))


@dataclass(frozen=True)
class Anchor:
    """The fixed pair of terminals; ``s`` carries the symbolic perturbation."""

    s: Point
    t: Point

    def __post_init__(self):
        if self.s == self.t:
            raise InvalidAnchorError("s and t must be distinct")

    @classmethod
    def of(cls, s, t) -> "Anchor":
        return cls(Point.of(*s), Point.of(*t))


def orient_perturbed(anchor: Anchor, p: Point) -> int:
    """Side of ``p`` relative to the directed line from the perturbed ``s`` to ``t``.

    Never returns 0.  Raises :class:`DegenerateInputError` when ``p == t``.
    """
    s, t = anchor.s, anchor.t
    ux = t[0] - s[0]
    uy = t[1] - s[1]
    px = p[0] - s[0]
    py = p[1] - s[1]
    base = ux * py - uy * px
    if base:
        return 1 if base > 0 else -1
    # collinear with st: the epsilon coefficient is u.(p - s) - u.u
    tie = ux * px + uy * py - (ux * ux + uy * uy)
    if not tie:
        raise DegenerateInputError(f"point {p} coincides with t")
    return 1 if tie > 0 else -1


def segment_crossing_parity(anchor: Anchor, a: Point, b: Point) -> int:
    """1 iff segment ``ab`` properly crosses the perturbed segment from ``s`` to ``t``."""
    if a == b:
        return 0
    return crossing_given_sides(
        anchor, a, b, orient_perturbed(anchor, a), orient_perturbed(anchor, b)
    )


def crossing_given_sides(anchor: Anchor, a: Point, b: Point, side_a: int, side_b: int) -> int:
    """Segment crossing parity when the perturbed sides of ``a`` and ``b`` are already known."""
    if side_a == side_b:
        return 0
    s, t = anchor.s, anchor.t
    dx = b[0] - a[0]
    dy = b[1] - a[1]
    side_s = dx * (s[1] - a[1]) - dy * (s[0] - a[0])
    if not side_s:
        # coefficient of epsilon: (b - a) . (t - s)
        side_s = dx * (t[0] - s[0]) + dy * (t[1] - s[1])
        if not side_s:
            raise DegenerateInputError(f"segment {a}-{b} passes through s")
    side_t = dx * (t[1] - a[1]) - dy * (t[0] - a[0])
    if not side_t:
        raise DegenerateInputError(f"segment {a}-{b} passes through t")
    return 1 if (side_s > 0) != (side_t > 0) else 0


class Polyline:
    """Ordered chain of points; consecutive points must differ.

    A single point is accepted as the degenerate curve and has parity 0.
    """

    __slots__ = ("points",)

    def __init__(self, points: Iterable[Point]):
        pts = tuple(points)
        if not pts:
            raise ValueError("a polyline needs at least one point")
        for a, b in zip(pts, pts[1:]):
            if a == b:
                raise ValueError(f"repeated consecutive point {a}")
        self.points = pts

    @classmethod
    def collapsed(cls, points: Iterable[Point]) -> "Polyline":
        """Build a polyline, dropping consecutive repeats instead of rejecting them."""
        out: list[Point] = []
        for p in points:
            if not out or out[-1] != p:
                out.append(p)
        return cls(out)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polyline) and self.points == other.points

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        return f"Polyline({list(self.points)!r})"

    def reversed(self) -> "Polyline":
        return Polyline(reversed(self.points))

    def concat(self, other: "Polyline") -> "Polyline":
        if self.points[-1] != other.points[0]:
            raise ValueError("curves do not share an endpoint")
        return Polyline(self.points + other.points[1:])


def polyline_crossing_parity(anchor: Anchor, curve: Polyline | Sequence[Point]) -> int:
    pts = curve.points if isinstance(curve, Polyline) else tuple(curve)
    parity = 0
    for a, b in zip(pts, pts[1:]):
        parity ^= segment_crossing_parity(anchor, a, b)
    return parity


class ConvexBody:
    """Compact convex body given by counterclockwise vertices.

    One vertex is a point, two a segment, three or more a strictly convex
    polygon.  Bodies are closed and immutable.
    """

    __slots__ = ("vertices", "xmin", "ymin", "xmax", "ymax", "is_box", "_halfplanes")

    def __init__(self, vertices: Iterable, *, _trusted: bool = False):
        verts = tuple(v if isinstance(v, Point) else Point.of(*v) for v in vertices)
        if not _trusted:
            _validate_convex(verts)
        self.vertices = verts
        xs = [v.x for v in verts]
        ys = [v.y for v in verts]
        self.xmin, self.xmax = min(xs), max(xs)
        self.ymin, self.ymax = min(ys), max(ys)
        if len(verts) < 3:
            self.is_box = self.xmin == self.xmax or self.ymin == self.ymax
        else:
            self.is_box = len(verts) == 4 and set(verts) == {
                Point(self.xmin, self.ymin),
                Point(self.xmax, self.ymin),
                Point(self.xmax, self.ymax),
                Point(self.xmin, self.ymax),
            }
        self._halfplanes = None

    @classmethod
    def box(cls, xmin, ymin, xmax, ymax) -> "ConvexBody":
        """Closed axis-aligned box; degenerate extents collapse to a segment or a point."""
        xmin, ymin, xmax, ymax = (rational(v) for v in (xmin, ymin, xmax, ymax))
        if xmin > xmax or ymin > ymax:
            raise InvalidBodyError(f"box has negative extent: {xmin} {ymin} {xmax} {ymax}")
        if xmin == xmax and ymin == ymax:
            verts = (Point(xmin, ymin),)
        elif xmin == xmax:
            verts = (Point(xmin, ymin), Point(xmin, ymax))
        elif ymin == ymax:
            verts = (Point(xmin, ymin), Point(xmax, ymin))
        else:
            verts = (Point(xmin, ymin), Point(xmax, ymin), Point(xmax, ymax), Point(xmin, ymax))
        body = cls.__new__(cls)
        body.vertices = verts
        body.xmin, body.ymin, body.xmax, body.ymax = xmin, ymin, xmax, ymax
        body.is_box = True
        body._halfplanes = None
        return body

    @classmethod
    def polygon(cls, vertices: Iterable, *, allow_clockwise: bool = False) -> "ConvexBody":
        verts = [v if isinstance(v, Point) else Point.of(*v) for v in vertices]
        if allow_clockwise and len(verts) >= 3 and _signed_area2(verts) < 0:
            verts.reverse()
        return cls(verts)

    def __eq__(self, other) -> bool:
        return isinstance(other, ConvexBody) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        if self.is_box:
            return f"ConvexBody.box({self.xmin}, {self.ymin}, {self.xmax}, {self.ymax})"
        return f"ConvexBody({[tuple(v) for v in self.vertices]!r})"

    @property
    def bbox(self) -> tuple[Rational, Rational, Rational, Rational]:
        return (self.xmin, self.ymin, self.xmax, self.ymax)

    def halfplanes(self) -> tuple[tuple[Rational, Rational, Rational], ...]:
        """Triples ``(a, b, c)`` with the body equal to ``{p : a*x + b*y + c >= 0}``."""
        if self._halfplanes is None:
            self._halfplanes = tuple(_halfplanes_of(self.vertices))
        return self._halfplanes


def _signed_area2(verts: Sequence[Point]) -> Rational:
    n = len(verts)
    return sum(
        verts[i].x * verts[(i + 1) % n].y - verts[(i + 1) % n].x * verts[i].y
        for i in range(n)
    )


def _validate_convex(verts: Sequence[Point]) -> None:
    n = len(verts)
    if n == 0:
        raise InvalidBodyError("a body needs at least one vertex")
    if n == 2:
        if verts[0] == verts[1]:
            raise InvalidBodyError("segment endpoints coincide")
        return
    if n < 3:
        return
    for i in range(n):
        a, b = verts[i], verts[(i + 1) % n]
        for j in range(n):
            if j == i or j == (i + 1) % n:
                continue
            if orient(a, b, verts[j]) <= 0:
                raise InvalidBodyError(
                    "vertices are not in strictly convex counterclockwise position"
                )


def _halfplanes_of(verts: Sequence[Point]):
    n = len(verts)
    if n == 1:
        (p,) = verts
        return [(1, 0, -p.x), (-1, 0, p.x), (0, 1, -p.y), (0, -1, p.y)]
    if n == 2:
        p, q = verts
        dx, dy = q.x - p.x, q.y - p.y
        a, b = -dy, dx
        c = -(a * p.x + b * p.y)
        return [
            (a, b, c),
            (-a, -b, -c),
            (dx, dy, -(dx * p.x + dy * p.y)),
            (-dx, -dy, dx * q.x + dy * q.y),
        ]
    planes = []
    for i in range(n):
        p, q = verts[i], verts[(i + 1) % n]
        a, b = -(q.y - p.y), q.x - p.x
        planes.append((a, b, -(a * p.x + b * p.y)))
    return planes


def _bbox_overlap(k1: ConvexBody, k2: ConvexBody) -> bool:
    return (
        k1.xmin <= k2.xmax
        and k2.xmin <= k1.xmax
        and k1.ymin <= k2.ymax
        and k2.ymin <= k1.ymax
    )


def _clip(points: list[Point], plane) -> list[Point]:
    a, b, c = plane
    out: list[Point] = []
    n = len(points)
    values = [a * p.x + b * p.y + c for p in points]
    for i in range(n):
        cur, prev = points[i], points[i - 1]
        fc, fp = values[i], values[i - 1]
        if fc >= 0:
            if fp < 0:
                out.append(_cut(prev, cur, fp, fc))
            out.append(cur)
        elif fp >= 0:
            out.append(_cut(prev, cur, fp, fc))
    return out


def _cut(p: Point, q: Point, fp, fq) -> Point:
    t = Fraction(fp) / (fp - fq)
    return Point(rational(p.x + t * (q.x - p.x)), rational(p.y + t * (q.y - p.y)))


def intersection_vertices(k1: ConvexBody, k2: ConvexBody) -> list[Point]:
    """Points whose convex hull is ``k1 & k2``; empty when the bodies are disjoint."""
    if not _bbox_overlap(k1, k2):
        return []
    if len(k1.vertices) < len(k2.vertices):
        k1, k2 = k2, k1
    pts = list(k2.vertices)
    for plane in k1.halfplanes():
        pts = _clip(pts, plane)
        if not pts:
            return []
    return pts


def bodies_intersect(k1: ConvexBody, k2: ConvexBody) -> bool:
    """True iff the closed bodies share a point (touching at a corner counts)."""
    if not _bbox_overlap(k1, k2):
        return False
    if k1.is_box and k2.is_box:
        return True
    return bool(intersection_vertices(k1, k2))


def intersection_witness(k1: ConvexBody, k2: ConvexBody) -> Point:
    """Lexicographically least point of ``k1 & k2``."""
    if k1.is_box and k2.is_box:
        if not _bbox_overlap(k1, k2):
            raise NoIntersectionError("bodies are disjoint")
        return Point(max(k1.xmin, k2.xmin), max(k1.ymin, k2.ymin))
    pts = intersection_vertices(k1, k2)
    if not pts:
        raise NoIntersectionError("bodies are disjoint")
    return min(pts)


def representative_point(k: ConvexBody) -> Point:
    return min(k.vertices)


def contains_point(k: ConvexBody, p: Point) -> bool:
    if not (k.xmin <= p.x <= k.xmax and k.ymin <= p.y <= k.ymax):
        return False
    if k.is_box:
        return True
    return all(a * p.x + b * p.y + c >= 0 for a, b, c in k.halfplanes())


def connector_curve(ku: ConvexBody, kv: ConvexBody) -> Polyline:
    """Two-edge curve from the representative of ``ku`` to that of ``kv`` inside their union."""
    w = intersection_witness(ku, kv)
    return Polyline.collapsed([representative_point(ku), w, representative_point(kv)])
