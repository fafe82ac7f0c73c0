"""Readers for the line-oriented stream and scene formats.

Both formats use ``#`` comments and exact coordinates written as integers
or ``num/den`` fractions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvalidBodyError, InvalidObstacleError, ParseError
from .geometry import Anchor, ConvexBody, Point, contains_point, rational
from .subdivision import (
    AnnulusOracle,
    DiscOracle,
    Oracle,
    PolygonOracle,
    UnionOracle,
)

_NUMBER = re.compile(r"[+-]?[0-9]+(/[0-9]+)?")
DEFAULT_MAX_DEPTH = 10


def parse_rational(token: str, line: int):
    if not _NUMBER.fullmatch(token):
        raise ParseError(line, f"not a rational number: {token!r}")
    try:
        return rational(Fraction(token))
    except ZeroDivisionError:
        raise ParseError(line, f"zero denominator in {token!r}") from None


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].split()
        if content:
            yield lineno, content[0], content[1:]


def _numbers(args, lineno, count=None, *, minimum=None, even=False):
    if count is not None and len(args) != count:
        raise ParseError(lineno, f"expected {count} numbers, got {len(args)}")
    if minimum is not None and len(args) < minimum:
        raise ParseError(lineno, f"expected at least {minimum} numbers, got {len(args)}")
    if even and len(args) % 2:
        raise ParseError(lineno, "odd number of coordinates")
    return [parse_rational(a, lineno) for a in args]


def _polygon(values, lineno, warnings):
    pts = [Point(values[i], values[i + 1]) for i in range(0, len(values), 2)]
    try:
        body = ConvexBody(pts)
    except InvalidBodyError:
        try:
            body = ConvexBody(pts[::-1])
        except InvalidBodyError as exc:
            raise ParseError(lineno, str(exc), kind="nonconvex-poly") from None
        warnings.append(f"line {lineno}: clockwise polygon reversed to counterclockwise")
    return body


def _terminal(keyword, args, lineno, expected):
    if keyword != expected:
        raise ParseError(lineno, f"expected '{expected} <x> <y>', got {keyword!r}")
    x, y = _numbers(args, lineno, 2)
    return Point(x, y)


@dataclass
class Stream:
    anchor: Anchor
    bodies: list[ConvexBody]
    lines: list[int] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)


def parse_stream(text: str) -> Stream:
    """Parse ``s``/``t`` followed by ``box`` and ``poly`` directives."""
    items = list(_lines(text))
    if len(items) < 2:
        last = items[-1][0] if items else 1
        raise ParseError(last, "stream must start with 's' and 't' lines")
    s = _terminal(items[0][1], items[0][2], items[0][0], "s")
    t = _terminal(items[1][1], items[1][2], items[1][0], "t")
    if s == t:
        raise ParseError(items[1][0], "s and t coincide")
    anchor = Anchor(s, t)
    stream = Stream(anchor, [])
    for lineno, keyword, args in items[2:]:
        if keyword == "box":
            x0, y0, x1, y1 = _numbers(args, lineno, 4)
            try:
                body = ConvexBody.box(x0, y0, x1, y1)
            except InvalidBodyError as exc:
                raise ParseError(lineno, str(exc)) from None
        elif keyword == "poly":
            values = _numbers(args, lineno, minimum=6, even=True)
            body = _polygon(values, lineno, stream.warnings)
        else:
            raise ParseError(lineno, f"unknown directive {keyword!r}")
        if contains_point(body, s) or contains_point(body, t):
            raise ParseError(lineno, "body contains s or t", kind="contains-terminal")
        stream.bodies.append(body)
        stream.lines.append(lineno)
    return stream


@dataclass
class Scene:
    anchor: Anchor
    obstacles: list[Oracle]
    max_depth: int = DEFAULT_MAX_DEPTH
    warnings: list[str] = field(default_factory=list)

    def oracle(self) -> Oracle:
        if len(self.obstacles) == 1:
            return self.obstacles[0]
        return UnionOracle(self.obstacles)


def parse_scene(text: str) -> Scene:
    """Parse a subdivision scene: terminals, obstacles and an optional depth limit."""
    s = t = None
    max_depth = DEFAULT_MAX_DEPTH
    obstacles: list[Oracle] = []
    warnings: list[str] = []
    last = 0
    for lineno, keyword, args in _lines(text):
        last = lineno
        try:
            if keyword in ("s", "t"):
                x, y = _numbers(args, lineno, 2)
                if keyword == "s":
                    s = Point(x, y)
                else:
                    t = Point(x, y)
            elif keyword == "disc":
                obstacles.append(DiscOracle(*_numbers(args, lineno, 3)))
            elif keyword == "annulus":
                obstacles.append(AnnulusOracle(*_numbers(args, lineno, 4)))
            elif keyword == "poly":
                values = _numbers(args, lineno, minimum=6, even=True)
                obstacles.append(PolygonOracle(_polygon(values, lineno, warnings)))
            elif keyword == "maxdepth":
                if len(args) != 1 or not re.fullmatch("[0-9]+", args[0]):
                    raise ParseError(lineno, "maxdepth needs one nonnegative integer")
                max_depth = int(args[0])
            else:
                raise ParseError(lineno, f"unknown directive {keyword!r}")
        except InvalidObstacleError as exc:
            raise ParseError(lineno, str(exc), kind="invalid-obstacle") from None
    if s is None or t is None:
        raise ParseError(max(last, 1), "scene needs both 's' and 't'")
    if s == t:
        raise ParseError(max(last, 1), "s and t coincide")
    anchor = Anchor(s, t)
    for ob in obstacles:
        if ob.blocks(s) or ob.blocks(t):
            raise ParseError(max(last, 1), "an obstacle contains s or t", kind="contains-terminal")
    return Scene(anchor, obstacles, max_depth, warnings)


def looks_like_scene(text: str) -> bool:
    return any(k in ("disc", "annulus", "maxdepth") for _, k, _ in _lines(text))

