"""Brute-force ground truth for separation and green-path existence.

The flood fill works on the arrangement induced by the box edges: each
coordinate axis is split into the coordinate lines themselves (even
indices) and the open gaps between them (odd indices).  Every element of
the product grid is then entirely inside or entirely outside the closed
union, and free elements connect through single-index steps.
"""

from __future__ import annotations

import random
from bisect import bisect_left
from typing import Iterable, Sequence

import numpy as np
from scipy import ndimage

from .errors import ContainsTerminalError, UnsupportedBodyError
from .geometry import Anchor, ConvexBody, Point, contains_point
from .parity_uf import UnionFind


def _axis_index(coords: Sequence, value) -> int:
    i = bisect_left(coords, value)
    if i < len(coords) and coords[i] == value:
        return 2 * i
    return 2 * i - 1


def floodfill_separated(
    anchor: Anchor, boxes: Iterable[ConvexBody], extra_lines: Iterable = ()
) -> bool:
    """True iff every path from s to t meets the closed union of ``boxes``.

    ``extra_lines`` adds coordinate lines to both axes; it never changes the
    answer and exists to test that claim.
    """
    boxes = list(boxes)
    for b in boxes:
        if not b.is_box:
            raise UnsupportedBodyError(f"flood fill needs axis-aligned boxes, got {b!r}")
        if contains_point(b, anchor.s) or contains_point(b, anchor.t):
            raise ContainsTerminalError(f"box {b!r} contains a terminal")
    if not boxes:
        return False
    s, t = anchor.s, anchor.t
    extra = list(extra_lines)
    xs = {s.x, t.x, *extra}
    ys = {s.y, t.y, *extra}
    for b in boxes:
        xs.update((b.xmin, b.xmax))
        ys.update((b.ymin, b.ymax))
    xs = sorted(xs)
    ys = sorted(ys)
    # padding lines guarantee a free outer ring
    xs = [xs[0] - 1, *xs, xs[-1] + 1]
    ys = [ys[0] - 1, *ys, ys[-1] + 1]
    xpos = {x: 2 * i for i, x in enumerate(xs)}
    ypos = {y: 2 * i for i, y in enumerate(ys)}
    free = np.ones((2 * len(xs) - 1, 2 * len(ys) - 1), dtype=bool)
    for b in boxes:
        free[xpos[b.xmin] : xpos[b.xmax] + 1, ypos[b.ymin] : ypos[b.ymax] + 1] = False
    labels, _ = ndimage.label(free)
    si = (_axis_index(xs, s.x), _axis_index(ys, s.y))
    ti = (_axis_index(xs, t.x), _axis_index(ys, t.y))
    return bool(labels[si] != labels[ti])


def green_path_exists(green_boxes: Sequence[ConvexBody], s: Point, t: Point) -> bool:
    """True iff some green box holding ``s`` and some holding ``t`` are linked by touching boxes."""
    boxes = list(green_boxes)
    uf = UnionFind()
    for _ in boxes:
        uf.makeset()
    for i, a in enumerate(boxes):
        for j in range(i + 1, len(boxes)):
            b = boxes[j]
            if a.xmin <= b.xmax and b.xmin <= a.xmax and a.ymin <= b.ymax and b.ymin <= a.ymax:
                uf.union(i, j)
    s_roots = {uf.find(i) for i, b in enumerate(boxes) if contains_point(b, s)}
    t_roots = {uf.find(i) for i, b in enumerate(boxes) if contains_point(b, t)}
    return bool(s_roots & t_roots)


def random_box_stream(
    seed: int,
    count: int,
    extent: int = 20,
    anchor: Anchor | None = None,
    max_side: int = 8,
) -> list[ConvexBody]:
    """Reproducible boxes with integer corners in ``[-extent, extent]^2`` avoiding s and t."""
    if anchor is None:
        anchor = Anchor(Point(0, 0), Point(10, 0))
    rng = random.Random(seed)
    out: list[ConvexBody] = []
    while len(out) < count:
        x0 = rng.randint(-extent, extent - 1)
        y0 = rng.randint(-extent, extent - 1)
        x1 = min(extent, x0 + rng.randint(1, max_side))
        y1 = min(extent, y0 + rng.randint(1, max_side))
        box = ConvexBody.box(x0, y0, x1, y1)
        if contains_point(box, anchor.s) or contains_point(box, anchor.t):
            continue
        out.append(box)
    return out


def random_unit_boxes(
    seed: int, count: int, extent: int = 500, resolution: int = 8, anchor: Anchor | None = None
) -> list[ConvexBody]:
    """Boxes of side ``resolution`` with integer corners in ``[0, extent*resolution]^2``.

    This is the unit-box-in-``extent`` benchmark workload scaled by
    ``resolution`` so every coordinate stays an integer.
    """
    if anchor is None:
        anchor = default_bench_anchor(extent, resolution)
    rng = random.Random(seed)
    hi = (extent - 1) * resolution
    out: list[ConvexBody] = []
    s, t = anchor.s, anchor.t
    while len(out) < count:
        x0 = rng.randint(0, hi)
        y0 = rng.randint(0, hi)
        x1, y1 = x0 + resolution, y0 + resolution
        if (x0 <= s.x <= x1 and y0 <= s.y <= y1) or (x0 <= t.x <= x1 and y0 <= t.y <= y1):
            continue
        out.append(ConvexBody.box(x0, y0, x1, y1))
    return out


def default_bench_anchor(extent: int = 500, resolution: int = 8) -> Anchor:
    span = extent * resolution
    return Anchor(Point(span // 4 + 1, span // 2 + 3), Point(3 * span // 4 + 5, span // 2 + 7))
