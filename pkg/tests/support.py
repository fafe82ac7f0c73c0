"""Independent reference implementations used only by the tests."""

from __future__ import annotations

import random
from fractions import Fraction

from convsep.geometry import Anchor, ConvexBody, Point, contains_point, intersection_vertices, orient
from convsep.oracle import random_box_stream

EPS0 = Fraction(1, 2**40)
STABLE_ROUNDS = 4
MAX_ROUNDS = 60


def perturbed_s(anchor: Anchor, eps: Fraction) -> Point:
    s, t = anchor.s, anchor.t
    ux, uy = t.x - s.x, t.y - s.y
    return Point(s.x - eps * uy, s.y + eps * ux)


def _stable(evaluate):
    """Evaluate at eps = 2^-40, 2^-41, ... until STABLE_ROUNDS consecutive values agree.

    ``evaluate(eps)`` returns a value or None when the configuration is
    degenerate at that eps.  Returns None if it never stabilises on a
    non-degenerate value.
    """
    eps = EPS0
    last, run = object(), 0
    for _ in range(MAX_ROUNDS):
        v = evaluate(eps)
        if v is not None and v == last:
            run += 1
            if run >= STABLE_ROUNDS:
                return v
        else:
            last, run = v, 1
        eps /= 2
    return None


def explicit_orient(anchor: Anchor, p: Point):
    """Sign of orient(s', t, p) with a concrete small eps; None if degenerate."""

    def at(eps):
        o = orient(perturbed_s(anchor, eps), anchor.t, p)
        return o or None

    return _stable(at)


def explicit_crossing(anchor: Anchor, a: Point, b: Point):
    """Proper-crossing parity of segment ab with s't at a concrete small eps; None if degenerate."""
    if a == b:
        return 0

    def at(eps):
        sp = perturbed_s(anchor, eps)
        o1, o2 = orient(a, b, sp), orient(a, b, anchor.t)
        o3, o4 = orient(sp, anchor.t, a), orient(sp, anchor.t, b)
        # one segment strictly on one side of the other's line: no contact at all
        if (o1 == o2 != 0) or (o3 == o4 != 0):
            return 0
        if 0 in (o1, o2, o3, o4):
            return None
        return 1

    return _stable(at)


def explicit_polyline_parity(anchor: Anchor, points) -> int:
    total = 0
    for a, b in zip(points, points[1:]):
        c = explicit_crossing(anchor, a, b)
        assert c is not None
        total ^= c
    return total


class ShadowForest:
    """Explicit spanning forest replaying every union with its edge parity.

    Each node stores the XOR of edge parities on the tree path to an
    arbitrary component reference node, so the parity of the tree path
    between two connected nodes is ``pot[x] ^ pot[y]``.
    """

    def __init__(self):
        self.comp: list[int] = []
        self.pot: list[int] = []
        self.members: dict[int, list[int]] = {}
        self.edges: list[tuple[int, int, int]] = []

    def makeset(self) -> int:
        x = len(self.comp)
        self.comp.append(x)
        self.pot.append(0)
        self.members[x] = [x]
        return x

    def connected(self, x: int, y: int) -> bool:
        return self.comp[x] == self.comp[y]

    def union(self, x: int, y: int, parity: int) -> None:
        cx, cy = self.comp[x], self.comp[y]
        assert cx != cy
        self.edges.append((x, y, parity))
        if len(self.members[cx]) > len(self.members[cy]):
            x, y, cx, cy = y, x, cy, cx
        # relabel the smaller component so that pot[x] ^ pot[y] == parity
        shift = self.pot[x] ^ self.pot[y] ^ parity
        for m in self.members.pop(cx):
            self.comp[m] = cy
            self.pot[m] ^= shift
            self.members[cy].append(m)

    def path_parity(self, x: int, y: int) -> int:
        assert self.connected(x, y)
        return self.pot[x] ^ self.pot[y]


def walk_parity(uf, x: int) -> tuple[int, int]:
    """(root, XOR of stored parities along the parent chain) without compressing."""
    acc = 0
    while uf.parent[x] != x:
        acc ^= uf.parity[x]
        x = uf.parent[x]
    return x, acc


def convex_hull(points):
    """Counterclockwise strictly convex hull (Andrew's monotone chain)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and orient(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower, upper = half(pts), half(reversed(pts))
    return lower[:-1] + upper[:-1]


def random_convex_body(rng: random.Random, lo: int, hi: int) -> ConvexBody:
    kind = rng.random()
    if kind < 0.4:
        x0, y0 = rng.randint(lo, hi - 1), rng.randint(lo, hi - 1)
        return ConvexBody.box(x0, y0, rng.randint(x0, hi), rng.randint(y0, hi))
    if kind < 0.5:
        a = Point(rng.randint(lo, hi), rng.randint(lo, hi))
        b = Point(rng.randint(lo, hi), rng.randint(lo, hi))
        return ConvexBody([a] if a == b else [a, b])
    while True:
        pts = [Point(rng.randint(lo, hi), rng.randint(lo, hi)) for _ in range(rng.randint(3, 7))]
        hull = convex_hull(pts)
        if len(hull) >= 3:
            return ConvexBody(hull)


def random_point_in(rng: random.Random, vertices) -> Point:
    """Random convex combination of ``vertices`` with small rational weights."""
    weights = [rng.randint(0, 4) for _ in vertices]
    if not any(weights):
        weights[rng.randrange(len(weights))] = 1
    total = sum(weights)
    x = sum(Fraction(w, total) * v.x for w, v in zip(weights, vertices))
    y = sum(Fraction(w, total) * v.y for w, v in zip(weights, vertices))
    return Point.of(x, y)


def avoids(anchor: Anchor, body: ConvexBody) -> bool:
    return not (contains_point(body, anchor.s) or contains_point(body, anchor.t))


def random_intersecting_pair(rng: random.Random, anchor: Anchor, lo=-6, hi=12):
    while True:
        ku = random_convex_body(rng, lo, hi)
        kv = random_convex_body(rng, lo, hi)
        if avoids(anchor, ku) and avoids(anchor, kv) and intersection_vertices(ku, kv):
            return ku, kv


def random_union_polyline(rng: random.Random, ku, kv, p, q):
    """Polyline from ``p`` in ku to ``q`` in kv that stays inside ku | kv."""
    inter = intersection_vertices(ku, kv)
    pts = [p]
    pts += [random_point_in(rng, ku.vertices) for _ in range(rng.randint(0, 3))]
    pts.append(random_point_in(rng, inter))
    pts += [random_point_in(rng, kv.vertices) for _ in range(rng.randint(0, 3))]
    pts.append(q)
    out = [pts[0]]
    for pt in pts[1:]:
        if pt != out[-1]:
            out.append(pt)
    return out


def ring_prone_family(rng: random.Random, anchor: Anchor, max_count: int = 10, extent: int = 8):
    """Up to ``max_count`` boxes avoiding s and t, often including a possibly leaky ring around s."""
    sx, sy = anchor.s
    out = []
    if rng.random() < 0.7:
        left, right = sx - rng.randint(1, 3), sx + rng.randint(1, 3)
        low, high = sy - rng.randint(1, 3), sy + rng.randint(1, 3)

        def reach():
            # bars usually meet at the corners but sometimes stop one short
            return rng.choice([0, 0, 0, 1])

        out += [
            ConvexBody.box(left - 1, low - 1 + reach(), left, high + 1 - reach()),
            ConvexBody.box(right, low - 1 + reach(), right + 1, high + 1 - reach()),
            ConvexBody.box(left - 1 + reach(), low - 1, right + 1 - reach(), low),
            ConvexBody.box(left - 1 + reach(), high, right + 1 - reach(), high + 1),
        ]
        out = [b for b in out if avoids(anchor, b)]
        rng.shuffle(out)
    count = rng.randint(len(out) or 1, max(max_count, len(out)))
    extra = random_box_stream(rng.randrange(2**32), count - len(out), extent, anchor, max_side=4)
    return out + extra


# one "PASS|FAIL criterion N: detail" line per acceptance criterion, echoed by conftest
ACCEPTANCE_LINES: list[str] = []


def report(number: int, ok: bool, detail: str) -> str:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return line
