"""Quadtree subdivision of the unit square with incremental green/red connectivity.

Yellow boxes are split largest first.  Green leaves are tracked with a
plain union-find; red leaves, together with eight red boxes ringing the
unit square, feed a :class:`SeparationIndex` whose neighbor lists come
from the leaf adjacency graph instead of a spatial search.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Protocol, Sequence

from .errors import (
    ContainsTerminalError,
    InvalidObstacleError,
    OracleViolationError,
    TerminalOutsideError,
)
from .geometry import (
    Anchor,
    ConvexBody,
    Point,
    bodies_intersect,
    contains_point,
    rational,
)
from .index import SeparationIndex
from .parity_uf import UnionFind


class Color(enum.Enum):
    GREEN = "green"
    RED = "red"
    YELLOW = "yellow"


class Outcome(enum.Enum):
    RUNNING = "running"
    PATH_FOUND = "path_found"
    SEPARATED = "separated"
    DEPTH_EXHAUSTED = "depth_exhausted"


@dataclass(frozen=True, order=True)
class DyadicBox:
    """Closed square ``[i, i+1] x [j, j+1]`` scaled by ``2**-depth``."""

    depth: int
    i: int
    j: int

    @property
    def side(self) -> Fraction:
        return Fraction(1, 1 << self.depth)

    @property
    def bounds(self):
        d = 1 << self.depth
        return (
            rational(Fraction(self.i, d)),
            rational(Fraction(self.j, d)),
            rational(Fraction(self.i + 1, d)),
            rational(Fraction(self.j + 1, d)),
        )

    def corners(self) -> tuple[Point, Point, Point, Point]:
        x0, y0, x1, y1 = self.bounds
        return (Point(x0, y0), Point(x1, y0), Point(x1, y1), Point(x0, y1))

    def to_body(self) -> ConvexBody:
        return ConvexBody.box(*self.bounds)

    def children(self) -> tuple["DyadicBox", ...]:
        """Quadrants in the order SW, SE, NW, NE."""
        d, i, j = self.depth + 1, 2 * self.i, 2 * self.j
        return (
            DyadicBox(d, i, j),
            DyadicBox(d, i + 1, j),
            DyadicBox(d, i, j + 1),
            DyadicBox(d, i + 1, j + 1),
        )

    def intersects(self, other: "DyadicBox") -> bool:
        d = max(self.depth, other.depth)
        a, b = d - self.depth, d - other.depth
        ai0, aj0 = self.i << a, self.j << a
        bi0, bj0 = other.i << b, other.j << b
        return (
            ai0 <= bi0 + (1 << b)
            and bi0 <= ai0 + (1 << a)
            and aj0 <= bj0 + (1 << b)
            and bj0 <= aj0 + (1 << a)
        )

    def contains(self, p: Point) -> bool:
        d = 1 << self.depth
        return self.i <= p.x * d <= self.i + 1 and self.j <= p.y * d <= self.j + 1


# ---------------------------------------------------------------- oracles


class Oracle(Protocol):
    def classify(self, box: DyadicBox) -> Color: ...

    def blocks(self, p: Point) -> bool: ...


def _dist2_range(box: DyadicBox, cx, cy):
    """Min and max squared distance from ``(cx, cy)`` to the closed box."""
    x0, y0, x1, y1 = box.bounds
    nx = min(max(cx, x0), x1) - cx
    ny = min(max(cy, y0), y1) - cy
    fx = max(abs(x0 - cx), abs(x1 - cx))
    fy = max(abs(y0 - cy), abs(y1 - cy))
    return nx * nx + ny * ny, fx * fx + fy * fy


class DiscOracle:
    """Blocked region is the closed disc of radius ``r`` about ``(cx, cy)``."""

    def __init__(self, cx, cy, r):
        self.cx, self.cy, self.r = rational(cx), rational(cy), rational(r)
        if self.r <= 0:
            raise InvalidObstacleError(f"disc radius must be positive, got {self.r}")

    def classify(self, box: DyadicBox) -> Color:
        lo, hi = _dist2_range(box, self.cx, self.cy)
        r2 = self.r * self.r
        if hi <= r2:
            return Color.RED
        if lo > r2:
            return Color.GREEN
        return Color.YELLOW

    def blocks(self, p: Point) -> bool:
        dx, dy = p.x - self.cx, p.y - self.cy
        return dx * dx + dy * dy <= self.r * self.r


class AnnulusOracle:
    """Blocked region is the closed ring ``r_in <= |p - c| <= r_out``."""

    def __init__(self, cx, cy, r_in, r_out):
        self.cx, self.cy = rational(cx), rational(cy)
        self.r_in, self.r_out = rational(r_in), rational(r_out)
        if self.r_in <= 0 or self.r_in >= self.r_out:
            raise InvalidObstacleError(
                f"annulus needs 0 < r_in < r_out, got {self.r_in}, {self.r_out}"
            )

    def classify(self, box: DyadicBox) -> Color:
        lo, hi = _dist2_range(box, self.cx, self.cy)
        ri2, ro2 = self.r_in * self.r_in, self.r_out * self.r_out
        if lo >= ri2 and hi <= ro2:
            return Color.RED
        if hi < ri2 or lo > ro2:
            return Color.GREEN
        return Color.YELLOW

    def blocks(self, p: Point) -> bool:
        dx, dy = p.x - self.cx, p.y - self.cy
        d2 = dx * dx + dy * dy
        return self.r_in * self.r_in <= d2 <= self.r_out * self.r_out


class PolygonOracle:
    """Blocked region is a closed convex body."""

    def __init__(self, body: ConvexBody):
        if not isinstance(body, ConvexBody):
            raise InvalidObstacleError("polygon obstacle must be a ConvexBody")
        self.body = body

    def classify(self, box: DyadicBox) -> Color:
        if all(contains_point(self.body, c) for c in box.corners()):
            return Color.RED
        if not bodies_intersect(self.body, box.to_body()):
            return Color.GREEN
        return Color.YELLOW

    def blocks(self, p: Point) -> bool:
        return contains_point(self.body, p)


class UnionOracle:
    """Several obstacles; red only when one obstacle alone covers the box."""

    def __init__(self, oracles: Sequence[Oracle]):
        self.oracles = list(oracles)

    def classify(self, box: DyadicBox) -> Color:
        colors = [o.classify(box) for o in self.oracles]
        if all(c is Color.GREEN for c in colors):
            return Color.GREEN
        if any(c is Color.RED for c in colors):
            return Color.RED
        return Color.YELLOW

    def blocks(self, p: Point) -> bool:
        return any(o.blocks(p) for o in self.oracles)


def disc_oracle(cx, cy, r) -> DiscOracle:
    return DiscOracle(cx, cy, r)


def annulus_oracle(cx, cy, r_in, r_out) -> AnnulusOracle:
    return AnnulusOracle(cx, cy, r_in, r_out)


def polygon_oracle(body: ConvexBody) -> PolygonOracle:
    return PolygonOracle(body)


def union_oracle(oracles: Sequence[Oracle]) -> UnionOracle:
    return UnionOracle(oracles)


# ------------------------------------------------------------- box graph


class _Entry:
    """Occurrence of ``other`` in the adjacency list of ``owner``."""

    __slots__ = ("owner", "other", "prev", "next", "twin")

    def __init__(self, owner: int, other: int):
        self.owner = owner
        self.other = other
        self.prev: Optional[_Entry] = None
        self.next: Optional[_Entry] = None
        self.twin: Optional[_Entry] = None


class BoxGraph:
    """Intersection graph of live leaf boxes.

    Adjacency lists are doubly linked and every entry points at its twin
    in the neighbor's list, so removing a node costs time proportional to
    its degree.
    """

    def __init__(self):
        self.boxes: dict[int, DyadicBox] = {}
        self.colors: dict[int, Color] = {}
        self._head: dict[int, Optional[_Entry]] = {}
        self._degree: dict[int, int] = {}
        self._next_id = 0

    def __len__(self) -> int:
        return len(self.boxes)

    def __contains__(self, node: int) -> bool:
        return node in self.boxes

    def add_node(self, box: DyadicBox, color: Color) -> int:
        node = self._next_id
        self._next_id += 1
        self.boxes[node] = box
        self.colors[node] = color
        self._head[node] = None
        self._degree[node] = 0
        return node

    def _push(self, entry: _Entry) -> None:
        head = self._head[entry.owner]
        entry.next = head
        if head is not None:
            head.prev = entry
        self._head[entry.owner] = entry
        self._degree[entry.owner] += 1

    def _unlink(self, entry: _Entry) -> None:
        if entry.prev is None:
            self._head[entry.owner] = entry.next
        else:
            entry.prev.next = entry.next
        if entry.next is not None:
            entry.next.prev = entry.prev
        self._degree[entry.owner] -= 1

    def add_edge(self, u: int, v: int) -> None:
        eu, ev = _Entry(u, v), _Entry(v, u)
        eu.twin, ev.twin = ev, eu
        self._push(eu)
        self._push(ev)

    def neighbors(self, u: int) -> Iterator[int]:
        e = self._head[u]
        while e is not None:
            yield e.other
            e = e.next

    def degree(self, u: int) -> int:
        return self._degree[u]

    def remove_node(self, u: int) -> None:
        e = self._head[u]
        while e is not None:
            self._unlink(e.twin)
            e = e.next
        del self._head[u], self._degree[u], self.boxes[u], self.colors[u]

    def edges(self) -> set[frozenset[int]]:
        return {frozenset((u, v)) for u in self.boxes for v in self.neighbors(u)}


# ----------------------------------------------------------------- engine


@dataclass
class EngineStats:
    subdivisions: int = 0
    green: int = 0
    red: int = 0
    yellow: int = 0
    max_neighbors: int = 0
    green_uf_ops: int = 0
    red_uf_ops: int = 0
    uf_hops: int = 0
    neighbor_counts: list[int] = field(default_factory=list, repr=False)

    @property
    def uf_ops(self) -> int:
        return self.green_uf_ops + self.red_uf_ops


RING_OFFSETS = tuple((i, j) for j in (-1, 0, 1) for i in (-1, 0, 1) if (i, j) != (0, 0))
MAX_NEIGHBORS = 12


class SubdivisionEngine:
    """State of one subdivision run; see :func:`init`, :meth:`step`, :meth:`run`."""

    def __init__(self, anchor: Anchor, oracle: Oracle, max_depth: int):
        if not isinstance(anchor, Anchor):
            anchor = Anchor.of(*anchor)
        if max_depth < 0:
            raise ValueError("max_depth must be nonnegative")
        for name, p in (("s", anchor.s), ("t", anchor.t)):
            if not (0 < p.x < 1 and 0 < p.y < 1):
                raise TerminalOutsideError(f"{name}={p} is not strictly inside the unit square")
            if oracle.blocks(p):
                raise ContainsTerminalError(f"an obstacle contains {name}={p}")
        self.anchor = anchor
        self.oracle = oracle
        self.max_depth = max_depth
        self.graph = BoxGraph()
        self.queue: deque[int] = deque()
        self.green_uf = UnionFind()
        self.green_ids: dict[int, int] = {}
        self.s_green: list[int] = []
        self.t_green: list[int] = []
        self.red_index = SeparationIndex(anchor)
        self.red_ids: dict[int, int] = {}
        self.ring_nodes: list[int] = []
        self._ring: set[int] = set()
        self.outcome = Outcome.RUNNING
        self.stats = EngineStats()
        self._last_depth = 0

        for i, j in RING_OFFSETS:
            box = DyadicBox(0, i, j)
            node = self.graph.add_node(box, Color.RED)
            for other in self.ring_nodes:
                if self.graph.boxes[other].intersects(box):
                    self.graph.add_edge(node, other)
            self.ring_nodes.append(node)
            self._ring.add(node)
            self._add_red(node, box)
        self._place(DyadicBox(0, 0, 0), list(self.ring_nodes))

    # -- placement

    def _place(self, box: DyadicBox, candidates: Sequence[int]) -> int:
        color = self.oracle.classify(box)
        graph = self.graph
        node = graph.add_node(box, color)
        boxes = graph.boxes
        for c in candidates:
            if boxes[c].intersects(box):
                graph.add_edge(node, c)
        if color is Color.RED:
            self.stats.red += 1
            self._add_red(node, box)
        elif color is Color.GREEN:
            self.stats.green += 1
            self._add_green(node, box)
        else:
            self.stats.yellow += 1
            self.queue.append(node)
        return node

    def _add_red(self, node: int, box: DyadicBox) -> None:
        body = box.to_body()
        if contains_point(body, self.anchor.s) or contains_point(body, self.anchor.t):
            raise ContainsTerminalError(f"red box {box} contains a terminal")
        colors = self.graph.colors
        red_nbrs = []
        for v in self.graph.neighbors(node):
            if colors[v] is Color.GREEN and node not in self._ring:
                raise OracleViolationError(f"red box {box} touches green box {self.graph.boxes[v]}")
            if colors[v] is Color.RED:
                red_nbrs.append(self.red_ids[v])
        report = self.red_index.insert_with_neighbors(body, red_nbrs)
        self.red_ids[node] = report.body_id
        if report.separated_now and self.outcome is Outcome.RUNNING:
            self.outcome = Outcome.SEPARATED

    def _add_green(self, node: int, box: DyadicBox) -> None:
        uf = self.green_uf
        g = uf.makeset()
        self.green_ids[node] = g
        colors = self.graph.colors
        for v in self.graph.neighbors(node):
            if colors[v] is Color.RED and v not in self._ring:
                raise OracleViolationError(f"green box {box} touches red box {self.graph.boxes[v]}")
            if colors[v] is Color.GREEN:
                uf.union(g, self.green_ids[v])
        if box.contains(self.anchor.s):
            self.s_green.append(g)
        if box.contains(self.anchor.t):
            self.t_green.append(g)
        if self.outcome is Outcome.RUNNING and self._terminals_connected():
            self.outcome = Outcome.PATH_FOUND

    def _terminals_connected(self) -> bool:
        if not self.s_green or not self.t_green:
            return False
        find = self.green_uf.find
        roots = {find(g) for g in self.s_green}
        return any(find(g) in roots for g in self.t_green)

    # -- stepping

    def step(self) -> Outcome:
        """Subdivide the front yellow box; returns the (possibly unchanged) outcome."""
        if self.outcome is not Outcome.RUNNING:
            return self.outcome
        if not self.queue or self.graph.boxes[self.queue[0]].depth >= self.max_depth:
            self.outcome = Outcome.DEPTH_EXHAUSTED
            return self.outcome
        graph = self.graph
        u = self.queue.popleft()
        box = graph.boxes[u]
        if box.depth < self._last_depth:
            raise AssertionError("yellow boxes left the queue out of size order")
        self._last_depth = box.depth
        nbrs = list(graph.neighbors(u))
        n_h = sum(1 for v in nbrs if graph.colors[v] is not Color.GREEN)
        stats = self.stats
        stats.neighbor_counts.append(n_h)
        stats.max_neighbors = max(stats.max_neighbors, n_h)
        if n_h > MAX_NEIGHBORS:
            raise AssertionError(f"box {box} has {n_h} yellow/red neighbors")
        graph.remove_node(u)
        stats.yellow -= 1
        stats.subdivisions += 1
        placed: list[int] = []
        for child in box.children():
            placed.append(self._place(child, nbrs + placed))
        self._refresh_counters()
        return self.outcome

    def run(self) -> Outcome:
        while self.outcome is Outcome.RUNNING:
            self.step()
        self._refresh_counters()
        return self.outcome

    def _refresh_counters(self) -> None:
        stats = self.stats
        uf = self.red_index.uf
        stats.red_uf_ops = uf.find_calls + uf.union_calls
        stats.green_uf_ops = self.green_uf.calls
        stats.uf_hops = uf.hops + self.green_uf.hops

    # -- inspection

    def leaves(self, color: Optional[Color] = None) -> list[DyadicBox]:
        """Live boxes inside the unit square, optionally filtered by color."""
        ring = set(self.ring_nodes)
        return [
            b
            for n, b in sorted(self.graph.boxes.items())
            if n not in ring and (color is None or self.graph.colors[n] is color)
        ]

    def red_bodies(self) -> list[ConvexBody]:
        """All red boxes including the surrounding ring, as bodies."""
        return [
            self.graph.boxes[n].to_body()
            for n in sorted(self.graph.boxes)
            if self.graph.colors[n] is Color.RED
        ]

    def summary(self) -> str:
        s = self.stats
        return (
            f"outcome={self.outcome.value} subdivisions={s.subdivisions} "
            f"green={s.green} red={s.red} yellow={s.yellow}"
        )


def init(anchor: Anchor, oracle: Oracle, max_depth: int) -> SubdivisionEngine:
    return SubdivisionEngine(anchor, oracle, max_depth)
