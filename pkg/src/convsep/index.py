"""Semi-dynamic detection of when a growing family of convex bodies separates s and t."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Protocol

from .errors import ContainsTerminalError
from .geometry import (
    Anchor,
    ConvexBody,
    Point,
    bodies_intersect,
    connector_curve,
    contains_point,
    crossing_given_sides,
    intersection_witness,
    orient_perturbed,
    polyline_crossing_parity,
    rational,
    representative_point,
)
from .parity_uf import ParityUnionFind


class NeighborFinder(Protocol):
    def insert(self, body: ConvexBody, body_id: int) -> None: ...

    def query(self, body: ConvexBody) -> list[int]: ...


class NaiveNeighborFinder:
    """Linear scan; returns ids in insertion order."""

    def __init__(self):
        self._bodies: list[tuple[int, ConvexBody]] = []

    def insert(self, body: ConvexBody, body_id: int) -> None:
        self._bodies.append((body_id, body))

    def query(self, body: ConvexBody) -> list[int]:
        return [i for i, other in self._bodies if bodies_intersect(body, other)]


class GridNeighborFinder:
    """Uniform grid bucketing of bounding boxes, confirmed by an exact intersection test.

    Bodies no wider and no taller than a cell are filed once, under the
    cell of their lower-left corner; a query widens its cell range by one
    cell down and left to reach them.  Larger bodies are filed under every
    cell their bounding box touches and are reported only from the cell
    holding the lower-left corner of the bounding-box overlap, so no
    candidate is seen twice.
    """

    def __init__(self, cell_size=1):
        cell_size = rational(cell_size)
        if cell_size <= 0:
            raise ValueError("cell_size must be positive")
        self.cell_size = cell_size
        self._small: dict[tuple[int, int], list[tuple]] = defaultdict(list)
        self._large: dict[tuple[int, int], list[tuple]] = defaultdict(list)

    def insert(self, body: ConvexBody, body_id: int) -> None:
        c = self.cell_size
        entry = (body_id, body.xmin, body.ymin, body.xmax, body.ymax, body)
        if body.xmax - body.xmin <= c and body.ymax - body.ymin <= c:
            self._small[body.xmin // c, body.ymin // c].append(entry)
            return
        large = self._large
        for gx in range(body.xmin // c, body.xmax // c + 1):
            for gy in range(body.ymin // c, body.ymax // c + 1):
                large[gx, gy].append(entry)

    def query(self, body: ConvexBody) -> list[int]:
        c = self.cell_size
        x0, y0, x1, y1 = body.xmin, body.ymin, body.xmax, body.ymax
        is_box = body.is_box
        hits = []
        gx0, gx1 = x0 // c, x1 // c
        gy0, gy1 = y0 // c, y1 // c
        small = self._small
        for gx in range(gx0 - 1, gx1 + 1):
            for gy in range(gy0 - 1, gy1 + 1):
                bucket = small.get((gx, gy))
                if not bucket:
                    continue
                for oid, ox0, oy0, ox1, oy1, other in bucket:
                    if ox0 > x1 or x0 > ox1 or oy0 > y1 or y0 > oy1:
                        continue
                    if (is_box and other.is_box) or bodies_intersect(body, other):
                        hits.append(oid)
        large = self._large
        if large:
            for gx in range(gx0, gx1 + 1):
                for gy in range(gy0, gy1 + 1):
                    bucket = large.get((gx, gy))
                    if not bucket:
                        continue
                    for oid, ox0, oy0, ox1, oy1, other in bucket:
                        if ox0 > x1 or x0 > ox1 or oy0 > y1 or y0 > oy1:
                            continue
                        if (max(ox0, x0) // c, max(oy0, y0) // c) != (gx, gy):
                            continue
                        if (is_box and other.is_box) or bodies_intersect(body, other):
                            hits.append(oid)
        hits.sort()
        return hits


def naive_neighbor_finder() -> NaiveNeighborFinder:
    return NaiveNeighborFinder()


def grid_neighbor_finder(cell_size=1) -> GridNeighborFinder:
    return GridNeighborFinder(cell_size)


def edge_crossing_parity(anchor: Anchor, ku: ConvexBody, kv: ConvexBody) -> int:
    """Crossing parity of the connector curve between two intersecting bodies."""
    return polyline_crossing_parity(anchor, connector_curve(ku, kv))


@dataclass
class InsertReport:
    body_id: int
    k: int = 0
    merge_edges: int = 0
    cycle_edges: int = 0
    separated_now: bool = False
    separated: bool = False
    first_separating_edge: Optional[tuple[int, int]] = None

    def line(self) -> str:
        status = "separated" if self.separated else "connected"
        return (
            f"{self.body_id + 1} k={self.k} merges={self.merge_edges} "
            f"cycles={self.cycle_edges} status={status}"
        )


EdgeParity = Callable[[Anchor, ConvexBody, ConvexBody], int]


class SeparationIndex:
    """Insert compact convex bodies avoiding s and t; report when their union separates s from t.

    Body ``j`` owns node ``j`` of the parity union-find.  Once separation is
    detected the flag is sticky and later insertions are only recorded.

    ``edge_parity`` overrides the crossing parity of the connector between
    two intersecting bodies; it exists so tests can inject faults.  The
    default computes the same value as :func:`edge_crossing_parity` but
    reuses each body's stored representative point and its side of the
    perturbed segment.
    """

    def __init__(
        self,
        anchor: Anchor,
        finder: Optional[NeighborFinder] = None,
        edge_parity: Optional[EdgeParity] = None,
    ):
        if not isinstance(anchor, Anchor):
            anchor = Anchor.of(*anchor)
        self.anchor = anchor
        self.finder = finder if finder is not None else NaiveNeighborFinder()
        self.edge_parity = edge_parity
        self.bodies: list[ConvexBody] = []
        self.rep_points: list[Point] = []
        self._rep_sides: list[int] = []
        self.uf = ParityUnionFind()
        self.separated = False
        self.separated_at: Optional[int] = None
        self.first_separating_edge: Optional[tuple[int, int]] = None
        s, t = anchor.s, anchor.t
        self._st_box = (min(s.x, t.x), min(s.y, t.y), max(s.x, t.x), max(s.y, t.y))

    def __len__(self) -> int:
        return len(self.bodies)

    def is_separated(self) -> bool:
        return self.separated

    def _check_terminals(self, body: ConvexBody) -> None:
        for name, p in (("s", self.anchor.s), ("t", self.anchor.t)):
            if contains_point(body, p):
                raise ContainsTerminalError(f"body {body!r} contains {name}={p}")

    def insert(self, body: ConvexBody) -> InsertReport:
        self._check_terminals(body)
        if self.separated:
            return self._record_only(body)
        neighbors = self.finder.query(body)
        report = self._insert(body, neighbors)
        self.finder.insert(body, report.body_id)
        return report

    def insert_with_neighbors(self, body: ConvexBody, neighbors: Iterable[int]) -> InsertReport:
        """Insert ``body`` whose intersecting predecessors are already known to the caller.

        The finder is bypassed entirely; ``neighbors`` must list exactly the
        ids of stored bodies that intersect ``body``.
        """
        self._check_terminals(body)
        if self.separated:
            return self._record_only(body)
        return self._insert(body, list(neighbors))

    def _record_only(self, body: ConvexBody) -> InsertReport:
        body_id = len(self.bodies)
        self.bodies.append(body)
        self.rep_points.append(representative_point(body))
        return InsertReport(body_id, separated=True)

    def _edge_parity(self, body: ConvexBody, u: int, v: int) -> int:
        other = self.bodies[v]
        if self.edge_parity is not None:
            return self.edge_parity(self.anchor, body, other)
        x0, y0, x1, y1 = self._st_box
        # the connector stays inside the bounding boxes of the two bodies
        if (
            (body.xmin > x1 and other.xmin > x1)
            or (body.xmax < x0 and other.xmax < x0)
            or (body.ymin > y1 and other.ymin > y1)
            or (body.ymax < y0 and other.ymax < y0)
        ):
            return 0
        anchor = self.anchor
        pu, pv = self.rep_points[u], self.rep_points[v]
        su, sv = self._rep_sides[u], self._rep_sides[v]
        w = intersection_witness(body, other)
        sw = orient_perturbed(anchor, w)
        parity = 0
        if sw != su:
            parity = crossing_given_sides(anchor, pu, w, su, sw)
        if sw != sv:
            parity ^= crossing_given_sides(anchor, w, pv, sw, sv)
        return parity

    def _insert(self, body: ConvexBody, neighbors: list[int]) -> InsertReport:
        uf = self.uf
        u = uf.makeset()
        rep = representative_point(body)
        self.bodies.append(body)
        self.rep_points.append(rep)
        self._rep_sides.append(orient_perturbed(self.anchor, rep))
        parity = uf.parity
        findext = uf.findext
        edge_parity = self._edge_parity
        merges = cycles = 0
        separating = None
        for v in neighbors:
            ru = findext(u)
            rv = findext(v)
            if ru != rv:
                # unionext(u, v) with the roots just found
                uf.union_calls += 1
                uf.link(ru, rv, parity[u] ^ parity[v] ^ edge_parity(body, u, v))
                merges += 1
                continue
            cycles += 1
            if parity[u] ^ parity[v] ^ edge_parity(body, u, v):
                separating = (u, v)
                self.separated = True
                self.separated_at = u
                self.first_separating_edge = separating
                break
        return InsertReport(
            u,
            k=len(neighbors),
            merge_edges=merges,
            cycle_edges=cycles,
            separated_now=separating is not None,
            separated=self.separated,
            first_separating_edge=separating,
        )


def new_index(anchor: Anchor, finder: Optional[NeighborFinder] = None) -> SeparationIndex:
    return SeparationIndex(anchor, finder)
