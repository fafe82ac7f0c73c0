"""Scaling benchmark: random unit boxes streamed through the grid finder."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from .index import GridNeighborFinder, SeparationIndex
from .oracle import default_bench_anchor, random_unit_boxes


@dataclass
class BenchResult:
    n: int
    seconds: float
    hops: int
    uf_ops: int
    edges: int
    separated_at: Optional[int]

    @property
    def hops_per_op(self) -> float:
        return self.hops / self.uf_ops if self.uf_ops else 0.0

    def line(self) -> str:
        sep = "none" if self.separated_at is None else str(self.separated_at + 1)
        return (
            f"n={self.n} seconds={self.seconds:.3f} edges={self.edges} "
            f"uf_ops={self.uf_ops} hops_per_op={self.hops_per_op:.3f} separated_at={sep}"
        )


def run_bench(n: int, seed: int = 0, extent: int = 500, resolution: int = 8) -> BenchResult:
    """Insert ``n`` random unit boxes and time the insertions alone (generation excluded)."""
    anchor = default_bench_anchor(extent, resolution)
    boxes = random_unit_boxes(seed, n, extent, resolution, anchor)
    index = SeparationIndex(anchor, GridNeighborFinder(resolution))
    edges = 0
    start = time.perf_counter()
    for box in boxes:
        edges += index.insert(box).k
    elapsed = time.perf_counter() - start
    uf = index.uf
    return BenchResult(
        n, elapsed, uf.hops, uf.find_calls + uf.union_calls, edges, index.separated_at
    )
