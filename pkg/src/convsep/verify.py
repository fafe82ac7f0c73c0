"""Replay runs step by step against the brute-force oracles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .geometry import Anchor, ConvexBody
from .index import SeparationIndex, edge_crossing_parity
from .oracle import floodfill_separated, green_path_exists
from .subdivision import Color, Outcome, SubdivisionEngine


@dataclass
class Mismatch:
    step: int
    expected: bool
    actual: bool
    what: str

    def __str__(self) -> str:
        return f"step {self.step}: {self.what} oracle={self.expected} structure={self.actual}"


def flipped_edge_parity(anchor, ku, kv) -> int:
    """Deliberately wrong edge parity, used to prove the checker catches faults."""
    return 1 - edge_crossing_parity(anchor, ku, kv)


def verify_stream(
    anchor: Anchor,
    bodies: Sequence[ConvexBody],
    finder=None,
    inject_fault: bool = False,
) -> Optional[Mismatch]:
    """Compare the index verdict with flood fill after every insertion; first mismatch or None."""
    kwargs = {"edge_parity": flipped_edge_parity} if inject_fault else {}
    index = SeparationIndex(anchor, finder, **kwargs)
    for i, body in enumerate(bodies):
        index.insert(body)
        expected = floodfill_separated(anchor, bodies[: i + 1])
        if expected != index.is_separated():
            return Mismatch(i + 1, expected, index.is_separated(), "separated")
    return None


def _engine_mismatch(engine: SubdivisionEngine, step: int) -> Optional[Mismatch]:
    anchor = engine.anchor
    expected = floodfill_separated(anchor, engine.red_bodies())
    actual = engine.red_index.is_separated()
    if expected != actual:
        return Mismatch(step, expected, actual, "red separation")
    greens = [b.to_body() for b in engine.leaves(Color.GREEN)]
    expected = green_path_exists(greens, anchor.s, anchor.t)
    actual = engine.outcome is Outcome.PATH_FOUND
    if expected != actual:
        return Mismatch(step, expected, actual, "green path")
    return None


def verify_engine(engine: SubdivisionEngine) -> Optional[Mismatch]:
    """Run ``engine`` to completion, checking both conditions after every subdivision."""
    mismatch = _engine_mismatch(engine, 0)
    step = 0
    while mismatch is None and engine.outcome is Outcome.RUNNING:
        engine.step()
        step += 1
        mismatch = _engine_mismatch(engine, step)
    return mismatch
