import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convsep.errors import ContainsTerminalError, InvalidAnchorError
from convsep.geometry import Anchor, ConvexBody, Point, bodies_intersect
from convsep.index import (
    GridNeighborFinder,
    NaiveNeighborFinder,
    SeparationIndex,
    edge_crossing_parity,
    grid_neighbor_finder,
    new_index,
)
from convsep.oracle import floodfill_separated, random_box_stream

from support import avoids, random_convex_body, random_intersecting_pair, ring_prone_family

ST = Anchor(Point(0, 0), Point(10, 0))
RING = [
    ConvexBody.box(-2, -2, -1, 2),
    ConvexBody.box(-2, 1, 2, 2),
    ConvexBody.box(1, -2, 2, 2),
    ConvexBody.box(-2, -2, 2, -1),
]


def test_new_index_is_empty():
    idx = new_index(ST)
    assert len(idx) == 0 and not idx.is_separated()
    with pytest.raises(InvalidAnchorError):
        new_index(Anchor.of((1, 1), (1, 1)))


def test_single_insert():
    report = new_index(ST).insert(ConvexBody.box(3, 3, 4, 4))
    assert report.k == 0 and not report.separated_now and not report.separated


@pytest.mark.parametrize("finder", [None, GridNeighborFinder(1), GridNeighborFinder(3)])
def test_ring_separates_exactly_at_fourth(finder):
    idx = SeparationIndex(ST, finder)
    flags = [idx.insert(b).separated_now for b in RING]
    assert flags == [False, False, False, True]
    assert idx.is_separated() and idx.separated_at == 3
    assert [floodfill_separated(ST, RING[: i + 1]) for i in range(4)] == [False, False, False, True]


def test_separation_is_sticky():
    idx = new_index(ST)
    for b in RING:
        idx.insert(b)
    report = idx.insert(ConvexBody.box(20, 20, 21, 21))
    assert report.separated and not report.separated_now and report.k == 0
    assert idx.is_separated() and len(idx) == 5


def test_insert_rejects_terminal():
    with pytest.raises(ContainsTerminalError):
        new_index(ST).insert(ConvexBody.box(-1, -1, 1, 1))
    with pytest.raises(ContainsTerminalError):
        new_index(ST).insert(ConvexBody([Point(9, -1), Point(11, -1), Point(10, 1)]))


def test_report_line():
    idx = new_index(ST)
    lines = [idx.insert(b).line() for b in RING]
    assert lines[-1] == "4 k=2 merges=1 cycles=1 status=separated"


def test_naive_finder_examples():
    f = NaiveNeighborFinder()
    for i, b in enumerate([ConvexBody.box(0, 0, 1, 1), ConvexBody.box(5, 5, 6, 6), ConvexBody.box(3, 0, 4, 1)]):
        f.insert(b, i)
    assert f.query(ConvexBody.box(10, 10, 11, 11)) == []
    assert f.query(ConvexBody.box(0, 0, 3, 1)) == [0, 2]
    assert f.query(ConvexBody.box(6, 6, 7, 7)) == [1]  # corner contact


def test_grid_finder_examples():
    g = grid_neighbor_finder(2)
    assert g.query(ConvexBody.box(0, 0, 1, 1)) == []
    big = ConvexBody.box(-7, -3, 9, 5)
    g.insert(big, 0)
    for x in range(-8, 10, 3):
        assert g.query(ConvexBody.box(x, 4, x + 1, 6)) == [0]
    with pytest.raises(ValueError):
        GridNeighborFinder(0)


def test_duplicate_bodies_are_allowed():
    idx = new_index(ST)
    b = ConvexBody.box(3, 3, 5, 5)
    idx.insert(b)
    report = idx.insert(b)
    assert report.k == 1 and report.merge_edges == 1 and not idx.is_separated()


# -- properties


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32))
def test_two_bodies_never_separate(seed):
    rng = random.Random(seed)
    ku, kv = random_intersecting_pair(rng, ST)
    idx = new_index(ST)
    idx.insert(ku)
    assert not idx.insert(kv).separated


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32))
def test_fast_edge_parity_matches_connector(seed):
    rng = random.Random(seed)
    bodies = []
    while len(bodies) < 8:
        b = random_convex_body(rng, -6, 14)
        if avoids(ST, b):
            bodies.append(b)
    idx = new_index(ST)
    for b in bodies:
        u = len(idx.bodies)
        idx._insert(b, [])  # registers the body without linking anything
        for v in range(u):
            if bodies_intersect(b, bodies[v]):
                assert idx._edge_parity(b, u, v) == edge_crossing_parity(ST, b, bodies[v])


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 40), st.sampled_from([1, 2, 5, "3/2"]))
def test_grid_finder_agrees_with_naive(seed, count, cell):
    bodies = random_box_stream(seed, count, extent=20)
    naive, grid = NaiveNeighborFinder(), GridNeighborFinder(cell)
    for i, body in enumerate(bodies):
        assert grid.query(body) == naive.query(body)
        naive.insert(body, i)
        grid.insert(body, i)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 30))
def test_forest_consistency_while_connected(seed, count):
    """While unseparated, every edge of the intersection graph closes an even cycle."""
    bodies = random_box_stream(seed, count, extent=14)
    idx = new_index(ST)
    for j, body in enumerate(bodies):
        before = idx.uf.find_calls + idx.uf.union_calls
        report = idx.insert(body)
        assert idx.uf.find_calls + idx.uf.union_calls - before <= 3 * report.k
        if idx.is_separated():
            break
        for u in range(j + 1):
            for v in range(u):
                if bodies_intersect(bodies[u], bodies[v]):
                    b = idx.uf.parity_to_root(u) ^ idx.uf.parity_to_root(v)
                    assert b ^ edge_crossing_parity(ST, bodies[u], bodies[v]) == 0


@settings(max_examples=50, deadline=None)
@given(st.randoms(use_true_random=False))
def test_final_verdict_is_order_invariant(rnd):
    anchor = Anchor(Point(0, 0), Point(6, 0))
    bodies = ring_prone_family(rnd, anchor)

    def verdict(seq):
        idx = new_index(anchor)
        for b in seq:
            idx.insert(b)
        return idx.is_separated()

    base = verdict(bodies)
    for _ in range(5):
        perm = bodies[:]
        rnd.shuffle(perm)
        assert verdict(perm) == base
    assert base == floodfill_separated(anchor, bodies)
