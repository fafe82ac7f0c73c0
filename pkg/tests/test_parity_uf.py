import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convsep.errors import SameSetError
from convsep.parity_uf import ParityUnionFind, UnionFind

from support import ShadowForest, walk_parity


def chain(pu, pv):
    """u -> v -> root built by hand, with the given parities."""
    uf = ParityUnionFind()
    root, v, u = uf.makeset(), uf.makeset(), uf.makeset()
    uf.parent[v], uf.parity[v] = root, pv
    uf.parent[u], uf.parity[u] = v, pu
    return uf, u, v, root


def test_makeset_examples():
    uf = ParityUnionFind()
    a = uf.makeset()
    assert a == 0 and uf.findext(a) == 0 and uf.parity[a] == 0
    b = uf.makeset()
    assert uf.findext(a) != uf.findext(b)


def test_findext_on_root_is_noop():
    uf = ParityUnionFind()
    u = uf.makeset()
    assert uf.findext(u) == u
    assert uf.parent == [0] and uf.parity == [0] and uf.hops == 0


@pytest.mark.parametrize("pu,pv,expected", [(1, 1, 0), (1, 0, 1), (0, 1, 1), (0, 0, 0)])
def test_findext_compresses_and_sums_parity(pu, pv, expected):
    uf, u, v, root = chain(pu, pv)
    assert uf.findext(u) == root
    assert uf.parent[u] == root and uf.parity[u] == expected
    assert uf.parent[v] == root and uf.parity[v] == pv


@pytest.mark.parametrize("edge", [0, 1])
def test_unionext_singletons(edge):
    uf = ParityUnionFind()
    a, b = uf.makeset(), uf.makeset()
    r = uf.unionext(a, b, edge)
    other = a if r == b else b
    assert uf.parity[r] == 0 and uf.parity[other] == edge
    assert uf.same_set(a, b)


def test_unionext_same_set_rejected():
    uf = ParityUnionFind()
    a, b = uf.makeset(), uf.makeset()
    uf.unionext(a, b, 0)
    with pytest.raises(SameSetError):
        uf.unionext(b, a, 1)


def test_same_set_examples():
    uf = ParityUnionFind()
    nodes = [uf.makeset() for _ in range(5)]
    assert not uf.same_set(nodes[0], nodes[1])
    for a, b in zip(nodes, nodes[1:]):
        uf.unionext(a, b, 1)
    assert uf.same_set(nodes[0], nodes[4])


def test_parity_to_root_examples():
    uf = ParityUnionFind()
    a, b = uf.makeset(), uf.makeset()
    root = uf.unionext(a, b, 1)
    child = a if root == b else b
    assert uf.parity_to_root(root) == 0
    assert uf.parity_to_root(child) == 1


def random_run(rng, n_nodes, n_ops, check):
    uf, shadow = ParityUnionFind(), ShadowForest()
    for _ in range(n_nodes):
        uf.makeset()
        shadow.makeset()
    for _ in range(n_ops):
        x, y = rng.randrange(n_nodes), rng.randrange(n_nodes)
        if rng.random() < 0.5 and not shadow.connected(x, y):
            p = rng.randint(0, 1)
            uf.unionext(x, y, p)
            shadow.union(x, y, p)
        else:
            uf.findext(x)
        check(uf, shadow)
    return uf, shadow


def check_against_shadow(uf, shadow):
    n = len(uf)
    for x in range(n):
        root, acc = walk_parity(uf, x)
        if uf.parent[x] == x:
            assert uf.parity[x] == 0
        assert shadow.connected(x, root)
        assert acc == shadow.path_parity(x, root)
        for y in (0, n - 1):
            assert (root == walk_parity(uf, y)[0]) == shadow.connected(x, y)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 25), st.integers(0, 80))
def test_parity_matches_shadow_forest(seed, n_nodes, n_ops):
    uf, shadow = random_run(random.Random(seed), n_nodes, n_ops, check_against_shadow)
    for x in range(n_nodes):
        r = uf.findext(x)
        assert uf.parity_to_root(x) == shadow.path_parity(x, r)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 60))
def test_rank_bounds(seed, n_nodes):
    uf, _ = random_run(random.Random(seed), n_nodes, 4 * n_nodes, lambda *_: None)
    size = {}
    for x in range(n_nodes):
        r = uf.findext(x)
        size[r] = size.get(r, 0) + 1
    for r, sz in size.items():
        assert uf.rank[r] <= math.floor(math.log2(sz))
    for x in range(n_nodes):
        if uf.parent[x] != x:
            assert uf.rank[x] < uf.rank[uf.parent[x]]


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 19), st.integers(0, 19)), max_size=60))
def test_partition_matches_plain_union_find(pairs):
    puf, uf = ParityUnionFind(), UnionFind()
    for _ in range(20):
        puf.makeset()
        uf.makeset()
    for a, b in pairs:
        if not puf.same_set(a, b):
            puf.unionext(a, b, (a + b) & 1)
        uf.union(a, b)
    for a in range(20):
        for b in range(20):
            assert puf.same_set(a, b) == (uf.find(a) == uf.find(b))


def test_plain_union_find_basics():
    uf = UnionFind()
    a, b, c = uf.makeset(), uf.makeset(), uf.makeset()
    assert uf.union(a, b)
    assert not uf.union(b, a)
    assert uf.find(a) == uf.find(b) != uf.find(c)
