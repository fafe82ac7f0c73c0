"""Union-find with union by rank, path compression, and a per-node parity bit.

For a non-root node the parity bit is the crossing parity of the tree
path from the node to its parent; for a root it is 0.  Compression keeps
the bit consistent by summing parities along the compressed path.  The
structure is geometry-free: callers supply the parity of each merge edge.
"""

from __future__ import annotations

from .errors import SameSetError


class ParityUnionFind:
    """Insert-only disjoint sets over dense integer handles.

    ``hops`` counts parent-pointer traversals made by :meth:`findext`;
    ``find_calls`` and ``union_calls`` count public operations.
    """

    __slots__ = ("parent", "rank", "parity", "hops", "find_calls", "union_calls")

    def __init__(self):
        self.parent: list[int] = []
        self.rank: list[int] = []
        self.parity: list[int] = []
        self.hops = 0
        self.find_calls = 0
        self.union_calls = 0

    def __len__(self) -> int:
        return len(self.parent)

    def makeset(self) -> int:
        u = len(self.parent)
        self.parent.append(u)
        self.rank.append(0)
        self.parity.append(0)
        return u

    def findext(self, u: int) -> int:
        """Return the root of ``u``, compressing the path and fixing parities on the way."""
        self.find_calls += 1
        parent = self.parent
        p = parent[u]
        if p == u:
            return u
        path = [u]
        while True:
            self.hops += 1
            pp = parent[p]
            if pp == p:
                break
            path.append(p)
            p = pp
        root = p
        parity = self.parity
        # walk top-down so each node sees its parent's parity-to-root
        acc = 0
        for node in reversed(path):
            acc ^= parity[node]
            parity[node] = acc
            parent[node] = root
        return root

    def unionext(self, u: int, v: int, edge_parity: int) -> int:
        """Merge the sets of ``u`` and ``v`` joined by an edge of crossing parity ``edge_parity``.

        Returns the surviving root.  Raises :class:`SameSetError` if the
        nodes are already in one set.
        """
        self.union_calls += 1
        ru = self.findext(u)
        rv = self.findext(v)
        if ru == rv:
            raise SameSetError(f"nodes {u} and {v} are already connected")
        return self.link(ru, rv, self.parity[u] ^ self.parity[v] ^ (edge_parity & 1))

    def link(self, ru: int, rv: int, b: int) -> int:
        """Attach one of two distinct roots under the other by rank; the demoted root gets parity ``b``.

        ``b`` must be the crossing parity of the tree path between the two
        roots once joined.  Returns the surviving root.
        """
        rank = self.rank
        if rank[ru] > rank[rv]:
            self.parent[rv] = ru
            self.parity[rv] = b
            return ru
        self.parent[ru] = rv
        self.parity[ru] = b
        if rank[ru] == rank[rv]:
            rank[rv] += 1
        return rv

    def same_set(self, u: int, v: int) -> bool:
        return self.findext(u) == self.findext(v)

    def parity_to_root(self, u: int) -> int:
        self.findext(u)
        return self.parity[u]

    def is_root(self, u: int) -> bool:
        return self.parent[u] == u


class UnionFind:
    """Plain union by rank with path compression, used for green box connectivity."""

    __slots__ = ("parent", "rank", "hops", "calls")

    def __init__(self):
        self.parent: list[int] = []
        self.rank: list[int] = []
        self.hops = 0
        self.calls = 0

    def __len__(self) -> int:
        return len(self.parent)

    def makeset(self) -> int:
        u = len(self.parent)
        self.parent.append(u)
        self.rank.append(0)
        return u

    def find(self, u: int) -> int:
        self.calls += 1
        parent = self.parent
        root = u
        while parent[root] != root:
            root = parent[root]
            self.hops += 1
        while parent[u] != root:
            parent[u], u = root, parent[u]
        return root

    def union(self, u: int, v: int) -> bool:
        ru, rv = self.find(u), self.find(v)
        if ru == rv:
            return False
        if self.rank[ru] > self.rank[rv]:
            ru, rv = rv, ru
        self.parent[ru] = rv
        if self.rank[ru] == self.rank[rv]:
            self.rank[rv] += 1
        return True
