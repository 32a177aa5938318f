"""Core undirected graph representation and small-graph structure tools.

Vertices are dense integer ids 0..n-1.  Host graphs are simple; derived
graphs produced by contraction may carry parallel edges, so the edge list
is a multiset.  Self-loops are never allowed.  Instances are treated as
immutable after construction and are safe to share between threads.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass


class Graph:
    """Undirected (multi)graph on vertices 0..n-1.

    ``edges`` keeps the construction order so that callers can address
    individual parallel edges by index.  ``simple`` is true iff no pair
    occurs twice.
    """

    __slots__ = ("n", "edges", "adj", "simple", "_masks")

    def __init__(self, n: int, edges):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        norm = []
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            norm.append((u, v) if u < v else (v, u))
        self.n = n
        self.edges = tuple(norm)
        adj = [[] for _ in range(n)]
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
        self.adj = tuple(tuple(sorted(a)) for a in adj)
        self.simple = len(set(norm)) == len(norm)
        self._masks = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self):
        return tuple(len(a) for a in self.adj)

    def neighbors(self, v: int):
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @property
    def masks(self):
        """Adjacency bitmasks (parallel edges collapse to one bit)."""
        if self._masks is None:
            masks = []
            for a in self.adj:
                m = 0
                for w in a:
                    m |= 1 << w
                masks.append(m)
            self._masks = tuple(masks)
        return self._masks

    def edge_multiset(self) -> Counter:
        return Counter(self.edges)

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and sorted(self.edges) == sorted(other.edges)
        )

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.edges))))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m}{'' if self.simple else ', multi'})"


def build_graph(n: int, edge_list) -> Graph:
    """Build a graph, validating ids and rejecting self-loops."""
    return Graph(n, edge_list)


def is_cubic(g: Graph) -> bool:
    return all(len(a) == 3 for a in g.adj)


def _is_connected(g: Graph, removed=frozenset()) -> bool:
    alive = [v for v in range(g.n) if v not in removed]
    if not alive:
        return True
    seen = {alive[0]}
    queue = deque([alive[0]])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in removed and w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(alive)


def connectivity_at_least(g: Graph, k: int) -> bool:
    """True iff g has more than k vertices, is connected, and stays
    connected after deleting any fewer than k vertices.  Only k <= 3 is
    supported; cuts are enumerated outright, which is trivially correct
    at this scale."""
    if k not in (1, 2, 3):
        raise ValueError(f"k must be 1, 2 or 3, got {k}")
    if not g.simple:
        raise ValueError("connectivity gate requires a simple graph")
    if g.n <= k:
        return False
    if not _is_connected(g):
        return False
    for size in range(1, k):
        for cut in itertools.combinations(range(g.n), size):
            if not _is_connected(g, frozenset(cut)):
                return False
    return True


def components_after_deletion(g: Graph, removed) -> tuple:
    """Connected components of the subgraph induced on V(g) minus ``removed``,
    as frozensets ordered by smallest member."""
    removed = frozenset(removed)
    if not removed <= set(range(g.n)):
        raise ValueError("removed set contains out-of-range ids")
    unseen = set(range(g.n)) - removed
    comps = []
    while unseen:
        start = min(unseen)
        comp = {start}
        queue = deque([start])
        unseen.discard(start)
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w in unseen:
                    unseen.discard(w)
                    comp.add(w)
                    queue.append(w)
        comps.append(frozenset(comp))
    comps.sort(key=min)
    return tuple(comps)


@dataclass(frozen=True)
class ContractionMap:
    """Bookkeeping from a contracted graph back to its host.

    ``new_to_old`` maps each surviving dense id to the host vertex set it
    absorbs; ``old_to_new`` is the reverse lookup for surviving hosts;
    ``edge_origin`` gives, per surviving edge index, the host edge it
    came from.
    """

    new_to_old: tuple
    old_to_new: dict
    edge_origin: tuple


def contract_set(g: Graph, block, representative: int):
    """Merge ``block`` onto ``representative``.

    Both forms are used by the reduction machinery: the representative may
    sit inside the block, or be a vertex adjacent to it (in which case the
    block is pulled onto it).  Parallel edges produced by the merge are
    kept; self-loops are dropped.
    """
    block = frozenset(block)
    if not block <= set(range(g.n)):
        raise ValueError("block contains out-of-range ids")
    if representative not in block:
        touches = any(w in block for w in g.adj[representative])
        if block and not touches:
            raise ValueError(
                f"representative {representative} has no edge into the block"
            )
    merged = block | {representative}
    survivors = sorted(set(range(g.n)) - merged) + [representative]
    survivors.sort()
    old_to_new = {v: i for i, v in enumerate(survivors)}

    def image(v):
        return old_to_new[representative] if v in merged else old_to_new[v]

    new_edges = []
    origin = []
    for u, v in g.edges:
        nu, nv = image(u), image(v)
        if nu == nv:
            continue
        new_edges.append((nu, nv))
        origin.append((u, v))
    new_to_old = tuple(
        frozenset(merged) if v == representative else frozenset((v,))
        for v in survivors
    )
    contracted = Graph(len(survivors), new_edges)
    cmap = ContractionMap(new_to_old, old_to_new, tuple(origin))
    return contracted, cmap
