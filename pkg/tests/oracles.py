"""Independent reference implementations used only by the tests.

Everything here is deliberately naive: permutation-based path/cycle
enumeration, a from-scratch graph6 encoder, half-edge pairing enumeration
of cubic graphs with backtracking isomorphism tests, Menger-style
connectivity, and a labeled-count recurrence.  None of it shares logic
with the library kernels it is used to check.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb

from chordlab.graphs import Graph

# ---------------------------------------------------------------------------
# graph zoo


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, edges)


def k4() -> Graph:
    return Graph(4, list(itertools.combinations(range(4), 2)))


def k33() -> Graph:
    return Graph(6, [(a, b) for a in (0, 1, 2) for b in (3, 4, 5)])


def prism() -> Graph:
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                     (0, 3), (1, 4), (2, 5)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def two_k4_minus_edge_bridge() -> Graph:
    """Two K4-minus-an-edge blocks joined by two edges: cubic, kappa = 2."""
    edges = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
             (4, 6), (4, 7), (5, 6), (5, 7), (6, 7),
             (0, 4), (1, 5)]
    return Graph(8, edges)


# ---------------------------------------------------------------------------
# naive path / cycle enumeration (permutation-based)


def all_xy_paths_naive(g: Graph, x: int, y: int):
    """Every simple (x,y)-path, via permutations of interior subsets."""
    rest = [v for v in range(g.n) if v not in (x, y)]
    paths = []
    for r in range(len(rest) + 1):
        for subset in itertools.combinations(rest, r):
            for perm in itertools.permutations(subset):
                seq = (x, *perm, y)
                if all(g.has_edge(a, b) for a, b in zip(seq, seq[1:])):
                    paths.append(seq)
    return paths


def longest_xy_naive(g: Graph, x: int, y: int):
    paths = all_xy_paths_naive(g, x, y)
    if not paths:
        return 0, []
    best = max(len(p) - 1 for p in paths)
    return best, sorted(p for p in paths if len(p) - 1 == best)


def all_cycles_naive(g: Graph):
    """Every cycle, canonical as (min vertex, smaller neighbor second, ...)."""
    out = set()
    verts = range(g.n)
    for r in range(3, g.n + 1):
        for subset in itertools.combinations(verts, r):
            s = subset[0]
            for perm in itertools.permutations(subset[1:]):
                seq = (s, *perm)
                if perm[0] > perm[-1]:
                    continue
                closed = seq + (s,)
                if all(g.has_edge(a, b) for a, b in zip(closed, closed[1:])):
                    out.add(seq)
    return sorted(out)


def longest_cycles_naive(g: Graph):
    cycles = all_cycles_naive(g)
    if not cycles:
        return 0, []
    best = max(len(c) for c in cycles)
    return best, sorted(c for c in cycles if len(c) == best)


def hamilton_cycles_naive(g: Graph):
    return [c for c in all_cycles_naive(g) if len(c) == g.n]


# ---------------------------------------------------------------------------
# reference graph6 encoder (written against the format spec, not the parser)


def encode_graph6_reference(g: Graph) -> str:
    assert g.simple and g.n < 63
    matrix = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        matrix[u][v] = matrix[v][u] = 1
    stream = ""
    for col in range(g.n):
        for row in range(col):
            stream += "1" if matrix[row][col] else "0"
    stream += "0" * (-len(stream) % 6)
    chars = [chr(63 + g.n)]
    for i in range(0, len(stream), 6):
        chars.append(chr(63 + int(stream[i:i + 6] or "0", 2)))
    return "".join(chars)


# ---------------------------------------------------------------------------
# backtracking isomorphism (independent of the library canonical form)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    gm, hm = g.masks, h.masks

    def extend(mapping, used):
        v = len(mapping)
        if v == g.n:
            return True
        for w in range(h.n):
            if w in used or h.degree(w) != g.degree(v):
                continue
            ok = True
            for u in range(v):
                if ((gm[v] >> u) & 1) != ((hm[w] >> mapping[u]) & 1):
                    ok = False
                    break
            if ok and extend(mapping + [w], used | {w}):
                return True
        return False

    return extend([], set())


# ---------------------------------------------------------------------------
# pairing-model enumeration of cubic graphs (the counting oracle)


def labeled_cubic_graphs(n: int):
    """All labeled simple cubic graphs on n vertices, as edge tuples.

    Perfect pairings of the 3n half-edges, enumerated up to the order of
    each vertex's half-edges (i.e. by neighbor sets), rejecting loops and
    parallel edges as they would appear.
    """
    assert n % 2 == 0 and n >= 4
    out = []
    deg = [0] * n
    adjacency = [set() for _ in range(n)]
    edges = []

    def rec():
        pending = [v for v in range(n) if deg[v] < 3]
        if not pending:
            out.append(tuple(sorted(edges)))
            return
        v = pending[0]
        need = 3 - deg[v]
        cands = [u for u in pending[1:] if u not in adjacency[v]]
        for group in itertools.combinations(cands, need):
            if any(3 - deg[u] < 1 for u in group):
                continue
            for u in group:
                deg[u] += 1
                adjacency[v].add(u)
                adjacency[u].add(v)
                edges.append((v, u))
            deg[v] = 3
            rec()
            deg[v] -= need
            for u in group:
                deg[u] -= 1
                adjacency[v].discard(u)
                adjacency[u].discard(v)
                edges.pop()

    rec()
    return out


def connected_cubic_classes_by_pairing(n: int):
    """Connected cubic graphs on n vertices up to isomorphism, from the
    pairing enumeration plus backtracking isomorphism rejection."""
    from chordlab.graphs import _is_connected

    reps = []
    for edges in labeled_cubic_graphs(n):
        g = Graph(n, edges)
        if not _is_connected(g):
            continue
        if not any(are_isomorphic(g, r) for r in reps):
            reps.append(g)
    return reps


# ---------------------------------------------------------------------------
# labeled counting cross-check (independent of any enumeration above)


@lru_cache(maxsize=None)
def labeled_cubic_count(n: int) -> int:
    """Number of labeled simple cubic graphs on n vertices, by dynamic
    programming over residual-degree class counts."""
    if n % 2 or n < 4:
        return 0

    @lru_cache(maxsize=None)
    def count(state):
        # state: sorted tuple of residual degrees (>0) of unprocessed vertices
        if not state:
            return 1
        state = tuple(sorted(state))
        r = state[-1]
        rest = state[:-1]
        total = 0
        # choose how many neighbors come from each residual class of `rest`
        classes = {}
        for d in rest:
            classes[d] = classes.get(d, 0) + 1
        keys = sorted(classes)
        counts = [classes[k] for k in keys]

        def assign(i, left, chosen):
            nonlocal total
            if i == len(keys):
                if left == 0:
                    nxt = []
                    for k, c, take in zip(keys, counts, chosen):
                        nxt.extend([k] * (c - take))
                        nxt.extend([k - 1] * take)
                    ways = 1
                    for c, take in zip(counts, chosen):
                        ways *= comb(c, take)
                    total += ways * count(tuple(sorted(d for d in nxt if d > 0)))
                return
            for take in range(min(counts[i], left) + 1):
                assign(i + 1, left - take, chosen + [take])

        assign(0, r, [])
        return total

    return count(tuple([3] * n))


@lru_cache(maxsize=None)
def labeled_connected_cubic_count(n: int) -> int:
    """Connected labeled count from the all-graphs counts by the standard
    rooted inclusion-exclusion."""
    if n % 2 or n < 4:
        return 0
    total = labeled_cubic_count(n)
    for k in range(4, n, 2):
        total -= comb(n - 1, k - 1) * labeled_connected_cubic_count(k) * labeled_cubic_count(n - k)
    return total


# ---------------------------------------------------------------------------
# Menger-style vertex connectivity (independent of cut enumeration)


def vertex_connectivity_menger(g: Graph) -> int:
    """kappa(g) via max vertex-disjoint paths over non-adjacent pairs,
    computed with unit-capacity augmenting paths on the split digraph."""
    if g.n < 2:
        return 0
    from chordlab.graphs import _is_connected

    if not _is_connected(g):
        return 0
    if all(g.has_edge(u, v) for u in range(g.n) for v in range(u + 1, g.n)):
        return g.n - 1

    def max_disjoint(s, t):
        # node-splitting: v_in = 2v, v_out = 2v+1
        arcs = {}

        def add(a, b):
            arcs.setdefault(a, {})[b] = arcs.get(a, {}).get(b, 0) + 1

        for v in range(g.n):
            add(2 * v, 2 * v + 1)
        for u, v in set(g.edges):
            add(2 * u + 1, 2 * v)
            add(2 * v + 1, 2 * u)
        source, sink = 2 * s + 1, 2 * t
        flow = 0
        while True:
            prev = {source: None}
            stack = [source]
            while stack and sink not in prev:
                a = stack.pop()
                for b, cap in arcs.get(a, {}).items():
                    if cap > 0 and b not in prev:
                        prev[b] = a
                        stack.append(b)
            if sink not in prev:
                return flow
            b = sink
            while prev[b] is not None:
                a = prev[b]
                arcs[a][b] -= 1
                arcs.setdefault(b, {})[a] = arcs.get(b, {}).get(a, 0) + 1
                b = a
            flow += 1

    best = g.n
    for s in range(g.n):
        for t in range(s + 1, g.n):
            if not g.has_edge(s, t):
                best = min(best, max_disjoint(s, t))
    return best
