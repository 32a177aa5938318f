"""Executable forms of the two Hamilton-cycle lemmas: the parity statement
(designated edges lie on an even number of Hamilton cycles) and the
constructive second Hamilton cycle with its side conditions.

The second cycle is found by enumerating Hamilton cycles of the support
graph (cycle plus designated chords) and keeping a maximum-overlap
candidate; the exchange procedure from the parity argument is implemented
as well and kicks in only if the direct candidate misses the turning-point
condition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantViolation
from .generate import LemmaInstance
from .graphs import Graph, components_after_deletion
from .search import Cycle, hamilton_cycles


def _edges_minus_vertices(cycle_edges, drop) -> frozenset:
    return frozenset(e for e in cycle_edges if e[0] not in drop and e[1] not in drop)


def _path_component_endpoints(g: Graph, comp) -> tuple:
    """Endpoints of a component known to induce a path (a singleton is its
    own endpoint pair)."""
    comp = set(comp)
    inside_deg = {v: sum(1 for w in g.neighbors(v) if w in comp) for v in comp}
    if any(d > 2 for d in inside_deg.values()):
        raise ValueError("component is not a path")
    ends = sorted(v for v, d in inside_deg.items() if d <= 1)
    if len(comp) == 1:
        return (ends[0], ends[0])
    if len(ends) != 2 or sum(inside_deg.values()) != 2 * (len(comp) - 1):
        raise ValueError("component is not a path")
    return (ends[0], ends[1])


@dataclass(frozen=True)
class ParityReport:
    checked_edges: tuple        # ((u, v), hamilton count) pairs
    all_even: bool
    preserved: bool             # every Hamilton cycle leaves C - A intact
    distinguished: tuple
    hamilton_count: int


def verify_parity_lemma(g: Graph, a_set, distinguished=None) -> ParityReport:
    """Check the parity lemma on a graph with |A| path components off A:
    every edge outside the distinguished component incident to one of its
    endpoints lies on an even number of Hamilton cycles, and all Hamilton
    cycles agree off A."""
    a_set = frozenset(a_set)
    if len(a_set) < 2:
        raise ValueError("the parity hypotheses need |A| >= 2")
    comps = components_after_deletion(g, a_set)
    if len(comps) != len(a_set):
        raise ValueError(
            f"G - A has {len(comps)} components, expected |A| = {len(a_set)}"
        )
    ends = {comp: _path_component_endpoints(g, comp) for comp in comps}
    if distinguished is None:
        evens = [
            comp for comp in comps
            if any(g.degree(v) % 2 == 0 for v in ends[comp])
        ]
        if len(evens) > 1:
            raise ValueError("more than one component has even-degree endpoints")
        distinguished = evens[0] if evens else comps[-1]
    else:
        distinguished = frozenset(distinguished)
        if distinguished not in comps:
            raise ValueError("distinguished set is not a component of G - A")
    for comp in comps:
        if comp == distinguished:
            continue
        for v in set(ends[comp]):
            if g.degree(v) % 2 == 0:
                raise ValueError(
                    f"endpoint {v} of a non-distinguished component has even degree"
                )
    h_all = hamilton_cycles(g)
    comp_vertices = set(distinguished)
    inside = {
        (min(u, v), max(u, v))
        for u in comp_vertices for v in g.neighbors(u) if v in comp_vertices
    }
    checked = []
    for v in sorted(set(ends[distinguished])):
        for w in sorted(set(g.neighbors(v))):
            key = (min(v, w), max(v, w))
            if key in inside:
                continue
            count = sum(1 for h in h_all if key in h.edge_set())
            checked.append((key, count))
    preserved = True
    if h_all:
        base = _edges_minus_vertices(h_all[0].edge_pairs(), a_set)
        preserved = all(
            _edges_minus_vertices(h.edge_pairs(), a_set) == base for h in h_all
        )
    return ParityReport(
        checked_edges=tuple(checked),
        all_even=all(c % 2 == 0 for _, c in checked),
        preserved=preserved,
        distinguished=tuple(sorted(distinguished)),
        hamilton_count=len(h_all),
    )


@dataclass(frozen=True)
class SecondCycleCertificate:
    c_prime: Cycle
    exchange_vertex: int    # one incident cycle edge kept, one swapped
    preserved: bool         # C' - A == C - A


def build_support_graph(inst: LemmaInstance):
    """Cycle plus one designated chord per endpoint of each non-final arc
    (lowest-id target in A); this is the graph the lemma machinery runs
    on."""
    g, cyc = inst.g, inst.cycle
    cyc_keys = cyc.edge_set()
    designated = set()
    for comp in inst.components[:-1]:
        start, end = comp[0], comp[-1]
        for v in {start, end}:
            targets = sorted(
                a for a in inst.a_set
                if g.has_edge(v, a) and (min(v, a), max(v, a)) not in cyc_keys
            )
            if not targets:
                raise ValueError(f"arc endpoint {v} has no chord into A")
            a = targets[0]
            designated.add((min(v, a), max(v, a)))
    edges = list(cyc.edge_pairs()) + sorted(designated)
    return Graph(g.n, edges), frozenset(designated)


def _satisfies_turning_condition(cycle: Cycle, base_keys, a_set):
    """Vertex of A with exactly one incident cycle edge in the base cycle,
    or None."""
    at = {v: [] for v in a_set}
    for u, v in cycle.edge_pairs():
        if u in at:
            at[u].append((u, v))
        if v in at:
            at[v].append((u, v))
    for v in sorted(a_set):
        inside = sum(1 for e in at[v] if e in base_keys)
        if inside == 1:
            return v
    return None


def _exchange_step(g1: Graph, base: Cycle, current: Cycle, a_set) -> Cycle:
    """One step of the parity-argument exchange: on the union graph of the
    two cycles, swap along a degree-4 vertex of A to strictly grow the
    overlap with the base cycle."""
    union_edges = sorted(set(base.edge_pairs()) | set(current.edge_pairs()))
    g2 = Graph(g1.n, union_edges)
    a_deg4 = sorted(v for v in a_set if g2.degree(v) == 4)
    if not a_deg4:
        raise InvariantViolation(
            "second-cycle-exchange", "no degree-4 vertex of A in the union graph"
        )
    w = a_deg4[0]
    w2 = min(v for e in current.edge_pairs() for v in e if w in e and v != w)
    key = (min(w, w2), max(w, w2))
    cands = [
        h for h in hamilton_cycles(g2)
        if key in h.edge_set() and h != current
    ]
    if not cands:
        raise InvariantViolation(
            "second-cycle-exchange", "no alternative Hamilton cycle in the union graph"
        )
    base_keys = base.edge_set()
    best = max(
        cands, key=lambda h: (len(h.edge_set() & base_keys), h.vertices)
    )
    if len(best.edge_set() & base_keys) <= len(current.edge_set() & base_keys):
        raise InvariantViolation(
            "second-cycle-exchange", "exchange did not grow the overlap"
        )
    return best


def second_hamilton_cycle(inst: LemmaInstance, x: int, y: int) -> SecondCycleCertificate:
    """A Hamilton cycle distinct from the instance cycle through the edge
    xy, agreeing with it off A, with a turning vertex in A."""
    inst.check()
    h_last = inst.components[-1]
    if x not in (h_last[0], h_last[-1]):
        raise ValueError(f"{x} is not an endpoint of the distinguished arc")
    key = (min(x, y), max(x, y))
    cyc_keys = inst.cycle.edge_set()
    if key not in cyc_keys:
        raise ValueError(f"({x},{y}) is not a cycle edge")
    inside = {
        (min(a, b), max(a, b)) for a, b in zip(h_last, h_last[1:])
    }
    if key in inside:
        raise ValueError(f"({x},{y}) lies inside the distinguished arc")
    g1, _ = build_support_graph(inst)
    base = inst.cycle
    cands = [
        h for h in hamilton_cycles(g1)
        if key in h.edge_set() and h != base
    ]
    if not cands:
        raise InvariantViolation(
            "second-cycle", f"no second Hamilton cycle through ({x},{y})"
        )
    a_set = inst.a_set
    off = _edges_minus_vertices(base.edge_pairs(), a_set)
    for h in cands:
        if _edges_minus_vertices(h.edge_pairs(), a_set) != off:
            raise InvariantViolation(
                "second-cycle", "a support-graph Hamilton cycle moved off A"
            )
    base_keys = base.edge_set()
    cands.sort(key=lambda h: (-len(h.edge_set() & base_keys), h.vertices))
    current = cands[0]
    for _ in range(g1.m + 1):
        v = _satisfies_turning_condition(current, base_keys, a_set)
        if v is not None:
            return SecondCycleCertificate(
                c_prime=current, exchange_vertex=v, preserved=True
            )
        current = _exchange_step(g1, base, current, a_set)
    raise InvariantViolation("second-cycle", "exchange procedure did not terminate")
