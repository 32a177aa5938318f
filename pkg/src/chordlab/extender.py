"""The constructive path-extension machinery and the exhaustive verifiers.

Given an (x,y)-path with no internal bound vertex in a 2-connected cubic
graph, produce a strictly longer (x,y)-path by running the contradiction
argument forward: splice through an endpoint-touching component when one
exists, otherwise reduce the graph (two-neighbor components become red
edges, larger ones are contracted onto a color-class representative),
find a second cycle through xy covering all odd-degree vertices, lift it
back along the contraction map, and in the tight case finish with the
matching-compression step.  The adjacent-endpoint variant removes x and
its chord partner, reruns the second-cycle lemma on the reduced graph,
and reinstates both vertices with a four-edge substitution.

Every path or cycle emitted anywhere is re-validated by the independent
checkers in search before being returned.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .coloring import pick_color_class, three_color_cycle_plus
from .errors import InvariantViolation
from .generate import LemmaInstance
from .graphs import Graph, components_after_deletion, connectivity_at_least, is_cubic
from .search import Cycle, Path, chords, internal_bound_vertices, longest_cycles, longest_xy_paths
from .second_cycle import second_hamilton_cycle

BLACK, RED, BLUE = "black", "red", "blue"

HAS_BOUND_VERTEX = "has-bound-vertex"
SPANNING_PATH = "spanning-path"
EXTENDABLE = "extendable"


@dataclass(frozen=True)
class Classification:
    kind: str
    bound: frozenset


@dataclass
class ExtensionTrace:
    steps: list = field(default_factory=list)
    final_path: tuple = ()

    def add(self, name: str, **data):
        self.steps.append({"name": name, **data})

    def to_json(self) -> str:
        return json.dumps(
            {"steps": self.steps, "final_path": list(self.final_path)}, indent=2
        )


@dataclass(frozen=True)
class BlueSubpathStats:
    """Counting data comparing the reduced cycle with its replacement:
    dropped_vertices / missing_edges are |V(C)-V(C')| and |E(C)-E(C')|,
    surplus = missing_edges - 2*dropped_vertices, blue/red edge counts on
    the new cycle, and the maximal blue runs with the number of length-2
    ones."""

    dropped_vertices: int
    missing_edges: int
    surplus: int
    blue_on_cycle: int
    red_on_cycle: int
    blue_runs: int
    long_blue_runs: int

    def as_dict(self) -> dict:
        return {
            "dropped_vertices": self.dropped_vertices,
            "missing_edges": self.missing_edges,
            "surplus": self.surplus,
            "blue_on_cycle": self.blue_on_cycle,
            "red_on_cycle": self.red_on_cycle,
            "blue_runs": self.blue_runs,
            "long_blue_runs": self.long_blue_runs,
        }

    def check(self):
        s = self
        if s.surplus < 0:
            raise InvariantViolation("stats", "surplus is negative")
        if s.blue_on_cycle != s.blue_runs + s.long_blue_runs:
            raise InvariantViolation("stats", "blue runs do not add up")
        if s.dropped_vertices + s.surplus != s.blue_on_cycle + s.red_on_cycle:
            raise InvariantViolation("stats", "component count identity fails")
        if s.surplus < 2 * s.long_blue_runs:
            raise InvariantViolation("stats", "surplus below twice the long runs")
        if s.blue_runs >= s.long_blue_runs + 1 and s.surplus < 2 * s.long_blue_runs + 1:
            raise InvariantViolation("stats", "strict surplus bound fails")
        return self


@dataclass(frozen=True)
class MultiCycle:
    """Cycle in an edge-indexed multigraph: vertices in order, edge ids in
    step order (edge i joins vertex i and vertex i+1, cyclically)."""

    vertices: tuple
    eids: tuple

    @property
    def length(self) -> int:
        return len(self.eids)

    def eid_set(self) -> frozenset:
        return frozenset(self.eids)


class ReducedGraph:
    """Edge-tagged multigraph on the path vertices, plus the contraction
    bookkeeping needed to lift cycles back to the host graph."""

    def __init__(self, xy, xy_virtual):
        self.verts = set()
        self.edges = []        # (u, v) per edge id
        self.tags = []         # BLACK / RED / BLUE per edge id
        self.adjmap = {}       # v -> list of (eid, other)
        self.xy = xy
        self.xy_virtual = xy_virtual
        self.xy_eid = None
        self.cycle_vertices = ()
        self.cycle_eids = frozenset()
        self.reps = {}         # representative -> contracted component
        self.red_comp = {}     # eid -> component behind a red edge
        self.blue_info = {}    # eid -> (rep, attach, component, host_edge)
        self.a_set = frozenset()

    def add_vertex(self, v):
        self.verts.add(v)
        self.adjmap.setdefault(v, [])

    def add_edge(self, u, v, tag) -> int:
        eid = len(self.edges)
        self.edges.append((u, v))
        self.tags.append(tag)
        self.adjmap[u].append((eid, v))
        self.adjmap[v].append((eid, u))
        return eid

    def degree(self, v) -> int:
        return len(self.adjmap[v])

    def odd_vertices(self) -> frozenset:
        return frozenset(v for v in self.verts if self.degree(v) % 2 == 1)

    def sorted_neighbors(self, v):
        return sorted(self.adjmap[v], key=lambda t: (t[1], t[0]))

    def to_graph(self):
        """Dense relabeling for assertions and serialization: returns
        (Graph, sorted host vertex list)."""
        order = sorted(self.verts)
        pos = {v: i for i, v in enumerate(order)}
        return Graph(len(order), [(pos[u], pos[v]) for u, v in self.edges]), order

    def edge_rows(self):
        return [[u, v, tag] for (u, v), tag in zip(self.edges, self.tags)]


# ---------------------------------------------------------------------------
# classification and direct splices


def precheck(g: Graph, p: Path) -> Classification:
    """Gate the hypotheses and classify the path: spanning, owning an
    internal bound vertex, or extendable."""
    if not is_cubic(g):
        raise ValueError("host graph is not cubic")
    if not connectivity_at_least(g, 2):
        raise ValueError("host graph is not 2-connected")
    p.validate(g)
    bound = internal_bound_vertices(g, p)
    if len(p) == g.n:
        return Classification(SPANNING_PATH, bound)
    if bound:
        return Classification(HAS_BOUND_VERTEX, bound)
    x, y = p.x, p.y
    on_path = set(p.vertices)
    for i, u in enumerate(p.vertices):
        for w in g.neighbors(u):
            if w in on_path:
                j = p.vertices.index(w)
                if abs(i - j) > 1 and {u, w} != {x, y}:
                    raise InvariantViolation(
                        "precheck",
                        f"chord ({u},{w}) on a path without internal bound vertices",
                    )
    return Classification(EXTENDABLE, frozenset())


def _through_component(g: Graph, a: int, b: int, comp, min_len: int):
    """Shortest (a,b)-path of length >= min_len with nonempty interior
    inside comp; ties broken by vertex sequence."""
    comp = frozenset(comp)
    stack = [(a, (a,))]
    results = []
    while stack:
        cur, seq = stack.pop()
        for w in sorted(g.neighbors(cur), reverse=True):
            if w == b:
                if len(seq) >= min_len:
                    results.append(seq + (b,))
                continue
            if w in comp and w not in seq:
                stack.append((w, seq + (w,)))
    if not results:
        return None
    results.sort(key=lambda s: (len(s), s))
    return Path(results[0])


def find_direct_extension(g: Graph, p: Path):
    """When every off-path component touches the endpoint neighborhoods,
    splice a longer path through one or two of them; otherwise certify a
    component attached only to the interior.  Returns (path, component)
    with exactly one of the two set."""
    comps = components_after_deletion(g, set(p.vertices))
    on_path = set(p.vertices)
    x, y = p.x, p.y
    nbrs = {
        comp: frozenset(w for v in comp for w in g.neighbors(v) if w in on_path)
        for comp in comps
    }
    interior_only = [c for c in comps if not (nbrs[c] & {x, y})]
    if interior_only:
        return None, min(interior_only, key=min)
    if p.length < 2:
        raise ValueError("direct extension needs a path with an interior")
    u, v = p.vertices[1], p.vertices[-2]

    def comp_of(vertex):
        off = [w for w in g.neighbors(vertex) if w not in on_path]
        if not off:
            raise InvariantViolation(
                "component-claim", f"interior vertex {vertex} has no off-path edge"
            )
        return next(c for c in comps if off[0] in c)

    h_i = comp_of(u)
    if x in nbrs[h_i]:
        seg = _through_component(g, x, u, h_i, 2)
        longer = Path(seg.vertices + p.vertices[2:])
        return _check_longer(g, p, longer), None
    if y not in nbrs[h_i]:
        raise InvariantViolation(
            "component-claim", "component misses both endpoints after the filter"
        )
    if v in nbrs[h_i]:
        seg = _through_component(g, v, y, h_i, 2)
        longer = Path(p.vertices[:-1] + seg.vertices[1:])
        return _check_longer(g, p, longer), None
    h_j = comp_of(v)
    if y in nbrs[h_j]:
        seg = _through_component(g, v, y, h_j, 2)
        longer = Path(p.vertices[:-1] + seg.vertices[1:])
        return _check_longer(g, p, longer), None
    if x not in nbrs[h_j]:
        raise InvariantViolation(
            "component-claim", "second component misses both endpoints"
        )
    if h_i == h_j:
        raise InvariantViolation(
            "component-claim", "double-splice components coincide"
        )
    seg_xv = _through_component(g, x, v, h_j, 2)
    seg_uy = _through_component(g, u, y, h_i, 2)
    middle = tuple(reversed(p.vertices[1:-1]))  # v .. u
    longer = Path(seg_xv.vertices + middle[1:] + seg_uy.vertices[1:])
    return _check_longer(g, p, longer), None


def _check_longer(g: Graph, p: Path, q: Path) -> Path:
    q.validate(g)
    if (q.x, q.y) != (p.x, p.y):
        raise InvariantViolation("checker", "endpoints moved")
    if q.length <= p.length:
        raise InvariantViolation("checker", "replacement path is not longer")
    return q


def _adjacent_attachment_splice(g: Graph, p: Path, cycle_pairs=None):
    """A component with two consecutive attachments admits an immediate
    splice; the argument never meets this on longest paths, but sampled
    paths do.  ``cycle_pairs`` widens consecutiveness to a cycle."""
    on_path = set(p.vertices)
    pairs = cycle_pairs
    if pairs is None:
        pairs = list(zip(p.vertices, p.vertices[1:]))
    comps = components_after_deletion(g, on_path)
    for comp in comps:
        attach = frozenset(w for v in comp for w in g.neighbors(v) if w in on_path)
        for a, b in pairs:
            if a in attach and b in attach and {a, b} != {p.x, p.y}:
                seg = _through_component(g, a, b, comp, 2)
                vs = p.vertices
                i = vs.index(a)
                if i + 1 < len(vs) and vs[i + 1] == b:
                    longer = Path(vs[: i + 1] + seg.vertices[1:-1] + vs[i + 1:])
                else:
                    j = vs.index(b)
                    longer = Path(vs[: j + 1] + tuple(reversed(seg.vertices[1:-1])) + vs[j + 1:])
                return _check_longer(g, p, longer)
    return None


# ---------------------------------------------------------------------------
# the reduction


def _component_split(g: Graph, p: Path):
    """Partition off-path components by role: two-neighbor ones (red),
    interior-attached larger ones (triple/contract), endpoint-touching
    larger ones (absorb into x or y)."""
    on_path = set(p.vertices)
    comps = components_after_deletion(g, on_path)
    info = []
    for comp in comps:
        attach = sorted(
            {w for v in comp for w in g.neighbors(v) if w in on_path}
        )
        info.append((comp, attach))
    red, triple, endpoint = [], [], []
    for comp, attach in info:
        if len(attach) == 2:
            red.append((comp, attach))
        elif set(attach) & {p.x, p.y}:
            endpoint.append((comp, attach))
        else:
            triple.append((comp, attach))
    return red, triple, endpoint


def _coloring_stage(g: Graph, p: Path, triple_comps):
    """Build the interior auxiliary graph (subpath closed into a cycle
    plus one triangle per big component), 3-color it, and return the
    selected class with the relabeled triples."""
    u, v = p.vertices[1], p.vertices[-2]
    interior = list(p.vertices[1:-1])
    pos = {h: i for i, h in enumerate(interior)}
    triples = []
    for comp, attach in triple_comps:
        chosen = sorted(attach, key=lambda h: pos[h])[:3]
        triples.append((comp, tuple(chosen)))
    edges = set()
    for a, b in zip(interior, interior[1:]):
        edges.add((min(pos[a], pos[b]), max(pos[a], pos[b])))
    skip_uv = any({u, v} <= set(t) for _, t in triples)
    if not skip_uv:
        edges.add((min(pos[u], pos[v]), max(pos[u], pos[v])))
    for _, t in triples:
        for a, b in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2])):
            edges.add((min(pos[a], pos[b]), max(pos[a], pos[b])))
    aux = Graph(len(interior), sorted(edges))
    cyc = Cycle(tuple(range(len(interior))))
    coloring = three_color_cycle_plus(aux, cyc)
    host_coloring = {interior[i]: c for i, c in coloring.items()}
    a_set, relabeled = pick_color_class(
        host_coloring,
        forbidden={u, v},
        triangles=[t for _, t in triples],
    )
    by_triple = {tuple(sorted(t)): (u2, v2, w2) for (u2, v2, w2), (_, t) in zip(relabeled, triples)}
    out = []
    for comp, t in triples:
        out.append((comp, by_triple[tuple(sorted(t))]))
    return a_set, out


def build_reduced_G2(g: Graph, p: Path, a_set, triples) -> ReducedGraph:
    """Reduce the host along the path: path and closing edges black, each
    two-neighbor component a red edge, each triple component contracted
    onto its designated vertex, endpoint components absorbed into y
    (preferred) or x, with all contraction edges blue."""
    x, y = p.x, p.y
    on_path = set(p.vertices)
    red, triple_comps, endpoint = _component_split(g, p)
    if {comp for comp, _ in triples} != {comp for comp, _ in triple_comps}:
        raise ValueError("triples do not match the interior components")
    xy_virtual = not g.has_edge(x, y)
    rg = ReducedGraph((x, y), xy_virtual)
    rg.a_set = frozenset(a_set)
    for v in p.vertices:
        rg.add_vertex(v)
    path_eids = []
    for a, b in zip(p.vertices, p.vertices[1:]):
        path_eids.append(rg.add_edge(a, b, BLACK))
    rg.xy_eid = rg.add_edge(x, y, BLACK)
    rg.cycle_vertices = p.vertices
    rg.cycle_eids = frozenset(path_eids + [rg.xy_eid])
    for comp, attach in red:
        eid = rg.add_edge(attach[0], attach[1], RED)
        rg.red_comp[eid] = comp
    for comp, t in triples:
        rep = t[2]
        rg.reps[rep] = comp
        for v in comp:
            for w in g.neighbors(v):
                if w in on_path and w != rep:
                    eid = rg.add_edge(rep, w, BLUE)
                    rg.blue_info[eid] = (rep, w, comp, (v, w))
    for comp, attach in endpoint:
        rep = y if y in attach else x
        rg.reps[rep] = comp
        for v in comp:
            for w in g.neighbors(v):
                if w in on_path and w != rep:
                    eid = rg.add_edge(rep, w, BLUE)
                    rg.blue_info[eid] = (rep, w, comp, (v, w))
    for v in p.vertices[1:-1]:
        if rg.degree(v) < 3:
            raise InvariantViolation(
                "reduced-graph", f"interior vertex {v} has degree {rg.degree(v)}"
            )
    cyc_keys = {frozenset(e) for e in zip(p.vertices, p.vertices[1:])}
    cyc_keys.add(frozenset((x, y)))
    for a in rg.a_set:
        for b in rg.a_set:
            if a < b and frozenset((a, b)) in cyc_keys:
                raise InvariantViolation(
                    "reduced-graph", "selected class not independent on the cycle"
                )
    return rg


def find_odd_cover_cycle(rg: ReducedGraph) -> MultiCycle:
    """First cycle (deterministic order) through the closing edge that
    covers every odd-degree vertex and differs from the base cycle."""
    x, y = rg.xy
    odd = rg.odd_vertices()
    base = rg.cycle_eids

    def reach_from(cur, blocked):
        seen = {cur}
        stack = [cur]
        while stack:
            a = stack.pop()
            for _, w in rg.adjmap[a]:
                if w not in blocked and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    def dfs(cur, vseq, eids, visited):
        if len(vseq) >= 3:
            for eid, w in rg.sorted_neighbors(cur):
                if w == x and eid != rg.xy_eid:
                    if odd <= visited:
                        cand = frozenset(eids + (eid,))
                        if cand != base:
                            return MultiCycle(vseq, eids + (eid,))
        remaining = odd - visited
        blocked = visited - {cur}
        reach = reach_from(cur, blocked)
        if remaining - reach:
            return None
        if not any(
            w2 == x for r in reach for _, w2 in rg.adjmap[r]
        ):
            return None
        for eid, w in rg.sorted_neighbors(cur):
            if w in visited or w == x:
                continue
            found = dfs(cur=w, vseq=vseq + (w,), eids=eids + (eid,),
                        visited=visited | {w})
            if found is not None:
                return found
        return None

    found = dfs(y, (x, y), (rg.xy_eid,), {x, y})
    if found is None:
        raise InvariantViolation(
            "odd-cover-cycle",
            "no second cycle through xy covering the odd-degree vertices",
        )
    for v in odd:
        if v not in found.vertices:
            raise InvariantViolation("odd-cover-cycle", f"odd vertex {v} missed")
    return found


def compute_stats(rg: ReducedGraph, cp: MultiCycle):
    """All counting quantities of the comparison argument, with their
    internal identities asserted; also returns the maximal blue runs as
    (start index, length) pairs."""
    cp_eids = cp.eid_set()
    missing = len(rg.cycle_eids - cp_eids)
    dropped = len(set(rg.cycle_vertices) - set(cp.vertices))
    blue_on = sum(1 for e in cp.eids if rg.tags[e] == BLUE)
    red_on = sum(1 for e in cp.eids if rg.tags[e] == RED)
    if rg.tags[cp.eids[0]] != BLACK:
        raise InvariantViolation("stats", "cycle does not start on the xy edge")
    runs = []
    i = 0
    L = cp.length
    while i < L:
        if rg.tags[cp.eids[i]] == BLUE:
            j = i
            while j < L and rg.tags[cp.eids[j]] == BLUE:
                j += 1
            runs.append((i, j - i))
            i = j
        else:
            i += 1
    for start, length in runs:
        if length > 2:
            raise InvariantViolation(
                "stats", f"maximal blue run of length {length} > 2"
            )
        if length == 2:
            mid = cp.vertices[start + 1]
            info1 = rg.blue_info[cp.eids[start]]
            info2 = rg.blue_info[cp.eids[start + 1]]
            if info1[0] != mid or info2[0] != mid or info1[2] != info2[2]:
                raise InvariantViolation(
                    "stats", "length-2 blue run not centered on one representative"
                )
    q = len(runs)
    p_long = sum(1 for _, length in runs if length == 2)
    stats = BlueSubpathStats(
        dropped_vertices=dropped,
        missing_edges=missing,
        surplus=missing - 2 * dropped,
        blue_on_cycle=blue_on,
        red_on_cycle=red_on,
        blue_runs=q,
        long_blue_runs=p_long,
    ).check()
    return stats, runs


def lift_to_host(g: Graph, rg: ReducedGraph, cp: MultiCycle, runs):
    """Replace red edges and blue runs of the cover cycle with host paths
    through their components; returns (host cycle, attachments, detail)
    where attachments lists (representative, interior vertex, component)
    for each tight length-2 run."""
    run_at = {start: length for start, length in runs}
    verts = []
    attachments = []
    i = 0
    L = cp.length
    while i < L:
        eid = cp.eids[i]
        a = cp.vertices[i]
        tag = rg.tags[eid]
        if tag == BLACK:
            verts.append(a)
            i += 1
        elif tag == RED:
            b = cp.vertices[(i + 1) % L]
            comp = rg.red_comp[eid]
            seg = _through_component(g, a, b, comp, 3)
            if seg is None:
                raise InvariantViolation(
                    "lift", f"no host path of length >= 3 behind red edge ({a},{b})"
                )
            verts.extend(seg.vertices[:-1])
            i += 1
        else:
            length = run_at[i]
            b = cp.vertices[(i + length) % L]
            comp = rg.blue_info[eid][2]
            seg = _through_component(g, a, b, comp, 2)
            if seg is None:
                raise InvariantViolation(
                    "lift", f"no host path behind blue run at ({a},{b})"
                )
            if length == 2 and seg.length == 2:
                attachments.append(
                    (cp.vertices[i + 1], seg.vertices[1], comp)
                )
            verts.extend(seg.vertices[:-1])
            i += length
    extra = [rg.xy] if rg.xy_virtual else []
    c_star = Cycle(tuple(verts))
    c_star.validate(g, extra_edges=extra)
    stats, _ = compute_stats(rg, cp)
    floor = (
        len(rg.cycle_eids)
        - stats.missing_edges
        + 2 * stats.blue_runs
        + 3 * stats.red_on_cycle
    )
    if c_star.length < floor:
        raise InvariantViolation(
            "lift",
            f"lifted length {c_star.length} below the floor {floor}",
        )
    detail = {"length": c_star.length, "floor": floor}
    return c_star, attachments, detail


# ---------------------------------------------------------------------------
# matching step (tight case)


def _all_cycles_small(adj):
    """All cycles of a small simple graph given as {v: set(w)}; canonical
    (min vertex first, smaller neighbor second)."""
    verts = sorted(adj)
    out = []

    def dfs(s, cur, seq, visited):
        for w in sorted(adj[cur]):
            if w == s and len(seq) >= 3 and seq[1] < seq[-1]:
                out.append(tuple(seq))
            if w <= s or w in visited:
                continue
            seq.append(w)
            visited.add(w)
            dfs(s, w, seq, visited)
            visited.discard(w)
            seq.pop()

    for s in verts:
        dfs(s, s, [s], {s})
    return out


def matching_step(g: Graph, c_star: Cycle, c_host: Cycle, attachments):
    """Tight-case finish: overlay the two equal-length cycles plus one
    attachment edge per dropped representative, compress the shared
    degree-2 runs into a matching, search the small cubic leftover for a
    longer cycle through the matching, and decompress."""
    if not attachments:
        raise InvariantViolation("matching-step", "no attachments in the tight case")
    star_edges = set(c_star.edge_pairs())
    host_edges = set(c_host.edge_pairs())
    aux = {}
    for w, w_star, comp in attachments:
        key = (min(w, w_star), max(w, w_star))
        if key in star_edges | host_edges:
            raise InvariantViolation("matching-step", "attachment edge collides")
        aux[key] = (w, w_star, comp)
    g3_edges = star_edges | host_edges | set(aux)
    deg = {}
    for u, v in g3_edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    high = {v for v, d in deg.items() if d >= 3}

    p_count = len(attachments)
    reps = {w for w, _, _ in attachments}
    stars = {w_star for _, w_star, _ in attachments}
    partners = high - reps - stars

    vs = c_star.vertices
    Lc = len(vs)
    anchors = [i for i, v in enumerate(vs) if v in high]
    if not anchors:
        raise InvariantViolation("matching-step", "no branch vertices on the lift")
    segments = []
    for idx, i in enumerate(anchors):
        j = anchors[(idx + 1) % len(anchors)]
        seg = [vs[i]]
        k = i
        while k != j:
            k = (k + 1) % Lc
            seg.append(vs[k])
        segments.append(tuple(seg))
    matching = {}
    for seg in segments:
        if seg[0] in partners and seg[-1] in partners:
            for a, b in zip(seg, seg[1:]):
                if (min(a, b), max(a, b)) not in host_edges:
                    raise InvariantViolation(
                        "matching-step", "compressed run leaves the base cycle"
                    )
            key = (min(seg[0], seg[-1]), max(seg[0], seg[-1]))
            if key in matching:
                raise InvariantViolation("matching-step", "segment endpoints repeat")
            matching[key] = seg
        elif len(seg) != 2:
            raise InvariantViolation(
                "matching-step", "non-trivial run not between matching endpoints"
            )

    if len(partners) != 2 * p_count or len(matching) != p_count:
        raise InvariantViolation(
            "matching-step",
            f"bipartition sizes off: {len(partners)} partners, {len(matching)} matching edges",
        )

    g4_adj = {v: set() for v in high}
    g4_keys = set(matching) | set(aux)
    for u, v in g3_edges:
        if u in high and v in high:
            g4_keys.add((min(u, v), max(u, v)))
    for u, v in g4_keys:
        g4_adj[u].add(v)
        g4_adj[v].add(u)
    if any(len(s) != 3 for s in g4_adj.values()):
        raise InvariantViolation("matching-step", "compressed graph is not cubic")

    target = 3 * p_count
    qualifying = []
    for seq in _all_cycles_small(g4_adj):
        if len(seq) <= target:
            continue
        keys = {
            (min(a, b), max(a, b))
            for a, b in zip(seq, seq[1:] + seq[:1])
        }
        if set(matching) <= keys:
            qualifying.append((len(seq), seq, keys))
    if not qualifying:
        raise InvariantViolation(
            "matching-step", "no longer cycle through the matching exists"
        )
    qualifying.sort(key=lambda t: (t[0], t[1]))
    _, seq, keys = qualifying[0]

    host_verts = []
    for a, b in zip(seq, seq[1:] + seq[:1]):
        key = (min(a, b), max(a, b))
        if key in matching:
            seg = matching[key]
            piece = seg if seg[0] == a else tuple(reversed(seg))
        elif key in aux:
            w, w_star, comp = aux[key]
            allowed = frozenset(comp) - {w_star}
            found = _through_component(g, w, w_star, allowed, 1)
            if found is None:
                raise InvariantViolation(
                    "matching-step", f"no host route for attachment ({w},{w_star})"
                )
            piece = found.vertices if found.x == a else tuple(reversed(found.vertices))
        else:
            piece = (a, b)
        host_verts.extend(piece[:-1])
    out = Cycle(tuple(host_verts))
    if out.length <= c_host.length:
        raise InvariantViolation("matching-step", "decompressed cycle is not longer")
    return out


# ---------------------------------------------------------------------------
# the extension pipelines


def _path_from_cycle(c: Cycle, x: int, y: int) -> Path:
    vs = list(c.vertices)
    n = len(vs)
    for i in range(n):
        a, b = vs[i], vs[(i + 1) % n]
        if {a, b} == {x, y}:
            rot = vs[(i + 1) % n:] + vs[: (i + 1) % n]
            return Path(tuple(rot if rot[0] == x else tuple(reversed(rot))))
    raise InvariantViolation("checker", "cycle does not contain the xy edge")


def _bootstrap_short_path(g: Graph, p: Path) -> Path:
    """Length-1 inputs predate the machinery: any chordless route around
    the other side of a cycle through xy is longer."""
    x, y = p.x, p.y
    best = None
    stack = [(x, (x,))]
    while stack:
        cur, seq = stack.pop()
        for w in sorted(g.neighbors(cur), reverse=True):
            if w == y and len(seq) >= 2:
                cand = seq + (y,)
                if best is None or len(cand) < len(best):
                    best = cand
                continue
            if w not in seq and w != y:
                if best is None or len(seq) + 2 < len(best):
                    stack.append((w, seq + (w,)))
    if best is None:
        raise InvariantViolation("component-claim", "no detour around a single edge")
    return Path(best)


def extend_path(g: Graph, p: Path):
    """Strictly longer (x,y)-path for an extendable input, with the trace
    of every construction step."""
    trace = ExtensionTrace()
    cls = precheck(g, p)
    if cls.kind != EXTENDABLE:
        raise ValueError(
            f"path is not extendable: {cls.kind}"
            + (f" at {sorted(cls.bound)}" if cls.bound else "")
        )
    trace.add("precheck", classification=cls.kind, path=list(p.vertices))
    if p.length < 2:
        longer = _check_longer(g, p, _bootstrap_short_path(g, p))
        trace.add("component-claim", branch="short-path", path=list(longer.vertices))
        trace.final_path = longer.vertices
        return longer, trace
    direct, certificate = find_direct_extension(g, p)
    if direct is not None:
        trace.add("component-claim", branch="direct", path=list(direct.vertices))
        trace.final_path = direct.vertices
        return direct, trace
    trace.add(
        "component-claim",
        branch="certificate",
        component=sorted(certificate),
    )
    spliced = _adjacent_attachment_splice(g, p)
    if spliced is not None:
        trace.add(
            "component-claim", branch="adjacent-attachment", path=list(spliced.vertices)
        )
        trace.final_path = spliced.vertices
        return spliced, trace
    red, triple_comps, endpoint = _component_split(g, p)
    if triple_comps:
        a_set, triples = _coloring_stage(g, p, triple_comps)
        trace.add(
            "coloring",
            class_a=sorted(a_set),
            triples=[list(t) for _, t in triples],
        )
    else:
        a_set, triples = frozenset(), []
        trace.add("coloring", class_a=[], triples=[])
    rg = build_reduced_G2(g, p, a_set, triples)
    trace.add("reduced-graph", edges=rg.edge_rows())
    cp = find_odd_cover_cycle(rg)
    trace.add("odd-cover-cycle", cycle=list(cp.vertices))
    stats, runs = compute_stats(rg, cp)
    trace.add("stats", **stats.as_dict())
    c_star, attachments, detail = lift_to_host(g, rg, cp, runs)
    trace.add("lift", cycle=list(c_star.vertices), **detail)
    base_len = len(rg.cycle_eids)
    if c_star.length > base_len:
        longer = _check_longer(g, p, _path_from_cycle(c_star, p.x, p.y))
        trace.final_path = longer.vertices
        return longer, trace
    if (
        stats.dropped_vertices != 0
        or stats.red_on_cycle != 0
        or stats.blue_runs != stats.long_blue_runs
        or len(attachments) != stats.long_blue_runs
    ):
        raise InvariantViolation(
            "stats-collapse",
            "lift failed to grow but the tight-case collapse does not hold",
        )
    c_host = Cycle(p.vertices)
    c1p = matching_step(g, c_star, c_host, attachments)
    trace.add("matching-step", cycle=list(c1p.vertices), length=c1p.length)
    longer = _check_longer(g, p, _path_from_cycle(c1p, p.x, p.y))
    trace.final_path = longer.vertices
    return longer, trace


# ---------------------------------------------------------------------------
# adjacent-endpoint machinery


def extend_path_adjacent(g: Graph, p: Path):
    """Extension for the adjacent-endpoint configuration: the closing
    cycle has exactly one chord and it sits at an endpoint.  Removes the
    endpoint and its chord partner, reruns the second-cycle lemma on the
    contracted remainder, lifts, and reinstates both vertices."""
    trace = ExtensionTrace()
    if not is_cubic(g):
        raise ValueError("host graph is not cubic")
    if not connectivity_at_least(g, 3):
        raise ValueError("host graph is not 3-connected")
    p.validate(g)
    x, y = p.x, p.y
    if not g.has_edge(x, y):
        raise ValueError("endpoints are not adjacent")
    flipped = False
    c_host = Cycle(p.vertices)
    chord_set = sorted(chords(g, c_host))
    if len(chord_set) != 1:
        raise ValueError(
            f"closing cycle must have exactly one chord, found {len(chord_set)}"
        )
    e = chord_set[0]
    if y in e and x not in e:
        p = p.reversed()
        x, y = p.x, p.y
        flipped = True
    if x not in e:
        raise ValueError("the chord is not incident to an endpoint")
    w = e[0] if e[1] == x else e[1]
    if c_host.length < 5:
        raise ValueError("closing cycle shorter than 5")
    vs = p.vertices  # x .. w .. y along the cycle
    a = vs[1]
    wi = vs.index(w)
    b, c = vs[wi - 1], vs[wi + 1]
    trace.add("precheck", x=x, y=y, w=w, a=a, b=b, c=c, path=list(vs))

    comps = components_after_deletion(g, set(vs))
    spliced = _adjacent_attachment_splice(
        g, p, cycle_pairs=list(zip(vs, vs[1:])) + [(y, x)]
    )
    if len(comps) <= 1:
        if spliced is None:
            raise InvariantViolation(
                "component-claim", "single off-cycle component admits no splice"
            )
        trace.add("component-claim", branch="single-component", path=list(spliced.vertices))
        return _finish_adjacent(g, p, spliced, trace, flipped)
    if spliced is not None:
        trace.add("component-claim", branch="adjacent-attachment", path=list(spliced.vertices))
        return _finish_adjacent(g, p, spliced, trace, flipped)

    shared = {a, y} & {b, c}
    case = "case-1" if not shared else "case-2"
    if case == "case-2":
        if y in {b, c}:
            # the classical shape: relabel so the shared vertex is c (= y)
            if b == y:
                b, c = c, b
            splice = _ay_component_splice(g, p, comps, a, y, b, w)
            if splice is not None:
                trace.add(case, branch="ay-component-splice", path=list(splice.vertices))
                return _finish_adjacent(g, p, splice, trace, flipped)
        else:
            # mirrored shape: the shared vertex is a; relabel so b = a
            if c == a:
                b, c = c, b

    cprime_vertices = vs[1:wi] + vs[wi + 1:]  # a .. b, c .. y
    new_edges = [(min(a, y), max(a, y)), (min(b, c), max(b, c))]
    on_cycle = set(vs)

    triples = []
    for comp in comps:
        attach = sorted(
            {z for v2 in comp for z in g.neighbors(v2) if z in on_cycle}
        )
        if len(attach) < 3:
            raise ValueError(
                f"component {sorted(comp)} has fewer than three attachments"
            )
        order = {h: i for i, h in enumerate(vs)}
        chosen = tuple(sorted(attach, key=lambda h: order[h])[:3])
        triples.append((comp, chosen))

    a_set, relabeled = _adjacent_coloring(
        g, cprime_vertices, new_edges, triples, forbidden={a, y}, trace=trace, case=case
    )
    inst, designated_edge, host_of = _adjacent_lemma_instance(
        g, cprime_vertices, new_edges, relabeled, a_set, b, c
    )
    cert = second_hamilton_cycle(inst, designated_edge[0], designated_edge[1])
    c1_host_vertices = tuple(host_of[v] for v in cert.c_prime.vertices)
    trace.add(
        "odd-cover-cycle",
        cycle=list(c1_host_vertices),
        exchange_vertex=host_of[cert.exchange_vertex],
    )

    lifted = _lift_adjacent(
        g, cprime_vertices, new_edges, relabeled, c1_host_vertices, trace, case
    )
    reinstated = _reinstate(g, lifted, x, y, w, a, b, c, shared, case)
    base_cycle = Cycle(p.vertices)
    if reinstated.length <= base_cycle.length:
        raise InvariantViolation(case, "reinstated cycle is not longer")
    trace.add(case, cycle=list(reinstated.vertices), length=reinstated.length)
    longer = _path_from_cycle(reinstated, x, y)
    return _finish_adjacent(g, p, longer, trace, flipped)


def _finish_adjacent(g, p, longer, trace, flipped):
    longer = _check_longer(g, p, longer)
    if flipped:
        longer = longer.reversed()
    trace.final_path = longer.vertices
    return longer, trace


def _ay_component_splice(g, p, comps, a, y, b, w):
    """Component seeing both a and y: route x,w,b back along the cycle to
    a and through the component to y."""
    vs = p.vertices
    for comp in comps:
        attach = {z for v2 in comp for z in g.neighbors(v2) if z in set(vs)}
        if a in attach and y in attach:
            seg = _through_component(g, a, y, comp, 2)
            wi = vs.index(w)
            back = tuple(reversed(vs[1:wi]))  # b .. a
            cand = Path((vs[0], w) + back + seg.vertices[1:])
            return _check_longer(g, p, cand)
    return None


def _adjacent_coloring(g, cprime_vertices, new_edges, triples, forbidden, trace, case):
    """Color the reduced cycle plus attachment triangles (parallel copies
    dropped) and pick the class avoiding the reinstatement pair."""
    pos = {h: i for i, h in enumerate(cprime_vertices)}
    m = len(cprime_vertices)
    edges = set()
    for i in range(m):
        a2, b2 = cprime_vertices[i], cprime_vertices[(i + 1) % m]
        edges.add((min(pos[a2], pos[b2]), max(pos[a2], pos[b2])))
    for _, t in triples:
        for a2, b2 in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2])):
            edges.add((min(pos[a2], pos[b2]), max(pos[a2], pos[b2])))
    aux = Graph(m, sorted(edges))
    cyc = Cycle(tuple(range(m)))
    coloring = three_color_cycle_plus(aux, cyc)
    host_coloring = {cprime_vertices[i]: c2 for i, c2 in coloring.items()}
    a_set, relabeled = pick_color_class(
        host_coloring, forbidden=forbidden, triangles=[t for _, t in triples]
    )
    trace.add(
        case,
        branch="coloring",
        class_a=sorted(a_set),
        triples=[list(t) for _, t in triples],
    )
    by_triple = {
        tuple(sorted(t)): lab for lab, (_, t) in zip(relabeled, triples)
    }
    out = [(comp, by_triple[tuple(sorted(t))]) for comp, t in triples]
    return a_set, out


def _adjacent_lemma_instance(g, cprime_vertices, new_edges, relabeled, a_set, b, c):
    """Contract every off-cycle component onto its designated vertex and
    package the result as a lemma instance (dense ids); returns the
    instance, the designated lemma edge, and the dense->host map."""
    pos = {h: i for i, h in enumerate(sorted(cprime_vertices))}
    host_of = {i: h for h, i in pos.items()}
    on_cycle = set(cprime_vertices)
    m = len(cprime_vertices)
    edges = set()
    ring = list(cprime_vertices)
    for i in range(m):
        a2, b2 = ring[i], ring[(i + 1) % m]
        edges.add((min(pos[a2], pos[b2]), max(pos[a2], pos[b2])))
    for comp, (u2, v2, w2) in relabeled:
        for v3 in comp:
            for z in g.neighbors(v3):
                if z in on_cycle and z != w2:
                    edges.add((min(pos[w2], pos[z]), max(pos[w2], pos[z])))
    gd = Graph(m, sorted(edges))
    ring_dense = tuple(pos[h] for h in ring)
    cyc = Cycle(ring_dense)
    a_dense = frozenset(pos[h] for h in a_set)
    cyc_keys = cyc.edge_set()

    arcs = []
    ring2 = list(ring_dense)
    k = len(a_dense)
    start = next(i for i, v in enumerate(ring2) if v in a_dense)
    order = ring2[start:] + ring2[:start]
    cur = []
    for v in order[1:]:
        if v in a_dense:
            arcs.append(tuple(cur))
            cur = []
        else:
            cur.append(v)
    arcs.append(tuple(cur))
    if len(arcs) != k or any(not arc for arc in arcs):
        raise InvariantViolation(
            "case-instance", "class removal does not leave one arc per member"
        )
    bd, cd = pos[b], pos[c]
    if b in a_set or c in a_set:
        # designate the surgery edge itself so the lemma forces it onto
        # the second cycle; its non-class endpoint heads the last arc
        inside = cd if b in a_set else bd
        lemma_x, lemma_y = inside, (bd if inside == cd else cd)
        special = next(i for i, arc in enumerate(arcs) if inside in arc)
    else:
        # the surgery edge sits inside an arc and survives automatically;
        # designate that arc and its outward cycle edge
        special = next(i for i, arc in enumerate(arcs) if bd in arc)
        lemma_x = arcs[special][0]
        ring_pos = {v: i for i, v in enumerate(ring2)}
        i0 = ring_pos[lemma_x]
        for cand in (ring2[i0 - 1], ring2[(i0 + 1) % m]):
            if cand in a_dense:
                lemma_y = cand
                break
        else:
            raise InvariantViolation("case-instance", "arc endpoint not beside A")
    arcs = [arc for i, arc in enumerate(arcs) if i != special] + [arcs[special]]
    inst = LemmaInstance(
        g=gd, cycle=cyc, a_set=a_dense, components=tuple(arcs)
    ).check()
    return inst, (lemma_x, lemma_y), host_of


def _lift_adjacent(g, cprime_vertices, new_edges, relabeled, c1_vertices, trace, case):
    """Replace contraction chords of the found cycle by host paths through
    their components; the result lives in the host minus the reinstated
    pair, plus the two surgery edges."""
    on_cycle = set(cprime_vertices)
    comp_of_rep = {w2: comp for comp, (_, _, w2) in relabeled}
    ring_keys = set()
    m = len(cprime_vertices)
    for i in range(m):
        a2, b2 = cprime_vertices[i], cprime_vertices[(i + 1) % m]
        ring_keys.add((min(a2, b2), max(a2, b2)))
    L = len(c1_vertices)
    verts = []
    runs = 0
    long_runs = 0
    i = 0
    steps = [
        (c1_vertices[i], c1_vertices[(i + 1) % L]) for i in range(L)
    ]
    is_chord = [
        (min(a2, b2), max(a2, b2)) not in ring_keys for a2, b2 in steps
    ]
    start = next((i for i, ch in enumerate(is_chord) if not ch), None)
    if start is None:
        raise InvariantViolation(case, "found cycle uses no ring edge")
    order = list(range(start, L)) + list(range(start))
    idx = 0
    while idx < L:
        i = order[idx]
        a2, b2 = steps[i]
        if not is_chord[i]:
            verts.append(a2)
            idx += 1
            continue
        j = idx
        while j < L and is_chord[order[j]]:
            j += 1
        run = [order[t] for t in range(idx, j)]
        if len(run) > 2:
            raise InvariantViolation(case, f"blue run of length {len(run)}")
        entry = steps[run[0]][0]
        exit_ = steps[run[-1]][1]
        if len(run) == 2:
            rep = steps[run[0]][1]
            comp = comp_of_rep[rep]
            long_runs += 1
        else:
            e1, e2 = steps[run[0]]
            rep = e1 if e1 in comp_of_rep else e2
            comp = comp_of_rep[rep]
        runs += 1
        seg = _through_component(g, entry, exit_, comp, 2)
        if seg is None:
            raise InvariantViolation(case, "no host path behind a contraction chord")
        verts.extend(seg.vertices[:-1])
        idx = j
    if runs <= long_runs:
        raise InvariantViolation(
            case, f"accounting needs more runs than length-2 runs ({runs} vs {long_runs})"
        )
    trace.add(case, branch="lift", blue_runs=runs, long_blue_runs=long_runs)
    cyc = Cycle(tuple(verts))
    cyc.validate(g, extra_edges=new_edges)
    return cyc


def _reinstate(g, lifted, x, y, w, a, b, c, shared, case):
    """Swap the two surgery edges for the four host edges through x and w."""
    vs = list(lifted.vertices)
    L = len(vs)

    def insert_between(seq, p2, q2, mid):
        n2 = len(seq)
        for i in range(n2):
            a2, b2 = seq[i], seq[(i + 1) % n2]
            if {a2, b2} == {p2, q2}:
                out = seq[: i + 1] + [mid] + seq[i + 1:]
                return out
        raise InvariantViolation(case, f"surgery edge ({p2},{q2}) missing from lift")

    if case == "case-1" or not shared:
        vs = insert_between(vs, a, y, x)
        vs = insert_between(vs, b, c, w)
    else:
        s = next(iter(shared))
        if s == y:
            vs = insert_between(vs, a, y, x)
            vs = insert_between(vs, y, b, w)
        else:  # s == a: the mirrored shape
            vs = insert_between(vs, y, a, x)
            vs = insert_between(vs, a, c, w)
    cyc = Cycle(tuple(vs))
    cyc.validate(g)
    if cyc.length != lifted.length + 2:
        raise InvariantViolation(case, "reinstatement did not add exactly two edges")
    return cyc


# ---------------------------------------------------------------------------
# verifiers


@dataclass(frozen=True)
class PairResult:
    max_length: int
    min_bound: int
    witness: tuple  # a path achieving the minimum


@dataclass(frozen=True)
class ZhanReport:
    mode: str
    threshold: int
    pairs: dict
    minimum: int
    violations: tuple  # ((x, y), witness path) below threshold

    @property
    def passed(self) -> bool:
        return not self.violations


def verify_zhan(g: Graph, mode: str = "all-pairs") -> ZhanReport:
    """Minimum internal bound-vertex count over longest (x,y)-paths for
    every requested pair; threshold 1 for all pairs in 2-connected mode,
    2 for adjacent pairs in 3-connected mode."""
    if mode not in ("all-pairs", "adjacent-pairs"):
        raise ValueError(f"mode must be all-pairs or adjacent-pairs, got {mode!r}")
    if not is_cubic(g):
        raise ValueError("graph is not cubic")
    need_k = 2 if mode == "all-pairs" else 3
    if not connectivity_at_least(g, need_k):
        raise ValueError(f"graph is not {need_k}-connected")
    threshold = 1 if mode == "all-pairs" else 2
    if mode == "all-pairs":
        pairs = [(x, y) for x in range(g.n) for y in range(x + 1, g.n)]
    else:
        pairs = sorted(set(g.edges))
    results = {}
    violations = []
    minimum = None
    for x, y in pairs:
        rep = longest_xy_paths(g, x, y, mode="all")
        counts = [len(b) for b in rep.bound_sets]
        mb = min(counts)
        wit = rep.witnesses[counts.index(mb)].vertices
        results[(x, y)] = PairResult(rep.max_length, mb, wit)
        if minimum is None or mb < minimum:
            minimum = mb
        if mb < threshold:
            violations.append(((x, y), wit))
    return ZhanReport(
        mode=mode,
        threshold=threshold,
        pairs=results,
        minimum=minimum if minimum is not None else 0,
        violations=tuple(violations),
    )


@dataclass(frozen=True)
class ChordReport:
    cycle_length: int
    cycle_count: int
    min_chords: int
    witness: tuple
    cross_check: dict


def one_chord_cross_check(g: Graph, cycle: Cycle) -> dict:
    """For a longest cycle with exactly one chord: opening the cycle at an
    edge incident to the chord must leave that chord's far endpoint as the
    unique internal bound vertex of the resulting path."""
    ch = sorted(chords(g, cycle))
    if len(ch) != 1:
        raise ValueError("cross-check applies to cycles with exactly one chord")
    v1, vt = ch[0]
    vs = cycle.vertices
    i = vs.index(v1)
    nbr_on_cycle = [vs[i - 1], vs[(i + 1) % len(vs)]]
    vs_edge = (v1, min(nbr_on_cycle))
    path = _path_from_cycle(cycle, vs_edge[0], vs_edge[1])
    bound = internal_bound_vertices(g, path)
    return {
        "chord": ch[0],
        "opened_edge": vs_edge,
        "path": path.vertices,
        "bound_vertices": tuple(sorted(bound)),
        "unique_bound_is_far_endpoint": set(bound) == {vt},
    }


def verify_chords(g: Graph) -> ChordReport:
    """Minimum chord count over all longest cycles of a 3-connected cubic
    graph; if a one-chord cycle ever showed up, the report would attach
    the contradiction probe for it."""
    if not is_cubic(g):
        raise ValueError("graph is not cubic")
    if not connectivity_at_least(g, 3):
        raise ValueError("graph is not 3-connected")
    cycles = longest_cycles(g, mode="all")
    counts = [(len(chords(g, c)), c) for c in cycles]
    counts.sort(key=lambda t: (t[0], t[1].vertices))
    min_chords, witness = counts[0]
    cross = {}
    if min_chords == 1:
        cross = one_chord_cross_check(g, witness)
    return ChordReport(
        cycle_length=cycles[0].length,
        cycle_count=len(cycles),
        min_chords=min_chords,
        witness=witness.vertices,
        cross_check=cross,
    )
