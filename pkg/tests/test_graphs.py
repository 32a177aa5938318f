import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from chordlab.graphs import (
    Graph,
    build_graph,
    components_after_deletion,
    connectivity_at_least,
    contract_set,
    is_cubic,
)
from chordlab.search import longest_cycles


def test_build_k4():
    g = build_graph(4, list(itertools.combinations(range(4), 2)))
    assert g.degrees() == (3, 3, 3, 3)
    assert g.simple


def test_build_path():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert g.degrees() == (1, 2, 1)


def test_build_petersen():
    g = oracles.petersen()
    assert g.m == 15
    assert is_cubic(g)


def test_build_rejects_bad_input():
    with pytest.raises(ValueError):
        build_graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        build_graph(3, [(1, 1)])


def test_multigraph_flag():
    g = Graph(3, [(0, 1), (0, 1), (1, 2)])
    assert not g.simple
    assert g.degree(0) == 2


def test_is_cubic():
    assert is_cubic(oracles.k4())
    assert not is_cubic(oracles.cycle_graph(5))
    assert is_cubic(oracles.petersen())


def test_connectivity_small_cases():
    assert connectivity_at_least(oracles.k4(), 3)
    c5 = oracles.cycle_graph(5)
    assert connectivity_at_least(c5, 2)
    assert not connectivity_at_least(c5, 3)


def test_connectivity_bridge_host():
    g = oracles.two_k4_minus_edge_bridge()
    assert is_cubic(g)
    assert connectivity_at_least(g, 2)
    assert not connectivity_at_least(g, 3)


def test_connectivity_chain():
    for g in (oracles.k4(), oracles.prism(), oracles.petersen(),
              oracles.two_k4_minus_edge_bridge(), oracles.cycle_graph(6)):
        if connectivity_at_least(g, 3):
            assert connectivity_at_least(g, 2)
        if connectivity_at_least(g, 2):
            assert connectivity_at_least(g, 1)


def test_connectivity_against_menger():
    zoo = [oracles.k4(), oracles.k33(), oracles.prism(), oracles.petersen(),
           oracles.two_k4_minus_edge_bridge(), oracles.cycle_graph(7),
           oracles.path_graph(5)]
    for g in zoo:
        kappa = oracles.vertex_connectivity_menger(g)
        for k in (1, 2, 3):
            assert connectivity_at_least(g, k) == (kappa >= k and g.n > k)


def test_components_spanning_deletion():
    g = oracles.k4()
    assert components_after_deletion(g, {0, 1, 2, 3}) == ()


def test_components_petersen_minus_9cycle():
    g = oracles.petersen()
    nine = longest_cycles(g, mode="first")[0]
    assert nine.length == 9
    comps = components_after_deletion(g, set(nine.vertices))
    assert len(comps) == 1 and len(comps[0]) == 1


def test_components_antipodal():
    g = oracles.cycle_graph(6)
    comps = components_after_deletion(g, {0, 3})
    assert sorted(len(c) for c in comps) == [2, 2]


def test_components_cover_and_separate():
    g = oracles.petersen()
    removed = {0, 3, 7}
    comps = components_after_deletion(g, removed)
    union = set().union(*comps) if comps else set()
    assert union == set(range(g.n)) - removed
    for a, b in itertools.combinations(comps, 2):
        assert not any(g.has_edge(u, v) for u in a for v in b)


def test_contract_identity():
    g = oracles.k4()
    h, cmap = contract_set(g, {2}, 2)
    assert h == g
    assert cmap.new_to_old[2] == frozenset({2})


def test_contract_triangle_in_k4():
    g = oracles.k4()
    h, cmap = contract_set(g, {1, 2, 3}, 1)
    # the triangle's internal edges become self-loops and vanish
    assert h.n == 2
    assert sorted(h.edges) == [(0, 1), (0, 1), (0, 1)]
    assert not h.simple


def test_contract_pulls_attachments_onto_representative():
    # one off-path vertex attached to four path vertices; contracting it
    # onto one of them hands that vertex the other three edges
    g = Graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5),
                  (6, 1), (6, 2), (6, 4), (6, 5)])
    h, cmap = contract_set(g, {6}, 4)
    assert h.degree(4) == 2 + 3
    assert cmap.new_to_old[4] == frozenset({4, 6})


def test_contract_requires_adjacency():
    g = oracles.cycle_graph(6)
    with pytest.raises(ValueError):
        contract_set(g, {2, 3}, 0)


def test_contract_degree_budget():
    # total degree drops by exactly twice the removed self-loops
    g = oracles.prism()
    block = {0, 1, 2}
    inside = sum(1 for u, v in g.edges if u in block and v in block)
    h, _ = contract_set(g, block, 0)
    assert sum(h.degrees()) == sum(g.degrees()) - 2 * inside


@settings(max_examples=60, deadline=None)
@given(st.integers(4, 9), st.integers(0, 10_000))
def test_components_partition_random(n, seed):
    import random

    rng = random.Random(seed)
    edges = {
        (a, b)
        for a in range(n) for b in range(a + 1, n)
        if rng.random() < 0.4
    }
    g = Graph(n, sorted(edges))
    removed = {v for v in range(n) if rng.random() < 0.3}
    comps = components_after_deletion(g, removed)
    union = set().union(*comps) if comps else set()
    assert union == set(range(n)) - removed
    assert sum(len(c) for c in comps) == len(union)
