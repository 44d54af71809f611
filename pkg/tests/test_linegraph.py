import itertools
import random

import networkx as nx
import pytest

from gamma3_lab.canon import are_isomorphic
from gamma3_lab.catalog import claw, complete, wagner_plus, wagner_plus_multigraph, wheel
from gamma3_lab.closure import local_completion
from gamma3_lab.detect import find_induced
from gamma3_lab.graph import Multigraph, SimpleGraph, is_connected, vertex_connectivity
from gamma3_lab.linegraph import (contract_to_pendant, is_essentially_k_edge_connected,
                                  is_line_graph_of_multigraph, krausz_partition, line_graph,
                                  preimage)

from conftest import random_multigraph


def from_nx(h):
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return SimpleGraph.from_edges(len(index), [(index[a], index[b]) for a, b in h.edges()])


def simplicial_pendant_bijection(h: Multigraph, g: SimpleGraph) -> bool:
    return all(g.is_simplicial(i) == h.is_pendant(i) for i in range(h.m))


def test_line_graph_of_simple_graph_matches_networkx():
    rng = random.Random(51)
    for _ in range(100):
        h = random_multigraph(rng, 12, 8)
        simple = Multigraph.from_edges(h.n, list(h.multiplicities()))
        ours = line_graph(simple)
        theirs = nx.line_graph(nx.Graph([tuple(e) for e in simple.edges]))
        assert are_isomorphic(ours, from_nx(theirs)) is not None


def test_small_preimages():
    assert are_isomorphic(SimpleGraph.complete(1), line_graph(preimage(SimpleGraph.complete(1))))
    h = preimage(complete(3))
    assert sorted(h.degrees()) == [1, 1, 1, 3]  # the claw, all edges pendant
    assert preimage(wheel(5)) is None
    with pytest.raises(ValueError):
        preimage(SimpleGraph.empty(2))


def test_round_trip_and_pendant_bijection():
    rng = random.Random(52)
    for _ in range(300):
        h = random_multigraph(rng, 14, 9)
        g = line_graph(h)
        back = preimage(g)
        assert back is not None
        assert line_graph(back).adj == g.adj
        assert simplicial_pendant_bijection(back, g)


def test_recognition_agrees_with_krausz_on_atlas():
    checked = 0
    for h in nx.graph_atlas_g()[1:]:
        g = from_nx(h)
        if not is_connected(g):
            continue
        assert bool(is_line_graph_of_multigraph(g)) == (krausz_partition(g) is not None)
        checked += 1
    assert checked == 996


def test_contraction_matches_local_completion():
    rng = random.Random(53)
    for _ in range(150):
        h = random_multigraph(rng, 10, 7)
        e = rng.randrange(h.m)
        g = line_graph(h)
        contracted = line_graph(contract_to_pendant(h, e))
        assert contracted.adj == local_completion(g, e).adj


def test_wagner_plus_sharpness_shape():
    h = wagner_plus_multigraph()
    g = line_graph(h)
    assert (g.n, g.number_of_edges()) == (20, 48)
    assert vertex_connectivity(g) == 3
    assert is_essentially_k_edge_connected(h, 3)
    assert not is_essentially_k_edge_connected(h, 4)
    assert are_isomorphic(SimpleGraph.from_edges(h.n, h.edges), wagner_plus().with_names(None))
    assert are_isomorphic(preimage(g).underlying_simple(), wagner_plus().with_names(None))


def test_line_graphs_are_claw_free_and_w5_free():
    # no multigraph F has L(F) = W5, so line graphs never contain it
    rng = random.Random(54)
    for _ in range(100):
        g = line_graph(random_multigraph(rng, 12, 8))
        assert find_induced(g, claw()) is None
        assert find_induced(g, wheel(5)) is None


def test_pattern_freeness_transfers_to_edge_subsets():
    # for X = W4: L(H) contains X iff some edge subset F of H has L(F) isomorphic to X
    x = wheel(4).with_names(None)
    assert preimage(x) is not None
    rng = random.Random(55)
    hits = 0
    for _ in range(60):
        h = random_multigraph(rng, 9, 6)
        g = line_graph(h)
        subset_hit = any(
            are_isomorphic(line_graph(Multigraph.from_edges(h.n, [h.edges[i] for i in s])), x)
            for s in itertools.combinations(range(h.m), x.n))
        assert (find_induced(g, x) is not None) == subset_hit
        hits += subset_hit
    assert hits > 0
