"""Hypothesis versions of the core invariants."""

import itertools

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from gamma3_lab.catalog import claw, cycle, path
from gamma3_lab.closure import local_completion, local_completion_set
from gamma3_lab.detect import find_induced, is_free
from gamma3_lab.enumeration import EnumerationTask, enumerate_free_extensions, naive_free_extensions
from gamma3_lab.graph import Multigraph, SimpleGraph
from gamma3_lab.hamilton import has_ham_path
from gamma3_lab.linegraph import line_graph, preimage

import oracles

SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return SimpleGraph.from_edges(n, [p for p, on in zip(pairs, mask) if on])


@st.composite
def multigraphs(draw, max_edges=10):
    # a connected edge list: each new edge touches a vertex already used
    m = draw(st.integers(1, max_edges))
    edges, used = [], [0]
    for _ in range(m):
        a = draw(st.sampled_from(used))
        b = draw(st.integers(0, len(used)).filter(lambda b: b != a))
        edges.append((a, b))
        if b == len(used):
            used.append(b)
    return Multigraph.from_edges(len(used), edges)


@SETTINGS
@given(graphs(min_n=2), st.data())
def test_local_completion_order_does_not_matter(g, data):
    M = data.draw(st.lists(st.integers(0, g.n - 1), min_size=1, max_size=3, unique=True))
    ref = local_completion_set(g, M).adj
    assert all(local_completion_set(g, p).adj == ref for p in itertools.permutations(M))


@SETTINGS
@given(graphs(min_n=2), st.data())
def test_completion_keeps_simplicial_vertices(g, data):
    x = data.draw(st.integers(0, g.n - 1))
    h = local_completion(g, x)
    assert set(g.simplicial_vertices()) <= set(h.simplicial_vertices())
    assert h.is_simplicial(x)


@SETTINGS
@given(multigraphs())
def test_line_graphs_round_trip(h):
    g = line_graph(h)
    back = preimage(g)
    assert back is not None and line_graph(back).adj == g.adj
    assert all(g.is_simplicial(e) == back.is_pendant(e) for e in range(back.m))
    assert is_free(g, [claw()])


@SETTINGS
@given(multigraphs(), st.data())
def test_completion_of_line_graph_stays_claw_free(h, data):
    g = line_graph(h)
    x = data.draw(st.integers(0, g.n - 1))
    assert is_free(local_completion(g, x), [claw()])


@SETTINGS
@given(graphs(max_n=8))
def test_hamiltonian_path_pairs(g):
    want = oracles.dp_end_pairs(g)
    got = {(a, b) for a, b in itertools.combinations(range(g.n), 2) if has_ham_path(g, a, b) is not None}
    assert got == want


@SETTINGS
@given(graphs(min_n=4, max_n=8), st.sampled_from([claw(), path(4), cycle(4)]))
def test_witnesses_are_induced_copies(g, pat):
    emb = find_induced(g, pat)
    if emb is None:
        return
    img = emb.image()
    assert len(set(img)) == pat.n
    for a, b in itertools.combinations(range(pat.n), 2):
        assert pat.has_edge(a, b) == g.has_edge(img[a], img[b])


@SETTINGS
@given(graphs(min_n=4, max_n=8), st.data(), st.sampled_from([[claw()], [path(4)], [cycle(4), claw()]]))
def test_engine_agrees_with_naive(g, data, filters):
    non = g.non_edges()
    if not non:
        return
    free = data.draw(st.lists(st.sampled_from(non), min_size=1, max_size=10, unique=True))
    task = EnumerationTask(g, free, filters)
    rep = enumerate_free_extensions(task, prefix_depth=data.draw(st.integers(0, 4)))
    assert rep.labeled_count == len(naive_free_extensions(task))
