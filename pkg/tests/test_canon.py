import random

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from gamma3_lab.canon import (are_isomorphic, automorphisms, canonical_form, canonical_labeling,
                              isomorphisms)
from gamma3_lab.catalog import Gamma, make_F0, petersen, wagner
from gamma3_lab.graph import SimpleGraph

from conftest import random_graph


def from_nx(h):
    nodes = sorted(h.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return SimpleGraph.from_edges(len(nodes), [(index[a], index[b]) for a, b in h.edges()])


def test_canonical_form_separates_the_atlas():
    # every atlas graph is a distinct isomorphism class
    forms = [canonical_form(from_nx(h)) for h in nx.graph_atlas_g()]
    assert len(set(forms)) == len(forms) == 1253


def test_canonical_form_invariant_under_relabelling():
    rng = random.Random(1)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 11), rng.random())
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_form(g.relabel(perm)) == canonical_form(g)
        lab = canonical_labeling(g)
        assert sorted(lab) == list(range(g.n))


def test_are_isomorphic_agrees_with_networkx():
    rng = random.Random(2)
    for _ in range(400):
        n = rng.randint(1, 8)
        p = rng.random()
        g1, g2 = random_graph(rng, n, p), random_graph(rng, n, p)
        if rng.random() < 0.4:
            perm = list(range(n))
            rng.shuffle(perm)
            g2 = g1.relabel(perm)
        want = nx.is_isomorphic(g1.to_networkx(), g2.to_networkx())
        emb = are_isomorphic(g1, g2)
        assert (emb is not None) == want
        assert (canonical_form(g1) == canonical_form(g2)) == want
        if emb is not None:
            assert all(g1.has_edge(a, b) == g2.has_edge(emb.mapping[a], emb.mapping[b])
                       for a in range(n) for b in range(n) if a != b)


def test_automorphism_counts_agree_with_networkx():
    rng = random.Random(3)
    for _ in range(150):
        g = random_graph(rng, rng.randint(1, 6), rng.random())
        want = sum(1 for _ in GraphMatcher(g.to_networkx(), g.to_networkx()).isomorphisms_iter())
        assert len(automorphisms(g)) == want


def test_known_group_orders():
    assert len(automorphisms(petersen())) == 120
    assert len(automorphisms(wagner())) == 16
    assert len(automorphisms(make_F0())) == 4
    assert len(automorphisms(Gamma(3))) == 8


def test_coloured_isomorphisms_respect_colours():
    g = Gamma(3)
    colours = ["a" if g.name(v) in ("t1", "t2") else "b" for v in range(g.n)]
    for iso in isomorphisms(g, g, colours, colours):
        assert all(colours[iso[v]] == colours[v] for v in range(g.n))
    # the swaps t1<->t2 and t3<->t4 survive, the end-to-end reflection does not
    assert len(list(isomorphisms(g, g, colours, colours))) == 4


def test_respect_labels_distinguishes_names():
    a = SimpleGraph.from_named_edges(["u", "v", "w"], [("u", "v")])
    b = SimpleGraph.from_named_edges(["u", "v", "w"], [("u", "w")])
    assert are_isomorphic(a, b) is not None
    assert are_isomorphic(a, b, respect_labels=True) is None
    assert canonical_form(a, respect_labels=True) != canonical_form(b, respect_labels=True)
