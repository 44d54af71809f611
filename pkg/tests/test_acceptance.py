"""Acceptance suite: one test (or group) per criterion, summarised at the end of the run."""

import itertools
import random

import pytest

from gamma3_lab.campaigns import (CASE22_CURVED_EDGES, CASE22_SURVIVOR_EDGES, _named_pairs,
                                  campaign_tails, campaign_w4_case1, campaign_w4_case22,
                                  campaign_w4_case22_followup, case22_task)
from gamma3_lab.canon import are_isomorphic
from gamma3_lab.catalog import (B, FI_EXTRA_EDGES, Z, claw, path, petersen_example_multigraph,
                                wagner_plus_multigraph)
from gamma3_lab.closure import HCOracle, is_feasible, local_completion
from gamma3_lab.detect import ENDGAMES, is_free
from gamma3_lab.graph import vertex_connectivity
from gamma3_lab.hamilton import has_ham_path, is_hamilton_connected
from gamma3_lab.linegraph import line_graph, preimage

import oracles
import props
from conftest import random_graph, random_multigraph

criterion = pytest.mark.criterion


@criterion(1, "Case 1: ten survivor classes matching the published edge lists")
def test_case1_campaign():
    rep, mapping = campaign_w4_case1()
    assert rep.class_count == 10
    assert sorted(mapping) == sorted(FI_EXTRA_EDGES) == list(range(1, 11))
    assert len({tuple(c) for c in mapping.values()}) == 10


@criterion(2, "Subcase 2.2: variant a empty, variant b one class, forced follow-up empty")
def test_case22_variant_a():
    assert campaign_w4_case22("a").labeled_count == 0


@criterion(2, "Subcase 2.2: variant a empty, variant b one class, forced follow-up empty")
def test_case22_variant_b():
    # over all 32 pairs the single class also carries the four straight drawn edges
    rep = campaign_w4_case22("b")
    assert rep.class_count == 1
    task = case22_task("b")
    full = _named_pairs(task, CASE22_SURVIVOR_EDGES)
    assert any(set(s["edges"]) == full for s in rep.survivors)
    # with those four edges in the base, the class is exactly the listed ten edges
    rep = campaign_w4_case22("b", drawn_base=True)
    task = case22_task("b", drawn_base=True)
    assert rep.class_count == 1
    want = _named_pairs(task, CASE22_CURVED_EDGES)
    assert want == _named_pairs(task, [(w, t) for w in ("w1", "w4") for t in ("p4", "t3", "t4")]
                                + [(w, t) for w in ("w2", "w3") for t in ("t3", "t4")])
    assert any(set(s["edges"]) == want for s in rep.survivors)


@criterion(2, "Subcase 2.2: variant a empty, variant b one class, forced follow-up empty")
def test_case22_followup():
    assert campaign_w4_case22_followup().labeled_count == 0


@criterion(3, "Tail campaigns: no survivors for any F_i, combination or attachment")
@pytest.mark.parametrize("i", range(1, 11))
def test_tail_campaign(i):
    reports = campaign_tails(i)
    assert reports and sum(r.labeled_count for r in reports) == 0


@criterion(4, "L(W+) is claw-free, 3-connected, not Hamilton-connected, P10-, Z8- and B_ij-free")
def test_sharpness_example():
    g = line_graph(wagner_plus_multigraph())
    assert (g.n, g.number_of_edges()) == (20, 48)
    assert is_free(g, [claw()])
    assert vertex_connectivity(g) == 3
    assert not is_hamilton_connected(g).connected
    assert is_free(g, [path(10)])
    assert is_free(g, [Z(8)])
    for i in range(1, 8):
        assert is_free(g, [B(i, 8 - i)]), (i, 8 - i)


@criterion(5, "Preimage round trip and simplicial/pendant bijection on 1000 multigraphs")
def test_preimage_round_trip():
    rng = random.Random(5)
    for _ in range(1000):
        h = random_multigraph(rng, 12, rng.randint(2, 10))
        g = line_graph(h)
        back = preimage(g)
        assert back is not None
        lg = line_graph(back)
        assert lg.adj == g.adj and are_isomorphic(lg, g) is not None
        assert all(g.is_simplicial(e) == back.is_pendant(e) for e in range(back.m))


@criterion(6, "Closure property suite on claw-free graphs with n <= 12")
def test_closure_suite():
    rng = random.Random(6)
    for _ in range(50):
        g = random_graph(rng, rng.randint(4, 12), rng.uniform(0.2, 0.7))
        props.check_order_independence(g, rng.sample(range(g.n), rng.randint(1, 4)))
    corpus = props.claw_free_corpus(rng, 60, max_n=12)
    local = 0
    for g in corpus:
        props.check_simplicial_monotone(g)
        props.check_claw_free_preserved(g)
        props.check_ryjacek_closure(g)
        local += props.check_locally_2_connected(g)
    assert local >= 20


@criterion(7, "Endgame, Fouquet and Chvatal-Erdos property suites")
def test_endgames_fouquet_chvatal_erdos():
    for kind in sorted(ENDGAMES):
        rng = random.Random(700 + sorted(ENDGAMES).index(kind))
        for _ in range(60):
            assert props.check_endgame(*props.plant_endgame(rng, kind)), kind
    rng = random.Random(71)
    for g in props.fouquet_corpus(rng, 80):
        props.check_fouquet(g)
    rng = random.Random(72)
    checked = 0
    while checked < 100:
        g = random_graph(rng, rng.randint(4, 11), rng.uniform(0.55, 0.95))
        checked += props.check_chvatal_erdos(g)


@pytest.mark.slow
@criterion(8, "Petersen example: feasibility at x1', x1'', x2', x2'' is not sequential")
def test_petersen_feasibility_example():
    h, idx = petersen_example_multigraph()
    g = line_graph(h)
    ora = HCOracle()
    assert not ora(g)
    for x in idx.values():
        assert is_feasible(g, x, ora, assume_not_hc=True).feasible
    g2 = local_completion(g, idx["x2'"])
    assert g2.adj == local_completion(g, idx["x2''"]).adj
    for name in ("x1'", "x1''"):
        assert not is_feasible(g2, idx[name], ora).feasible


@pytest.fixture(scope="module")
def small_graphs():
    gs = oracles.all_graphs_up_to(8)
    assert sum(g.n == 8 for g in gs) == 12346 and len(gs) == 13598
    return gs


def _agrees(g, want):
    for a, b in itertools.combinations(range(g.n), 2):
        p = has_ham_path(g, a, b)
        if (p is not None) != ((a, b) in want):
            return False
    for u in range(g.n):
        if (has_ham_path(g, u) is not None) != (g.n == 1 or any(u in q for q in want)):
            return False
    return True


@criterion(9, "Hamiltonian path search matches brute force: all n <= 8 graphs, 10^4 random n <= 10")
def test_oracle_exhaustive_small(small_graphs):
    bad = [g for g in small_graphs if not _agrees(g, oracles.perm_end_pairs(g))]
    assert not bad


@criterion(9, "Hamiltonian path search matches brute force: all n <= 8 graphs, 10^4 random n <= 10")
def test_oracle_random_up_to_ten():
    rng = random.Random(9)
    # the subset oracle is itself checked against permutations at n = 9, 10
    for n in (9, 10):
        for _ in range(10):
            g = random_graph(rng, n, rng.uniform(0.3, 0.8))
            assert oracles.dp_end_pairs(g) == oracles.perm_end_pairs(g)
    bad = 0
    for _ in range(10_000):
        n = rng.randint(1, 10)
        g = random_graph(rng, n, rng.uniform(0.15, 0.9))
        want = oracles.dp_end_pairs(g)
        pairs = {(a, b) for a, b in itertools.combinations(range(n), 2)
                 if has_ham_path(g, a, b) is not None}
        bad += pairs != want
    assert bad == 0
