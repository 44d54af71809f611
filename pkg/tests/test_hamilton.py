import itertools
import random

import pytest

from gamma3_lab.catalog import cycle, petersen
from gamma3_lab.graph import SimpleGraph, independence_number, vertex_connectivity
from gamma3_lab.hamilton import (BudgetExceeded, has_ham_path, is_hamilton_connected,
                                 is_hamiltonian)

from conftest import random_graph


def brute_pairs(g):
    """Unordered end pairs of all hamiltonian paths, by permutation enumeration."""
    out = set()
    for perm in itertools.permutations(range(g.n)):
        if perm[0] < perm[-1] and all(g.has_edge(a, b) for a, b in zip(perm, perm[1:])):
            out.add((perm[0], perm[-1]))
    return out


def is_path(g, p, u, v):
    return (sorted(p) == list(range(g.n)) and p[0] == u and (v is None or p[-1] == v)
            and all(g.has_edge(a, b) for a, b in zip(p, p[1:])))


def test_fixed_pairs_match_permutations():
    rng = random.Random(31)
    for _ in range(250):
        g = random_graph(rng, rng.randint(2, 7), rng.uniform(0.3, 0.9))
        want = brute_pairs(g)
        for a, b in itertools.combinations(range(g.n), 2):
            p = has_ham_path(g, a, b)
            assert (p is not None) == ((a, b) in want)
            if p is not None:
                assert is_path(g, p, a, b)


def test_free_end_matches_permutations():
    rng = random.Random(32)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 7), rng.uniform(0.2, 0.8))
        want = brute_pairs(g)
        for u in range(g.n):
            p = has_ham_path(g, u)
            expected = g.n == 1 or any(u in pair for pair in want)
            assert (p is not None) == expected
            if p is not None:
                assert is_path(g, p, u, None)


def test_small_facts():
    c5 = cycle(5).with_names(None)
    v = is_hamilton_connected(c5)
    assert not v.connected and v.failing_pair == (0, 2)
    assert is_hamilton_connected(SimpleGraph.complete(6), witnesses=True).witness_paths
    assert is_hamiltonian(c5) and not is_hamiltonian(petersen())
    assert not is_hamiltonian(SimpleGraph.complete(2))
    with pytest.raises(ValueError):
        has_ham_path(c5, 1, 1)


def test_budget_is_enforced():
    with pytest.raises(BudgetExceeded) as exc:
        is_hamilton_connected(petersen(), node_budget=5)
    assert exc.value.pair is not None


def test_parallel_verdict_matches_sequential():
    rng = random.Random(33)
    for _ in range(3):
        g = random_graph(rng, 9, 0.6)
        a = is_hamilton_connected(g)
        b = is_hamilton_connected(g, jobs=2)
        assert (a.connected, a.failing_pair) == (b.connected, b.failing_pair)


def test_chvatal_erdos_condition_implies_hamilton_connected():
    rng = random.Random(34)
    checked = 0
    while checked < 120:
        g = random_graph(rng, rng.randint(4, 11), rng.uniform(0.55, 0.95))
        s = vertex_connectivity(g)
        if independence_number(g) < s:
            assert is_hamilton_connected(g).connected
            checked += 1
