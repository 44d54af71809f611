"""Local completion, the classical closure, feasibility and the Gamma_3 closure."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

from .catalog import Gamma, claw
from .detect import find_induced
from .graph import (SimpleGraph, bits, induced_subgraph, is_connected, local_completion_rows,
                    vertex_connectivity, write_graph6)
from .hamilton import DEFAULT_NODE_BUDGET, is_hamilton_connected

__all__ = [
    "local_completion",
    "local_completion_set",
    "VertexClass",
    "classify_vertex",
    "neighborhood_has_two_independent_pairs",
    "lemma_two_indep_sets",
    "ClosureStep",
    "ClosureTrace",
    "graph_hash",
    "ryjacek_closure",
    "HCOracle",
    "Feasibility",
    "is_feasible",
    "find_feasible_order",
    "is_weakly_feasible",
    "gamma3_closure",
    "DEFAULT_MAX_SET_SIZE",
]

DEFAULT_MAX_SET_SIZE = 5
_NEIGHBORHOOD_SUBSET_LIMIT = 16


def graph_hash(g: SimpleGraph) -> str:
    return hashlib.sha256(write_graph6(g).encode()).hexdigest()[:16]


def local_completion(g: SimpleGraph, x: int, check: bool = False) -> SimpleGraph:
    """Add every missing edge inside ``N(x)``.

    With ``check`` the result is verified to be claw-free whenever ``g`` is.
    """
    out = SimpleGraph(g.n, local_completion_rows(g.adj, x), g.names)
    if check and find_induced(g, claw()) is None:
        assert find_induced(out, claw()) is None, "local completion created a claw"
    return out


def local_completion_set(g: SimpleGraph, M: Iterable[int]) -> SimpleGraph:
    """Complete at every vertex of ``M`` in the given order (the result does not depend on it)."""
    adj: tuple[int, ...] = g.adj
    for x in M:
        adj = local_completion_rows(adj, x)
    return SimpleGraph(g.n, adj, g.names)


@dataclass(frozen=True)
class VertexClass:
    simplicial: bool
    eligible: bool
    local_connectivity: int  # largest k <= 3 with <N(x)> k-connected, 0 if none

    @property
    def kind(self) -> str:
        if self.simplicial:
            return "simplicial"
        if self.local_connectivity >= 2:
            return f"locally_{self.local_connectivity}_connected"
        if self.eligible:
            return "eligible"
        return "other"


def _k_connected(h: SimpleGraph, k: int) -> bool:
    if h.n <= k:
        return False
    return vertex_connectivity(h) >= k


def classify_vertex(g: SimpleGraph, x: int) -> VertexClass:
    nb = induced_subgraph(g, list(bits(g.adj[x])))
    simplicial = nb.is_complete()
    eligible = nb.n > 0 and is_connected(nb) and not simplicial
    k = 0
    for t in (1, 2, 3):
        if _k_connected(nb, t):
            k = t
        else:
            break
    return VertexClass(simplicial, eligible, k)


def _two_disjoint_nonedges(h: SimpleGraph) -> bool:
    non = h.non_edges()
    for i, (a, b) in enumerate(non):
        for c, d in non[i + 1:]:
            if len({a, b, c, d}) == 4:
                return True
    return False


def neighborhood_has_two_independent_pairs(g: SimpleGraph, x: int) -> bool:
    """Whether ``<N(x)>`` has an induced 2-connected subgraph with two disjoint non-adjacent pairs."""
    nbrs = list(bits(g.adj[x]))
    if len(nbrs) > _NEIGHBORHOOD_SUBSET_LIMIT:
        raise ValueError(f"neighbourhood of size {len(nbrs)} is too large for subset search")
    for size in range(len(nbrs), 3, -1):
        for sub in combinations(nbrs, size):
            h = induced_subgraph(g, sub)
            if _two_disjoint_nonedges(h) and _k_connected(h, 2):
                return True
    return False


lemma_two_indep_sets = neighborhood_has_two_independent_pairs  # name used by the interface contract


@dataclass(frozen=True)
class ClosureStep:
    vertices: tuple[int, ...]
    justification: str  # eligible | locally-2-connected | feasible | simplicial | declared
    graph_hash: str


@dataclass
class ClosureTrace:
    initial: SimpleGraph
    final: SimpleGraph
    steps: list[ClosureStep] = field(default_factory=list)
    max_set_size: int | None = None

    def replay(self) -> SimpleGraph:
        g = self.initial
        for st in self.steps:
            if st.justification == "declared":
                g = SimpleGraph.complete(g.n).with_names(g.names)
            else:
                g = local_completion_set(g, st.vertices)
            if graph_hash(g) != st.graph_hash:
                raise AssertionError(f"replay diverged at step {st}")
        return g

    def to_json(self) -> dict:
        return {
            "initial": write_graph6(self.initial),
            "final": write_graph6(self.final),
            "max_set_size": self.max_set_size,
            "steps": [{"vertices": list(s.vertices), "justification": s.justification,
                       "hash": s.graph_hash} for s in self.steps],
        }


def ryjacek_closure(g: SimpleGraph) -> tuple[SimpleGraph, ClosureTrace]:
    """Complete at eligible vertices (smallest index first) until none is left."""
    if find_induced(g, claw()) is not None:
        raise ValueError("closure is defined for claw-free graphs only")
    trace = ClosureTrace(g, g)
    cur = g
    while True:
        for x in range(cur.n):
            if classify_vertex(cur, x).eligible:
                cur = local_completion(cur, x)
                trace.steps.append(ClosureStep((x,), "eligible", graph_hash(cur)))
                break
        else:
            break
    trace.final = cur
    return cur, trace


class HCOracle:
    """Memoised Hamilton-connectedness keyed on the adjacency rows."""

    def __init__(self, node_budget: int = DEFAULT_NODE_BUDGET, jobs: int = 1):
        self.node_budget = node_budget
        self.jobs = jobs
        self.cache: dict[tuple[int, ...], bool] = {}
        self.calls = 0

    def __call__(self, g: SimpleGraph) -> bool:
        key = g.adj
        hit = self.cache.get(key)
        if hit is None:
            self.calls += 1
            hit = is_hamilton_connected(g, self.node_budget, jobs=self.jobs).connected
            self.cache[key] = hit
        return hit


class Feasibility(NamedTuple):
    feasible: bool
    simplicial: bool

    def __bool__(self) -> bool:
        return self.feasible


def is_feasible(g: SimpleGraph, x: int, oracle: HCOracle | None = None,
                assume_not_hc: bool = False) -> Feasibility:
    """Whether nonsimplicial ``x`` keeps ``g`` non-Hamilton-connected after completing at ``x``.

    Simplicial vertices are outside the domain and reported as ``(False, True)``.
    """
    oracle = oracle or HCOracle()
    if not assume_not_hc and oracle(g):
        raise ValueError("feasibility undefined: graph is Hamilton-connected")
    if g.is_simplicial(x):
        return Feasibility(False, True)
    return Feasibility(not oracle(local_completion(g, x)), False)


def _ordering_search(g: SimpleGraph, M: Sequence[int], weak: bool, oracle: HCOracle,
                     assume_not_hc: bool) -> list[int] | None:
    if not assume_not_hc and oracle(g):
        raise ValueError("feasibility undefined: graph is Hamilton-connected")
    M = list(dict.fromkeys(M))
    dead: set[int] = set()
    order: list[int] = []

    def rec(done: int, cur: SimpleGraph) -> bool:
        if len(order) == len(M):
            return True
        if done in dead:
            return False
        for i, y in enumerate(M):
            if done >> i & 1:
                continue
            if cur.is_simplicial(y):
                if not weak or not order:
                    continue
                nxt = cur
            else:
                nxt = local_completion(cur, y)
                if oracle(nxt):
                    continue
            order.append(y)
            if rec(done | 1 << i, nxt):
                return True
            order.pop()
        dead.add(done)
        return False

    return list(order) if rec(0, g) else None


def find_feasible_order(g: SimpleGraph, M: Sequence[int], oracle: HCOracle | None = None,
                        assume_not_hc: bool = False) -> list[int] | None:
    """An ordering of ``M`` in which every vertex is feasible when reached, or ``None``.

    The intermediate graph depends only on the set already completed, so
    failed sets are memoised.
    """
    return _ordering_search(g, M, False, oracle or HCOracle(), assume_not_hc)


def is_weakly_feasible(g: SimpleGraph, M: Sequence[int], oracle: HCOracle | None = None,
                       assume_not_hc: bool = False) -> list[int] | None:
    """Like :func:`find_feasible_order` but later vertices may instead be simplicial."""
    return _ordering_search(g, M, True, oracle or HCOracle(), assume_not_hc)


def gamma3_closure(g: SimpleGraph, max_set_size: int = DEFAULT_MAX_SET_SIZE,
                   node_budget: int = DEFAULT_NODE_BUDGET, jobs: int = 1,
                   oracle: HCOracle | None = None) -> tuple[SimpleGraph, ClosureTrace]:
    """Complete at feasible sets that keep the graph Gamma_3-free, until none is left.

    Candidate sets are nonsimplicial vertex sets tried by increasing size and
    lexicographically within a size, up to ``max_set_size``; the first set that
    is feasible and leaves the completed graph Gamma_3-free is applied.
    """
    gamma3 = Gamma(3)
    if find_induced(g, claw()) is not None:
        raise ValueError("input contains an induced claw")
    if find_induced(g, gamma3) is not None:
        raise ValueError("input contains an induced Gamma_3")
    oracle = oracle or HCOracle(node_budget, jobs)
    trace = ClosureTrace(g, g, max_set_size=max_set_size)
    if oracle(g):
        full = SimpleGraph.complete(g.n).with_names(g.names)
        trace.steps.append(ClosureStep(tuple(range(g.n)), "declared", graph_hash(full)))
        trace.final = full
        return full, trace
    cur = g
    while True:
        applied = None
        ns = [v for v in range(cur.n) if not cur.is_simplicial(v)]
        bad_targets: set[tuple[int, ...]] = set()
        for size in range(1, max_set_size + 1):
            for M in combinations(ns, size):
                target = local_completion_set(cur, M)
                if target.adj in bad_targets:
                    continue
                if find_induced(target, gamma3) is not None:
                    bad_targets.add(target.adj)
                    continue
                order = find_feasible_order(cur, M, oracle, assume_not_hc=True)
                if order is not None:
                    applied = (tuple(order), target)
                    break
            if applied:
                break
        if applied is None:
            break
        order, cur = applied
        assert not oracle(cur)
        trace.steps.append(ClosureStep(order, "feasible", graph_hash(cur)))
    trace.final = cur
    return cur, trace
