"""Exact hamiltonian path and cycle search.

The search extends a path from one end and prunes a partial path as soon as

* the unvisited region is disconnected from the current end,
* an unvisited vertex other than the target keeps fewer than two usable
  neighbours (or two of them are forced to be next),
* the remaining graph plus the edge (end, target) has a cut vertex, which
  rules out a spanning path between the two ends.

Every search is bounded by a node budget so that an intractable instance fails
loudly instead of hanging.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .graph import SimpleGraph, bits, popcount

__all__ = [
    "DEFAULT_NODE_BUDGET",
    "BudgetExceeded",
    "HamVerdict",
    "has_ham_path",
    "is_hamilton_connected",
    "is_hamiltonian",
]

DEFAULT_NODE_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """Raised when a search exceeds its node budget."""

    def __init__(self, message: str, pair: tuple[int, int | None] | None = None):
        super().__init__(message)
        self.pair = pair


def _biconnected(adj: list[int], mask: int, extra: tuple[int, int] | None) -> bool:
    """Whether the subgraph on ``mask`` (plus the optional edge) has no cut vertex."""
    n_in = popcount(mask)
    if n_in <= 2:
        return True

    def nbrs(v: int) -> int:
        r = adj[v] & mask
        if extra is not None:
            a, b = extra
            if v == a:
                r |= 1 << b
            elif v == b:
                r |= 1 << a
        return r & ~(1 << v)

    root = (mask & -mask).bit_length() - 1
    disc: dict[int, int] = {root: 0}
    low: dict[int, int] = {root: 0}
    root_children = 0
    t = 1
    stack = [(root, -1, nbrs(root))]
    while stack:
        v, parent, rest = stack[-1]
        if rest:
            w = (rest & -rest).bit_length() - 1
            stack[-1] = (v, parent, rest & (rest - 1))
            if w == parent:
                continue
            if w in disc:
                if disc[w] < low[v]:
                    low[v] = disc[w]
            else:
                disc[w] = low[w] = t
                t += 1
                if v == root:
                    root_children += 1
                stack.append((w, v, nbrs(w)))
        else:
            stack.pop()
            if parent >= 0:
                if low[v] < low[parent]:
                    low[parent] = low[v]
                if parent != root and low[v] >= disc[parent]:
                    return False
    return len(disc) == n_in and root_children <= 1


class _PathSearch:
    def __init__(self, g: SimpleGraph, budget: int):
        self.adj = list(g.adj)
        self.n = g.n
        self.budget = budget
        self.nodes = 0

    def _connected(self, mask: int) -> bool:
        if not mask:
            return True
        seen = mask & -mask
        frontier = seen
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.adj[v]
            nxt &= mask & ~seen
            seen |= nxt
            frontier = nxt
        return seen == mask

    def run(self, u: int, v: int | None) -> list[int] | None:
        rest = ((1 << self.n) - 1) & ~(1 << u)
        path = [u]
        if self.n == 1:
            return path if v is None else None
        return path if self._rec(u, rest, v, path) else None

    def _rec(self, c: int, rest: int, target: int | None, path: list[int]) -> bool:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"hamiltonian path search exceeded {self.budget} nodes")
        adj = self.adj
        if not rest:
            return target is None or c == target
        if not adj[c] & rest:
            return False
        if target is not None and rest == 1 << target:
            path.append(target)
            return True
        if not self._connected(rest):
            return False
        live = rest | 1 << c
        forced = 0
        ends = 0
        for w in bits(rest):
            d = popcount(adj[w] & live)
            if w == target:
                if d < 1:
                    return False
                continue
            if d < 2:
                if target is None and d == 1:
                    ends += 1
                    if ends > 1:
                        return False
                    continue
                return False
            if target is not None and d == 2 and adj[c] >> w & 1:
                forced |= 1 << w
        if popcount(forced) > 1:
            return False
        if target is not None and not _biconnected(adj, live, (c, target)):
            return False
        cand = adj[c] & rest
        if target is not None:
            cand &= ~(1 << target)
        if forced:
            cand &= forced
        order = sorted(bits(cand), key=lambda w: (popcount(adj[w] & rest), w))
        for w in order:
            path.append(w)
            if self._rec(w, rest & ~(1 << w), target, path):
                return True
            path.pop()
        return False


def has_ham_path(g: SimpleGraph, u: int, v: int | None = None,
                 node_budget: int = DEFAULT_NODE_BUDGET) -> list[int] | None:
    """A hamiltonian path from ``u`` to ``v`` (any end if ``v`` is None), or ``None``."""
    if v is not None and u == v:
        raise ValueError("endpoints of a hamiltonian path must differ")
    s = _PathSearch(g, node_budget)
    try:
        return s.run(u, v)
    except BudgetExceeded as exc:
        raise BudgetExceeded(str(exc), (u, v)) from None


@dataclass
class HamVerdict:
    connected: bool
    failing_pair: tuple[int, int] | None = None
    witness_paths: dict[tuple[int, int], list[int]] | None = field(default=None)

    def to_json(self) -> dict:
        out: dict = {"connected": self.connected,
                     "failing_pair": list(self.failing_pair) if self.failing_pair else None}
        if self.witness_paths is not None:
            out["witness_paths"] = {f"{a},{b}": p for (a, b), p in sorted(self.witness_paths.items())}
        return out


def _pair_job(args: tuple[SimpleGraph, int, int, int]) -> list[int] | None:
    g, a, b, budget = args
    return has_ham_path(g, a, b, budget)


def is_hamilton_connected(g: SimpleGraph, node_budget: int = DEFAULT_NODE_BUDGET,
                          witnesses: bool = False, jobs: int = 1) -> HamVerdict:
    """Check every pair in lexicographic order, stopping at the first failure.

    With ``jobs > 1`` pairs are searched in ordered chunks by a process pool;
    the reported failing pair is still the lexicographically least one.
    """
    pairs = list(combinations(range(g.n), 2))
    found: dict[tuple[int, int], list[int]] = {}
    if jobs <= 1:
        for a, b in pairs:
            p = has_ham_path(g, a, b, node_budget)
            if p is None:
                return HamVerdict(False, (a, b), found if witnesses else None)
            found[(a, b)] = p
        return HamVerdict(True, None, found if witnesses else None)
    chunk = max(jobs * 2, 1)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for start in range(0, len(pairs), chunk):
            block = pairs[start:start + chunk]
            results = list(pool.map(_pair_job, [(g, a, b, node_budget) for a, b in block]))
            for (a, b), p in zip(block, results):
                if p is None:
                    return HamVerdict(False, (a, b), found if witnesses else None)
                found[(a, b)] = p
    return HamVerdict(True, None, found if witnesses else None)


def is_hamiltonian(g: SimpleGraph, node_budget: int = DEFAULT_NODE_BUDGET) -> bool:
    """Whether ``g`` has a hamiltonian cycle (graphs on fewer than 3 vertices have none)."""
    if g.n < 3:
        return False
    degs = g.degrees()
    if min(degs) < 2:
        return False
    s = min(range(g.n), key=lambda v: (degs[v], v))
    for t in g.neighbors(s):
        if has_ham_path(g, s, t, node_budget) is not None:
            return True
    return False
