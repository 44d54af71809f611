"""Line graphs of multigraphs: construction, contraction, recognition and preimages.

Preimages are found by a Krausz-style search.  Every vertex of a line graph
lies in exactly two cliques (the stars at the two ends of its edge); in the
normalised preimage a simplicial vertex uses the cliques ``N[v]`` and ``{v}``
(it is a pendant edge) and any other vertex uses two nontrivial cliques that
cover its closed neighbourhood.  Vertices are processed in breadth-first
order so most cliques are inherited from earlier choices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .catalog import bermond_meyer
from .detect import FreeResult, find_induced
from .graph import Multigraph, SimpleGraph, bits, is_connected

__all__ = [
    "line_graph",
    "contract_to_pendant",
    "is_line_graph_of_multigraph",
    "KrauszPartition",
    "krausz_partition",
    "preimage",
    "is_essentially_k_edge_connected",
]


def line_graph(h: Multigraph) -> SimpleGraph:
    """Vertices are the edges of ``h`` (by index); parallel edges are adjacent."""
    inc: dict[int, int] = {}
    for i, (a, b) in enumerate(h.edges):
        inc[a] = inc.get(a, 0) | 1 << i
        inc[b] = inc.get(b, 0) | 1 << i
    rows = []
    for i, (a, b) in enumerate(h.edges):
        rows.append((inc[a] | inc[b]) & ~(1 << i))
    return SimpleGraph(h.m, tuple(rows))


def contract_to_pendant(h: Multigraph, e: int) -> Multigraph:
    """Contract edge ``e`` and turn every loop so created into a pendant edge.

    The contracted edge and all its parallel copies become loops, so each of
    them ends up as a pendant edge at the merged vertex and edge indices are
    preserved.
    """
    if not 0 <= e < h.m:
        raise ValueError(f"edge index {e} out of range")
    a, b = h.edges[e]
    keep, gone = min(a, b), max(a, b)

    def relabel(x: int) -> int:
        x = keep if x == gone else x
        return x - 1 if x > gone else x

    n = h.n - 1
    edges = []
    for (u, v) in h.edges:
        u2, v2 = relabel(u), relabel(v)
        if u2 == v2:
            edges.append((u2, n))
            n += 1
        else:
            edges.append((u2, v2))
    return Multigraph.from_edges(n, edges)


def is_line_graph_of_multigraph(g: SimpleGraph) -> FreeResult:
    """Recognition by the seven minimal forbidden induced subgraphs."""
    for i in range(1, 8):
        emb = find_induced(g, bermond_meyer(i))
        if emb is not None:
            return FreeResult(False, emb)
    return FreeResult(True)


@dataclass(frozen=True)
class KrauszPartition:
    cliques: tuple[int, ...]  # vertex masks; a singleton clique is a pendant end
    membership: tuple[tuple[int, int], ...]  # the two clique ids of each vertex

    def to_multigraph(self) -> Multigraph:
        return Multigraph.from_edges(len(self.cliques), list(self.membership))


class _KrauszSearch:
    def __init__(self, g: SimpleGraph):
        self.g = g
        self.closed = [g.adj[v] | 1 << v for v in range(g.n)]
        self.simplicial = [g.is_simplicial(v) for v in range(g.n)]
        self.cliques: list[int] = []
        self.member: list[list[int]] = [[] for _ in range(g.n)]
        self.order = self._bfs_order()

    def _bfs_order(self) -> list[int]:
        g = self.g
        order: list[int] = []
        seen = 0
        for s in sorted(range(g.n), key=lambda v: (self.simplicial[v], -g.degree(v), v)):
            if seen >> s & 1:
                continue
            seen |= 1 << s
            queue = [s]
            for v in queue:
                order.append(v)
                for u in bits(g.adj[v] & ~seen):
                    seen |= 1 << u
                    queue.append(u)
        return order

    def _is_clique(self, mask: int) -> bool:
        adj = self.g.adj
        for v in bits(mask):
            if (mask & ~(1 << v)) & ~adj[v]:
                return False
        return True

    def _options(self, v: int) -> list[tuple[int, int]]:
        """Candidate clique pairs (as masks) for ``v`` given the cliques it already has."""
        nv = self.closed[v]
        own = [self.cliques[c] for c in self.member[v]]
        me = 1 << v
        if self.simplicial[v]:
            return [(nv, me)]
        if len(own) == 2:
            return [(own[0], own[1])]
        if len(own) == 1:
            k1 = own[0]
            rest = nv & ~k1
            if not rest:
                return []
            # parallel edges: members of k1 adjacent to everything in rest
            extra = [u for u in bits(k1 & ~me) if rest & ~self.closed[u] == 0]
            out = []
            for r in range(len(extra) + 1):
                for sub in combinations(extra, r):
                    k2 = rest | me
                    for u in sub:
                        k2 |= 1 << u
                    if self._is_clique(k2):
                        out.append((k1, k2))
            return out
        return self._fresh_covers(v)

    def _fresh_covers(self, v: int) -> list[tuple[int, int]]:
        g = self.g
        nb = g.adj[v]
        me = 1 << v
        # components of the complement of <N(v)>, each 2-coloured
        side: dict[int, int] = {}
        comps: list[tuple[int, int]] = []
        universal: list[int] = []
        for s in bits(nb):
            if s in side:
                continue
            if not nb & ~g.adj[s] & ~(1 << s):
                universal.append(s)
                side[s] = -1
                continue
            side[s] = 0
            parts = [0, 0]
            parts[0] |= 1 << s
            stack = [s]
            while stack:
                u = stack.pop()
                for w in bits(nb & ~g.adj[u] & ~(1 << u)):
                    if w not in side:
                        side[w] = 1 - side[u]
                        parts[side[w]] |= 1 << w
                        stack.append(w)
                    elif side[w] == side[u]:
                        return []
            comps.append((parts[0], parts[1]))
        if not comps:
            return []  # neighbourhood is a clique, handled as simplicial
        out = []
        for flips in product((0, 1), repeat=len(comps) - 1):
            a, b = comps[0]
            for (p, q), f in zip(comps[1:], flips):
                if f:
                    p, q = q, p
                a |= p
                b |= q
            for choice in product((0, 1, 2), repeat=len(universal)):
                k1, k2 = a | me, b | me
                for u, c in zip(universal, choice):
                    if c != 1:
                        k1 |= 1 << u
                    if c != 0:
                        k2 |= 1 << u
                if self._is_clique(k1) and self._is_clique(k2):
                    out.append((k1, k2))
        return out

    def _assign(self, v: int, pair: tuple[int, int]) -> list[tuple[int, int | None]] | None:
        """Attach ``v``'s cliques; returns an undo log or ``None`` on conflict."""
        log: list[tuple[int, int | None]] = []  # (vertex, clique id added) / (-1, None) new clique
        own = list(self.member[v])
        need = list(pair)
        for c in own:
            mask = self.cliques[c]
            if mask in need:
                need.remove(mask)
            else:
                self._undo(log)
                return None
        for mask in need:
            cid = len(self.cliques)
            self.cliques.append(mask)
            log.append((-1, None))
            for u in bits(mask):
                if len(self.member[u]) >= 2:
                    self._undo(log)
                    return None
                self.member[u].append(cid)
                log.append((u, cid))
        return log

    def _undo(self, log: list[tuple[int, int | None]]) -> None:
        for u, cid in reversed(log):
            if u == -1:
                self.cliques.pop()
            else:
                self.member[u].remove(cid)
        log.clear()

    def _rec(self, i: int) -> bool:
        if i == len(self.order):
            return True
        v = self.order[i]
        for pair in self._options(v):
            log = self._assign(v, pair)
            if log is None:
                continue
            ok = len(self.member[v]) == 2 and (self.cliques[self.member[v][0]]
                                                | self.cliques[self.member[v][1]]) == self.closed[v]
            if ok and self._rec(i + 1):
                return True
            self._undo(log)
        return False

    def run(self) -> KrauszPartition | None:
        if not self._rec(0):
            return None
        return KrauszPartition(tuple(self.cliques),
                               tuple((m[0], m[1]) for m in self.member))


def krausz_partition(g: SimpleGraph) -> KrauszPartition | None:
    """A normalised clique system of ``g`` (each vertex in exactly two cliques), or ``None``."""
    if g.n == 0:
        return None
    return _KrauszSearch(g).run()


def preimage(g: SimpleGraph) -> Multigraph | None:
    """The normalised multigraph ``H`` with ``L(H) = g``; edge ``i`` of ``H`` is vertex ``i`` of ``g``.

    In ``H`` an edge is pendant exactly when the corresponding vertex of ``g`` is
    simplicial.  Returns ``None`` if ``g`` is not a line graph of a multigraph.
    """
    if not is_connected(g) or g.n == 0:
        raise ValueError("preimage requires a connected nonempty graph")
    kp = krausz_partition(g)
    if kp is None:
        return None
    h = kp.to_multigraph()
    if line_graph(h).adj != g.adj:
        raise AssertionError("clique system does not reproduce the graph")
    return h


def _nontrivial_components(h: Multigraph, removed: set[int]) -> int:
    parent = list(range(h.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, (a, b) in enumerate(h.edges):
        if i in removed:
            continue
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    roots = {find(a) for i, (a, _) in enumerate(h.edges) if i not in removed}
    return len(roots)


def is_essentially_k_edge_connected(h: Multigraph, k: int) -> bool:
    """Whether every essential edge cut of ``h`` has at least ``k`` edges (exhaustive)."""
    for size in range(0, k):
        for cut in combinations(range(h.m), size):
            if _nontrivial_components(h, set(cut)) >= 2:
                return False
    return True
