"""Induced-subgraph search and the neighbourhood classifiers built on it."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, NamedTuple, Sequence

from .catalog import cycle
from .graph import Embedding, SimpleGraph, bits, induced_subgraph, popcount

__all__ = [
    "find_induced",
    "iter_induced",
    "is_free",
    "FreeResult",
    "EndgameWitness",
    "ENDGAMES",
    "find_endgame",
    "two_clique_cover",
    "neighborhood_has_induced_C5",
]


def _search_order(pattern: SimpleGraph, fixed: Sequence[int]) -> list[int]:
    # anchored vertices first, then greedily the vertex with most placed neighbours
    order = list(fixed)
    placed = 0
    for v in order:
        placed |= 1 << v
    rest = [v for v in range(pattern.n) if not placed >> v & 1]
    while rest:
        best = max(rest, key=lambda v: (popcount(pattern.adj[v] & placed), pattern.degree(v), -v))
        order.append(best)
        placed |= 1 << best
        rest.remove(best)
    return order


def _resolve_anchor(host: SimpleGraph, pattern: SimpleGraph,
                    anchor: Mapping | None) -> dict[int, int]:
    if not anchor:
        return {}
    out: dict[int, int] = {}
    for k, v in anchor.items():
        pk = pattern.v(k) if isinstance(k, str) else int(k)
        hv = host.v(v) if isinstance(v, str) else int(v)
        if not (0 <= pk < pattern.n and 0 <= hv < host.n):
            raise ValueError(f"anchor entry {k!r}->{v!r} out of range")
        out[pk] = hv
    if len(set(out.values())) != len(out):
        raise ValueError("anchor is not injective")
    return out


def iter_induced(host: SimpleGraph, pattern: SimpleGraph, anchor: Mapping | None = None,
                 allowed: int | None = None) -> Iterator[Embedding]:
    """Yield every induced embedding of ``pattern`` into ``host`` extending ``anchor``.

    The order is deterministic: pattern vertices are placed in a fixed order and
    host candidates are tried in increasing order.  ``allowed`` restricts the
    image to a vertex mask of the host.
    """
    fixed = _resolve_anchor(host, pattern, anchor)
    k = pattern.n
    if k > host.n:
        return
    order = _search_order(pattern, sorted(fixed))
    # for each step: earlier positions that must be adjacent / non-adjacent
    adj_prev = []
    for i, v in enumerate(order):
        adj_prev.append([pattern.has_edge(u, v) for u in order[:i]])
    pdeg = [pattern.degree(v) for v in order]
    hadj = host.adj
    hdeg = [popcount(r) for r in hadj]
    full = host.full_mask if allowed is None else allowed & host.full_mask
    img = [0] * k

    def rec(i: int, used: int) -> Iterator[Embedding]:
        if i == k:
            mapping = [0] * k
            for j, v in enumerate(order):
                mapping[v] = img[j]
            yield Embedding(pattern, host, tuple(mapping))
            return
        cand = full & ~used
        row = adj_prev[i]
        for j in range(i):
            if row[j]:
                cand &= hadj[img[j]]
            else:
                cand &= ~hadj[img[j]]
            if not cand:
                return
        v = order[i]
        if v in fixed:
            cand &= 1 << fixed[v]
        d = pdeg[i]
        for w in bits(cand):
            if hdeg[w] < d:
                continue
            img[i] = w
            yield from rec(i + 1, used | 1 << w)

    yield from rec(0, 0)


def find_induced(host: SimpleGraph, pattern: SimpleGraph, anchor: Mapping | None = None,
                 allowed: int | None = None) -> Embedding | None:
    """First induced embedding of ``pattern`` in ``host`` extending ``anchor``, or ``None``.

    ``anchor`` maps pattern vertices to host vertices (integers or names).
    """
    for emb in iter_induced(host, pattern, anchor, allowed):
        return emb
    return None


class FreeResult(NamedTuple):
    free: bool
    witness: Embedding | None = None

    def __bool__(self) -> bool:
        return self.free


def is_free(host: SimpleGraph, patterns: Sequence[SimpleGraph]) -> FreeResult:
    """Whether ``host`` contains none of ``patterns`` as an induced subgraph."""
    for p in patterns:
        emb = find_induced(host, p)
        if emb is not None:
            return FreeResult(False, emb)
    return FreeResult(True)


# kind -> (k, required edges, required non-edges), positions 1-based
ENDGAMES: dict[str, tuple[int, tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]]] = {
    "i": (3, (), ((1, 2), (2, 3), (3, 1))),
    "ii": (4, ((1, 2), (2, 3), (3, 4), (4, 1)), ((1, 3), (2, 4))),
    "iii": (5, (), ((1, 2), (2, 3), (3, 4), (4, 5), (5, 1))),
    "iv": (5, ((1, 4), (2, 5)), ((1, 2), (2, 3), (3, 4), (4, 5))),
    "v": (5, ((2, 5), (5, 3), (3, 1), (1, 4)), ((2, 3), (3, 4), (1, 5))),
}


@dataclass(frozen=True)
class EndgameWitness:
    kind: str
    vertices: tuple[int, ...]
    center: int

    def holds(self, g: SimpleGraph) -> bool:
        k, edges, non = ENDGAMES[self.kind]
        xs = self.vertices
        if len(xs) != k or len(set(xs)) != k:
            return False
        if not all(g.has_edge(self.center, v) for v in xs):
            return False
        return (all(g.has_edge(xs[a - 1], xs[b - 1]) for a, b in edges)
                and not any(g.has_edge(xs[a - 1], xs[b - 1]) for a, b in non))


def _endgame_of_kind(g: SimpleGraph, x: int, kind: str) -> tuple[int, ...] | None:
    k, edges, non = ENDGAMES[kind]
    # constraints checked when the later of the two positions is placed
    checks: list[list[tuple[int, bool]]] = [[] for _ in range(k)]
    for a, b in edges:
        checks[max(a, b) - 1].append((min(a, b) - 1, True))
    for a, b in non:
        checks[max(a, b) - 1].append((min(a, b) - 1, False))
    nbrs = g.adj[x]
    chosen: list[int] = []

    def rec(i: int, used: int) -> bool:
        if i == k:
            return True
        cand = nbrs & ~used
        for j, want in checks[i]:
            cand &= g.adj[chosen[j]] if want else ~g.adj[chosen[j]]
        for w in bits(cand):
            chosen.append(w)
            if rec(i + 1, used | 1 << w):
                return True
            chosen.pop()
        return False

    return tuple(chosen) if rec(0, 0) else None


def find_endgame(g: SimpleGraph, x: int) -> EndgameWitness | None:
    """First endgame configuration found in ``N(x)``, trying kinds i..v in turn."""
    for kind in ENDGAMES:
        found = _endgame_of_kind(g, x, kind)
        if found is not None:
            return EndgameWitness(kind, found, x)
    return None


def two_clique_cover(g: SimpleGraph, x: int) -> tuple[list[int], list[int]] | None:
    """Two cliques covering ``N(x)``, or ``None``.

    Exact: a cover exists iff the complement of the neighbourhood is bipartite,
    and the colour classes of a 2-colouring are the cliques.
    """
    nb = g.adj[x]
    side: dict[int, int] = {}
    for s in bits(nb):
        if s in side:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in bits(nb & ~g.adj[u] & ~(1 << u)):
                if w not in side:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return None
    k1 = sorted(v for v, c in side.items() if c == 0)
    k2 = sorted(v for v, c in side.items() if c == 1)
    return k1, k2


def neighborhood_has_induced_C5(g: SimpleGraph, x: int) -> bool:
    local = induced_subgraph(g, list(bits(g.adj[x])))
    return find_induced(local, cycle(5)) is not None
