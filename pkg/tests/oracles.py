"""Independent hamiltonian-path oracles used to check the search."""

import itertools
from functools import lru_cache

import networkx as nx
import numpy as np

from gamma3_lab.canon import canonical_form
from gamma3_lab.graph import SimpleGraph


@lru_cache(maxsize=None)
def _perms(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int8).reshape(-1, n)


def perm_end_pairs(g: SimpleGraph) -> set[tuple[int, int]]:
    """End pairs (a < b) of hamiltonian paths, by trying every vertex order."""
    n = g.n
    if n < 2:
        return set()
    a = np.zeros((n, n), dtype=bool)
    for u, v in g.edges():
        a[u, v] = a[v, u] = True
    p = _perms(n)
    ok = np.ones(len(p), dtype=bool)
    for i in range(n - 1):
        ok &= a[p[:, i], p[:, i + 1]]
    ends = p[ok][:, [0, -1]]
    return {(int(min(x, y)), int(max(x, y))) for x, y in ends}


def dp_end_pairs(g: SimpleGraph) -> set[tuple[int, int]]:
    """The same pairs by dynamic programming over visited sets."""
    n = g.n
    if n < 2:
        return set()
    full = (1 << n) - 1
    # starts[mask][v]: bitset of start vertices of paths covering mask and ending at v
    starts = [[0] * n for _ in range(1 << n)]
    for v in range(n):
        starts[1 << v][v] = 1 << v
    for mask in range(1, full + 1):
        row = starts[mask]
        for v in range(n):
            s = row[v]
            if not s:
                continue
            out = g.adj[v] & ~mask
            while out:
                low = out & -out
                u = low.bit_length() - 1
                starts[mask | low][u] |= s
                out ^= low
    pairs = set()
    for v in range(n):
        s = starts[full][v]
        for u in range(n):
            if s >> u & 1 and u != v:
                pairs.add((min(u, v), max(u, v)))
    return pairs


def from_nx(h) -> SimpleGraph:
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return SimpleGraph.from_edges(len(index), [(index[a], index[b]) for a, b in h.edges()])


def all_graphs_up_to(n_max: int = 8) -> list[SimpleGraph]:
    """Every graph on 1..n_max vertices up to isomorphism (atlas, then one-vertex extension)."""
    out = [from_nx(h) for h in nx.graph_atlas_g()[1:]]
    seven = [g for g in out if g.n == 7]
    for n in range(8, n_max + 1):
        seen: dict[str, SimpleGraph] = {}
        for g in seven:
            for nbrs in range(1 << g.n):
                h = g.add_vertices(1).add_edges((b, g.n) for b in range(g.n) if nbrs >> b & 1)
                seen.setdefault(canonical_form(h), h)
        out += seen.values()
        seven = list(seen.values())
    return out
