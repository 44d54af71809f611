"""Canonical labelling, isomorphism witnesses and automorphisms.

Canonical forms come from colour refinement followed by individualisation
backtracking.  Two prunings keep symmetric graphs cheap: twin vertices of the
target cell are tried once, and automorphisms discovered at equal leaves are
used to skip children lying in an already explored orbit.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .graph import Embedding, SimpleGraph, bits, write_graph6

__all__ = [
    "refine",
    "canonical_labeling",
    "canonical_form",
    "are_isomorphic",
    "isomorphisms",
    "automorphisms",
]


def _initial_colors(g: SimpleGraph, respect_labels: bool,
                    colors: Sequence[object] | None) -> list[int]:
    keys: list[tuple] = []
    for v in range(g.n):
        k: tuple = ()
        if colors is not None:
            k += (repr(colors[v]),)
        if respect_labels:
            nm = g.names[v] if g.names is not None else None
            k += ("" if nm is None else "#" + nm,)
        keys.append(k)
    order = sorted(set(keys))
    index = {k: i for i, k in enumerate(order)}
    return [index[k] for k in keys]


def refine(adj: Sequence[int], colors: list[int]) -> list[int]:
    """Coarsest equitable refinement of ``colors``; colour ids are invariant."""
    n = len(adj)
    cur = list(colors)
    ncls = len(set(cur))
    while True:
        sigs = []
        for v in range(n):
            cnt: dict[int, int] = {}
            for u in bits(adj[v]):
                c = cur[u]
                cnt[c] = cnt.get(c, 0) + 1
            sigs.append((cur[v], tuple(sorted(cnt.items()))))
        order = sorted(set(sigs))
        index = {s: i for i, s in enumerate(order)}
        new = [index[s] for s in sigs]
        if len(order) == ncls:
            return new
        cur, ncls = new, len(order)


def _individualize(colors: list[int], v: int) -> list[int]:
    # split v off its cell, placing it first; keeps ids invariant
    c = colors[v]
    return [2 * x + (x == c and u != v) for u, x in enumerate(colors)]


class _Search:
    def __init__(self, g: SimpleGraph):
        self.g = g
        self.n = g.n
        self.best_cert: tuple | None = None
        self.best_perm: list[int] | None = None
        self.generators: list[list[int]] = []

    def certificate(self, perm: list[int]) -> tuple:
        # perm[v] = canonical position of v
        inv = [0] * self.n
        for v, p in enumerate(perm):
            inv[p] = v
        adj = self.g.adj
        rows = []
        for p in range(self.n):
            r = adj[inv[p]]
            m = 0
            for u in bits(r):
                m |= 1 << perm[u]
            rows.append(m)
        return tuple(rows)

    def run(self, colors: list[int]) -> None:
        self._visit(refine(self.g.adj, colors), [])

    def _orbit_reps(self, cell: list[int], prefix: list[int]) -> list[int]:
        gens = [p for p in self.generators if all(p[v] == v for v in prefix)]
        cand = self._twin_reps(cell)
        if not gens:
            return cand
        parent = {v: v for v in range(self.n)}

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for p in gens:
            for v in range(self.n):
                ra, rb = find(v), find(p[v])
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
        seen = set()
        out = []
        for v in cand:
            r = find(v)
            if r not in seen:
                seen.add(r)
                out.append(v)
        return out

    def _twin_reps(self, cell: list[int]) -> list[int]:
        adj = self.g.adj
        out: list[int] = []
        for v in cell:
            for u in out:
                if adj[u] & ~(1 << v) == adj[v] & ~(1 << u):
                    break
            else:
                out.append(v)
        return out

    def _visit(self, colors: list[int], prefix: list[int]) -> None:
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            order = sorted(range(self.n), key=lambda v: colors[v])
            perm = [0] * self.n
            for pos, v in enumerate(order):
                perm[v] = pos
            cert = self.certificate(perm)
            if self.best_cert is None or cert < self.best_cert:
                self.best_cert, self.best_perm = cert, perm
            elif cert == self.best_cert:
                assert self.best_perm is not None
                inv_best = [0] * self.n
                for v, p in enumerate(self.best_perm):
                    inv_best[p] = v
                self.generators.append([inv_best[perm[v]] for v in range(self.n)])
            return
        done: list[int] = []
        for v in target:
            if v not in self._orbit_reps(target, prefix):
                continue
            if done and self._same_orbit(v, done, prefix):
                continue
            self._visit(refine(self.g.adj, _individualize(colors, v)), prefix + [v])
            done.append(v)

    def _same_orbit(self, v: int, done: list[int], prefix: list[int]) -> bool:
        gens = [p for p in self.generators if all(p[w] == w for w in prefix)]
        if not gens:
            return False
        orbit = {v}
        frontier = [v]
        while frontier:
            a = frontier.pop()
            for p in gens:
                b = p[a]
                if b not in orbit:
                    orbit.add(b)
                    frontier.append(b)
        return any(d in orbit for d in done)


def canonical_labeling(g: SimpleGraph, respect_labels: bool = False,
                       colors: Sequence[object] | None = None) -> list[int]:
    """Permutation ``perm`` with ``perm[v]`` the canonical position of ``v``."""
    if g.n == 0:
        return []
    s = _Search(g)
    s.run(_initial_colors(g, respect_labels, colors))
    assert s.best_perm is not None
    return s.best_perm


def canonical_form(g: SimpleGraph, respect_labels: bool = False,
                   colors: Sequence[object] | None = None) -> str:
    """Isomorphism-invariant string: graph6 of the canonically relabelled graph.

    With ``respect_labels`` the vertex names are part of the invariant (two
    graphs agree iff there is a name-preserving isomorphism).
    """
    perm = canonical_labeling(g, respect_labels, colors)
    h = g.relabel(perm)
    form = write_graph6(h)
    if respect_labels and g.names is not None:
        form += "|" + ",".join("" if s is None else s for s in h.names or ())
    if colors is not None:
        inv = [0] * g.n
        for v, p in enumerate(perm):
            inv[p] = v
        form += "|" + ",".join(repr(colors[inv[p]]) for p in range(g.n))
    return form


def are_isomorphic(g1: SimpleGraph, g2: SimpleGraph, respect_labels: bool = False) -> Embedding | None:
    """Isomorphism witness ``g1 -> g2`` or ``None``."""
    if g1.n != g2.n or g1.number_of_edges() != g2.number_of_edges():
        return None
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    p1 = canonical_labeling(g1, respect_labels)
    p2 = canonical_labeling(g2, respect_labels)
    if g1.relabel(p1).adj != g2.relabel(p2).adj:
        return None
    if respect_labels and (g1.relabel(p1).names or ()) != (g2.relabel(p2).names or ()):
        return None
    inv2 = [0] * g2.n
    for v, p in enumerate(p2):
        inv2[p] = v
    emb = Embedding(g1, g2, tuple(inv2[p1[v]] for v in range(g1.n)))
    assert emb.is_induced()
    return emb


def isomorphisms(g1: SimpleGraph, g2: SimpleGraph, colors1: Sequence[object] | None = None,
                 colors2: Sequence[object] | None = None) -> Iterator[tuple[int, ...]]:
    """Enumerate all colour-preserving isomorphisms ``g1 -> g2``."""
    n = g1.n
    if n != g2.n:
        return
    c1 = list(colors1) if colors1 is not None else [0] * n
    c2 = list(colors2) if colors2 is not None else [0] * n
    # joint refinement on the disjoint union keeps colour ids comparable
    union = g1.with_names(None).disjoint_union(g2.with_names(None))
    keys = sorted(set(map(repr, c1 + c2)))
    idx = {k: i for i, k in enumerate(keys)}
    col = refine(union.adj, [idx[repr(c)] for c in c1 + c2])
    r1, r2 = col[:n], col[n:]
    if sorted(r1) != sorted(r2):
        return
    order: list[int] = []
    seen = 0
    for start in sorted(range(n), key=lambda v: (-g1.degree(v), v)):
        if seen >> start & 1:
            continue
        queue = [start]
        seen |= 1 << start
        for v in queue:
            order.append(v)
            for u in bits(g1.adj[v] & ~seen):
                seen |= 1 << u
                queue.append(u)
    mapping = [-1] * n
    used = 0

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        nonlocal used
        if i == n:
            yield tuple(mapping)
            return
        v = order[i]
        for w in range(n):
            if used >> w & 1 or r2[w] != r1[v]:
                continue
            ok = True
            for a in order[:i]:
                if g1.has_edge(v, a) != g2.has_edge(w, mapping[a]):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used |= 1 << w
            yield from rec(i + 1)
            used &= ~(1 << w)
            mapping[v] = -1

    yield from rec(0)


def automorphisms(g: SimpleGraph, colors: Sequence[object] | None = None) -> list[tuple[int, ...]]:
    """All colour-preserving automorphisms (intended for small groups)."""
    return list(isomorphisms(g, g, colors, colors))
