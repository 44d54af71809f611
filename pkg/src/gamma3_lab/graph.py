"""Simple graphs and multigraphs on vertices ``0..n-1``.

Adjacency of a :class:`SimpleGraph` is a tuple of Python ints, one bit row per
vertex, so neighbourhood intersections are single ``&`` operations.  Values are
immutable; every "modifying" operation returns a new graph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

__all__ = [
    "GraphFormatError",
    "SimpleGraph",
    "Multigraph",
    "Embedding",
    "bits",
    "popcount",
    "parse_graph6",
    "write_graph6",
    "parse_multigraph",
    "write_multigraph",
    "induced_subgraph",
    "is_connected",
    "vertex_connectivity",
    "independence_number",
    "neighborhood_distance",
    "INDEPENDENCE_BOUND",
]

MAX_MULTIPLICITY = 255
INDEPENDENCE_BOUND = 40


class GraphFormatError(ValueError):
    """Raised for malformed graph6 or multigraph text."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class SimpleGraph:
    """Finite simple undirected graph with optional vertex names.

    ``adj[v]`` is the bitmask of neighbours of ``v``.  ``names`` is either
    ``None`` or a tuple with one entry per vertex (``None`` for unnamed
    vertices); names are unique.
    """

    n: int
    adj: tuple[int, ...]
    names: tuple[str | None, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency must have one row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} references a vertex >= n")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric pair {v}-{u}")
        if self.names is not None:
            if len(self.names) != self.n:
                raise ValueError("names must have one entry per vertex")
            named = [s for s in self.names if s is not None]
            if len(set(named)) != len(named):
                raise ValueError("vertex names must be unique")

    # construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   names: Sequence[str | None] | None = None) -> "SimpleGraph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), tuple(names) if names is not None else None)

    @classmethod
    def from_named_edges(cls, names: Sequence[str], edges: Iterable[tuple[str, str]]) -> "SimpleGraph":
        """Build a graph from vertex names and edges given as name pairs."""
        index = {s: i for i, s in enumerate(names)}
        return cls.from_edges(len(names), ((index[a], index[b]) for a, b in edges), names)

    @classmethod
    def empty(cls, n: int) -> "SimpleGraph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    # queries ----------------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.adj]

    def number_of_edges(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v in itertools.combinations(range(self.n), 2) if not self.adj[u] >> v & 1]

    def is_clique(self, mask: int) -> bool:
        for v in bits(mask):
            if (mask & ~(1 << v)) & ~self.adj[v]:
                return False
        return True

    def is_simplicial(self, v: int) -> bool:
        return self.is_clique(self.adj[v])

    def simplicial_vertices(self) -> list[int]:
        return [v for v in range(self.n) if self.is_simplicial(v)]

    def is_complete(self) -> bool:
        return all(r == self.full_mask ^ (1 << v) for v, r in enumerate(self.adj))

    # names ------------------------------------------------------------

    @property
    def label_map(self) -> dict[str, int]:
        if self.names is None:
            return {}
        return {s: i for i, s in enumerate(self.names) if s is not None}

    def v(self, name: str) -> int:
        """Index of the vertex called ``name``."""
        try:
            return self.label_map[name]
        except KeyError:
            raise KeyError(f"no vertex named {name!r}") from None

    def vs(self, *names: str) -> list[int]:
        lm = self.label_map
        return [lm[s] for s in names]

    def name(self, v: int) -> str:
        if self.names is not None and self.names[v] is not None:
            return self.names[v]  # type: ignore[return-value]
        return str(v)

    def with_names(self, names: Sequence[str | None] | None) -> "SimpleGraph":
        return SimpleGraph(self.n, self.adj, tuple(names) if names is not None else None)

    # derived graphs ---------------------------------------------------

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        rows = list(self.adj)
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return SimpleGraph(self.n, tuple(rows), self.names)

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        rows = list(self.adj)
        for u, v in edges:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return SimpleGraph(self.n, tuple(rows), self.names)

    def add_vertices(self, k: int, names: Sequence[str | None] | None = None) -> "SimpleGraph":
        """Append ``k`` isolated vertices."""
        if self.names is None and names is None:
            new_names = None
        else:
            old = list(self.names) if self.names is not None else [None] * self.n
            new_names = tuple(old + (list(names) if names is not None else [None] * k))
        return SimpleGraph(self.n + k, self.adj + (0,) * k, new_names)

    def complement(self) -> "SimpleGraph":
        full = self.full_mask
        return SimpleGraph(self.n, tuple(full ^ r ^ (1 << v) for v, r in enumerate(self.adj)), self.names)

    def relabel(self, perm: Sequence[int]) -> "SimpleGraph":
        """Return the graph where old vertex ``v`` becomes ``perm[v]``."""
        rows = [0] * self.n
        for v, r in enumerate(self.adj):
            m = 0
            for u in bits(r):
                m |= 1 << perm[u]
            rows[perm[v]] = m
        names = None
        if self.names is not None:
            nm: list[str | None] = [None] * self.n
            for v in range(self.n):
                nm[perm[v]] = self.names[v]
            names = tuple(nm)
        return SimpleGraph(self.n, tuple(rows), names)

    def disjoint_union(self, other: "SimpleGraph") -> "SimpleGraph":
        shift = self.n
        rows = self.adj + tuple(r << shift for r in other.adj)
        names = None
        if self.names is not None or other.names is not None:
            a = self.names or (None,) * self.n
            b = other.names or (None,) * other.n
            names = tuple(a) + tuple(b)
        return SimpleGraph(self.n + other.n, rows, names)

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, m={self.number_of_edges()}, g6={write_graph6(self)!r})"


@dataclass(frozen=True)
class Multigraph:
    """Loopless multigraph; repeated pairs in ``edges`` encode multiplicity."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        counts: dict[tuple[int, int], int] = {}
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {u}-{v} out of range for n={self.n}")
            key = (min(u, v), max(u, v))
            counts[key] = counts.get(key, 0) + 1
            if counts[key] > MAX_MULTIPLICITY:
                raise ValueError(f"multiplicity of {key} exceeds {MAX_MULTIPLICITY}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Multigraph":
        return cls(n, tuple((int(u), int(v)) for u, v in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, x: int) -> int:
        return sum((u == x) + (v == x) for u, v in self.edges)

    def degrees(self) -> list[int]:
        d = [0] * self.n
        for u, v in self.edges:
            d[u] += 1
            d[v] += 1
        return d

    def multiplicities(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for u, v in self.edges:
            key = (min(u, v), max(u, v))
            out[key] = out.get(key, 0) + 1
        return out

    def is_pendant(self, i: int) -> bool:
        d = self.degrees()
        u, v = self.edges[i]
        return d[u] == 1 or d[v] == 1

    def has_multiple_edges(self) -> bool:
        return any(c > 1 for c in self.multiplicities().values())

    def underlying_simple(self) -> SimpleGraph:
        return SimpleGraph.from_edges(self.n, self.multiplicities().keys())

    def without_isolated(self) -> "Multigraph":
        used = sorted({x for e in self.edges for x in e})
        index = {x: i for i, x in enumerate(used)}
        return Multigraph(len(used), tuple((index[u], index[v]) for u, v in self.edges))


@dataclass(frozen=True)
class Embedding:
    """Injective map from pattern vertices to host vertices."""

    pattern: SimpleGraph
    host: SimpleGraph
    mapping: tuple[int, ...]

    def is_induced(self) -> bool:
        m = self.mapping
        if len(m) != self.pattern.n or len(set(m)) != len(m):
            return False
        for a, b in itertools.combinations(range(self.pattern.n), 2):
            if self.pattern.has_edge(a, b) != self.host.has_edge(m[a], m[b]):
                return False
        return True

    def image(self) -> list[int]:
        return list(self.mapping)

    def named(self) -> dict[str, str]:
        return {self.pattern.name(a): self.host.name(h) for a, h in enumerate(self.mapping)}


# ---------------------------------------------------------------------------
# graph6

_G6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def write_graph6(g: SimpleGraph) -> str:
    """Encode ``g`` as a graph6 string (no header, no newline)."""
    out = [_encode_n(g.n)]
    acc = 0
    k = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            k += 1
            if k == 6:
                out.append(chr(acc + 63))
                acc = k = 0
    if k:
        out.append(chr((acc << (6 - k)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> SimpleGraph:
    """Decode one graph6 line.

    Raises :class:`GraphFormatError` naming the offending byte offset.
    """
    s = text.strip()
    base = 0
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
        base = len(_G6_HEADER)
    if not s:
        raise GraphFormatError(f"empty graph6 string at byte {base}")
    for off, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"invalid graph6 byte {ch!r} at offset {base + off}")
    if s[0] != "~":
        n, pos = ord(s[0]) - 63, 1
    elif len(s) >= 2 and s[1] == "~":
        if len(s) < 8:
            raise GraphFormatError(f"truncated size field at offset {base + len(s)}")
        n = 0
        for ch in s[2:8]:
            n = (n << 6) | (ord(ch) - 63)
        pos = 8
    else:
        if len(s) < 4:
            raise GraphFormatError(f"truncated size field at offset {base + len(s)}")
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        pos = 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[pos:]
    if len(body) < need:
        raise GraphFormatError(
            f"truncated bit stream: expected {need} data bytes after offset {base + pos}, "
            f"stream ends at offset {base + len(s)}")
    if len(body) > need:
        raise GraphFormatError(f"trailing data at offset {base + pos + need}")
    rows = [0] * n
    k = 0
    i, j = 0, 1
    for ch in body:
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            if k >= nbits:
                break
            if val >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return SimpleGraph(n, tuple(rows))


# ---------------------------------------------------------------------------
# multigraph text format: "n m" then m lines "u v"

def parse_multigraph(text: str) -> Multigraph:
    lines = [ln.strip() for ln in text.replace("/", "\n").splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("empty multigraph text")
    try:
        n, m = (int(t) for t in lines[0].split())
    except ValueError:
        raise GraphFormatError(f"bad header line {lines[0]!r}; expected 'n m'") from None
    if len(lines) - 1 != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        try:
            u, v = (int(t) for t in ln.split())
        except ValueError:
            raise GraphFormatError(f"bad edge line {ln!r}") from None
        if u == v:
            raise GraphFormatError(f"loop {u}-{v} not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge {u}-{v} out of range for n={n}")
        edges.append((u, v))
    return Multigraph(n, tuple(edges))


def write_multigraph(h: Multigraph) -> str:
    return "\n".join([f"{h.n} {h.m}"] + [f"{u} {v}" for u, v in h.edges]) + "\n"


# ---------------------------------------------------------------------------
# elementary algorithms

def induced_subgraph(g: SimpleGraph, vertices: Iterable[int]) -> SimpleGraph:
    """Induced subgraph on ``vertices``, renumbered in the given order."""
    vs = list(vertices)
    if len(set(vs)) != len(vs):
        raise ValueError("duplicate vertex in induced_subgraph")
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    rows = []
    for v in vs:
        r = g.adj[v]
        rows.append(sum(1 << i for i, u in enumerate(vs) if r >> u & 1))
    names = tuple(g.names[v] for v in vs) if g.names is not None else None
    return SimpleGraph(len(vs), tuple(rows), names)


def _component_mask(adj: Sequence[int], start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected(g: SimpleGraph, mask: int | None = None) -> bool:
    """Connectivity of ``g`` (or of the subgraph induced by ``mask``)."""
    allowed = g.full_mask if mask is None else mask
    if not allowed:
        return True
    start = (allowed & -allowed).bit_length() - 1
    return _component_mask(g.adj, start, allowed) == allowed


def components(g: SimpleGraph, mask: int | None = None) -> list[int]:
    """Vertex masks of the connected components inside ``mask``."""
    rest = g.full_mask if mask is None else mask
    out = []
    while rest:
        start = (rest & -rest).bit_length() - 1
        comp = _component_mask(g.adj, start, rest)
        out.append(comp)
        rest &= ~comp
    return out


def _local_connectivity(g: SimpleGraph, s: int, t: int, cap: int) -> int:
    # max number of internally disjoint s-t paths (s, t non-adjacent), stops at cap
    n = g.n
    # split v into v_in = 2v, v_out = 2v+1; unit capacities
    flow: dict[tuple[int, int], int] = {}

    def residual(a: int, b: int) -> int:
        return base_cap(a, b) - flow.get((a, b), 0)

    def base_cap(a: int, b: int) -> int:
        va, vb = a >> 1, b >> 1
        if va == vb:
            return 1 if (a & 1 == 0 and b & 1 == 1) else 0
        if a & 1 == 1 and b & 1 == 0 and g.adj[va] >> vb & 1:
            return n
        return 0

    def succ(a: int) -> Iterator[int]:
        v = a >> 1
        if a & 1 == 0:
            yield a | 1
            for u in bits(g.adj[v]):
                yield 2 * u + 1
        else:
            yield a & ~1
            for u in bits(g.adj[v]):
                yield 2 * u

    source, sink = 2 * s + 1, 2 * t
    total = 0
    while total < cap:
        parent = {source: -1}
        queue = [source]
        found = False
        for a in queue:
            for b in succ(a):
                if b not in parent and residual(a, b) > 0:
                    parent[b] = a
                    if b == sink:
                        found = True
                        break
                    queue.append(b)
            if found:
                break
        if not found:
            break
        b = sink
        while parent[b] != -1:
            a = parent[b]
            flow[(a, b)] = flow.get((a, b), 0) + 1
            flow[(b, a)] = flow.get((b, a), 0) - 1
            b = a
        total += 1
    return total


def vertex_connectivity(g: SimpleGraph) -> int:
    """Vertex connectivity; ``n - 1`` for complete graphs, 0 if disconnected."""
    n = g.n
    if n <= 1:
        return 0
    if not is_connected(g):
        return 0
    if g.is_complete():
        return n - 1
    best = min(g.degrees())
    i = 0
    while i <= best and i < n:
        for j in range(i + 1, n):
            if not g.adj[i] >> j & 1:
                best = min(best, _local_connectivity(g, i, j, best))
        i += 1
    return best


def independence_number(g: SimpleGraph, bound: int = INDEPENDENCE_BOUND) -> int:
    """Exact independence number by branch and bound.

    Refuses (``ValueError``) graphs with more than ``bound`` vertices instead of
    approximating.
    """
    if g.n > bound:
        raise ValueError(f"independence_number refused: n={g.n} exceeds bound {bound}")
    adj = g.adj
    best = 0

    def rec(cand: int, size: int) -> None:
        nonlocal best
        while True:
            if not cand:
                best = max(best, size)
                return
            if size + popcount(cand) <= best:
                return
            # vertices of degree <= 1 inside cand can always be taken
            for v in bits(cand):
                if popcount(adj[v] & cand) <= 1:
                    cand &= ~(adj[v] | (1 << v))
                    size += 1
                    break
            else:
                break
        pivot = max(bits(cand), key=lambda v: popcount(adj[v] & cand))
        rec(cand & ~(adj[pivot] | (1 << pivot)), size + 1)
        rec(cand & ~(1 << pivot), size)

    rec(g.full_mask, 0)
    return best


def neighborhood_distance(g: SimpleGraph, x: int, u: int, v: int) -> float:
    """Distance of ``u`` and ``v`` inside the subgraph induced by ``N(x)``.

    Returns ``math.inf`` when they lie in different components.
    """
    nx_mask = g.adj[x]
    if not (nx_mask >> u & 1) or not (nx_mask >> v & 1):
        raise ValueError(f"vertices {u} and {v} must both be neighbours of {x}")
    if u == v:
        return 0
    seen = 1 << u
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for w in bits(frontier):
            nxt |= g.adj[w]
        nxt &= nx_mask & ~seen
        if nxt >> v & 1:
            return d
        seen |= nxt
        frontier = nxt
    return float("inf")


def local_completion_rows(adj: Sequence[int], x: int) -> tuple[int, ...]:
    """Adjacency rows after making ``N(x)`` a clique."""
    nb = adj[x]
    return tuple((r | nb) & ~(1 << v) if nb >> v & 1 else r for v, r in enumerate(adj))

