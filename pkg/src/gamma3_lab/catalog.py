"""Named graphs with their customary vertex labels.

Every constructor returns a labelled :class:`SimpleGraph`.  ``make_pattern``
dispatches on a :class:`PatternSpec`; short textual names such as ``claw``,
``gamma3``, ``w5``, ``b3_5`` or ``f7`` are accepted through
:meth:`PatternSpec.parse`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .graph import Multigraph, SimpleGraph

__all__ = [
    "PatternSpec",
    "make_pattern",
    "make_F0",
    "make_Fi",
    "FI_EXTRA_EDGES",
    "claw",
    "path",
    "cycle",
    "complete",
    "Z",
    "B",
    "N",
    "Gamma",
    "wheel",
    "P6sq",
    "P6sqPlus",
    "graph_S",
    "wagner",
    "wagner_plus",
    "wagner_plus_multigraph",
    "bermond_meyer",
    "graph_R",
    "petersen",
    "petersen_example_multigraph",
]

FAMILIES = {
    # family -> (number of parameters, minimum value of each)
    "claw": (0, 0), "P": (1, 1), "C": (1, 3), "K": (1, 1), "Z": (1, 1), "B": (2, 1),
    "N": (3, 1), "Gamma": (1, 0), "W": (1, 4), "P6sq": (0, 0), "P6sqPlus": (0, 0),
    "S": (0, 0), "Wagner": (0, 0), "WagnerPlus": (0, 0), "G": (1, 1), "R": (0, 0),
    "F0": (0, 0), "F": (1, 1), "Fig9": (1, 1), "Petersen": (0, 0),
}

_ALIASES = {
    "claw": "claw", "k13": "claw", "p": "P", "c": "C", "k": "K", "z": "Z", "b": "B",
    "n": "N", "gamma": "Gamma", "g": "G", "w": "W", "wheel": "W", "p6sq": "P6sq",
    "p6sqplus": "P6sqPlus", "s": "S", "wagner": "Wagner", "wagnerplus": "WagnerPlus",
    "r": "R", "f0": "F0", "f": "F", "fig9": "Fig9", "petersen": "Petersen",
}


@dataclass(frozen=True)
class PatternSpec:
    family: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown pattern family {self.family!r}")
        arity, low = FAMILIES[self.family]
        if len(self.params) != arity:
            raise ValueError(f"{self.family} takes {arity} parameter(s), got {len(self.params)}")
        for p in self.params:
            if p < low:
                raise ValueError(f"{self.family}: parameters must be >= {low}, got {p}")
        if self.family == "W" and self.params[0] not in (4, 5):
            raise ValueError(f"W: wheel size must be 4 or 5, got {self.params[0]}")
        if self.family == "G" and self.params[0] > 7:
            raise ValueError(f"G: Bermond-Meyer index must be in 1..7, got {self.params[0]}")
        if self.family in ("F", "Fig9") and self.params[0] > 10:
            raise ValueError(f"{self.family}: index must be in 1..10, got {self.params[0]}")

    @classmethod
    def parse(cls, text: str) -> "PatternSpec":
        """Parse names like ``claw``, ``gamma3``, ``p10``, ``b3_5``, ``n1_1_2``, ``g7``."""
        t = text.strip().lower().replace("-", "").replace(",", "_")
        if t in _ALIASES and FAMILIES[_ALIASES[t]][0] == 0:
            return cls(_ALIASES[t])
        m = re.fullmatch(r"fig9_(\d+)", t)
        if m:
            return cls("Fig9", (int(m.group(1)),))
        m = re.fullmatch(r"([a-z]+?)(\d+(?:_\d+)*)", t)
        if not m or m.group(1) not in _ALIASES:
            raise ValueError(f"cannot parse pattern name {text!r}")
        nums = tuple(int(x) for x in m.group(2).split("_"))
        fam = _ALIASES[m.group(1)]
        # allow b35 / n111 shorthand for single-digit indices
        arity = FAMILIES[fam][0]
        if len(nums) == 1 and arity > 1 and len(m.group(2)) == arity:
            nums = tuple(int(ch) for ch in m.group(2))
        return cls(fam, nums)

    def __str__(self) -> str:
        sep = "_" if self.family[-1].isdigit() and self.params else ""
        return self.family + sep + "_".join(map(str, self.params))


def _graph(names: list[str], edges: list[tuple[str, str]]) -> SimpleGraph:
    return SimpleGraph.from_named_edges(names, edges)


def _chain(names: list[str]) -> list[tuple[str, str]]:
    return list(zip(names, names[1:]))


def claw() -> SimpleGraph:
    return _graph(["x", "a", "b", "c"], [("x", "a"), ("x", "b"), ("x", "c")])


def path(i: int) -> SimpleGraph:
    names = [f"v{k}" for k in range(1, i + 1)]
    return _graph(names, _chain(names))


def cycle(k: int) -> SimpleGraph:
    names = [f"v{j}" for j in range(1, k + 1)]
    return _graph(names, _chain(names) + [(names[-1], names[0])])


def complete(k: int) -> SimpleGraph:
    names = [f"v{j}" for j in range(1, k + 1)]
    return _graph(names, [(a, b) for i, a in enumerate(names) for b in names[i + 1:]])


def _pendant_path(root: str, prefix: str, length: int) -> tuple[list[str], list[tuple[str, str]]]:
    names = [f"{prefix}{k}" for k in range(1, length + 1)]
    return names, _chain([root] + names)


def Z(i: int) -> SimpleGraph:
    """Triangle ``t1 t2 a`` with a path of ``i`` further vertices hanging at ``a``."""
    tail, e = _pendant_path("a", "y", i)
    return _graph(["t1", "t2", "a"] + tail, [("t1", "t2"), ("t1", "a"), ("t2", "a")] + e)


def B(i: int, j: int) -> SimpleGraph:
    """Triangle ``a b c`` with paths of ``i`` and ``j`` vertices at ``a`` and ``b``."""
    ta, ea = _pendant_path("a", "a", i)
    tb, eb = _pendant_path("b", "b", j)
    return _graph(["c", "a", "b"] + ta + tb, [("a", "b"), ("b", "c"), ("a", "c")] + ea + eb)


def N(i: int, j: int, k: int) -> SimpleGraph:
    """Triangle ``a b c`` with paths of ``i``, ``j``, ``k`` vertices at its corners."""
    ta, ea = _pendant_path("a", "a", i)
    tb, eb = _pendant_path("b", "b", j)
    tc, ec = _pendant_path("c", "c", k)
    return _graph(["a", "b", "c"] + ta + tb + tc,
                  [("a", "b"), ("b", "c"), ("a", "c")] + ea + eb + ec)


def Gamma(i: int) -> SimpleGraph:
    """Two triangles joined by a path with ``i`` edges.

    Vertex order is ``t1, t2, p1, ..., p_{i+1}, t3, t4``; the path runs from
    ``p1`` (in triangle ``t1 t2 p1``) to ``p_{i+1}`` (in triangle with ``t3 t4``).
    """
    ps = [f"p{k}" for k in range(1, i + 2)]
    edges = [("t1", "t2"), ("t1", "p1"), ("t2", "p1")] + _chain(ps)
    edges += [(ps[-1], "t3"), (ps[-1], "t4"), ("t3", "t4")]
    return _graph(["t1", "t2"] + ps + ["t3", "t4"], edges)


def wheel(k: int) -> SimpleGraph:
    """Centre ``x`` joined to the rim cycle ``w1 ... wk``."""
    rim = [f"w{j}" for j in range(1, k + 1)]
    return _graph(["x"] + rim, [("x", w) for w in rim] + _chain(rim) + [(rim[-1], rim[0])])


def P6sq() -> SimpleGraph:
    names = [f"v{k}" for k in range(6)]
    return _graph(names, _chain(names) + list(zip(names, names[2:])))


def P6sqPlus() -> SimpleGraph:
    return P6sq().add_edges([(0, 5)])


def graph_S() -> SimpleGraph:
    """Central triangle ``z1 z2 z3`` with a further triangle glued on each side."""
    return _graph([f"z{k}" for k in range(1, 7)],
                  [("z1", "z2"), ("z2", "z3"), ("z1", "z3"), ("z4", "z1"), ("z4", "z3"),
                   ("z5", "z1"), ("z5", "z2"), ("z6", "z2"), ("z6", "z3")])


def wagner() -> SimpleGraph:
    """The 8-cycle ``v0 ... v7`` plus its four long diagonals."""
    return SimpleGraph.from_edges(8, [(k, (k + 1) % 8) for k in range(8)] + [(k, k + 4) for k in range(4)],
                                  names=[f"v{k}" for k in range(8)])


def wagner_plus() -> SimpleGraph:
    """Wagner graph with a pendant vertex ``u_k`` attached to each ``v_k``."""
    w = wagner()
    g = w.add_vertices(8, [f"u{k}" for k in range(8)])
    return g.add_edges([(k, k + 8) for k in range(8)])


def wagner_plus_multigraph() -> Multigraph:
    return Multigraph.from_edges(16, wagner_plus().edges())


_BM = {
    1: (["x", "a", "b", "c"], "xa xb xc"),
    2: (list("ABCDEF"), "AB AC BC BD CD CE DE DF EF"),
    3: (["O", "T", "L", "BL", "BR", "R"], "TL L-BL BL-BR BR-R RT OT OL O-BL O-BR OR"),
    4: (list("abcdef"), "ab bc cd de ea af fc ce eb fd"),
    5: (["T", "Bm", "a", "b", "c", "d"], "ab bc cd dT Ta a-Bm Bm-b bT Tc c-Bm Bm-d"),
    6: (list("ABCDEFG"), "AF FG GA AB BF FE EG GC CA AD DE EB BC CE FD DB GD DC"),
    7: (list("ABCDEFG"), "AC CE EF FD DA AB BG GC CB BD DG GE EB BF FG CD"),
}


def _split_edge(tok: str, names: list[str]) -> tuple[str, str]:
    if "-" in tok:
        a, b = tok.split("-")
        return a, b
    # greedy split into two known names
    for k in range(1, len(tok)):
        if tok[:k] in names and tok[k:] in names:
            return tok[:k], tok[k:]
    raise ValueError(tok)


def bermond_meyer(i: int) -> SimpleGraph:
    """The ``i``-th of the seven minimal non-line-graphs of multigraphs."""
    if not 1 <= i <= 7:
        raise ValueError(f"G: Bermond-Meyer index must be in 1..7, got {i}")
    names, spec = _BM[i]
    return _graph(names, [_split_edge(t, names) for t in spec.split()])


def graph_R() -> SimpleGraph:
    """4-wheel on ``x, w1..w4`` with ``z1 ~ x,w1,w2`` and ``z2 ~ x,w3,w4``."""
    edges = [("x", w) for w in ("w1", "w2", "w3", "w4")]
    edges += [("w1", "w2"), ("w2", "w3"), ("w3", "w4"), ("w4", "w1")]
    edges += [("z1", "x"), ("z1", "w1"), ("z1", "w2"), ("z2", "x"), ("z2", "w3"), ("z2", "w4")]
    return _graph(["x", "w1", "w2", "w3", "w4", "z1", "z2"], edges)


F0_NAMES = ["x", "t1", "w1", "w2", "w3", "w4", "p1", "p2", "p3", "p4", "t3", "t4"]


def make_F0() -> SimpleGraph:
    """The 12-vertex, 20-edge configuration around a 4-wheel centred at ``x``.

    ``t1`` and ``p1`` play the roles of ``z1`` and ``z2`` of :func:`graph_R`;
    ``p1 p2 p3 p4`` is a path and ``p4 t3 t4`` a triangle.
    """
    edges = [("x", w) for w in ("w1", "w2", "w3", "w4")]
    edges += [("w1", "w2"), ("w2", "w3"), ("w3", "w4"), ("w4", "w1")]
    edges += [("t1", "x"), ("t1", "w1"), ("t1", "w2"), ("p1", "x"), ("p1", "w3"), ("p1", "w4")]
    edges += [("p1", "p2"), ("p2", "p3"), ("p3", "p4"), ("p4", "t3"), ("p4", "t4"), ("t3", "t4")]
    return _graph(F0_NAMES, edges)


def _pairs(text: str) -> list[tuple[str, str]]:
    return [(tok[:2], tok[2:]) for tok in text.split()]


FI_EXTRA_EDGES: dict[int, list[tuple[str, str]]] = {
    1: _pairs("w1t3 w2t4 w3t4 w4t3"),
    2: _pairs("w1t3 w2p2 w2p3 w3p2 w3p3 w4t3"),
    3: _pairs("w1t3 w2p3 w2p4 w3p3 w3p4 w4t3"),
    4: _pairs("w1p2 w1p3 w2p3 w2p4 w3p3 w3p4 w4p2 w4p3"),
    5: _pairs("w1p2 w1p3 w2t3 w2t4 w3t3 w3t4 w4p2 w4p3"),
    6: _pairs("w1p3 w1p4 w2t3 w2t4 w3t3 w3t4 w4p3 w4p4"),
    7: _pairs("w1p4 w1t3 w1t4 w2t4 w3t4 w4p4 w4t3 w4t4"),
    8: _pairs("w1p2 w1p3 w2p4 w2t3 w2t4 w3p4 w3t3 w3t4 w4p2 w4p3"),
    9: _pairs("w1p3 w1p4 w2p4 w2t3 w2t4 w3p4 w3t3 w3t4 w4p3 w4p4"),
    10: _pairs("w1p4 w1t3 w1t4 w2t3 w2t4 w3t3 w3t4 w4p4 w4t3 w4t4"),
}


def make_Fi(i: int) -> SimpleGraph:
    if i not in FI_EXTRA_EDGES:
        raise ValueError(f"F: index must be in 1..10, got {i}")
    f0 = make_F0()
    return f0.add_edges([(f0.v(a), f0.v(b)) for a, b in FI_EXTRA_EDGES[i]])


def petersen() -> SimpleGraph:
    outer = [(k, (k + 1) % 5) for k in range(5)]
    spokes = [(k, k + 5) for k in range(5)]
    inner = [(5 + k, 5 + (k + 2) % 5) for k in range(5)]
    return SimpleGraph.from_edges(10, outer + spokes + inner, names=[f"x{k + 1}" for k in range(10)])


def petersen_example_multigraph() -> tuple[Multigraph, dict[str, int]]:
    """Petersen graph with pendants, edge ``x1x2`` subdivided by ``w``, ``x1w`` and ``x2w`` doubled.

    Returns the multigraph and the edge indices of ``x1'``, ``x1''``, ``x2'``,
    ``x2''`` (the two parallel edges at ``x1`` and at ``x2``).
    """
    p = petersen()
    w = 10
    edges = [e for e in p.edges() if e != (0, 1)]
    edges += [(k, 11 + k) for k in range(10)]
    idx = {}
    for lab, a in (("x1", 0), ("x2", 1)):
        for prime in ("'", "''"):
            idx[lab + prime] = len(edges)
            edges.append((a, w))
    return Multigraph.from_edges(21, edges), idx


def make_pattern(spec: PatternSpec | str) -> SimpleGraph:
    """Build the named graph described by ``spec``."""
    if isinstance(spec, str):
        spec = PatternSpec.parse(spec)
    f, p = spec.family, spec.params
    if f == "claw":
        return claw()
    if f == "P":
        return path(*p)
    if f == "C":
        return cycle(*p)
    if f == "K":
        return complete(*p)
    if f == "Z":
        return Z(*p)
    if f == "B":
        return B(*p)
    if f == "N":
        return N(*p)
    if f == "Gamma":
        return Gamma(*p)
    if f == "W":
        return wheel(*p)
    if f == "P6sq":
        return P6sq()
    if f == "P6sqPlus":
        return P6sqPlus()
    if f == "S":
        return graph_S()
    if f == "Wagner":
        return wagner()
    if f == "WagnerPlus":
        return wagner_plus()
    if f == "G":
        return bermond_meyer(*p)
    if f == "R":
        return graph_R()
    if f == "F0":
        return make_F0()
    if f in ("F", "Fig9"):
        return make_Fi(*p)
    if f == "Petersen":
        return petersen()
    raise AssertionError(f)
