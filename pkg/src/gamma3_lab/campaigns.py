"""The concrete enumeration campaigns around an induced 4-wheel.

Each builder returns an :class:`EnumerationTask`; the ``campaign_*`` functions
run it and check the expected outcome, raising :class:`CampaignMismatch` when
the outcome differs.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product
from typing import Callable

from .catalog import FI_EXTRA_EDGES, Gamma, claw, make_F0, make_Fi, wheel
from .enumeration import (DEFAULT_PREFIX_DEPTH, EnumerationReport, EnumerationTask,
                          enumerate_free_extensions)
from .graph import SimpleGraph, bits

__all__ = [
    "CampaignMismatch",
    "default_filters",
    "case1_task",
    "case22_task",
    "case22_followup_task",
    "CASE22_DRAWN_EDGES",
    "CASE22_CURVED_EDGES",
    "CASE22_SURVIVOR_EDGES",
    "case22_survivor",
    "TailSpec",
    "TAIL_COMBOS",
    "M_SETS",
    "tail_tasks",
    "campaign_w4_case1",
    "campaign_w4_case22",
    "campaign_w4_case22_followup",
    "campaign_tails",
]

W = ("w1", "w2", "w3", "w4")


class CampaignMismatch(AssertionError):
    """The enumeration outcome differs from the expected one."""


def default_filters() -> tuple[list[SimpleGraph], list[str]]:
    return [claw(), Gamma(3), wheel(5)], ["claw", "gamma3", "w5"]


def case1_task(filters: tuple[list[SimpleGraph], list[str]] | None = None) -> EnumerationTask:
    """F_0 with every pair between the rim and ``p2, p3, p4, t3, t4`` undecided."""
    f0 = make_F0()
    pats, names = filters or default_filters()
    free = [(f0.v(w), f0.v(u)) for w in W for u in ("p2", "p3", "p4", "t3", "t4")]
    return EnumerationTask(f0, free, pats, names, name="case1")


def _gamma3_on(names: list[str]) -> list[tuple[str, str]]:
    g = Gamma(3)
    return [(names[a], names[b]) for a, b in g.edges()]


F_NAMES = ["t1", "t2", "p1", "p2", "p3", "p4", "t3", "t4"]


def case22_task(variant: str, filters: tuple[list[SimpleGraph], list[str]] | None = None,
                drawn_base: bool = False) -> EnumerationTask:
    """Disjoint 4-wheel and Gamma_3 whose new path edge has both ends joined to ``x``.

    Variant ``a`` removes ``p2p3`` from the path, variant ``b`` removes ``p1p2``.
    With ``drawn_base`` (variant b only) the four rim edges to ``p1, p2`` that
    the survivor drawing shows as straight lines are put in the base.
    """
    new = {"a": ("p2", "p3"), "b": ("p1", "p2")}.get(variant)
    if new is None:
        raise ValueError(f"variant must be 'a' or 'b', got {variant!r}")
    if drawn_base and variant != "b":
        raise ValueError("drawn_base applies to variant b only")
    names = ["x", *W, *F_NAMES]
    edges = [("x", w) for w in W] + [("w1", "w2"), ("w2", "w3"), ("w3", "w4"), ("w4", "w1")]
    edges += [e for e in _gamma3_on(F_NAMES) if set(e) != set(new)]
    edges += [("x", new[0]), ("x", new[1])]
    if drawn_base:
        edges += CASE22_DRAWN_EDGES
    base = SimpleGraph.from_named_edges(names, edges)
    pats, fnames = filters or default_filters()
    free = [(base.v(w), base.v(u)) for w in W for u in F_NAMES if not base.has_edge(base.v(w), base.v(u))]
    name = f"case22{variant}" + ("-drawn" if drawn_base else "")
    return EnumerationTask(base, free, pats, fnames, name=name)


# edges of the variant-b survivor drawn as straight lines, and the curved ones
CASE22_DRAWN_EDGES = [("w1", "p1"), ("w2", "p1"), ("w3", "p2"), ("w4", "p2")]
CASE22_CURVED_EDGES = [(w, u) for w in ("w1", "w4") for u in ("p4", "t3", "t4")] + [
    (w, u) for w in ("w2", "w3") for u in ("t3", "t4")]
CASE22_SURVIVOR_EDGES = CASE22_DRAWN_EDGES + CASE22_CURVED_EDGES


def case22_survivor() -> SimpleGraph:
    base = case22_task("b").base
    return base.add_edges((base.v(a), base.v(b)) for a, b in CASE22_SURVIVOR_EDGES)


def case22_followup_task(forced: bool = True,
                         filters: tuple[list[SimpleGraph], list[str]] | None = None) -> EnumerationTask:
    """The variant-b survivor plus a vertex ``v`` (joined to ``p3`` when ``forced``)."""
    surv = case22_survivor()
    g = surv.add_vertices(1, ["v"])
    v = g.v("v")
    if forced:
        g = g.add_edges([(v, g.v("p3"))])
    pats, fnames = filters or default_filters()
    free = [(v, u) for u in range(surv.n) if not (forced and u == g.v("p3"))]
    return EnumerationTask(g, free, pats, fnames, name="case22-followup" if forced else "case22-followup-free")


@dataclass(frozen=True)
class TailSpec:
    """One or two tails; each is (path length, end kind) with kind ``p`` or ``dc``."""

    tails: tuple[tuple[int, str], ...]

    def __str__(self) -> str:
        return "+".join(f"{n}{k}" for n, k in self.tails)


TAIL_COMBOS: tuple[TailSpec, ...] = (
    TailSpec(((3, "p"),)),
    TailSpec(((4, "dc"),)),
    TailSpec(((0, "p"), (2, "p"))),
    TailSpec(((0, "p"), (3, "dc"))),
    TailSpec(((1, "p"), (1, "p"))),
    TailSpec(((1, "p"), (2, "dc"))),
    TailSpec(((1, "dc"), (2, "p"))),
    TailSpec(((1, "dc"), (3, "dc"))),
    TailSpec(((2, "dc"), (2, "dc"))),
)

M_SETS: dict[int, tuple[str, ...]] = {i: ("x", *W) for i in (1, 3, 4, 6, 7, 8, 9, 10)}
M_SETS[2] = ("x", "w2", "w3")
M_SETS[5] = ("x", "w1", "w4")


def _attachments(spec: TailSpec, plain: list[str], dc: list[str]) -> list[tuple[str, ...]]:
    kinds = [k for _, k in spec.tails]
    if len(kinds) == 1:
        return [(a,) for a in (plain if kinds[0] == "p" else dc)]
    same = spec.tails[0] == spec.tails[1]
    pools = [plain if k == "p" else dc for k in kinds]
    if same:
        if kinds[0] == "p":
            return list(combinations(plain, 2))
        return list(combinations_with_replacement(dc, 2))
    return [(a, b) for a, b in product(*pools) if not (kinds[0] == kinds[1] == "p" and a == b)]


def _tail_task(i: int, spec: TailSpec, attach: tuple[str, ...],
               filters: tuple[list[SimpleGraph], list[str]], strict: bool = True) -> EnumerationTask:
    fi = make_Fi(i)
    M = {fi.v(m) for m in M_SETS[i]}
    names = [fi.name(v) for v in range(fi.n)]
    edges = [(names[a], names[b]) for a, b in fi.edges()]
    new: list[str] = []
    ends: list[str] = []  # the vertex of each tail lying in the completed clique
    hooks: list[tuple[str, str]] = []  # (new clique vertex, its vertex of M)
    for tag, (length, kind), at in zip("ab", spec.tails, attach):
        # the path a0 .. a_length; a plain end a_length is an existing vertex,
        # a double-circled a_length is the vertex of M and a_{length-1} is new
        real = length if kind == "p" else length - 1
        chain = [f"{tag}{k}" for k in range(real + 1)]
        if kind == "p":
            chain[-1] = at
        else:
            hooks.append((chain[-1], at))
            edges.append((chain[-1], at))
        tri = [f"{tag}t", f"{tag}u"]
        new += tri + [c for c in chain if c != at]
        edges += [(tri[0], tri[1]), (tri[0], chain[0]), (tri[1], chain[0])]
        edges += list(zip(chain, chain[1:]))
        ends.append(chain[-1])
    g = SimpleGraph.from_named_edges(names + new, edges)
    fixed = {g.v(e) for e in ends}
    hooked = {(g.v(c), g.v(m)) for c, m in hooks}
    free: list[tuple[int, int]] = []
    clique_new = {g.v(c) for c, _ in hooks}
    for c in new:
        cv = g.v(c)
        for u in range(fi.n):
            if u in fixed or (cv, u) in hooked:
                continue
            if strict and u in M and cv not in clique_new:
                continue  # a tail vertex outside the clique has no neighbour in M
            free.append((cv, u))
    if len(ends) == 2:
        a, b = g.v(ends[0]), g.v(ends[1])
        if max(a, b) >= fi.n and not g.has_edge(a, b):
            free.append((a, b))
    label = f"tails-F{i}-{spec}-" + ",".join(attach)
    return EnumerationTask(g, free, *filters, name=label)


def tail_tasks(i: int, filters: tuple[list[SimpleGraph], list[str]] | None = None,
               combos: tuple[TailSpec, ...] = TAIL_COMBOS, strict: bool = True) -> list[EnumerationTask]:
    """Every tail combination and attachment for ``F_i`` and its set ``M_i``.

    With ``strict`` the tail vertices outside the completed clique are kept
    non-adjacent to ``M_i``; otherwise those pairs are free as well.
    """
    if i not in M_SETS:
        raise ValueError(f"F index must be in 1..10, got {i}")
    filters = filters or default_filters()
    fi = make_Fi(i)
    M = [fi.v(m) for m in M_SETS[i]]
    closed = 0
    for m in M:
        closed |= fi.adj[m] | 1 << m
    for m in M:
        closed &= ~(1 << m)
    plain = [fi.name(v) for v in bits(closed)]
    dc = list(M_SETS[i])
    tasks = []
    for spec in combos:
        for attach in _attachments(spec, plain, dc):
            tasks.append(_tail_task(i, spec, attach, filters, strict))
    return tasks


def _named_pairs(task: EnumerationTask, pairs) -> set[str]:
    """Pair names as the report prints them."""
    b = task.base
    out = set()
    for x, y in pairs:
        u, v = b.v(x), b.v(y)
        out.add(task.pair_name((min(u, v), max(u, v))))
    return out


def campaign_w4_case1(jobs: int = 1, **kw) -> tuple[EnumerationReport, dict[int, list[str]]]:
    """Run the F_0 task; expect ten classes, one for each published edge list."""
    task = case1_task()
    rep = enumerate_free_extensions(task, jobs=jobs, **kw)
    labeled = [set(s["edges"]) for s in rep.survivors]
    mapping: dict[int, list[str]] = {}
    classes_hit = set()
    for i, extra in FI_EXTRA_EDGES.items():
        want = _named_pairs(task, extra)
        hits = [k for k, s in enumerate(labeled) if s == want]
        if not hits:
            raise CampaignMismatch(f"published list for F{i} is not a survivor")
        cls = tuple(rep.survivors[hits[0]]["class"])
        if cls in classes_hit:
            raise CampaignMismatch(f"F{i} falls into an already matched class")
        classes_hit.add(cls)
        mapping[i] = list(cls)
    if rep.class_count != 10:
        raise CampaignMismatch(f"expected 10 survivor classes, found {rep.class_count}")
    return rep, mapping


def campaign_w4_case22(variant: str, jobs: int = 1, drawn_base: bool = False, **kw) -> EnumerationReport:
    """Variant a must leave nothing; variant b exactly the drawn survivor class."""
    task = case22_task(variant, drawn_base=drawn_base)
    rep = enumerate_free_extensions(task, jobs=jobs, **kw)
    if variant == "a":
        if rep.labeled_count:
            raise CampaignMismatch(f"variant a: expected no survivors, found {rep.labeled_count}")
        return rep
    if rep.class_count != 1:
        raise CampaignMismatch(f"variant b: expected one survivor class, found {rep.class_count}")
    want = _named_pairs(task, CASE22_CURVED_EDGES if drawn_base else CASE22_SURVIVOR_EDGES)
    if not any(set(s["edges"]) == want for s in rep.survivors):
        raise CampaignMismatch("variant b: the drawn survivor is not among the survivors")
    return rep


def campaign_w4_case22_followup(jobs: int = 1, forced: bool = True, **kw) -> EnumerationReport:
    rep = enumerate_free_extensions(case22_followup_task(forced), jobs=jobs, **kw)
    if forced and rep.labeled_count:
        raise CampaignMismatch(f"follow-up: expected no survivors, found {rep.labeled_count}")
    return rep


def campaign_tails(i: int, jobs: int = 1, checkpoint_dir: str | None = None,
                   progress: Callable[[EnumerationTask, EnumerationReport], None] | None = None,
                   strict: bool = True, filters: tuple[list[SimpleGraph], list[str]] | None = None,
                   check: bool = True, combos: tuple[TailSpec, ...] = TAIL_COMBOS,
                   **kw) -> list[EnumerationReport]:
    """Run every tail task for ``F_i`` with one checkpoint file per task.

    With ``check`` any survivor raises :class:`CampaignMismatch` after all
    tasks have run.
    """
    reports = []
    for task in tail_tasks(i, filters, combos, strict):
        ck = None
        if checkpoint_dir:
            os.makedirs(checkpoint_dir, exist_ok=True)
            ck = os.path.join(checkpoint_dir, re.sub(r"[^\w.-]", "_", task.name) + ".json")
        rep = enumerate_free_extensions(task, jobs=jobs, checkpoint=ck, **kw)
        reports.append(rep)
        if progress:
            progress(task, rep)
    bad = [r for r in reports if r.labeled_count]
    if check and bad:
        raise CampaignMismatch(f"F{i}: {len(bad)} tail configurations have survivors, first: {bad[0].task}")
    return reports
