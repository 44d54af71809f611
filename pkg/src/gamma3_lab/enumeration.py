"""Exhaustive search over edge subsets of a set of undecided vertex pairs.

Each free pair is an edge, a non-edge, or still undecided.  After every
decision the forbidden patterns are searched only through the pair just
decided: an embedding whose pairs are all decided prunes the branch, and a
near-embedding with a single undecided pair forces that pair to the opposite
value.  Both checks happen in one pass that tracks, per candidate vertex,
whether zero or one undecided pair has been used so far.

The search space is cut into deterministic work units by fixing the first
``prefix_depth`` free pairs, so results do not depend on the number of
workers and a checkpoint file can record finished units.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .canon import automorphisms, canonical_form
from .graph import SimpleGraph, bits, write_graph6
from .hamilton import BudgetExceeded

__all__ = [
    "EnumerationTask",
    "EnumerationReport",
    "Engine",
    "enumerate_free_extensions",
    "naive_free_extensions",
    "DEFAULT_PREFIX_DEPTH",
    "DEFAULT_WITNESS_CAP",
]

DEFAULT_PREFIX_DEPTH = 8
DEFAULT_WITNESS_CAP = 20
DEFAULT_ENGINE_BUDGET = 10**9


@dataclass
class EnumerationTask:
    base: SimpleGraph
    free_pairs: list[tuple[int, int]]
    filters: list[SimpleGraph]
    filter_names: list[str] = field(default_factory=list)
    symmetry: list[tuple[int, ...]] | None = None
    name: str = "task"

    def __post_init__(self):
        seen = set()
        norm = []
        for a, b in self.free_pairs:
            if a == b:
                raise ValueError(f"free pair ({a},{b}) is a loop")
            p = (min(a, b), max(a, b))
            if p in seen:
                raise ValueError(f"duplicate free pair {p}")
            if self.base.has_edge(*p):
                raise ValueError(f"free pair {p} is already an edge of the base")
            seen.add(p)
            norm.append(p)
        self.free_pairs = norm
        if not self.filters:
            raise ValueError("at least one filter pattern is required")
        if not self.filter_names:
            self.filter_names = [f"pattern{i}" for i in range(len(self.filters))]

    def fingerprint(self) -> str:
        blob = json.dumps({
            "base": write_graph6(self.base),
            "free": self.free_pairs,
            "filters": [write_graph6(f) for f in self.filters],
        })
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def pair_name(self, p: tuple[int, int]) -> str:
        a, b = p
        return self.base.name(a) + self.base.name(b)

    def graph_from_subset(self, subset: Sequence[int]) -> SimpleGraph:
        return self.base.add_edges(self.free_pairs[i] for i in subset)

    def stabilizer(self) -> list[tuple[int, ...]]:
        """Automorphisms of the base mapping the free-pair set onto itself."""
        free = set(self.free_pairs)
        out = []
        for p in automorphisms(self.base):
            if all((min(p[a], p[b]), max(p[a], p[b])) in free for a, b in self.free_pairs):
                out.append(p)
        return out


class _Plan:
    """Search order for one pattern with the first two pattern vertices pinned."""

    __slots__ = ("k", "first", "anchor_adj", "steps")

    def __init__(self, pattern: SimpleGraph, first: list[int]):
        order = list(first)
        placed = 0
        for v in order:
            placed |= 1 << v
        rest = [v for v in range(pattern.n) if v not in order]
        while rest:
            best = max(rest, key=lambda v: (bin(pattern.adj[v] & placed).count("1"), pattern.degree(v), -v))
            order.append(best)
            placed |= 1 << best
            rest.remove(best)
        self.k = pattern.n
        self.first = len(first)
        self.anchor_adj = pattern.has_edge(first[0], first[1]) if len(first) == 2 else None
        self.steps = [tuple((j, pattern.has_edge(order[j], v)) for j in range(i))
                      for i, v in enumerate(order)]


def _pair_orbit_reps(pattern: SimpleGraph) -> list[tuple[int, int]]:
    auts = automorphisms(pattern)
    seen: set[tuple[int, int]] = set()
    reps = []
    for p in range(pattern.n):
        for q in range(pattern.n):
            if p == q or (p, q) in seen:
                continue
            reps.append((p, q))
            for a in auts:
                seen.add((a[p], a[q]))
    return reps


class Engine:
    """Three-valued depth-first search for one task."""

    def __init__(self, task: EnumerationTask, witness_cap: int = DEFAULT_WITNESS_CAP,
                 audit: bool = False):
        self.task = task
        n = task.base.n
        self.n = n
        self.full = (1 << n) - 1
        self.var_of: dict[tuple[int, int], int] = {p: i for i, p in enumerate(task.free_pairs)}
        self.nvars = len(task.free_pairs)
        self.root_plans = [_Plan(f, []) for f in task.filters]
        self.edge_plans: list[list[_Plan]] = []
        self.non_plans: list[list[_Plan]] = []
        for f in task.filters:
            reps = _pair_orbit_reps(f)
            self.edge_plans.append([_Plan(f, [p, q]) for p, q in reps if f.has_edge(p, q)])
            self.non_plans.append([_Plan(f, [p, q]) for p, q in reps if not f.has_edge(p, q)])
        self.witness_cap = witness_cap
        self.audit = audit
        self.audits = 0
        self.witnesses: list[dict] = []
        self.nodes = 0
        self.budget = DEFAULT_ENGINE_BUDGET
        self._root: tuple[bool, int] | None = None  # root outcome and trail mark
        self.reset()

    # state -----------------------------------------------------------------
    def reset(self) -> None:
        self.E = list(self.task.base.adj)
        self.U = [0] * self.n
        for a, b in self.task.free_pairs:
            self.U[a] |= 1 << b
            self.U[b] |= 1 << a
        self.val = [-1] * self.nvars
        self.trail: list[int] = []

    def _set(self, var: int, value: int) -> None:
        a, b = self.task.free_pairs[var]
        self.U[a] &= ~(1 << b)
        self.U[b] &= ~(1 << a)
        if value:
            self.E[a] |= 1 << b
            self.E[b] |= 1 << a
        self.val[var] = value
        self.trail.append(var)

    def _undo_to(self, mark: int) -> None:
        trail = self.trail
        while len(trail) > mark:
            var = trail.pop()
            a, b = self.task.free_pairs[var]
            self.U[a] |= 1 << b
            self.U[b] |= 1 << a
            self.E[a] &= ~(1 << b)
            self.E[b] &= ~(1 << a)
            self.val[var] = -1

    # pattern search ----------------------------------------------------------
    def _scan(self, plan: _Plan, img: list[int], fidx: int, forced: list[tuple[int, int, int]]) -> bool:
        """Extend ``img``; return True on a fully decided embedding, collect forced pairs."""
        E, U, full, k, steps = self.E, self.U, self.full, plan.k, plan.steps

        def rec(i: int, used: int, pending: tuple[int, int, int] | None) -> bool:
            if i == k:
                if pending is None:
                    self._record(fidx, img)
                    return True
                forced.append(pending)
                return False
            z = full & ~used
            o = 0
            for j, adj in steps[i]:
                w = img[j]
                s = E[w] if adj else ~(E[w] | U[w])
                o = (o & s) | (z & U[w])
                z &= s
                if not z and (pending is not None or not o):
                    return False
            for w in bits(z):
                img.append(w)
                if rec(i + 1, used | 1 << w, pending):
                    img.pop()
                    return True
                img.pop()
            if pending is None:
                for w in bits(o):
                    for j, adj in steps[i]:
                        x = img[j]
                        if U[x] >> w & 1:
                            pend = (x, w, 0 if adj else 1)
                            break
                    img.append(w)
                    if rec(i + 1, used | 1 << w, pend):
                        img.pop()
                        return True
                    img.pop()
            return False

        return rec(len(img), sum(1 << v for v in img), None)

    def _record(self, fidx: int, img: list[int]) -> None:
        if len(self.witnesses) < self.witness_cap:
            names = [self.task.base.name(v) for v in img]
            self.witnesses.append({"pattern": self.task.filter_names[fidx], "vertices": names})

    def _check_pair(self, a: int, b: int, value: int, forced: list) -> bool:
        plans = self.edge_plans if value else self.non_plans
        for fidx, group in enumerate(plans):
            for plan in group:
                # ordered-pair orbit representatives: one orientation suffices
                if self._scan(plan, [a, b], fidx, forced):
                    return False
        return True

    def _apply_forced(self, forced: list[tuple[int, int, int]], queue: list[int]) -> bool:
        for x, y, value in forced:
            var = self.var_of[(min(x, y), max(x, y))]
            cur = self.val[var]
            if cur == -1:
                self._set(var, value)
                queue.append(var)
            elif cur != value:
                return False
        return True

    def propagate(self, queue: list[int]) -> bool:
        """Check and propagate from the decided variables in ``queue``."""
        while queue:
            var = queue.pop()
            a, b = self.task.free_pairs[var]
            forced: list[tuple[int, int, int]] = []
            if not self._check_pair(a, b, self.val[var], forced):
                return False
            if self.audit:
                self._audit(forced)
            if not self._apply_forced(forced, queue):
                return False
        return True

    def _audit(self, forced: list[tuple[int, int, int]]) -> None:
        # flipping a forced pair must create a fully decided forbidden embedding
        for x, y, value in forced:
            var = self.var_of[(min(x, y), max(x, y))]
            if self.val[var] != -1:
                continue
            mark = len(self.trail)
            self._set(var, 1 - value)
            hit = not self._check_pair(x, y, 1 - value, [])
            self._undo_to(mark)
            assert hit, f"unsound propagation on pair {self.task.pair_name((x, y))}"
            self.audits += 1

    def root(self) -> bool:
        """Check the base and run propagation before any decision."""
        self.reset()
        self._root = None
        forced: list[tuple[int, int, int]] = []
        for fidx, plan in enumerate(self.root_plans):
            if self._scan(plan, [], fidx, forced):
                return False
        queue: list[int] = []
        return self._apply_forced(forced, queue) and self.propagate(queue)

    def decide(self, var: int, value: int) -> bool:
        self._set(var, value)
        return self.propagate([var])

    # search ----------------------------------------------------------------
    def search(self, start: int, survivors: list[tuple[int, ...]]) -> None:
        var = start
        while var < self.nvars and self.val[var] != -1:
            var += 1
        if var == self.nvars:
            survivors.append(tuple(i for i in range(self.nvars) if self.val[i] == 1))
            return
        for value in (0, 1):
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExceeded(f"enumeration exceeded {self.budget} nodes")
            mark = len(self.trail)
            if self.decide(var, value):
                self.search(var + 1, survivors)
            self._undo_to(mark)

    def run_unit(self, unit: int, depth: int) -> tuple[list[tuple[int, ...]], int]:
        """Survivors whose first ``depth`` free pairs follow the bits of ``unit``."""
        self.nodes = 0
        survivors: list[tuple[int, ...]] = []
        if self._root is None:
            ok = self.root()
            self._root = (ok, len(self.trail))
        ok, mark = self._root
        if not ok:
            return survivors, self.nodes
        self._undo_to(mark)
        for var in range(depth):
            value = unit >> (depth - 1 - var) & 1
            if self.val[var] == -1:
                self.nodes += 1
                if not self.decide(var, value):
                    return survivors, self.nodes
            elif self.val[var] != value:
                return survivors, self.nodes
        self.search(depth, survivors)
        return survivors, self.nodes


@dataclass
class EnumerationReport:
    task: str
    base_graph6: str
    base_labels: list[str]
    free_pairs: list[str]
    filters: list[str]
    survivors: list[dict]
    labeled_count: int
    class_count: int
    classes: list[list[str]]
    class_sizes: list[int]
    group_order: int
    nodes_explored: int
    units: int
    prefix_depth: int
    wall_time: float
    witnesses: list[dict]

    def to_json(self) -> dict:
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


_WORKER: dict = {}


def _worker_init(task: EnumerationTask, cap: int, budget: int) -> None:
    eng = Engine(task, cap)
    eng.budget = budget
    _WORKER["engine"] = eng


def _worker_run(args: tuple[int, int]) -> tuple[int, list[tuple[int, ...]], int, list[dict]]:
    unit, depth = args
    eng: Engine = _WORKER["engine"]
    eng.witnesses = []
    surv, nodes = eng.run_unit(unit, depth)
    return unit, surv, nodes, eng.witnesses


def _load_checkpoint(path: str | None, task: EnumerationTask, depth: int) -> dict:
    if path and os.path.exists(path):
        with open(path) as fh:
            data = json.load(fh)
        if data.get("fingerprint") != task.fingerprint() or data.get("prefix_depth") != depth:
            raise ValueError(f"checkpoint {path} belongs to a different task")
        return data
    return {"fingerprint": task.fingerprint(), "prefix_depth": depth, "done": {}}


def _save_checkpoint(path: str | None, data: dict) -> None:
    if not path:
        return
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(data, fh, sort_keys=True)
    os.replace(tmp, path)


def _orbit_rep(subset: tuple[int, ...], perms: list[list[int]]) -> tuple[int, ...]:
    return min(tuple(sorted(p[i] for i in subset)) for p in perms)


def enumerate_free_extensions(task: EnumerationTask, jobs: int = 1,
                              prefix_depth: int = DEFAULT_PREFIX_DEPTH,
                              checkpoint: str | None = None, resume: bool = True,
                              node_budget: int = DEFAULT_ENGINE_BUDGET,
                              witness_cap: int = DEFAULT_WITNESS_CAP) -> EnumerationReport:
    """Every completion of the free pairs that avoids all filter patterns."""
    t0 = time.perf_counter()
    depth = min(prefix_depth, len(task.free_pairs))
    units = list(range(1 << depth))
    state = _load_checkpoint(checkpoint if resume else None, task, depth)
    done: dict[str, dict] = state["done"]
    todo = [u for u in units if str(u) not in done]
    spent = sum(d["nodes"] for d in done.values())

    def absorb(unit: int, surv: list, nodes: int, wit: list) -> None:
        nonlocal spent
        done[str(unit)] = {"survivors": [list(s) for s in surv], "nodes": nodes, "witnesses": wit}
        spent += nodes
        _save_checkpoint(checkpoint, state)
        if spent > node_budget:
            raise BudgetExceeded(f"enumeration exceeded {node_budget} nodes; checkpoint: {checkpoint}")

    if jobs <= 1 or len(todo) <= 1:
        _worker_init(task, witness_cap, node_budget)
        for u in todo:
            absorb(*_worker_run((u, depth)))
    else:
        with ProcessPoolExecutor(max_workers=jobs, initializer=_worker_init,
                                 initargs=(task, witness_cap, node_budget)) as pool:
            for res in pool.map(_worker_run, [(u, depth) for u in todo], chunksize=4):
                absorb(*res)

    labeled = sorted(tuple(s) for u in units for s in done[str(u)]["survivors"])
    group = task.symmetry if task.symmetry is not None else task.stabilizer()
    perms = _pair_perms(task, group)
    reps: dict[tuple[int, ...], int] = {}
    for s in labeled:
        r = _orbit_rep(s, perms)
        reps[r] = reps.get(r, 0) + 1
    survivors = []
    for s in labeled:
        g = task.graph_from_subset(s)
        survivors.append({"edges": [task.pair_name(task.free_pairs[i]) for i in s],
                          "graph6": write_graph6(g),
                          "canonical_form": canonical_form(g),
                          "class": [task.pair_name(task.free_pairs[i]) for i in _orbit_rep(s, perms)]})
    witnesses = sorted((w for u in units for w in done[str(u)].get("witnesses", [])),
                       key=lambda w: (w["pattern"], w["vertices"]))
    return EnumerationReport(
        task=task.name,
        base_graph6=write_graph6(task.base),
        base_labels=[task.base.name(v) for v in range(task.base.n)],
        free_pairs=[task.pair_name(p) for p in task.free_pairs],
        filters=list(task.filter_names),
        survivors=survivors,
        labeled_count=len(labeled),
        class_count=len(reps),
        classes=[[task.pair_name(task.free_pairs[i]) for i in r] for r in sorted(reps)],
        class_sizes=[reps[r] for r in sorted(reps)],
        group_order=len(group),
        nodes_explored=spent,
        units=len(units),
        prefix_depth=depth,
        wall_time=time.perf_counter() - t0,
        witnesses=witnesses[:witness_cap],
    )


def _pair_perms(task: EnumerationTask, group: list[tuple[int, ...]]) -> list[list[int]]:
    index = {p: i for i, p in enumerate(task.free_pairs)}
    out = []
    for g in group:
        out.append([index[(min(g[a], g[b]), max(g[a], g[b]))] for a, b in task.free_pairs])
    return out


def naive_free_extensions(task: EnumerationTask) -> list[tuple[int, ...]]:
    """Reference: try all ``2^k`` subsets with a plain freeness test."""
    from .detect import is_free

    out = []
    k = len(task.free_pairs)
    for mask in range(1 << k):
        subset = tuple(i for i in range(k) if mask >> i & 1)
        if is_free(task.graph_from_subset(subset), task.filters):
            out.append(subset)
    return sorted(out)
