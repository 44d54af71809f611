"""Command line entry point; every command prints JSON and can write a manifest.

Exit codes: 0 when the command ran and its assertion (if any) held, 1 when a
campaign or the self test failed, 2 on usage errors and exhausted budgets.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from dataclasses import dataclass, field
from importlib import metadata
from pathlib import Path
from typing import Any, Callable, Sequence

from .campaigns import (CampaignMismatch, campaign_tails, campaign_w4_case1, campaign_w4_case22,
                        campaign_w4_case22_followup)
from .catalog import PatternSpec, make_pattern
from .closure import gamma3_closure, ryjacek_closure
from .detect import is_free
from .enumeration import DEFAULT_ENGINE_BUDGET
from .graph import (GraphFormatError, SimpleGraph, parse_graph6, parse_multigraph, write_graph6,
                    write_multigraph)
from .hamilton import DEFAULT_NODE_BUDGET, BudgetExceeded, is_hamilton_connected
from .linegraph import line_graph, preimage

BUDGET_ENV = "GAMMA3_LAB_BUDGET"


class UsageError(Exception):
    pass


@dataclass
class RunManifest:
    command: list[str]
    inputs: dict[str, str] = field(default_factory=dict)  # source -> sha256
    config: dict[str, Any] = field(default_factory=dict)
    outcome: dict[str, Any] = field(default_factory=dict)
    timing: dict[str, float] = field(default_factory=dict)
    version: str = ""

    def to_json(self) -> dict:
        return {"command": self.command, "inputs": self.inputs, "config": self.config,
                "outcome": self.outcome, "timing": self.timing, "version": self.version}


def _version() -> str:
    try:
        return metadata.version("gamma3_lab")
    except metadata.PackageNotFoundError:
        return "unknown"


def _read_source(src: str, manifest: RunManifest) -> str:
    if src == "-":
        text = sys.stdin.read()
    else:
        p = Path(src)
        if not p.exists():
            raise UsageError(f"no such file: {src}")
        text = p.read_text()
    manifest.inputs[src] = hashlib.sha256(text.encode()).hexdigest()
    return text


def _read_graph(src: str, manifest: RunManifest) -> SimpleGraph:
    text = _read_source(src, manifest)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise UsageError(f"{src}: expected exactly one graph6 line, found {len(lines)}")
    return parse_graph6(lines[0])


def _budget(args) -> int:
    env = os.environ.get(BUDGET_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{BUDGET_ENV} must be an integer, got {env!r}") from None
    return args.node_budget


def _emb_json(emb) -> dict | None:
    if emb is None:
        return None
    return {"mapping": emb.named(), "host_vertices": emb.image()}


def _report_outcome(rep) -> dict:
    out = rep.to_json()
    out.pop("wall_time", None)
    return out


# commands ------------------------------------------------------------------

def cmd_pattern(args, man: RunManifest) -> int:
    # "gamma 3" -> gamma3, "b 3 5" -> b3_5, "fig9 3" -> fig9_3
    sep = "_" if args.name[-1:].isdigit() else ""
    name = args.name + sep + "_".join(args.params) if args.params else args.name
    try:
        spec = PatternSpec.parse(name)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    g = make_pattern(spec)
    man.outcome = {"pattern": str(spec), "graph6": write_graph6(g), "n": g.n,
                   "m": g.number_of_edges(), "labels": {str(v): g.name(v) for v in range(g.n)}}
    return 0


def _parse_patterns(text: str) -> tuple[list[str], list[SimpleGraph]]:
    names, pats = [], []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            spec = PatternSpec.parse(tok)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        names.append(str(spec))
        pats.append(make_pattern(spec))
    if not pats:
        raise UsageError("--patterns needs at least one pattern name")
    return names, pats


def cmd_free(args, man: RunManifest) -> int:
    g = _read_graph(args.graph, man)
    names, pats = _parse_patterns(args.patterns)
    man.config["patterns"] = names
    res = is_free(g, pats)
    witness = None
    if res.witness is not None:
        idx = next(i for i, p in enumerate(pats) if p is res.witness.pattern)
        witness = {"pattern": names[idx], **_emb_json(res.witness)}
    man.outcome = {"free": res.free, "witness": witness}
    return 0


def cmd_hamconn(args, man: RunManifest) -> int:
    g = _read_graph(args.graph, man)
    budget = _budget(args)
    man.config.update(node_budget=budget, jobs=args.jobs, witnesses=args.witnesses)
    verdict = is_hamilton_connected(g, budget, witnesses=args.witnesses, jobs=args.jobs)
    man.outcome = verdict.to_json()
    return 0


def cmd_close(args, man: RunManifest) -> int:
    g = _read_graph(args.graph, man)
    budget = _budget(args)
    man.config.update(mode=args.mode, node_budget=budget, max_feasible_set=args.max_feasible_set,
                      jobs=args.jobs)
    try:
        if args.mode == "ryjacek":
            out, trace = ryjacek_closure(g)
        else:
            out, trace = gamma3_closure(g, args.max_feasible_set, budget, args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    man.outcome = {"graph6": write_graph6(out), "trace": trace.to_json()}
    return 0


def cmd_lg(args, man: RunManifest) -> int:
    try:
        h = parse_multigraph(_read_source(args.multigraph, man))
    except GraphFormatError as exc:
        raise UsageError(str(exc)) from None
    g = line_graph(h)
    man.outcome = {"graph6": write_graph6(g), "n": g.n, "m": g.number_of_edges()}
    return 0


def cmd_preimage(args, man: RunManifest) -> int:
    g = _read_graph(args.graph, man)
    try:
        h = preimage(g)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    man.outcome = {"line_graph": h is not None,
                   "multigraph": write_multigraph(h) if h is not None else None}
    return 0


def cmd_campaign(args, man: RunManifest) -> int:
    budget = _budget(args)
    man.config.update(campaign=args.which, jobs=args.jobs, node_budget=budget,
                      checkpoint=args.checkpoint, resume=args.resume)
    kw = dict(node_budget=budget, resume=args.resume)
    try:
        if args.which == "case1":
            rep, mapping = campaign_w4_case1(args.jobs, checkpoint=args.checkpoint, **kw)
            man.outcome = {**_report_outcome(rep), "published_lists": {f"F{i}": c for i, c in mapping.items()}}
        elif args.which in ("case22a", "case22b"):
            rep = campaign_w4_case22(args.which[-1], args.jobs, checkpoint=args.checkpoint, **kw)
            man.outcome = _report_outcome(rep)
        elif args.which == "case22-followup":
            rep = campaign_w4_case22_followup(args.jobs, checkpoint=args.checkpoint, **kw)
            man.outcome = _report_outcome(rep)
        else:
            if args.fi is None:
                raise UsageError("campaign tails needs --fi <1..10>")
            man.config["fi"] = args.fi
            reps = campaign_tails(args.fi, args.jobs, checkpoint_dir=args.checkpoint, **kw)
            man.outcome = {"fi": args.fi, "tasks": len(reps),
                           "survivors": sum(r.labeled_count for r in reps),
                           "nodes_explored": sum(r.nodes_explored for r in reps),
                           "reports": [_report_outcome(r) for r in reps]}
    except CampaignMismatch as exc:
        man.outcome = {"mismatch": str(exc)}
        return 1
    return 0


def cmd_selftest(args, man: RunManifest) -> int:
    tests = Path(__file__).resolve().parents[2] / "tests" / "test_acceptance.py"
    if not tests.exists():
        raise UsageError(f"acceptance suite not found at {tests}; run from a source checkout")
    try:
        import pytest
    except ImportError:
        raise UsageError("selftest needs pytest (install the 'test' extra)") from None
    pargs = [str(tests), "-q", "-s"]
    if args.slow:
        pargs.append("--run-slow")
    man.config.update(slow=args.slow)
    code = pytest.main(pargs)
    man.outcome = {"pytest_exit": int(code), "passed": code == 0}
    return 0 if code == 0 else 1


# parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=os.cpu_count() or 1, help="worker processes")
    common.add_argument("--node-budget", type=int, default=None,
                        help=f"search node budget (env {BUDGET_ENV} overrides)")
    common.add_argument("--max-feasible-set", type=int, default=5, help="largest set tried by the closure")
    common.add_argument("--out", help="write the run manifest to this path")
    common.add_argument("--checkpoint", help="checkpoint file (a directory for tail campaigns)")
    common.add_argument("--resume", action="store_true", help="continue from an existing checkpoint")

    p = argparse.ArgumentParser(prog="gamma3-lab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("pattern", parents=[common], help="emit a catalog graph")
    s.add_argument("name")
    s.add_argument("params", nargs="*")
    s.set_defaults(func=cmd_pattern)

    s = sub.add_parser("free", parents=[common], help="test induced-subgraph freeness")
    s.add_argument("graph", help="graph6 file, or - for stdin")
    s.add_argument("--patterns", required=True, help="comma separated, e.g. claw,gamma3,w5")
    s.set_defaults(func=cmd_free)

    s = sub.add_parser("hamconn", parents=[common], help="decide Hamilton-connectedness")
    s.add_argument("graph")
    s.add_argument("--witnesses", action="store_true", help="include a path for every pair")
    s.set_defaults(func=cmd_hamconn)

    s = sub.add_parser("close", parents=[common], help="compute a closure with its trace")
    s.add_argument("graph")
    s.add_argument("--mode", choices=["ryjacek", "gamma3"], default="gamma3")
    s.set_defaults(func=cmd_close)

    s = sub.add_parser("lg", parents=[common], help="line graph of a multigraph")
    s.add_argument("multigraph", help="'n m' then m lines 'u v'; - for stdin")
    s.set_defaults(func=cmd_lg)

    s = sub.add_parser("preimage", parents=[common], help="multigraph whose line graph is given")
    s.add_argument("graph")
    s.set_defaults(func=cmd_preimage)

    s = sub.add_parser("campaign", parents=[common], help="run an enumeration campaign")
    s.add_argument("which", choices=["case1", "case22a", "case22b", "case22-followup", "tails"])
    s.add_argument("--fi", type=int, choices=range(1, 11), metavar="{1..10}")
    s.set_defaults(func=cmd_campaign)

    s = sub.add_parser("selftest", parents=[common], help="run the acceptance suite")
    s.add_argument("--slow", action="store_true", help="include the slow Petersen check")
    s.set_defaults(func=cmd_selftest)
    return p


def _dump(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.node_budget is None:
        args.node_budget = DEFAULT_ENGINE_BUDGET if args.command == "campaign" else DEFAULT_NODE_BUDGET
    man = RunManifest(command=["gamma3-lab", *argv], version=_version())
    func: Callable[[Any, RunManifest], int] = args.func
    t0 = time.perf_counter()
    try:
        code = func(args, man)
    except (UsageError, GraphFormatError) as exc:
        print(f"gamma3-lab: error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"gamma3-lab: budget exhausted: {exc}", file=sys.stderr)
        man.outcome = {"budget_exceeded": str(exc), "checkpoint": getattr(args, "checkpoint", None)}
        code = 2
    man.timing = {"wall_time": round(time.perf_counter() - t0, 3)}
    print(_dump(man.outcome))
    if args.out:
        Path(args.out).write_text(_dump(man.to_json()) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
