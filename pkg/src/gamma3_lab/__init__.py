"""Closure machinery for graphs without induced claws and Gamma_3.

The subpackages cover bitset graphs and graph6 I/O, the pattern catalog,
induced-subgraph detection, canonical labelling, hamiltonian path search,
local completion and closures, line graphs of multigraphs, and the
exhaustive edge-subset enumeration used for the case analysis.
"""

from .canon import are_isomorphic, automorphisms, canonical_form, canonical_labeling
from .catalog import PatternSpec, make_pattern
from .closure import (ClosureTrace, gamma3_closure, is_feasible, is_weakly_feasible,
                      local_completion, local_completion_set, ryjacek_closure)
from .detect import find_induced, is_free
from .enumeration import EnumerationReport, EnumerationTask, enumerate_free_extensions
from .graph import (Embedding, GraphFormatError, Multigraph, SimpleGraph, parse_graph6,
                    parse_multigraph, write_graph6, write_multigraph)
from .hamilton import BudgetExceeded, has_ham_path, is_hamilton_connected, is_hamiltonian
from .linegraph import is_line_graph_of_multigraph, line_graph, preimage

__version__ = "0.1.0"

__all__ = [
    "are_isomorphic", "automorphisms", "canonical_form", "canonical_labeling",
    "PatternSpec", "make_pattern",
    "ClosureTrace", "gamma3_closure", "is_feasible", "is_weakly_feasible",
    "local_completion", "local_completion_set", "ryjacek_closure",
    "find_induced", "is_free",
    "EnumerationReport", "EnumerationTask", "enumerate_free_extensions",
    "Embedding", "GraphFormatError", "Multigraph", "SimpleGraph", "parse_graph6",
    "parse_multigraph", "write_graph6", "write_multigraph",
    "BudgetExceeded", "has_ham_path", "is_hamilton_connected", "is_hamiltonian",
    "is_line_graph_of_multigraph", "line_graph", "preimage",
]
