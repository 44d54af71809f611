"""Ryjacek closure and Gamma_3-closure on a small claw-free graph, step by step."""

from gamma3_lab.catalog import Gamma
from gamma3_lab.closure import classify_vertex, gamma3_closure, ryjacek_closure
from gamma3_lab.detect import is_free
from gamma3_lab.graph import Multigraph, write_graph6
from gamma3_lab.hamilton import is_hamilton_connected
from gamma3_lab.linegraph import line_graph, preimage

# the line graph of a multigraph with a triangle and a double edge
h = Multigraph.from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (3, 4), (4, 5), (5, 0)])
g = line_graph(h)
print("G =", write_graph6(g), f"({g.n} vertices)")
for x in range(g.n):
    print(f"  vertex {x}: {classify_vertex(g, x).kind}")

cl, trace = ryjacek_closure(g)
print("\nRyjacek closure:")
for step in trace.steps:
    print("  complete at", step.vertices, f"({step.justification})")
pre = preimage(cl)
print("  closure is the line graph of a", "multigraph" if pre.has_multiple_edges() else "simple graph",
      f"on {pre.n} vertices")

print("\nG Hamilton-connected:", is_hamilton_connected(g).connected,
      " Gamma_3-free:", bool(is_free(g, [Gamma(3)])))
final, trace = gamma3_closure(g, max_set_size=2)
print("Gamma_3-closure:")
for step in trace.steps:
    print("  complete at", step.vertices, f"({step.justification})")
print("  result:", write_graph6(final), " is a line graph:", preimage(final) is not None)
print("  replay matches:", trace.replay().adj == final.adj)
