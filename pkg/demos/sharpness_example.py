"""The line graph of the Wagner graph with pendant edges, checked property by property."""

from gamma3_lab.catalog import B, Z, claw, path, wagner_plus_multigraph
from gamma3_lab.detect import is_free
from gamma3_lab.graph import vertex_connectivity
from gamma3_lab.hamilton import is_hamilton_connected
from gamma3_lab.linegraph import is_essentially_k_edge_connected, line_graph

h = wagner_plus_multigraph()  # C8 plus its four long diagonals, each vertex given a pendant edge
g = line_graph(h)
print("L(W+):", g.n, "vertices,", g.number_of_edges(), "edges")

print("claw-free:", bool(is_free(g, [claw()])))
print("connectivity:", vertex_connectivity(g))
print("W+ essentially 3-edge-connected:", is_essentially_k_edge_connected(h, 3),
      " 4-edge-connected:", is_essentially_k_edge_connected(h, 4))

# the first pair without a spanning path
verdict = is_hamilton_connected(g)
print("Hamilton-connected:", verdict.connected, " failing pair:", verdict.failing_pair)

for name, pat in [("P10", path(10)), ("Z8", Z(8))] + [(f"B{i},{8 - i}", B(i, 8 - i)) for i in range(1, 8)]:
    print(f"{name}-free:", bool(is_free(g, [pat])))
