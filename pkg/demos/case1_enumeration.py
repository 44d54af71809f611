"""Enumerate the completions of F0 that avoid the claw, Gamma_3 and W5.

Each of the ten survivor classes should hold one of the catalogued graphs F1..F10.
"""

from gamma3_lab.campaigns import campaign_w4_case1, case1_task
from gamma3_lab.catalog import FI_EXTRA_EDGES

task = case1_task()
print(f"base: {task.base.n} vertices, {task.base.number_of_edges()} edges")
print(f"free pairs ({len(task.free_pairs)}):", " ".join(task.pair_name(p) for p in task.free_pairs))

rep, mapping = campaign_w4_case1(jobs=1)
print(f"\n{rep.labeled_count} labelled survivors in {rep.class_count} classes "
      f"(symmetry group of order {rep.group_order}), {rep.nodes_explored} search nodes")

for i, cls in sorted(mapping.items()):
    size = rep.class_sizes[rep.classes.index(cls)]
    listed = " ".join(a + b for a, b in FI_EXTRA_EDGES[i])
    print(f"F{i:<2} class of size {size}: {listed}")

# a few pruning witnesses, i.e. forbidden copies that closed a branch
seen = list(dict.fromkeys((w["pattern"], tuple(w["vertices"])) for w in rep.witnesses))
for pattern, verts in seen[:5]:
    print("witness:", pattern, " ".join(verts))
