"""Drive all four hardness reductions end to end.

Each reduction turns a classical problem instance into a weighted graph,
the exact solver finds the gadget optimum, and extract_* maps the witness
back to a certificate for the original problem.
"""

from andorxy import (
    SimpleGraph,
    SubsetSumInstance,
    decide_exact_weight_xy_tree,
    extract_clique,
    extract_dominating_set,
    extract_subset,
    extract_vertex_cover,
    reduce_clique,
    reduce_dominating_set,
    reduce_subset_sum,
    reduce_vertex_cover,
    solve_exact_andor,
    solve_exact_xy,
)

triangle = SimpleGraph.from_pairs([("a", "b"), ("a", "c"), ("b", "c")])

# Vertex cover: optimum = 2m + tau, so the triangle lands exactly on the
# threshold for k = 2 and misses it for k = 1.
art = reduce_vertex_cover(triangle, k=2)
res = solve_exact_andor(art.instance)
cover = extract_vertex_cover(art, res.witness)
print(f"vertex cover:   optimum {res.optimum}, threshold {art.threshold}, "
      f"cover {sorted(cover)}")

# Subset sum: pick p = 2 of (2, 3, 5) summing to exactly 8.
inst = SubsetSumInstance(z=(2, 3, 5), p=2, q=8)
art = reduce_subset_sum(inst)
hit, witness = decide_exact_weight_xy_tree(art.instance, art.threshold)
chosen = extract_subset(art, witness)
print(f"subset sum:     achievable {hit}, indices {sorted(chosen)}, "
      f"values {[inst.z[i] for i in sorted(chosen)]}")

# Dominating set: the gadget optimum IS the domination number.
star = SimpleGraph.from_pairs([("hub", "x"), ("hub", "y"), ("hub", "z")])
art = reduce_dominating_set(star, c=1)
res = solve_exact_andor(art.instance)
dom = extract_dominating_set(art, res.witness)
print(f"dominating set: optimum {res.optimum}, dominators {sorted(dom)}")

# Clique: a triangle contains a 3-clique, so the optimum meets c^2 + 3c.
art = reduce_clique(triangle, c=3)
res = solve_exact_xy(art.instance)
clique = extract_clique(art, res.witness)
print(f"clique:         optimum {res.optimum} vs threshold {art.threshold}, "
      f"clique {sorted(clique)}")
