"""Build a small and/or graph, solve it, and inspect the bounds.

Run from anywhere after installing the package:

    python demos/quickstart.py
"""

from andorxy import (
    AndOrGraph,
    dp_upper_bound,
    kernelize,
    schedule_lower_bound,
    serialize_graph,
    serialize_solution,
    solve_exact_andor,
    validate_andor,
    verify_solution_andor,
)

# An assembly-style instance: the source needs both subassemblies, each
# subassembly can be produced in one of two ways.
g = AndOrGraph(
    labels={
        "goal": "and",
        "left": "or",
        "right": "or",
        "cast": "and",
        "mill": "and",
        "buy": "and",
        "weld": "and",
    },
    edges={
        ("goal", "left"): 1,
        ("goal", "right"): 1,
        ("left", "cast"): 4,
        ("left", "mill"): 6,
        ("right", "buy"): 9,
        ("right", "weld"): 3,
    },
    source="goal",
)

report = validate_andor(g)
print("valid:", report.ok)

lo = schedule_lower_bound(g).times[g.source]
hi = dp_upper_bound(g)
print(f"bounds: {lo} <= optimum <= {hi.optimum}")

res = solve_exact_andor(g)
print("optimum:", res.optimum)
print("witness edges:")
print(serialize_solution(res.witness), end="")

check = verify_solution_andor(g, res.witness)
print("witness verifies:", check.feasible, "at weight", check.weight)

# Kernelize for the budget question "is there a solution of weight <= 8?"
kr = kernelize(g, k=8)
print("kernel rules fired:", [entry.describe() for entry in kr.log])
print("kernel text:")
print(serialize_graph(kr.reduced), end="")
