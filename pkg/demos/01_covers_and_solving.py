"""Build cover-coloring instances and solve them exactly.

A DP-coloring (correspondence coloring) instance is a multigraph, a color
list per vertex, and, per edge, a set of matched color pairs. The instance's
cover graph has a node per (vertex, color), a clique per vertex, and the
matched pairs as cross edges; a coloring is an independent set picking one
node per vertex.

This walk-through builds the classic pair of 4-cycle instances whose covers
are a straight ladder and a Moebius ladder: same graph, same list sizes, and
opposite answers.
"""

from dpcover import (
    DPInstance,
    build_cover,
    cycle_graph,
    from_k_coloring,
    from_list_instance,
    solve,
    validate,
)

# Ordinary 2-coloring of the 4-cycle, phrased as a cover problem: every list
# is {1, 2} and every edge matches equal colors.
c4 = cycle_graph(["a", "b", "c", "d"])
straight = from_k_coloring(c4, 2)
print("straight-ladder instance:")
print("  lists:", {u: sorted(cs) for u, cs in straight.lists.items()})
print("  matchings:", {e: sorted(p) for e, p in straight.matching.items()})

cover = build_cover(straight)
print(f"  cover: {len(cover.nodes)} nodes, {cover.edge_count} edges")

result = solve(straight)
print("  solve:", result.transversal)
assert result.colorable

# Twist one edge: match 1 with 2 across the (a, d) edge instead. The cover
# becomes a Moebius ladder, and the instance stops being colorable even
# though every vertex still has 2 colors for its 2 neighbors.
matching = dict(straight.matching)
matching[("a", "d")] = frozenset({(1, 2), (2, 1)})
twisted = DPInstance(c4, straight.lists, matching)
assert validate(twisted) == []

print("\ntwisted instance (one swapped matching):")
print("  solve colorable?", solve(twisted).colorable)

# List coloring is the special case where matchings are identities on shared
# colors. A triangle whose vertices all get the same 2 colors cannot be list
# colored, and the cover shows why: it is the rigid complete-block pattern.
triangle = from_list_instance(
    cycle_graph(["x", "y", "z"]), {u: {1, 2} for u in "xyz"}
)
print("\ntriangle with equal 2-lists colorable?", solve(triangle).colorable)
