"""Signed graphs: switching, balance, and coloring via the cover reduction.

A signed graph carries a +1/-1 sign per edge instance; a signed k-coloring
picks values from the symmetric palette N_k with f(u) != sign * f(v) across
each edge. Positive edges turn into identity matchings and negative edges
into negation matchings, so the whole theory rides on the cover machinery.
"""

from dpcover import (
    SignedGraph,
    all_positive,
    complete_graph,
    cycle_graph,
    decide,
    is_balanced,
    n_k,
    signed_to_dp,
    solve_signed,
    ss_block_check,
    switch,
)

print("palettes:", {k: sorted(n_k(k).colors) for k in (1, 2, 3, 4)})

# Balance: can switching (negating all signs at a vertex) make everything
# positive? One negative edge on an even cycle cannot be switched away.
c4 = cycle_graph(["a", "b", "c", "d"])
balanced = all_positive(c4)
unbalanced = SignedGraph(
    c4, {p: ((-1,) if p == ("a", "b") else (1,)) for p in c4.pairs()}
)
print("all-positive C4 balanced?", is_balanced(balanced))
print("one-negative C4 balanced?", is_balanced(unbalanced))
print("switching preserves balance:", is_balanced(switch(balanced, "a")))

# The Brooks-type desk check at degree lists (N_2 for cycles): the balanced
# even cycle colors, the unbalanced one does not, and vice versa for odd.
print("\nbalanced C4, k=2:", solve_signed(balanced, 2).transversal)
print("unbalanced C4, k=2 colorable?", solve_signed(unbalanced, 2).colorable)

c5 = cycle_graph(list("vwxyz"))
un_c5 = SignedGraph(c5, {p: ((-1,) if p == ("v", "w") else (1,)) for p in c5.pairs()})
print("balanced C5, k=2 colorable?", solve_signed(all_positive(c5), 2).colorable)
print("unbalanced C5, k=2 colorable?", solve_signed(un_c5, 2).colorable)

# Block taxonomy: balanced complete graphs, balanced odd cycles, unbalanced
# even cycles, full doubled complete graphs, full doubled odd cycles. The
# shape test is a quick filter; exact answers route through the reduction
# plus decide, which also hands back an obstruction certificate.
k4 = all_positive(complete_graph(list("abcd")))
lists = {u: n_k(3).colors for u in k4.graph.vertices}
print("\nbalanced K4 in the taxonomy?", ss_block_check(k4, lists))
inst = signed_to_dp(k4, lists, k=3)
decision = decide(inst)
print("decide on the reduction:", "OBSTRUCTED" if decision.obstructed else "colorable")
print(
    "certificate blocks:",
    [(bc.kind.shape, bc.kind.n, bc.kind.t) for bc in decision.certificate.blocks],
)
