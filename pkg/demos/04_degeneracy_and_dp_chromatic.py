"""Greedy coloring along a degeneracy order, and small DP-chromatic numbers.

Peeling minimum-degree vertices gives an order whose reversed greedy pass
needs only (back-multiplicity + 1) colors, so any k-degenerate multigraph
colors greedily from (k+1)-lists under arbitrary matchings. Exact
DP-chromatic numbers for tiny graphs come from enumerating all matching
assignments over uniform lists, one representative per color-relabeling
orbit.
"""

import random

from dpcover import (
    DPInstance,
    Multigraph,
    cycle_graph,
    degeneracy_order,
    dp_chromatic_number_small,
    complete_graph,
    greedy_color,
    path_graph,
    random_matching,
    solve,
)

# Degeneracy of a cycle is 2: peel any vertex, its neighbors drop to degree 1.
c4 = cycle_graph(["a", "b", "c", "d"])
order = degeneracy_order(c4)
print("peeling order of C4:", order)

# 3-lists always suffice on C4, whatever the matchings do.
lists = {u: frozenset({1, 2, 3}) for u in c4.vertices}
rng = random.Random(0)
for trial in range(3):
    seed = rng.randrange(10**6)
    inst = DPInstance(c4, lists, random_matching(c4, lists, seed, 1.0))
    res = greedy_color(inst, order)
    print(f"  greedy with random matchings (seed {seed}):", res.transversal)
    assert res.colorable

# The greedy bound is tight: with 2-lists the twisted matchings defeat any
# order, because the instance simply has no coloring.
two_lists = {u: frozenset({1, 2}) for u in c4.vertices}
twisted = {
    ("a", "b"): frozenset({(1, 1), (2, 2)}),
    ("b", "c"): frozenset({(1, 1), (2, 2)}),
    ("c", "d"): frozenset({(1, 1), (2, 2)}),
    ("a", "d"): frozenset({(1, 2), (2, 1)}),
}
inst = DPInstance(c4, two_lists, twisted)
print("twisted C4 with 2-lists, exact solve:", solve(inst).colorable)

# DP-chromatic numbers, exact for tiny graphs. Even cycles need 3, unlike
# their ordinary chromatic and list-chromatic numbers.
for g, name in [
    (Multigraph(("a",), {}), "K1"),
    (path_graph(["a", "b", "c"]), "P3"),
    (complete_graph(["a", "b", "c"]), "K3"),
    (cycle_graph(["a", "b", "c", "d"]), "C4"),
]:
    print(f"dp-chromatic number of {name}:", dp_chromatic_number_small(g, 3))
