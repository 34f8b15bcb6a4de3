"""Decide degree-colorability in polynomial time and check the certificates.

When every list is at least as large as its vertex's degree, non-colorability
is a rigid structural event: every block of the graph must be a uniform
complete power K_n^t or cycle power C_n^t, the lists must split into
per-block parts of forced sizes, and each block's induced cover must realize
a specific pattern (a blown-up clique product for complete blocks, a t-fat
ladder for odd cycles, a t-fat Moebius ladder for even cycles). decide()
either returns a coloring or emits that structure as a machine-checkable
certificate; no exhaustive search is involved in the negative case.
"""

import json

from dpcover import (
    BadBlockSpec,
    bad_instance_knt,
    decide,
    glue_bad,
    restrict,
    solve,
    verify_certificate,
)
from dpcover.serialize import certificate_to_json

# A complete-power block: the triangle with equal 2-lists (identity
# matchings). decide() recognizes it without trying any transversal.
inst, shipped_cert = bad_instance_knt(3, 1)
decision = decide(inst)
print("triangle with equal 2-lists:", "OBSTRUCTED" if decision.obstructed else "colorable")
cert = decision.certificate
print("certificate verifies?", verify_certificate(inst, cert))
print(json.dumps(certificate_to_json(cert), indent=2, sort_keys=True))

# The certificate is sound: every restriction of the instance stays
# non-colorable, which is exactly why no greedy or backtracking escape exists.
u = inst.graph.vertices[0]
for c in sorted(inst.lists[u]):
    assert not solve(restrict(inst, u, c)).colorable
print("every restriction at", u, "stays non-colorable: ok")

# Blocks glue along cut vertices; the lists at a cut vertex split between its
# blocks. Certificates carry that partition too.
glued, glued_cert = glue_bad(
    [BadBlockSpec("Knt", 3, 1), BadBlockSpec("Cnt", 4, 1, attach=(0, 1))]
)
print("\ntriangle + 4-cycle sharing a vertex:")
print("  solve colorable?", solve(glued).colorable)
print("  decide obstructed?", decide(glued).obstructed)
cut = "b0v1"
print("  cut-vertex list:", sorted(glued.lists[cut]))
print("  partition at cut vertex:", {
    f"B{i}": sorted(part) for i, part in glued_cert.partition()[cut].items()
})

# Growing any list breaks the rigidity and a coloring appears.
bigger = dict(glued.lists)
bigger[cut] = glued.lists[cut] | {99}
from dpcover import DPInstance

relaxed = DPInstance(glued.graph, bigger, glued.matching)
print("  after adding one spare color:", solve(relaxed).transversal is not None)
