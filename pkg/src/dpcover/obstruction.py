"""Obstruction patterns, certificates, and the degree-colorability decision.

A connected multigraph with a degree-list assignment fails to have a cover
coloring exactly when every block is a uniform complete power or cycle power
and the lists split into per-block parts whose induced cover realizes a rigid
pattern: the complete-block pattern for K_n^t blocks, a t-fat ladder for odd
cycle blocks, and a t-fat Moebius ladder for even cycle blocks. A certificate
records the parts and the index maps; verification replays the pattern edge
by edge, no isomorphism search involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .cover import (
    DPInstance,
    Transversal,
    induced_instance,
    matching_neighbors,
    require_valid,
    restrict,
)
from .errors import (
    DisconnectedGraph,
    EmptyGraph,
    MultigraphInput,
    NotDegreeList,
)
from .multigraph import (
    OTHER,
    BlockKind,
    Multigraph,
    blocks,
    classify_members,
)
from .solver import solve

# Pattern kinds (also the wire names used by make_pattern callers).
HNT = "Hnt"
FAT_LADDER = "FatLadder"
FAT_MOBIUS = "FatMobius"

# decide() hands sub-instances whose transversal product is at most this to
# the exact solver instead of recursing through restrictions.
_SOLVE_FALLBACK_PRODUCT = 20000


@dataclass(frozen=True)
class PatternGraph:
    """A pattern on index triples (i, j, k) with its full edge set."""

    kind: str
    n: int
    t: int
    nodes: tuple[tuple[int, int, int], ...]
    edges: frozenset[tuple[tuple[int, int, int], tuple[int, int, int]]]


def pattern_adjacent(
    kind: str, n: int, p: tuple[int, int, int], q: tuple[int, int, int]
) -> bool:
    """Adjacency rule of a pattern, applied to two index triples."""
    if p == q:
        return False
    i1, j1, _ = p
    i2, j2, _ = q
    if i1 == i2:
        return True
    if kind == HNT:
        return j1 == j2
    consecutive = i2 == i1 + 1 or i1 == i2 + 1
    wrap = {i1, i2} == {1, n}
    if kind == FAT_LADDER:
        return j1 == j2 and (consecutive or wrap)
    if kind == FAT_MOBIUS:
        if consecutive and not wrap:
            return j1 == j2
        if wrap:
            return j1 != j2
        return False
    raise ValueError(f"unknown pattern kind {kind!r}")


def make_pattern(kind: str, n: int, t: int) -> PatternGraph:
    """Build a pattern graph: Hnt (n >= 2), FatLadder or FatMobius (n >= 3)."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if kind == HNT:
        if n < 2:
            raise ValueError(f"Hnt needs n >= 2, got {n}")
        js: tuple[int, ...] = tuple(range(1, n))
    elif kind in (FAT_LADDER, FAT_MOBIUS):
        if n < 3:
            raise ValueError(f"{kind} needs n >= 3, got {n}")
        js = (1, 2)
    else:
        raise ValueError(f"unknown pattern kind {kind!r}")
    nodes = tuple(
        (i, j, k) for i in range(1, n + 1) for j in js for k in range(1, t + 1)
    )
    edges = frozenset(
        (p, q)
        for a, p in enumerate(nodes)
        for q in nodes[a + 1 :]
        if pattern_adjacent(kind, n, p, q)
    )
    return PatternGraph(kind, n, t, nodes, edges)


def block_pattern_kind(kind: BlockKind) -> str:
    """Pattern realized by an obstructed block: complete powers use Hnt,
    odd cycle powers the fat ladder, even cycle powers the fat Moebius ladder."""
    if kind.is_complete:
        return HNT
    if kind.is_cycle:
        return FAT_LADDER if kind.n % 2 == 1 else FAT_MOBIUS
    raise ValueError("no pattern for an Other-shaped block")


@dataclass(frozen=True)
class BlockCertificate:
    """Index maps realizing the pattern on one block: vertex -> position i,
    and per vertex color -> (j, k) for the colors in that block's part."""

    kind: BlockKind
    positions: dict[str, int]
    labels: dict[str, dict[int, tuple[int, int]]]

    @property
    def vertex_set(self) -> tuple[str, ...]:
        return tuple(sorted(self.positions))

    def part(self, u: str) -> frozenset[int]:
        return frozenset(self.labels[u])


@dataclass(frozen=True)
class ObstructionCertificate:
    """Per-block certificates; the parts at each vertex must partition its list."""

    blocks: tuple[BlockCertificate, ...]

    def partition(self) -> dict[str, dict[int, frozenset[int]]]:
        """vertex -> block index -> the part of L(vertex) owned by that block."""
        out: dict[str, dict[int, frozenset[int]]] = {}
        for i, bc in enumerate(self.blocks):
            for u in bc.positions:
                out.setdefault(u, {})[i] = bc.part(u)
        return out


@dataclass(frozen=True)
class Decision:
    """Either a transversal or a verified obstruction certificate."""

    transversal: Optional[Transversal]
    certificate: Optional[ObstructionCertificate]

    @property
    def colorable(self) -> bool:
        return self.transversal is not None

    @property
    def obstructed(self) -> bool:
        return self.certificate is not None


def _label_grid(kind: BlockKind) -> set[tuple[int, int]]:
    js = range(1, kind.n) if kind.is_complete else (1, 2)
    return {(j, k) for j in js for k in range(1, kind.t + 1)}


def _block_failure(inst: DPInstance, bc: BlockCertificate) -> Optional[str]:
    """Check one block certificate against the instance; None when it holds."""
    kind = bc.kind
    if kind.shape == OTHER:
        return "block certificate with Other shape"
    verts = bc.vertex_set
    n, t = kind.n, kind.t
    if len(verts) != n or set(bc.positions.values()) != set(range(1, n + 1)):
        return f"positions of block {verts} are not a bijection onto 1..{n}"
    if set(bc.labels) != set(verts):
        return f"labels of block {verts} do not cover its vertices"
    grid = _label_grid(kind)
    for u in verts:
        lab = bc.labels[u]
        if not set(lab) <= inst.lists[u]:
            return f"block {verts}: labeled colors at {u!r} outside L({u!r})"
        if len(lab) != len(grid) or set(lab.values()) != grid:
            return f"block {verts}: labels at {u!r} are not a bijection onto the index grid"
    if n == 1:
        return None
    pkind = block_pattern_kind(kind)
    for u, v in combinations(verts, 2):
        prs = inst.pairs_between(u, v)
        iu, iv = bc.positions[u], bc.positions[v]
        for cu, (ju, ku) in bc.labels[u].items():
            for cv, (jv, kv) in bc.labels[v].items():
                have = (cu, cv) in prs
                want = pattern_adjacent(pkind, n, (iu, ju, ku), (iv, jv, kv))
                if have != want:
                    verb = "unexpected" if have else "missing"
                    return (
                        f"block {verts}: {verb} cover edge between "
                        f"({u!r},{cu}) and ({v!r},{cv})"
                    )
    return None


def certificate_failure(
    inst: DPInstance, cert: ObstructionCertificate
) -> Optional[str]:
    """First failure of a certificate against the instance, or None if it holds."""
    require_valid(inst)
    g = inst.graph
    if not g.vertices:
        raise EmptyGraph("certificate verification requires a nonempty graph")
    if not g.is_connected():
        raise DisconnectedGraph("certificate verification requires a connected graph")
    for u in g.vertices:
        if len(inst.lists[u]) != g.degree(u):
            return f"|L({u!r})| = {len(inst.lists[u])} != degree {g.degree(u)}"
    dec = blocks(g)
    cert_sets = sorted(bc.vertex_set for bc in cert.blocks)
    if cert_sets != sorted(dec.blocks):
        return "certificate blocks do not match the graph's blocks"
    for bc in cert.blocks:
        expected = classify_members(g, bc.vertex_set)
        if bc.kind != expected:
            return (
                f"block {bc.vertex_set}: certificate kind {bc.kind} "
                f"!= actual shape {expected}"
            )
        fail = _block_failure(inst, bc)
        if fail is not None:
            return fail
    per_vertex: dict[str, list[frozenset[int]]] = {}
    for bc in cert.blocks:
        for u in bc.positions:
            per_vertex.setdefault(u, []).append(bc.part(u))
    for u in g.vertices:
        parts = per_vertex.get(u, [])
        union: set[int] = set()
        total = 0
        for p in parts:
            union |= p
            total += len(p)
        if total != len(union):
            return f"parts at {u!r} overlap"
        if union != set(inst.lists[u]):
            return f"parts at {u!r} do not partition L({u!r})"
    return None


def verify_certificate(inst: DPInstance, cert: ObstructionCertificate) -> bool:
    """True iff the certificate proves the instance non-colorable; see
    certificate_failure for the first failing check."""
    return certificate_failure(inst, cert) is None


def _make_block_cert(
    kind: BlockKind,
    ordered_verts: tuple[str, ...],
    classes: dict[str, list[frozenset[int]]],
) -> BlockCertificate:
    positions = {v: i + 1 for i, v in enumerate(ordered_verts)}
    labels: dict[str, dict[int, tuple[int, int]]] = {}
    for v in ordered_verts:
        lab: dict[int, tuple[int, int]] = {}
        for j, cls in enumerate(classes[v], start=1):
            for k, c in enumerate(sorted(cls), start=1):
                lab[c] = (j, k)
        labels[v] = lab
    return BlockCertificate(kind, positions, labels)


def _eligible_groups(
    inst: DPInstance, a: str, b: str, t: int
) -> list[tuple[tuple[int, ...], frozenset[int]]]:
    """Colors of L(a) grouped by their exact matched set in L(b); the groups
    of size t with a size-t shared set are the only possible pattern classes."""
    nbr = matching_neighbors(inst, a, b)
    groups: dict[frozenset[int], list[int]] = {}
    for c in sorted(inst.lists[a]):
        groups.setdefault(nbr[c], []).append(c)
    return sorted(
        (tuple(cs), nb) for nb, cs in groups.items() if len(cs) == t and len(nb) == t
    )


def _derive_classes(
    inst: DPInstance, w: str, ref: str, ref_classes: list[frozenset[int]], t: int
) -> Optional[list[frozenset[int]]]:
    """Classes at w forced by the classes at an adjacent reference vertex:
    class j is the set of colors matched exactly onto ref's class j."""
    nbr = matching_neighbors(inst, w, ref)
    out: list[frozenset[int]] = []
    for q in ref_classes:
        members = frozenset(c for c in inst.lists[w] if nbr[c] == q)
        if len(members) != t:
            return None
        out.append(members)
    return out


def _knt_candidates(
    inst: DPInstance, verts: tuple[str, ...], kind: BlockKind
) -> list[BlockCertificate]:
    n, t = kind.n, kind.t
    if n == 1:
        u = verts[0]
        return [BlockCertificate(kind, {u: 1}, {u: {}})]
    a, b = verts[0], verts[1]
    eligible = _eligible_groups(inst, a, b, t)
    cands: list[BlockCertificate] = []
    for combo in combinations(eligible, n - 1):
        nbs = [nb for _, nb in combo]
        if any(nbs[x] & nbs[y] for x in range(len(nbs)) for y in range(x + 1, len(nbs))):
            continue
        classes: dict[str, list[frozenset[int]]] = {
            a: [frozenset(cs) for cs, _ in combo],
            b: nbs,
        }
        ok = True
        for w in verts[2:]:
            derived = _derive_classes(inst, w, a, classes[a], t)
            if derived is None:
                ok = False
                break
            classes[w] = derived
        if not ok:
            continue
        bc = _make_block_cert(kind, verts, classes)
        if _block_failure(inst, bc) is None:
            cands.append(bc)
    return cands


def _cycle_order(g: Multigraph, verts: tuple[str, ...]) -> tuple[str, ...]:
    """Walk the cycle block starting at its least vertex toward its lesser
    neighbor, giving a deterministic cyclic order."""
    inside = set(verts)
    start = verts[0]
    nbrs = sorted(x for x in g.neighbors(start) if x in inside)
    order = [start, nbrs[0]]
    while len(order) < len(verts):
        prev, cur = order[-2], order[-1]
        nxt = [x for x in g.neighbors(cur) if x in inside and x != prev]
        order.append(nxt[0])
    return tuple(order)


def _cnt_candidates(
    inst: DPInstance, verts: tuple[str, ...], kind: BlockKind
) -> list[BlockCertificate]:
    n, t = kind.n, kind.t
    order = _cycle_order(inst.graph, verts)
    eligible = _eligible_groups(inst, order[0], order[1], t)
    cands: list[BlockCertificate] = []
    for combo in combinations(eligible, 2):
        (cs1, nb1), (cs2, nb2) = combo
        if nb1 & nb2:
            continue
        classes: dict[str, list[frozenset[int]]] = {
            order[0]: [frozenset(cs1), frozenset(cs2)],
            order[1]: [nb1, nb2],
        }
        ok = True
        for idx in range(2, n):
            derived = _derive_classes(
                inst, order[idx], order[idx - 1], classes[order[idx - 1]], t
            )
            if derived is None:
                ok = False
                break
            classes[order[idx]] = derived
        if not ok:
            continue
        # The closing edge (straight vs crossed, matched against the cycle's
        # parity) is checked by the pattern comparison.
        bc = _make_block_cert(kind, order, classes)
        if _block_failure(inst, bc) is None:
            cands.append(bc)
    return cands


def _assemble(
    g: Multigraph, per_block: list[list[BlockCertificate]]
) -> Optional[list[BlockCertificate]]:
    """Pick one candidate per block so the parts at every shared vertex are
    pairwise disjoint (with exact-degree lists that makes them a partition)."""
    used: dict[str, set[int]] = {u: set() for u in g.vertices}
    chosen: list[BlockCertificate] = []

    def rec(i: int) -> bool:
        if i == len(per_block):
            return True
        for bc in per_block[i]:
            parts = {u: bc.part(u) for u in bc.positions}
            if any(parts[u] & used[u] for u in parts):
                continue
            for u, p in parts.items():
                used[u] |= p
            chosen.append(bc)
            if rec(i + 1):
                return True
            chosen.pop()
            for u, p in parts.items():
                used[u] -= p
        return False

    return chosen if rec(0) else None


def find_certificate(inst: DPInstance) -> Optional[ObstructionCertificate]:
    """Search for an obstruction certificate; returns one iff it exists.

    Rejects fast unless every list has exactly degree size and every block is
    a uniform complete or cycle power. Within each block, candidate classes
    are derived from exact matched-set groups at an anchor edge (backtracking
    only over ambiguous groupings), then the global list partition is
    assembled across blocks.
    """
    require_valid(inst)
    g = inst.graph
    if not g.vertices:
        raise EmptyGraph("certificate search requires a nonempty graph")
    if not g.is_connected():
        raise DisconnectedGraph("certificate search requires a connected graph")
    if any(len(inst.lists[u]) != g.degree(u) for u in g.vertices):
        return None
    dec = blocks(g)
    kinds = [classify_members(g, B) for B in dec.blocks]
    if any(k.shape == OTHER for k in kinds):
        return None
    per_block: list[list[BlockCertificate]] = []
    for B, kind in zip(dec.blocks, kinds):
        cands = (
            _knt_candidates(inst, B, kind)
            if kind.is_complete
            else _cnt_candidates(inst, B, kind)
        )
        if not cands:
            return None
        per_block.append(cands)
    chosen = _assemble(g, per_block)
    if chosen is None:
        return None
    cert = ObstructionCertificate(tuple(chosen))
    failure = certificate_failure(inst, cert)
    if failure is not None:
        raise RuntimeError(f"internal: assembled certificate does not verify: {failure}")
    return cert


def _transversal_product(inst: DPInstance) -> int:
    prod = 1
    for u in inst.graph.vertices:
        prod *= max(1, len(inst.lists[u]))
        if prod > _SOLVE_FALLBACK_PRODUCT:
            break
    return prod


def _color_certificate_free(inst: DPInstance, out: Transversal) -> None:
    # Precondition: connected, degree-list, certificate-free, hence colorable.
    if _transversal_product(inst) <= _SOLVE_FALLBACK_PRODUCT:
        res = solve(inst)
        if not res.colorable:
            raise RuntimeError(
                "internal: certificate-free degree-list instance was not colorable"
            )
        out.update(res.transversal)
        return
    u = inst.graph.vertices[0]
    for c in sorted(inst.lists[u]):
        sub = restrict(inst, u, c)
        pieces = [induced_instance(sub, comp) for comp in sub.graph.components()]
        if all(find_certificate(piece) is None for piece in pieces):
            out[u] = c
            for piece in pieces:
                _color_certificate_free(piece, out)
            return
    raise RuntimeError(
        "internal: no restriction of a certificate-free instance stayed certificate-free"
    )


def decide(inst: DPInstance) -> Decision:
    """Decide colorability of a connected degree-list instance.

    Obstructed with a verified certificate when one exists; otherwise
    colorable, with the transversal built by repeatedly restricting at a
    vertex/color whose reduction stays certificate-free (small reductions go
    straight to the exact solver). Always agrees with solve.
    """
    require_valid(inst)
    g = inst.graph
    if not g.vertices:
        raise EmptyGraph("decide requires a nonempty graph")
    if not g.is_connected():
        raise DisconnectedGraph("decide requires a connected graph; split components first")
    for u in g.vertices:
        if len(inst.lists[u]) < g.degree(u):
            raise NotDegreeList(
                f"|L({u!r})| = {len(inst.lists[u])} < degree {g.degree(u)}; use solve"
            )
    cert = find_certificate(inst)
    if cert is not None:
        return Decision(None, cert)
    picks: Transversal = {}
    _color_certificate_free(inst, picks)
    return Decision(picks, None)


def is_degree_choosable_shape(g: Multigraph) -> bool:
    """False exactly when every block is complete or an odd cycle, i.e. the
    simple connected graph is not degree-choosable."""
    if not g.is_simple():
        raise MultigraphInput("degree-choosability shape test requires a simple graph")
    if not g.vertices:
        raise EmptyGraph("degree-choosability shape test requires a nonempty graph")
    if not g.is_connected():
        raise DisconnectedGraph("degree-choosability shape test requires a connected graph")
    for B in blocks(g).blocks:
        kind = classify_members(g, B)
        if kind.is_complete:
            continue
        if kind.is_cycle and kind.n % 2 == 1:
            continue
        return True
    return False
