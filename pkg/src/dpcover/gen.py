"""Instance and graph constructors: standard graphs, blow-ups, canonical
non-colorable instances with their certificates, and seeded random matchings."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .cover import DPInstance
from .errors import EmptyGraph
from .multigraph import (
    CNT,
    KNT,
    OTHER,
    Multigraph,
    blocks,
    classify_members,
    edge_power,
    vertex_pair,
)
from .obstruction import (
    BlockCertificate,
    ObstructionCertificate,
    _cycle_order,
    block_pattern_kind,
    pattern_adjacent,
)


def path_graph(names: Sequence[str]) -> Multigraph:
    return Multigraph.from_pairs(names, zip(names, names[1:]))


def cycle_graph(names: Sequence[str]) -> Multigraph:
    if len(names) < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    edges = list(zip(names, names[1:])) + [(names[-1], names[0])]
    return Multigraph.from_pairs(names, edges)


def complete_graph(names: Sequence[str]) -> Multigraph:
    edges = [(u, v) for i, u in enumerate(names) for v in names[i + 1 :]]
    return Multigraph.from_pairs(names, edges)


def blow_up_vertex(u: str, k: int) -> str:
    """Vertex id of the k-th clique copy of u in a blow-up."""
    return f"{u}#{k}"


def blow_up(g: Multigraph, t: int) -> Multigraph:
    """Replace every vertex by a K_t clique, joined completely across each
    original edge."""
    if not g.is_simple():
        raise ValueError("blow_up is defined for simple graphs")
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    verts = [blow_up_vertex(u, k) for u in g.vertices for k in range(1, t + 1)]
    mult: dict[tuple[str, str], int] = {}
    for u in g.vertices:
        for a in range(1, t + 1):
            for b in range(a + 1, t + 1):
                mult[vertex_pair(blow_up_vertex(u, a), blow_up_vertex(u, b))] = 1
    for u, v in g.pairs():
        for a in range(1, t + 1):
            for b in range(1, t + 1):
                mult[vertex_pair(blow_up_vertex(u, a), blow_up_vertex(v, b))] = 1
    return Multigraph(tuple(verts), mult)


def _block_vertex_names(n: int) -> list[str]:
    return [f"u{i}" for i in range(1, n + 1)]


def bad_assignment(g: Multigraph) -> tuple[DPInstance, ObstructionCertificate]:
    """Canonical non-colorable instance on a graph whose blocks are all
    uniform complete or cycle powers.

    Every block gets its own disjoint color range (a per-block stride), which
    realizes the required list partition syntactically; the matchings wire
    each block's cover to its pattern.
    """
    dec = blocks(g)
    kinds = [classify_members(g, B) for B in dec.blocks]
    if any(k.shape == OTHER for k in kinds):
        raise ValueError("bad_assignment needs every block to be K_n^t or C_n^t")

    lists: dict[str, set[int]] = {u: set() for u in g.vertices}
    matching: dict[tuple[str, str], set[tuple[int, int]]] = {}
    block_certs: list[BlockCertificate] = []
    offset = 0
    for B, kind in zip(dec.blocks, kinds):
        n, t = kind.n, kind.t
        part_size = t * (n - 1) if kind.is_complete else 2 * t
        colors = list(range(offset + 1, offset + part_size + 1))
        offset += part_size
        # color -> (j, k) by consecutive runs of length t
        label_of = {c: (idx // t + 1, idx % t + 1) for idx, c in enumerate(colors)}
        ordered = B if kind.is_complete else _cycle_order(g, B)
        for u in ordered:
            lists[u].update(colors)
        pkind = block_pattern_kind(kind)
        positions = {v: i + 1 for i, v in enumerate(ordered)}
        if n >= 2:
            for x_i, u in enumerate(ordered):
                for v in ordered[x_i + 1 :]:
                    if g.multiplicity(u, v) == 0:
                        continue
                    key = vertex_pair(u, v)
                    prs = matching.setdefault(key, set())
                    for cu in colors:
                        for cv in colors:
                            pu = (positions[u],) + label_of[cu]
                            pv = (positions[v],) + label_of[cv]
                            if pattern_adjacent(pkind, n, pu, pv):
                                prs.add((cu, cv) if key == (u, v) else (cv, cu))
        block_certs.append(
            BlockCertificate(kind, positions, {u: dict(label_of) for u in ordered})
        )
    inst = DPInstance(
        g,
        {u: frozenset(cs) for u, cs in lists.items()},
        {p: frozenset(prs) for p, prs in matching.items()},
    )
    return inst, ObstructionCertificate(tuple(block_certs))


def bad_instance_knt(n: int, t: int) -> tuple[DPInstance, ObstructionCertificate]:
    """K_n^t with t(n-1)-lists whose cover is exactly the complete-block
    pattern; ships its own certificate."""
    if n < 2 or t < 1:
        raise ValueError(f"need n >= 2 and t >= 1, got n={n}, t={t}")
    g = edge_power(complete_graph(_block_vertex_names(n)), t)
    return bad_assignment(g)


def bad_instance_cnt(n: int, t: int) -> tuple[DPInstance, ObstructionCertificate]:
    """C_n^t with 2t-lists whose cover is the t-fat ladder (n odd) or t-fat
    Moebius ladder (n even); ships its own certificate."""
    if n == 3:
        raise ValueError("C_3^t is K_3^t; use bad_instance_knt(3, t)")
    if n < 4 or t < 1:
        raise ValueError(f"need n >= 4 and t >= 1, got n={n}, t={t}")
    g = edge_power(cycle_graph(_block_vertex_names(n)), t)
    return bad_assignment(g)


@dataclass(frozen=True)
class BadBlockSpec:
    """One block of a glued non-colorable instance.

    ``attach`` is None for the root block, else (earlier block index,
    1-based vertex position in that block) naming the shared cut vertex.
    """

    kind: str  # KNT or CNT
    n: int
    t: int
    attach: Optional[tuple[int, int]] = None

    def __post_init__(self) -> None:
        if self.kind not in (KNT, CNT):
            raise ValueError(f"kind must be {KNT!r} or {CNT!r}")
        if self.kind == KNT and (self.n < 2 or self.t < 1):
            raise ValueError(f"Knt needs n >= 2, t >= 1, got n={self.n}, t={self.t}")
        if self.kind == CNT and (self.n < 4 or self.t < 1):
            raise ValueError(
                f"Cnt needs n >= 4, t >= 1 (triangles are Knt), got n={self.n}, t={self.t}"
            )


def glue_bad(specs: Sequence[BadBlockSpec]) -> tuple[DPInstance, ObstructionCertificate]:
    """Glue block specs along a tree of cut vertices into one non-colorable
    instance; cut vertices get the disjoint union of the per-block lists."""
    if not specs:
        raise EmptyGraph("glue_bad needs at least one block spec")
    if specs[0].attach is not None:
        raise ValueError("the first block spec must not attach to anything")
    block_vertices: list[list[str]] = []
    mult: dict[tuple[str, str], int] = {}
    for i, spec in enumerate(specs):
        names = [f"b{i}v{j}" for j in range(1, spec.n + 1)]
        if i > 0:
            if spec.attach is None:
                raise ValueError(f"block {i} must attach to an earlier block")
            parent, pos = spec.attach
            if not 0 <= parent < i:
                raise ValueError(f"block {i} attaches to non-earlier block {parent}")
            if not 1 <= pos <= specs[parent].n:
                raise ValueError(f"block {i} attaches at bad position {pos}")
            names[0] = block_vertices[parent][pos - 1]
        block_vertices.append(names)
        if spec.kind == KNT:
            pairs = [(u, v) for a, u in enumerate(names) for v in names[a + 1 :]]
        else:
            pairs = list(zip(names, names[1:])) + [(names[-1], names[0])]
        for u, v in pairs:
            key = vertex_pair(u, v)
            if key in mult:
                raise ValueError(f"blocks overlap on edge {key}")
            mult[key] = spec.t
    all_names = sorted({v for names in block_vertices for v in names})
    g = Multigraph(tuple(all_names), mult)
    return bad_assignment(g)


def random_matching(
    g: Multigraph,
    lists: dict[str, frozenset[int]] | dict[str, set[int]],
    seed: int,
    density: float,
) -> dict[tuple[str, str], frozenset[tuple[int, int]]]:
    """Seeded random matching assignment.

    Per pair uv, the union of ceil(density * mu) random partial matchings,
    each a zip of equal-length random samples of the two lists (random size),
    so the bipartite-degree capacity bound always holds. Deterministic per
    seed.
    """
    if not 0.0 <= density <= 1.0:
        raise ValueError(f"density must be in [0, 1], got {density}")
    rng = random.Random(seed)
    out: dict[tuple[str, str], frozenset[tuple[int, int]]] = {}
    for u, v in g.pairs():
        lu = sorted(lists[u])
        lv = sorted(lists[v])
        rounds = math.ceil(density * g.multiplicity(u, v))
        prs: set[tuple[int, int]] = set()
        for _ in range(rounds):
            size = rng.randint(0, min(len(lu), len(lv)))
            prs.update(zip(rng.sample(lu, size), rng.sample(lv, size)))
        out[(u, v)] = frozenset(prs)
    return out
