"""Loopless multigraphs, block decomposition, and block-shape recognition.

Vertices are opaque strings; parallel edges are stored as a multiplicity per
unordered vertex pair. All orderings are lexicographic so every operation is
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import DisconnectedGraph, EmptyGraph, MultigraphInput, NotABlock

# BlockKind shape tags (also the wire names used in certificate JSON).
KNT = "Knt"
CNT = "Cnt"
OTHER = "Other"


def vertex_pair(u: str, v: str) -> tuple[str, str]:
    """Canonical unordered pair: lexicographically smaller id first."""
    if u == v:
        raise ValueError(f"loops are not allowed: ({u!r}, {v!r})")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Multigraph:
    """Loopless multigraph.

    ``vertices`` is the sorted tuple of vertex ids and ``mult`` maps each
    canonical pair (u, v) with u < v to its multiplicity (>= 1, pairs with
    multiplicity 0 are absent).
    """

    vertices: tuple[str, ...]
    mult: dict[tuple[str, str], int]

    def __post_init__(self) -> None:
        verts = tuple(sorted(self.vertices))
        if len(set(verts)) != len(verts):
            raise ValueError("duplicate vertex identifiers")
        norm: dict[tuple[str, str], int] = {}
        vset = set(verts)
        for (u, v), m in self.mult.items():
            key = vertex_pair(u, v)
            if key[0] not in vset or key[1] not in vset:
                raise ValueError(f"edge {key} references unknown vertex")
            if not isinstance(m, int) or m < 1:
                raise ValueError(f"multiplicity of {key} must be a positive int, got {m!r}")
            if key in norm:
                raise ValueError(f"pair {key} given twice")
            norm[key] = m
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "mult", {k: norm[k] for k in sorted(norm)})

    @classmethod
    def from_pairs(cls, vertices: Iterable[str], pairs: Iterable[tuple[str, str]]) -> "Multigraph":
        """Build from an edge list; repeated pairs accumulate multiplicity."""
        mult: dict[tuple[str, str], int] = {}
        for u, v in pairs:
            key = vertex_pair(u, v)
            mult[key] = mult.get(key, 0) + 1
        return cls(tuple(vertices), mult)

    def degree(self, u: str) -> int:
        return sum(m for (a, b), m in self.mult.items() if u in (a, b))

    def multiplicity(self, u: str, v: str) -> int:
        if u == v:
            return 0
        return self.mult.get(vertex_pair(u, v), 0)

    def neighbors(self, u: str) -> tuple[str, ...]:
        out = [b if a == u else a for (a, b) in self.mult if u in (a, b)]
        return tuple(sorted(out))

    def pairs(self) -> tuple[tuple[str, str], ...]:
        return tuple(sorted(self.mult))

    def total_multiplicity(self) -> int:
        return sum(self.mult.values())

    def is_simple(self) -> bool:
        return all(m == 1 for m in self.mult.values())

    def induced(self, vertices: Iterable[str]) -> "Multigraph":
        keep = set(vertices)
        unknown = keep - set(self.vertices)
        if unknown:
            raise ValueError(f"unknown vertices: {sorted(unknown)}")
        mult = {p: m for p, m in self.mult.items() if p[0] in keep and p[1] in keep}
        return Multigraph(tuple(sorted(keep)), mult)

    def without_vertex(self, u: str) -> "Multigraph":
        return self.induced(v for v in self.vertices if v != u)

    def components(self) -> tuple[tuple[str, ...], ...]:
        """Connected components as sorted vertex tuples, sorted lexicographically."""
        seen: set[str] = set()
        comps: list[tuple[str, ...]] = []
        for start in self.vertices:
            if start in seen:
                continue
            stack = [start]
            comp = {start}
            seen.add(start)
            while stack:
                x = stack.pop()
                for y in self.neighbors(x):
                    if y not in comp:
                        comp.add(y)
                        seen.add(y)
                        stack.append(y)
            comps.append(tuple(sorted(comp)))
        return tuple(sorted(comps))

    def is_connected(self) -> bool:
        return len(self.components()) <= 1


@dataclass(frozen=True)
class BlockKind:
    """Shape of a block: Knt = K_n with uniform multiplicity t, Cnt = cycle
    of length n >= 4 with uniform multiplicity t, Other = anything else."""

    shape: str
    n: int = 0
    t: int = 0

    @classmethod
    def complete(cls, n: int, t: int) -> "BlockKind":
        return cls(KNT, n, t)

    @classmethod
    def cycle(cls, n: int, t: int) -> "BlockKind":
        return cls(CNT, n, t)

    @classmethod
    def other(cls) -> "BlockKind":
        return cls(OTHER)

    @property
    def is_complete(self) -> bool:
        return self.shape == KNT

    @property
    def is_cycle(self) -> bool:
        return self.shape == CNT


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (as sorted vertex tuples), cut vertices, and the block-cut tree
    given as (block index, cut vertex) adjacency pairs."""

    blocks: tuple[tuple[str, ...], ...]
    cut_vertices: tuple[str, ...]
    block_tree: tuple[tuple[int, str], ...]

    def blocks_containing(self, v: str) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.blocks) if v in b)


def blocks(g: Multigraph) -> BlockDecomposition:
    """Biconnected components of a connected multigraph.

    Bridges and parallel-edge bundles are two-vertex blocks. Blocks are sorted
    lexicographically by their vertex tuple.
    """
    if not g.vertices:
        raise EmptyGraph("block decomposition requires a nonempty graph")
    if not g.is_connected():
        raise DisconnectedGraph("block decomposition requires a connected graph")
    if len(g.vertices) == 1:
        return BlockDecomposition((g.vertices,), (), ())

    adj = {u: g.neighbors(u) for u in g.vertices}
    index: dict[str, int] = {}
    low: dict[str, int] = {}
    edge_stack: list[tuple[str, str]] = []
    raw_blocks: list[tuple[str, ...]] = []
    cut: set[str] = set()

    root = g.vertices[0]
    index[root] = low[root] = 0
    counter = 1
    root_children = 0
    stack: list[tuple[str, str | None, Iterator[str]]] = [(root, None, iter(adj[root]))]
    while stack:
        u, parent, it = stack[-1]
        v = next(it, None)
        if v is None:
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[u])
                if low[u] >= index[p]:
                    comp: list[tuple[str, str]] = []
                    while edge_stack[-1] != (p, u):
                        comp.append(edge_stack.pop())
                    comp.append(edge_stack.pop())
                    raw_blocks.append(tuple(sorted({x for e in comp for x in e})))
                    if p == root:
                        root_children += 1
                    else:
                        cut.add(p)
            continue
        if v == parent:
            continue
        if v in index:
            if index[v] < index[u]:
                edge_stack.append((u, v))
                low[u] = min(low[u], index[v])
        else:
            edge_stack.append((u, v))
            index[v] = low[v] = counter
            counter += 1
            stack.append((v, u, iter(adj[v])))
    if root_children >= 2:
        cut.add(root)

    blocks_sorted = tuple(sorted(raw_blocks))
    cut_sorted = tuple(sorted(cut))
    tree = tuple(
        sorted((i, v) for i, b in enumerate(blocks_sorted) for v in b if v in cut)
    )
    return BlockDecomposition(blocks_sorted, cut_sorted, tree)


def classify_members(g: Multigraph, verts: tuple[str, ...]) -> BlockKind:
    """Classify the induced sub-multigraph on ``verts``, assumed to be a block.

    Triangles canonicalize to Knt(3, t), never Cnt(3, t).
    """
    n = len(verts)
    if n == 1:
        # Degenerate single-vertex block (only the one-vertex graph has one).
        return BlockKind.complete(1, 1)
    present = [(u, v) for u, v in combinations(sorted(verts), 2) if g.multiplicity(u, v) > 0]
    mults = {g.multiplicity(u, v) for u, v in present}
    if len(mults) != 1:
        return BlockKind.other()
    t = mults.pop()
    if len(present) == n * (n - 1) // 2:
        return BlockKind.complete(n, t)
    degree_in_block = {u: sum(1 for p in present if u in p) for u in verts}
    if n >= 4 and len(present) == n and all(d == 2 for d in degree_in_block.values()):
        return BlockKind.cycle(n, t)
    return BlockKind.other()


def classify_block(g: Multigraph, block: Iterable[str]) -> BlockKind:
    """Classify one block of ``g``; raises NotABlock if the subset isn't one."""
    key = tuple(sorted(block))
    dec = blocks(g)
    if key not in dec.blocks:
        raise NotABlock(f"{key} is not a block of the graph")
    return classify_members(g, key)


def edge_power(g: Multigraph, t: int) -> Multigraph:
    """Replace each edge with t parallel copies (multiplies multiplicities)."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    return Multigraph(g.vertices, {p: m * t for p, m in g.mult.items()})


def product_vertex(u: str, v: str) -> str:
    """Vertex id used by cartesian_product for the factor pair (u, v)."""
    return f"({u},{v})"


def cartesian_product(g1: Multigraph, g2: Multigraph) -> Multigraph:
    """Cartesian product of two simple graphs.

    (u1, u2) ~ (v1, v2) iff u1 == v1 and u2v2 is an edge, or u2 == v2 and
    u1v1 is an edge. Product vertices are named by :func:`product_vertex`.
    """
    for g in (g1, g2):
        if not g.is_simple():
            raise MultigraphInput("cartesian_product requires simple graphs")
    verts = [product_vertex(u, v) for u in g1.vertices for v in g2.vertices]
    mult: dict[tuple[str, str], int] = {}
    for u in g1.vertices:
        for a, b in g2.pairs():
            mult[vertex_pair(product_vertex(u, a), product_vertex(u, b))] = 1
    for a, b in g1.pairs():
        for v in g2.vertices:
            mult[vertex_pair(product_vertex(a, v), product_vertex(b, v))] = 1
    return Multigraph(tuple(verts), mult)
