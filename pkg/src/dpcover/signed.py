"""Signed graphs: symmetric palettes, switching, balance, fullness, and the
reduction of signed (list) coloring to a cover-coloring instance.

A signed coloring demands f(u) != sign(uv) * f(v) over the palette N_k, which
is {0, +-1, ..., +-r} for odd k = 2r+1 and {+-1, ..., +-r} for even k = 2r.
Positive edges contribute identity matchings, negative edges negation
matchings, so signed colorability is plain cover colorability of the
reduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .cover import DPInstance
from .errors import (
    ColorOutsideNk,
    DisconnectedGraph,
    EmptyGraph,
    NotDegreeList,
    VertexNotFound,
)
from .multigraph import Multigraph, blocks, vertex_pair
from .solver import SolveResult, solve


@dataclass(frozen=True)
class NkSet:
    """The symmetric palette N_k."""

    k: int
    colors: frozenset[int]


def n_k(k: int) -> NkSet:
    """N_k: zero plus +-1..+-r for odd k = 2r+1, just +-1..+-r for even k = 2r."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    r = k // 2
    if k % 2 == 1:
        colors = frozenset(range(-r, r + 1))
    else:
        colors = frozenset(c for c in range(-r, r + 1) if c != 0)
    return NkSet(k, colors)


@dataclass(frozen=True)
class SignedGraph:
    """Multigraph plus one sign (+1/-1) per parallel edge instance."""

    graph: Multigraph
    signs: dict[tuple[str, str], tuple[int, ...]]

    def __post_init__(self) -> None:
        norm: dict[tuple[str, str], tuple[int, ...]] = {}
        for (u, v), ss in self.signs.items():
            key = vertex_pair(u, v)
            if key in norm:
                raise ValueError(f"signs for pair {key} given twice")
            norm[key] = tuple(ss)
        if set(norm) != set(self.graph.pairs()):
            raise ValueError("signs must cover exactly the edges of the graph")
        for key, ss in norm.items():
            if len(ss) != self.graph.mult[key]:
                raise ValueError(
                    f"pair {key} has {self.graph.mult[key]} parallel edges "
                    f"but {len(ss)} signs"
                )
            if any(s not in (1, -1) for s in ss):
                raise ValueError(f"signs of {key} must be +1 or -1, got {ss}")
        object.__setattr__(self, "signs", {k: norm[k] for k in sorted(norm)})

    def sign_tuple(self, u: str, v: str) -> tuple[int, ...]:
        return self.signs[vertex_pair(u, v)]


def all_positive(g: Multigraph) -> SignedGraph:
    return SignedGraph(g, {p: (1,) * m for p, m in g.mult.items()})


def switch(s: SignedGraph, v: str) -> SignedGraph:
    """Negate every sign on edges incident to v; an involution."""
    if v not in s.graph.vertices:
        raise VertexNotFound(f"vertex {v!r} not in graph")
    signs = {
        p: tuple(-x for x in ss) if v in p else ss for p, ss in s.signs.items()
    }
    return SignedGraph(s.graph, signs)


def is_balanced(s: SignedGraph) -> bool:
    """True iff some switching sequence makes every sign positive.

    Spanning-tree potentials: fix a potential +-1 per vertex along a BFS tree
    and check every remaining edge. A pair carrying parallel edges of both
    signs can never be balanced.
    """
    g = s.graph
    if not g.vertices:
        raise EmptyGraph("balance of an empty signed graph")
    if not g.is_connected():
        raise DisconnectedGraph("balance requires a connected graph")
    uniform: dict[tuple[str, str], int] = {}
    for p, ss in s.signs.items():
        if len(set(ss)) > 1:
            return False
        uniform[p] = ss[0]
    pot = {g.vertices[0]: 1}
    queue = [g.vertices[0]]
    while queue:
        u = queue.pop(0)
        for v in g.neighbors(u):
            if v not in pot:
                pot[v] = pot[u] * uniform[vertex_pair(u, v)]
                queue.append(v)
    return all(pot[u] * pot[v] == sgn for (u, v), sgn in uniform.items())


def is_full(s: SignedGraph) -> bool:
    """True iff the graph is a doubled simple graph with each parallel pair
    carrying one positive and one negative sign."""
    g = s.graph
    if not g.mult:
        return False
    return all(m == 2 for m in g.mult.values()) and all(
        sorted(ss) == [-1, 1] for ss in s.signs.values()
    )


def signed_to_dp(
    s: SignedGraph,
    lists: Mapping[str, Iterable[int]],
    k: int | None = None,
) -> DPInstance:
    """Reduce signed list coloring to a cover-coloring instance.

    Each positive parallel edge contributes identity pairs (i, i), each
    negative one negation pairs (i, -i); pair sets over a vertex pair are
    unioned. When ``k`` is given, list values are checked against N_k.
    """
    flists = {u: frozenset(lists.get(u, ())) for u in s.graph.vertices}
    if k is not None:
        palette = n_k(k).colors
        for u in sorted(flists):
            stray = flists[u] - palette
            if stray:
                raise ColorOutsideNk(
                    f"L({u!r}) contains {sorted(stray)} outside N_{k}"
                )
    matching: dict[tuple[str, str], frozenset[tuple[int, int]]] = {}
    for (u, v), ss in s.signs.items():
        prs: set[tuple[int, int]] = set()
        for sgn in ss:
            if sgn == 1:
                prs.update((c, c) for c in flists[u] & flists[v])
            else:
                prs.update((c, -c) for c in flists[u] if -c in flists[v])
        matching[(u, v)] = frozenset(prs)
    return DPInstance(s.graph, flists, matching)


def solve_signed(s: SignedGraph, k: int) -> SolveResult:
    """Signed k-coloring via the reduction with full N_k lists."""
    palette = n_k(k).colors
    inst = signed_to_dp(s, {u: palette for u in s.graph.vertices}, k=k)
    return solve(inst)


def _signed_block_in_taxonomy(s: SignedGraph) -> bool:
    g = s.graph
    n = len(g.vertices)
    if n == 1:
        return True  # a trivial balanced K_1 block (only the 1-vertex graph)
    present = g.pairs()
    complete = len(present) == n * (n - 1) // 2
    is_cycle = (
        n >= 3
        and len(present) == n
        and all(len(g.neighbors(u)) == 2 for u in g.vertices)
    )
    if g.is_simple():
        if complete:
            return is_balanced(s)
        if is_cycle:
            return is_balanced(s) if n % 2 == 1 else not is_balanced(s)
        return False
    if all(m == 2 for m in g.mult.values()) and is_full(s):
        if complete:
            return True
        if is_cycle and n % 2 == 1:
            return True
    return False


def ss_block_check(s: SignedGraph, lists: Mapping[str, Iterable[int]]) -> bool:
    """Block taxonomy test for signed list coloring at degree lists.

    True iff every block, up to switching, is a balanced complete graph, a
    balanced odd cycle, an unbalanced even cycle, a full doubled complete
    graph, or a full doubled odd cycle. Exact decisions should go through
    signed_to_dp plus decide.
    """
    g = s.graph
    if not g.vertices:
        raise EmptyGraph("block taxonomy of an empty signed graph")
    if not g.is_connected():
        raise DisconnectedGraph("block taxonomy requires a connected graph")
    for u in g.vertices:
        if len(frozenset(lists.get(u, ()))) < g.degree(u):
            raise NotDegreeList(f"|L({u!r})| < degree {g.degree(u)}")
    for B in blocks(g).blocks:
        sub_g = g.induced(B)
        sub = SignedGraph(sub_g, {p: s.signs[p] for p in sub_g.pairs()})
        if not _signed_block_in_taxonomy(sub):
            return False
    return True
