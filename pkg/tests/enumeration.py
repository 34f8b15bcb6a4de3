"""Exhaustive small-graph enumerations, deduplicated up to isomorphism."""

from __future__ import annotations

import string
from functools import lru_cache
from itertools import combinations, permutations

from dpcover import Multigraph

_LETTERS = string.ascii_lowercase


def _connected(n: int, edges: list[tuple[int, int]]) -> bool:
    if n == 1:
        return True
    adj = {i: set() for i in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def _canon(n: int, mult: dict[tuple[int, int], int]) -> tuple:
    best = None
    for perm in permutations(range(n)):
        mapped = tuple(
            sorted(
                (min(perm[u], perm[v]), max(perm[u], perm[v]), m)
                for (u, v), m in mult.items()
            )
        )
        if best is None or mapped < best:
            best = mapped
    return best


def _to_multigraph(n: int, mult: dict[tuple[int, int], int]) -> Multigraph:
    return Multigraph(
        tuple(_LETTERS[:n]),
        {(_LETTERS[u], _LETTERS[v]): m for (u, v), m in mult.items()},
    )


def _compositions(length: int, max_total: int):
    """All vectors of ``length`` positive ints with sum <= max_total."""
    if length == 0:
        yield ()
        return
    for first in range(1, max_total - length + 2):
        for rest in _compositions(length - 1, max_total - first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def simple_graphs_upto_iso(max_n: int, connected_only: bool = True) -> tuple[Multigraph, ...]:
    out = []
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        seen = set()
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            if connected_only and not _connected(n, edges):
                continue
            key = _canon(n, {e: 1 for e in edges})
            if key in seen:
                continue
            seen.add(key)
            out.append(_to_multigraph(n, {e: 1 for e in edges}))
    return tuple(out)


@lru_cache(maxsize=None)
def connected_multigraphs_upto_iso(max_n: int, max_total_mult: int) -> tuple[Multigraph, ...]:
    out = []
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        seen_simple = set()
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            if len(edges) > max_total_mult and edges:
                continue
            if not _connected(n, edges):
                continue
            skey = _canon(n, {e: 1 for e in edges})
            if skey in seen_simple:
                continue
            seen_simple.add(skey)
            seen_multi = set()
            for vec in _compositions(len(edges), max_total_mult):
                mult = dict(zip(edges, vec))
                key = _canon(n, mult)
                if key in seen_multi:
                    continue
                seen_multi.add(key)
                out.append(_to_multigraph(n, mult))
    return tuple(out)
