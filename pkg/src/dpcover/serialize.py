"""JSON round-trips for graphs, instances, signed graphs, and certificates,
plus DOT export of covers.

Wire formats (canonical form sorts every key and list):

* multigraph: {"vertices": ["a", "b"], "edges": [{"u": "a", "v": "b", "mult": 2}]}
  with u < v lexicographically.
* instance: the multigraph form plus "lists": {"a": [1, 2]} and
  "matchings": [{"u": "a", "v": "b", "pairs": [[1, 1], [2, 2]]}] where each
  pair is [color at u, color at v].
* signed graph: each edge object carries "signs": [1, -1] (length = mult).
* certificate: {"blocks": [{"kind": "Knt", "n": 3, "t": 1,
  "i_map": {"a": 1, ...}, "labels": {"a": {"1": [1, 1], ...}}}],
  "partition": {"b": {"B0": [1], "B1": [2]}}} where B<i> indexes "blocks".
"""

from __future__ import annotations

import json
from typing import Any

from .cover import Cover, DPInstance
from .multigraph import BlockKind, Multigraph
from .obstruction import BlockCertificate, ObstructionCertificate
from .signed import SignedGraph


def dumps(data: Any) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def multigraph_to_json(g: Multigraph) -> dict:
    return {
        "vertices": list(g.vertices),
        "edges": [{"u": u, "v": v, "mult": m} for (u, v), m in sorted(g.mult.items())],
    }


def multigraph_from_json(data: dict) -> Multigraph:
    mult = {(e["u"], e["v"]): int(e.get("mult", 1)) for e in data.get("edges", [])}
    return Multigraph(tuple(data["vertices"]), mult)


def instance_to_json(inst: DPInstance) -> dict:
    out = multigraph_to_json(inst.graph)
    out["lists"] = {u: sorted(cs) for u, cs in sorted(inst.lists.items())}
    out["matchings"] = [
        {"u": u, "v": v, "pairs": [list(p) for p in sorted(prs)]}
        for (u, v), prs in sorted(inst.matching.items())
    ]
    return out


def instance_from_json(data: dict) -> DPInstance:
    g = multigraph_from_json(data)
    lists = {u: frozenset(int(c) for c in cs) for u, cs in data.get("lists", {}).items()}
    matching = {
        (m["u"], m["v"]): frozenset((int(a), int(b)) for a, b in m.get("pairs", []))
        for m in data.get("matchings", [])
    }
    return DPInstance(g, lists, matching)


def signed_to_json(s: SignedGraph) -> dict:
    return {
        "vertices": list(s.graph.vertices),
        "edges": [
            {"u": u, "v": v, "mult": s.graph.mult[(u, v)], "signs": list(s.signs[(u, v)])}
            for (u, v) in s.graph.pairs()
        ],
    }


def signed_from_json(data: dict) -> SignedGraph:
    g = multigraph_from_json(data)
    signs = {}
    for e in data.get("edges", []):
        ss = e.get("signs")
        if ss is None:
            ss = [1] * int(e.get("mult", 1))
        signs[(e["u"], e["v"])] = tuple(int(x) for x in ss)
    return SignedGraph(g, signs)


def certificate_to_json(cert: ObstructionCertificate) -> dict:
    blocks_json = []
    for bc in cert.blocks:
        blocks_json.append(
            {
                "kind": bc.kind.shape,
                "n": bc.kind.n,
                "t": bc.kind.t,
                "i_map": dict(sorted(bc.positions.items())),
                "labels": {
                    u: {str(c): list(jk) for c, jk in sorted(lab.items())}
                    for u, lab in sorted(bc.labels.items())
                },
            }
        )
    partition = {
        u: {f"B{i}": sorted(part) for i, part in sorted(per_block.items())}
        for u, per_block in sorted(cert.partition().items())
    }
    return {"blocks": blocks_json, "partition": partition}


def certificate_from_json(data: dict) -> ObstructionCertificate:
    out = []
    for b in data.get("blocks", []):
        kind = BlockKind(b["kind"], int(b["n"]), int(b["t"]))
        positions = {u: int(i) for u, i in b["i_map"].items()}
        labels = {
            u: {int(c): (int(jk[0]), int(jk[1])) for c, jk in lab.items()}
            for u, lab in b["labels"].items()
        }
        out.append(BlockCertificate(kind, positions, labels))
    return ObstructionCertificate(tuple(out))


def cover_to_dot(cover: Cover, include_clique_edges: bool = True) -> str:
    """DOT text with node names "u:c"; per-vertex clique edges can be
    suppressed to show only the cross-matching structure."""

    def name(node: tuple[str, int]) -> str:
        return f'"{node[0]}:{node[1]}"'

    lines = ["graph cover {"]
    for node in cover.nodes:
        lines.append(f"  {name(node)};")
    for p, q in cover.edges():
        if not include_clique_edges and p[0] == q[0]:
            continue
        lines.append(f"  {name(p)} -- {name(q)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
