"""Stable on-disk formats: model JSON, graph JSON and Graphviz DOT."""

from __future__ import annotations

import json

from .crystal_graph import CrystalGraph
from .crystal_ops import Weight
from .ice_model import IceModel, Partition, from_dict, to_dict

DOT_PALETTE = ("red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan4")


def dumps(data: dict) -> str:
    """JSON with one top-level key per line and one line per row/record."""
    items = list(data.items())
    lines = ["{"]
    for k, (key, val) in enumerate(items):
        if isinstance(val, list) and val and isinstance(val[0], (list, dict)):
            body = ",\n".join("    " + json.dumps(x) for x in val)
            text = f"  {json.dumps(key)}: [\n{body}\n  ]"
        else:
            text = f"  {json.dumps(key)}: {json.dumps(val)}"
        lines.append(text + ("," if k < len(items) - 1 else ""))
    lines.append("}")
    return "\n".join(lines) + "\n"


def model_to_json(m: IceModel) -> str:
    return dumps(to_dict(m))


def model_from_json(text: str) -> IceModel:
    return from_dict(json.loads(text))


def _boxes_of(g: CrystalGraph, key: str) -> list[list[int]]:
    m = g.payload.get(key)
    if isinstance(m, IceModel):
        return [list(b) for b in sorted(m.boxes)]
    return []


def graph_to_dict(g: CrystalGraph) -> dict:
    return {
        "lambda": list(g.lam.parts),
        "nodes": [
            {"key": k, "boxes": _boxes_of(g, k), "weight": list(g.nodes[k].counts)}
            for k in sorted(g.nodes)
        ],
        "edges": [{"src": a, "color": i, "dst": b} for a, i, b in sorted(g.edges)],
    }


def graph_from_dict(data: dict) -> CrystalGraph:
    lam = Partition(tuple(data["lambda"]))
    nodes = {rec["key"]: Weight(tuple(rec["weight"])) for rec in data["nodes"]}
    edges = [(rec["src"], int(rec["color"]), rec["dst"]) for rec in data["edges"]]
    unknown = {x for a, _, b in edges for x in (a, b)} - set(nodes)
    if unknown:
        raise ValueError(f"edges mention undeclared nodes: {sorted(unknown)[:3]}")
    return CrystalGraph(lam, nodes, edges)


def graph_to_json(g: CrystalGraph) -> str:
    return dumps(graph_to_dict(g))


def graph_from_json(text: str) -> CrystalGraph:
    return graph_from_dict(json.loads(text))


def to_dot(g: CrystalGraph) -> str:
    lines = [
        "digraph crystal {",
        f'  label="M({g.lam})";',
        '  node [shape=box, fontname="monospace"];',
    ]
    for k in sorted(g.nodes):
        if isinstance(g.payload.get(k), IceModel):
            label = "{" + ",".join(f"({p},{q})" for p, q in _boxes_of(g, k)) + "}"
        else:
            label = k
        lines.append(f"  {json.dumps(k)} [label={json.dumps(label)}];")
    for a, i, b in sorted(g.edges):
        color = DOT_PALETTE[(i - 1) % len(DOT_PALETTE)]
        lines.append(f'  {json.dumps(a)} -> {json.dumps(b)} [label="i={i}", color={color}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
