"""File formats: edge-list text, JSON graphs/labelings, DOT exports.

Graph text format: one `u v` line per edge, `#` starts a comment, and an
optional `vertices: u1 u2 ...` line declares isolated vertices. JSON graph
format: {"vertices": [...], "edges": [[u, v], ...]}. Labeling JSON:
{"edges": [{"u": int, "v": int, "label": int}, ...]}. All emitters sort
keys and arrays so identical inputs serialize byte-identically.
"""

from __future__ import annotations

import json
from pathlib import Path

from .graph import Graph, canonical_edge
from .labeling import EdgeLabeling
from .poset import CliquePoset

# label colors cycle through 8 values; the first three follow the usual
# black/red/blue drawing convention for labels 1, 2, 3
LABEL_COLORS = ("black", "red", "blue", "forestgreen",
                "darkorange", "purple", "saddlebrown", "deepskyblue")


def parse_graph_text(text: str) -> Graph:
    vertices: list[int] = []
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if line.startswith("vertices:"):
                vertices.extend(int(tok) for tok in line[len("vertices:"):].split())
            else:
                u, v = line.split()
                edges.append((int(u), int(v)))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: cannot parse {raw!r}") from exc
    return Graph(vertices, edges)


def parse_graph_json(text: str) -> Graph:
    data = json.loads(text)
    if not isinstance(data, dict) or "edges" not in data:
        raise ValueError('graph JSON needs an "edges" array')
    edges = [(int(u), int(v)) for u, v in data["edges"]]
    vertices = [int(v) for v in data.get("vertices", [])]
    return Graph(vertices, edges)


def load_graph(path: str | Path, fmt: str | None = None) -> Graph:
    """Read a graph file; format from `fmt` or the file extension."""
    path = Path(path)
    text = path.read_text()
    if fmt is None:
        fmt = "json" if path.suffix.lower() == ".json" else "edgelist"
    if fmt == "json":
        return parse_graph_json(text)
    if fmt == "edgelist":
        return parse_graph_text(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def graph_to_json_dict(g: Graph) -> dict:
    return {"vertices": list(g.vertices), "edges": [list(e) for e in g.edges]}


def labeling_to_json_dict(lab: EdgeLabeling) -> dict:
    return {
        "edges": [
            {"u": u, "v": v, "label": k} for (u, v), k in lab.items()
        ]
    }


def parse_labeling_json(g: Graph, text: str) -> EdgeLabeling:
    """Labeling from JSON; the edge set must match the graph exactly."""
    data = json.loads(text)
    if not isinstance(data, dict) or "edges" not in data:
        raise ValueError('labeling JSON needs an "edges" array')
    labels = {}
    for item in data["edges"]:
        e = canonical_edge(int(item["u"]), int(item["v"]))
        if e in labels:
            raise ValueError(f"duplicate labeling entry for edge {e}")
        labels[e] = int(item["label"])
    return EdgeLabeling(g, labels)


def labeling_to_dot(lab: EdgeLabeling, name: str = "labeled") -> str:
    lines = [f"graph {name} {{"]
    for v in lab.graph.vertices:
        lines.append(f"  {v};")
    for (u, v), k in lab.items():
        color = LABEL_COLORS[(k - 1) % len(LABEL_COLORS)]
        lines.append(f'  {u} -- {v} [label={k}, color={color}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _node_name(node: frozenset[int]) -> str:
    return "{" + ",".join(str(v) for v in sorted(node)) + "}"


def poset_to_json_dict(p: CliquePoset) -> dict:
    nodes = list(p.nodes)
    index = {node: i for i, node in enumerate(nodes)}
    covers = sorted(
        [index[low], index[high]]
        for high in nodes for low in p.covers[high]
    )
    return {
        "nodes": [sorted(node) for node in nodes],
        "covers": covers,
        "maximal": sorted(index[c] for c in p.maximal_nodes),
    }


def poset_to_dot(p: CliquePoset, name: str = "poset") -> str:
    """Hasse diagram, drawn bottom-up, maximal cliques highlighted."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    index = {node: i for i, node in enumerate(p.nodes)}
    for node, i in index.items():
        style = ', style=filled, fillcolor=lightgrey' if node in p.maximal_nodes else ""
        lines.append(f'  n{i} [label="{_node_name(node)}"{style}];')
    for high in p.nodes:
        for low in p.covers[high]:
            lines.append(f"  n{index[low]} -> n{index[high]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dump_json(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"
