"""Graph exports for external viewers: Graphviz DOT and force-layout JSON."""
from __future__ import annotations

import json

from .flow import EnergyState, relative_energy
from .incograph import IncoGraph, component_index


def _num(x: float) -> str:
    return format(float(x), ".10g")


def to_dot(graph: IncoGraph, state: EnergyState | None = None) -> str:
    """Undirected DOT text; nodes carry an ``energy`` attribute when ``state`` is given."""
    if graph.n_nodes == 0:
        return "graph {}\n"
    lines = ["graph {"]
    if state is not None:
        for n, e in zip(graph.nodes, state.e):
            lines.append(f'  {n} [energy="{_num(e)}"];')
    for a, b in graph.edges:
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def force_dict(graph: IncoGraph, state: EnergyState) -> dict:
    comp = component_index(graph)
    rel = relative_energy(state) if graph.n_nodes else []
    return {
        "nodes": [
            {
                "id": n,
                "component": comp[n],
                "degree": graph.degree(n),
                "energy": float(state.e[i]),
                "relative_energy": float(rel[i]),
            }
            for i, n in enumerate(graph.nodes)
        ],
        "links": [{"source": a, "target": b} for a, b in graph.edges],
    }


def to_force_json(graph: IncoGraph, state: EnergyState) -> str:
    """``{nodes: [...], links: [{source, target}]}`` as used by d3-force layouts."""
    return json.dumps(force_dict(graph, state), indent=2) + "\n"
