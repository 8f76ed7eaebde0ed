"""Top-k property tables and check-worthy lists from a converged flow."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass

import numpy as np

from .flow import EnergyState, relative_energy
from .incograph import IncoGraph

TOPK_COLUMNS = (
    "rank",
    "node_id",
    "news_id",
    "energy",
    "relative_energy",
    "mean_neighbor_energy",
    "n_connected",
    "n_topics",
)


@dataclass(frozen=True)
class TopKRow:
    rank: int
    node_id: int
    news_id: int
    energy: float
    relative_energy: float
    mean_neighbor_energy: float
    n_connected: int
    n_topics: int


def _ordered(state: EnergyState):
    rel = relative_energy(state)
    nodes = state.nodes or tuple(range(len(rel)))
    order = sorted(range(len(rel)), key=lambda i: (-rel[i], nodes[i]))
    return rel, order


def top_k_report(graph: IncoGraph, state: EnergyState, k: int = 10) -> list:
    """Rows for the ``k`` highest-energy nodes.

    ``mean_neighbor_energy`` averages the neighbours' relative energies;
    ``n_topics`` counts the topics on which the node's stance produced at
    least one edge. ``node_id`` is the 1-based position in graph order.
    """
    if k <= 0:
        return []
    rel, order = _ordered(state)
    idx = graph.index
    rows = []
    for rank, i in enumerate(order[:k], start=1):
        news_id = graph.nodes[i]
        nbrs = graph.neighbors[news_id]
        mean_nbr = float(np.mean([rel[idx[v]] for v in nbrs])) if nbrs else 0.0
        rows.append(
            TopKRow(
                rank=rank,
                node_id=i + 1,
                news_id=news_id,
                energy=float(state.e[i]),
                relative_energy=float(rel[i]),
                mean_neighbor_energy=mean_nbr,
                n_connected=len(nbrs),
                n_topics=len(graph.topics_per_node[news_id]),
            )
        )
    return rows


def checkworthy_list(state: EnergyState, threshold: float = 0.5) -> list:
    """News ids whose relative energy is at least ``threshold``, highest first."""
    if not 0.0 <= threshold <= 1.0:
        raise ValueError(f"threshold must lie in [0, 1], got {threshold}")
    rel, order = _ordered(state)
    nodes = state.nodes or tuple(range(len(rel)))
    return [nodes[i] for i in order if rel[i] >= threshold]


def relative_energy_by_article(articles, graph: IncoGraph, state: EnergyState) -> dict:
    """Relative energy for every article id; articles outside the graph get 0."""
    rel = dict(zip(graph.nodes, relative_energy(state)))
    return {a: float(rel.get(a, 0.0)) for a in articles}


def report_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(TOPK_COLUMNS)
    for row in rows:
        d = asdict(row)
        writer.writerow([repr(d[c]) if isinstance(d[c], float) else d[c] for c in TOPK_COLUMNS])
    return buf.getvalue()


def report_json(rows) -> str:
    return json.dumps([asdict(r) for r in rows], indent=2) + "\n"
