"""Inconsistency Graph construction and structural analysis.

Nodes are news articles; an edge joins two articles that took opposite
agree/disagree stances on a shared topic. Repeated pairs (the same two
articles clashing on several topics) collapse to a single edge, with the
repeat count and the topics kept as metadata only.
"""
from __future__ import annotations

import enum
import json
import warnings
from collections import defaultdict, deque
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Optional

import numpy as np
import scipy.sparse as sp

from .errors import FormatError, SelfPairWarning
from .ingest import Corpus, Stance, corpus_stats

POLYGON_RATIO = 0.8
STARLIKE_RATIO = 0.25


class IncoPair(NamedTuple):
    a: int
    b: int
    topic_id: int


class Shape(str, enum.Enum):
    STAR = "Star"
    STARLIKE = "StarLike"
    POLYGON = "Polygon"
    POLYGONLIKE = "PolygonLike"
    MIXED = "Mixed"


def build_pairs(corpus: Corpus) -> list:
    """Enumerate agree x disagree article pairs topic by topic.

    Topics are visited in ascending id; within a topic articles keep
    stance-table order. Repeats across topics are kept. An article that
    both agrees and disagrees with one topic would pair with itself; that
    pair is dropped with a :class:`SelfPairWarning`.
    """
    agree = defaultdict(list)
    disagree = defaultdict(list)
    for rec in corpus.stances:
        if rec.stance is Stance.AGREE:
            agree[rec.topic_id].append(rec.news_id)
        elif rec.stance is Stance.DISAGREE:
            disagree[rec.topic_id].append(rec.news_id)

    pairs = []
    for topic_id in sorted(agree.keys() & disagree.keys()):
        for x in agree[topic_id]:
            for y in disagree[topic_id]:
                if x == y:
                    warnings.warn(
                        f"article {x} both agrees and disagrees with topic {topic_id}; "
                        "self-pair dropped",
                        SelfPairWarning,
                        stacklevel=2,
                    )
                    continue
                pairs.append(IncoPair(min(x, y), max(x, y), topic_id))
    return pairs


@dataclass(frozen=True)
class IncoGraph:
    """Undirected Inconsistency Graph.

    ``nodes`` is sorted by news id and fixes the index order used by all
    vector-valued results. ``edges`` holds canonical ``(a, b)`` tuples with
    ``a < b`` in sorted order; ``multiplicity`` and ``edge_topics`` are
    keyed by those tuples.
    """

    nodes: tuple
    edges: tuple
    multiplicity: dict
    edge_topics: dict

    @cached_property
    def index(self) -> dict:
        return {node: i for i, node in enumerate(self.nodes)}

    @cached_property
    def neighbors(self) -> dict:
        nbrs = {node: [] for node in self.nodes}
        for a, b in self.edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        return {node: tuple(sorted(v)) for node, v in nbrs.items()}

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.array([len(self.neighbors[n]) for n in self.nodes], dtype=np.int64)

    @cached_property
    def topics_per_node(self) -> dict:
        out = {node: set() for node in self.nodes}
        for edge, topics in self.edge_topics.items():
            out[edge[0]].update(topics)
            out[edge[1]].update(topics)
        return {node: frozenset(t) for node, t in out.items()}

    @cached_property
    def adjacency(self) -> sp.csr_matrix:
        """Symmetric 0/1 adjacency matrix in node order (CSR)."""
        n = len(self.nodes)
        idx = self.index
        rows = [idx[a] for a, _ in self.edges] + [idx[b] for _, b in self.edges]
        cols = [idx[b] for _, b in self.edges] + [idx[a] for a, _ in self.edges]
        data = np.ones(len(rows))
        adj = sp.csr_matrix((data, (rows, cols)), shape=(n, n))
        adj.sort_indices()
        return adj

    @property
    def n_nodes(self) -> int:
        return len(self.nodes)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def degree(self, node) -> int:
        return len(self.neighbors[node])

    def subgraph(self, keep) -> "IncoGraph":
        """Induced subgraph on ``keep``; nodes left isolated are dropped."""
        keep = set(keep)
        edges = [e for e in self.edges if e[0] in keep and e[1] in keep]
        return _from_edges(
            edges,
            {e: self.multiplicity[e] for e in edges},
            {e: self.edge_topics[e] for e in edges},
        )

    def relabel(self, mapping) -> "IncoGraph":
        """Apply an injective node relabeling ``mapping[old] -> new``."""
        mult = defaultdict(int)
        topics = defaultdict(set)
        for (a, b), m in self.multiplicity.items():
            x, y = mapping[a], mapping[b]
            e = (min(x, y), max(x, y))
            mult[e] += m
            topics[e].update(self.edge_topics[(a, b)])
        return _from_edges(list(mult), dict(mult), dict(topics))

    def to_dict(self) -> dict:
        comp_of = component_index(self)
        return {
            "nodes": [
                {"id": n, "degree": self.degree(n), "component": comp_of[n]}
                for n in self.nodes
            ],
            "edges": [
                {
                    "a": a,
                    "b": b,
                    "multiplicity": self.multiplicity[(a, b)],
                    "topics": sorted(self.edge_topics[(a, b)]),
                }
                for a, b in self.edges
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data) -> "IncoGraph":
        try:
            edges, mult, topics = [], {}, {}
            for item in data["edges"]:
                a, b = int(item["a"]), int(item["b"])
                if a == b:
                    raise FormatError(f"self-loop on node {a}")
                e = (min(a, b), max(a, b))
                edges.append(e)
                mult[e] = int(item.get("multiplicity", 1))
                topics[e] = frozenset(int(t) for t in item.get("topics", ()))
            declared = {int(n["id"]) for n in data.get("nodes", ())}
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"malformed graph JSON: {exc}") from None
        graph = _from_edges(edges, mult, topics)
        if declared and declared != set(graph.nodes):
            raise FormatError("graph JSON node list does not match its edges")
        return graph

    @classmethod
    def from_json(cls, text: str) -> "IncoGraph":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid graph JSON: {exc}") from None
        return cls.from_dict(data)


def _from_edges(edges, multiplicity, edge_topics) -> IncoGraph:
    edges = tuple(sorted(set(edges)))
    nodes = tuple(sorted({n for e in edges for n in e}))
    return IncoGraph(
        nodes=nodes,
        edges=edges,
        multiplicity={e: multiplicity[e] for e in edges},
        edge_topics={e: frozenset(edge_topics.get(e, ())) for e in edges},
    )


def build_graph(pairs) -> IncoGraph:
    """Collapse a pair list (with repeats) into an :class:`IncoGraph`."""
    mult = defaultdict(int)
    topics = defaultdict(set)
    for pair in pairs:
        a, b = pair[0], pair[1]
        if a == b:
            continue
        e = (min(a, b), max(a, b))
        mult[e] += 1
        if len(pair) > 2:
            topics[e].add(pair[2])
    return _from_edges(list(mult), dict(mult), dict(topics))


def graph_from_corpus(corpus: Corpus) -> IncoGraph:
    return build_graph(build_pairs(corpus))


def pipeline_stats(corpus: Corpus, pairs=None, graph: IncoGraph | None = None) -> dict:
    """Corpus and graph sizes as reported by ``fands build``.

    ``n_pairs_with_repeats`` counts every (article, article, topic)
    conflict; ``n_edges`` counts distinct article pairs.
    """
    if pairs is None:
        pairs = build_pairs(corpus)
    if graph is None:
        graph = build_graph(pairs)
    stats = corpus_stats(corpus)
    return {
        "n_topics": stats["n_topics"],
        "n_articles": stats["n_articles"],
        "n_stances": stats["n_stances"],
        "n_unique_stances": stats["n_unique_stances"],
        "n_nodes": graph.n_nodes,
        "n_pairs_with_repeats": len(pairs),
        "n_edges": graph.n_edges,
        "n_conflict_topics": len({p.topic_id for p in pairs}),
    }


@dataclass(frozen=True)
class Component:
    nodes: tuple
    is_bipartite: bool
    sides: Optional[tuple] = None
    shape: Optional[Shape] = None

    @property
    def size(self) -> int:
        return len(self.nodes)


def classify_shape(component, polygon_ratio=POLYGON_RATIO, starlike_ratio=STARLIKE_RATIO) -> Shape:
    """Label a component Star / StarLike / Polygon / PolygonLike / Mixed.

    ``component`` may be a :class:`Component` or a pair of side sizes.
    Non-bipartite components are Mixed. For side sizes ``s <= t``: one
    node against two or more is a Star; ``s/t >= polygon_ratio`` is a
    Polygon; ``s/t <= starlike_ratio`` is StarLike; anything between is
    PolygonLike.
    """
    if isinstance(component, Component):
        if not component.is_bipartite:
            return Shape.MIXED
        sizes = tuple(len(side) for side in component.sides)
    else:
        sizes = tuple(component)
    s, t = sorted(sizes)
    if s == 1 and t >= 2:
        return Shape.STAR
    ratio = s / t
    if ratio >= polygon_ratio:
        return Shape.POLYGON
    if ratio <= starlike_ratio:
        return Shape.STARLIKE
    return Shape.POLYGONLIKE


def components(graph: IncoGraph, polygon_ratio=POLYGON_RATIO, starlike_ratio=STARLIKE_RATIO) -> list:
    """Connected components, ordered by their smallest news id.

    Each component is 2-coloured during the search; when that succeeds the
    colour classes are its two sides.
    """
    colour = {}
    out = []
    for start in graph.nodes:
        if start in colour:
            continue
        colour[start] = 0
        members = [start]
        bipartite = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in graph.neighbors[u]:
                if v not in colour:
                    colour[v] = 1 - colour[u]
                    members.append(v)
                    queue.append(v)
                elif colour[v] == colour[u]:
                    bipartite = False
        members.sort()
        sides = None
        if bipartite:
            sides = (
                tuple(n for n in members if colour[n] == 0),
                tuple(n for n in members if colour[n] == 1),
            )
        comp = Component(tuple(members), bipartite, sides)
        shape = classify_shape(comp, polygon_ratio, starlike_ratio)
        out.append(Component(comp.nodes, bipartite, sides, shape))
    return out


def component_index(graph: IncoGraph) -> dict:
    """Map each node to the 0-based index of its component."""
    return {n: i for i, comp in enumerate(components(graph)) for n in comp.nodes}
