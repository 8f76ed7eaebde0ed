"""Comparison rankers and ranking utilities.

Besides the energy-flow ranking itself there are three baselines: vote
count (graph degree), vote percentage (share of opposing voters across a
node's conflict topics) and hubs/authorities.
"""
from __future__ import annotations

import csv
import io
import json
import math
import warnings
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import ConvergenceWarning, DegenerateGraphError, UniverseMismatchError
from .flow import FlowParams, relative_energy, run_flow
from .incograph import IncoGraph
from .ingest import Corpus, Stance

TIE_RTOL = 1e-9

RANKING_COLUMNS = ("rank", "group", "node_id", "score", "method")


def tie_groups(nodes, scores, rtol=TIE_RTOL) -> list:
    """Group nodes of equal score, best first.

    Nodes are sorted by descending score. A new group starts when a score
    falls more than ``rtol`` (relative) below the first score of the
    current group. Inside a group nodes are listed by ascending id.
    """
    order = sorted(range(len(nodes)), key=lambda i: (-scores[i], nodes[i]))
    groups = []
    lead = None
    for i in order:
        s = float(scores[i])
        if lead is None or abs(lead - s) > rtol * max(abs(lead), abs(s)):
            groups.append([])
            lead = s
        groups[-1].append(nodes[i])
    return [tuple(sorted(g)) for g in groups]


@dataclass(frozen=True)
class RankingResult:
    """Scores for ``nodes`` (news ids) plus their tie groups, best first.

    ``converged`` and ``iterations`` are only meaningful for the iterative
    methods (``fands`` and ``hits``).
    """

    method: str
    nodes: tuple
    scores: np.ndarray
    tie_groups: list = field(default=None)
    converged: bool = True
    iterations: int = 0
    residual: float = 0.0

    def __post_init__(self):
        scores = np.asarray(self.scores, dtype=float)
        object.__setattr__(self, "scores", scores)
        if self.tie_groups is None:
            object.__setattr__(self, "tie_groups", tie_groups(self.nodes, scores))

    @property
    def order(self) -> list:
        """All nodes, best first (ties by ascending id)."""
        return [n for g in self.tie_groups for n in g]

    def top(self, k: int) -> list:
        return self.order[:k]

    def score_of(self, node) -> float:
        return float(self.scores[self.nodes.index(node)])

    def as_dict(self) -> dict:
        return {n: float(s) for n, s in zip(self.nodes, self.scores)}

    def group_of(self) -> dict:
        return {n: gi for gi, g in enumerate(self.tie_groups) for n in g}

    def rows(self, node_ids=None) -> list:
        """Rows for the rankings CSV; ``node_ids`` maps news id -> graph node id."""
        scores = self.as_dict()
        out = []
        rank = 0
        for gi, group in enumerate(self.tie_groups, start=1):
            for n in group:
                rank += 1
                out.append({
                    "rank": rank,
                    "group": gi,
                    "node_id": node_ids[n] if node_ids else n,
                    "score": scores[n],
                    "method": self.method,
                })
        return out

    def to_csv(self, node_ids=None) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(RANKING_COLUMNS)
        for row in self.rows(node_ids):
            writer.writerow([repr(row[c]) if c == "score" else row[c] for c in RANKING_COLUMNS])
        return buf.getvalue()


def rank_fands(graph: IncoGraph, params: FlowParams | None = None) -> RankingResult:
    """Rank by relative energy at the energy-flow fixed point."""
    state = run_flow(graph, params)
    return RankingResult(
        "fands",
        graph.nodes,
        relative_energy(state),
        converged=state.converged,
        iterations=state.iteration,
        residual=state.residual,
    )


def rank_by_count(graph: IncoGraph) -> RankingResult:
    """Score each node by its number of distinct conflicting articles."""
    return RankingResult("count", graph.nodes, graph.degrees.astype(float))


def rank_by_percentage(corpus: Corpus, nodes=None) -> RankingResult:
    """Share of opposing voters over all agree/disagree voters, pooled across topics.

    For every agree/disagree vote of an article on a topic, the numerator
    gains the number of voters on that topic holding the opposite stance
    and the denominator gains the number of agree/disagree voters on that
    topic. Articles without any such vote are left out. ``nodes`` restricts
    the result to a given set of news ids (e.g. the graph nodes).
    """
    voters = defaultdict(lambda: {Stance.AGREE: set(), Stance.DISAGREE: set()})
    votes = defaultdict(list)
    for rec in corpus.stances:
        if rec.stance in (Stance.AGREE, Stance.DISAGREE):
            voters[rec.topic_id][rec.stance].add(rec.news_id)
            votes[rec.news_id].append((rec.topic_id, rec.stance))

    num = defaultdict(int)
    den = defaultdict(int)
    for news_id, cast in votes.items():
        for topic_id, stance in cast:
            side = voters[topic_id]
            other = Stance.DISAGREE if stance is Stance.AGREE else Stance.AGREE
            num[news_id] += len(side[other] - {news_id})
            den[news_id] += len(side[Stance.AGREE] | side[Stance.DISAGREE])

    universe = sorted(den) if nodes is None else sorted(n for n in nodes if den.get(n))
    scores = [num[n] / den[n] for n in universe]
    return RankingResult("percentage", tuple(universe), scores)


def rank_hits(graph: IncoGraph, tol: float = 1e-12, max_iters: int = 10_000) -> RankingResult:
    """Hubs/authorities scores on the undirected graph.

    With a symmetric adjacency matrix hub and authority updates coincide,
    so one vector is iterated: ``x <- (A + I) x`` followed by Euclidean
    normalisation. The identity shift damps the period-two oscillation a
    bare ``x <- A x`` shows on bipartite graphs; the limit is the principal
    eigenvector of ``A``. Stops when the Euclidean change is at most
    ``tol``.
    """
    if graph.n_nodes == 0:
        raise DegenerateGraphError("hits needs a non-empty graph")
    adj = graph.adjacency
    x = np.full(graph.n_nodes, 1.0 / math.sqrt(graph.n_nodes))
    converged = False
    delta = math.inf
    it = 0
    for it in range(1, max_iters + 1):
        y = adj @ x + x
        y /= np.linalg.norm(y)
        delta = float(np.linalg.norm(y - x))
        x = y
        if delta <= tol:
            converged = True
            break
    if not converged:
        warnings.warn(
            f"hits did not converge in {max_iters} iterations (last change {delta:.3e})",
            ConvergenceWarning,
            stacklevel=2,
        )
    return RankingResult("hits", graph.nodes, x, converged=converged, iterations=it, residual=delta)


@dataclass(frozen=True)
class Comparison:
    """Side-by-side top-k lists with tie-group indices and pairwise overlaps."""

    k: int
    methods: tuple
    top: dict
    groups: dict
    overlap: dict

    def rows(self) -> list:
        out = []
        for r in range(self.k):
            row = {"rank": r + 1}
            for m in self.methods:
                nodes = self.top[m]
                row[m] = nodes[r] if r < len(nodes) else None
                row[f"{m}_group"] = self.groups[m][r] if r < len(nodes) else None
            out.append(row)
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        header = ["rank"] + [c for m in self.methods for c in (m, f"{m}_group")]
        writer.writerow(header)
        for row in self.rows():
            writer.writerow(["" if row[c] is None else row[c] for c in header])
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "methods": list(self.methods),
            "rows": self.rows(),
            "overlap": [
                {"a": a, "b": b, "overlap": n} for (a, b), n in self.overlap.items()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def compare_rankings(results, k: int) -> Comparison:
    """Top-``k`` nodes of each ranking and the size of every pairwise intersection."""
    results = list(results)
    if not results:
        raise ValueError("no rankings to compare")
    universe = set(results[0].nodes)
    for r in results[1:]:
        if set(r.nodes) != universe:
            raise UniverseMismatchError(
                f"rankings {results[0].method!r} and {r.method!r} cover different nodes"
            )
    methods = tuple(r.method for r in results)
    if len(set(methods)) != len(methods):
        raise ValueError("method labels must be distinct")
    top = {r.method: r.top(k) for r in results}
    groups = {}
    for r in results:
        gi = r.group_of()
        groups[r.method] = [gi[n] + 1 for n in top[r.method]]
    overlap = {
        (a, b): len(set(top[a]) & set(top[b])) for a, b in combinations(methods, 2)
    }
    return Comparison(k, methods, top, groups, overlap)


def overlap(a: RankingResult, b: RankingResult, k: int) -> int:
    return len(set(a.top(k)) & set(b.top(k)))
