"""Synthetic topologies: the three-report moon-hoax path, stars, complete
bipartite "polygons" and the two-star graphs A and B.

Each preset is defined as a stance corpus first, so the same object feeds
both the graph rankers and the percentage baseline.
"""
from __future__ import annotations

from .errors import ParameterError
from .incograph import IncoGraph, graph_from_corpus
from .ingest import Corpus, Stance

PRESETS = ("moon_hoax_path", "star", "polygon", "graph_a", "graph_b")

A, D = Stance.AGREE, Stance.DISAGREE


def _norm(name: str) -> str:
    key = name.strip().lower().replace("-", "_")
    aliases = {"moon_hoax": "moon_hoax_path", "moon": "moon_hoax_path", "path": "moon_hoax_path"}
    return aliases.get(key, key)


def _one_vs_many(topic, center, others):
    return [(topic, center, A)] + [(topic, n, D) for n in others]


def preset_corpus(name: str, k: int | None = None, s: int | None = None, t: int | None = None) -> Corpus:
    key = _norm(name)
    if key == "moon_hoax_path":
        # Numbered as in the worked energy example: node 2 is the middle node.
        records = _one_vs_many(1, 2, [1, 3])
    elif key == "star":
        if k is None or k < 2:
            raise ParameterError(f"star needs k >= 2, got {k}")
        records = _one_vs_many(1, 1, range(2, k + 2))
    elif key == "polygon":
        if s is None or t is None or s < 1 or t < 1:
            raise ParameterError(f"polygon needs s, t >= 1, got s={s}, t={t}")
        records = [(1, n, A) for n in range(1, s + 1)]
        records += [(1, n, D) for n in range(s + 1, s + t + 1)]
    elif key in ("graph_a", "graph_b"):
        records = _one_vs_many(1, 1, range(2, 10)) + _one_vs_many(2, 10, range(11, 18))
        if key == "graph_b":
            records += [(3, 18, A), (3, 2, D), (4, 19, A), (4, 3, D)]
    else:
        raise ParameterError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")
    return Corpus.from_records(records)


def make_preset(name: str, k: int | None = None, s: int | None = None, t: int | None = None) -> IncoGraph:
    """Build a preset graph.

    ``star`` uses ``k`` leaves (center 1, leaves 2..k+1); ``polygon`` is
    K_{s,t} with nodes 1..s facing s+1..s+t. ``graph_a`` is the union of a
    star centred at 1 with leaves 2..9 and a star centred at 10 with leaves
    11..17. ``graph_b`` adds edges (2, 18) and (3, 19), each on a topic of
    its own.
    """
    return graph_from_corpus(preset_corpus(name, k=k, s=s, t=t))
