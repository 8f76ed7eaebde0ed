"""
The full FNC-1 pipeline
=======================

Usage: ``python demos/05_fnc1_pipeline.py /path/to/fnc-1``

The directory must hold ``train_stances.csv``, ``train_bodies.csv``,
``competition_test_stances.csv`` and ``competition_test_bodies.csv``
from the public FNC-1 release. Headlines become topics, Body IDs become
news ids, and the train and test splits are pooled.
"""

import sys
import time
import warnings
from pathlib import Path

from fands import (
    SelfPairWarning,
    build_graph,
    build_pairs,
    compare_rankings,
    parse_fnc,
    pipeline_stats,
    rank_by_count,
    rank_by_percentage,
    rank_fands,
    run_flow,
    top_k_report,
)

if len(sys.argv) != 2:
    sys.exit(__doc__.strip().splitlines()[3])
root = Path(sys.argv[1])

t0 = time.perf_counter()
corpus = parse_fnc(
    [root / "train_stances.csv", root / "competition_test_stances.csv"],
    [root / "train_bodies.csv", root / "competition_test_bodies.csv"],
)
with warnings.catch_warnings():
    warnings.simplefilter("ignore", SelfPairWarning)
    pairs = build_pairs(corpus)
graph = build_graph(pairs)
print(pipeline_stats(corpus, pairs, graph))

# %%
# Energy flow over the whole graph, then the ten most check-worthy
# reports with their neighbourhood.
state = run_flow(graph)
print(f"converged={state.converged} after {state.iteration} steps")
for row in top_k_report(graph, state, 10):
    print(f"{row.news_id:>6}  rel={row.relative_energy:.6f}  degree={row.n_connected}  "
          f"neighbours={row.mean_neighbor_energy:.4f}")

# %%
# How much do the baselines agree with the energy ranking?
results = [rank_fands(graph), rank_by_count(graph), rank_by_percentage(corpus, graph.nodes)]
for (a, b), n in compare_rankings(results, 10).overlap.items():
    print(f"top-10 overlap {a}/{b}: {n}")
print(f"total {time.perf_counter() - t0:.1f} s")
