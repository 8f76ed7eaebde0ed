"""
From a stance table to an inconsistency graph
=============================================

A small stance table with nine rows: topics, news ids and a stance of
agree, disagree or discuss. Only agree/disagree pairs on the same topic
become edges.
"""

from pathlib import Path

from fands import build_graph, build_pairs, components, parse_stance_table, pipeline_stats, rank_fands

table = Path(__file__).resolve().parent.parent / "tests" / "data" / "small_table.csv"
corpus = parse_stance_table(table)

pairs = build_pairs(corpus)
for pair in pairs:
    print(f"topic {pair.topic_id}: {pair.a} vs {pair.b}")

# %%
# Articles that only discuss a topic never enter the graph.
graph = build_graph(pairs)
print("nodes:", graph.nodes)
print(pipeline_stats(corpus, pairs, graph))

for comp in components(graph):
    print(f"component {comp.nodes}: sides {comp.sides}, shape {comp.shape.value}")

# %%
# Article 2 disagrees on two topics, so it sits in the middle of the
# largest component and ends up with the most energy.
ranking = rank_fands(graph)
for group in ranking.tie_groups:
    print(group, round(ranking.score_of(group[0]), 6))
