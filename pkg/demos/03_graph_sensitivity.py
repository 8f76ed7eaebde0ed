"""
Two stars, one extra conflict each
==================================

Graph A holds two separate one-vs-many conflicts: article 1 against
eight others and article 10 against seven. Graph B adds two new
articles, 18 and 19, that each pick a fight with one leaf of the larger
star. Counting conflicts barely notices; energy flow reorders the top.
"""

from fands import compare_rankings, make_preset, preset_corpus, rank_by_count, rank_by_percentage, rank_fands, rank_hits

for name in ("graph_a", "graph_b"):
    graph = make_preset(name)
    corpus = preset_corpus(name)
    results = [
        rank_fands(graph),
        rank_by_count(graph),
        rank_by_percentage(corpus, graph.nodes),
        rank_hits(graph),
    ]
    print(f"== {name}")
    for r in results:
        print(f"{r.method:>10}: {r.tie_groups}")

    # %%
    # Pairwise overlap of the top four.
    table = compare_rankings(results, 4)
    for (a, b), n in table.overlap.items():
        print(f"  top-4 overlap {a}/{b}: {n}")

# %%
# In graph B the centre of the larger star hands energy to leaves 2 and
# 3, which now have a second opponent each, so article 10 becomes the
# most check-worthy report.
