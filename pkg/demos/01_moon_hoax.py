"""
Energy flow on the smallest conflict
====================================

Three reports about the moon landing: report 2 agrees with a hoax
headline, reports 1 and 3 disagree with it. That gives a three-node
path 1 - 2 - 3 in the inconsistency graph.
"""

import numpy as np

from fands import EnergyState, FlowParams, build_matrix, make_preset, run_flow, step

graph = make_preset("moon_hoax_path")
print("edges:", graph.edges)

# %%
# Every node starts with 100 units. One step keeps ``1 - p`` of each
# node's energy in place and sends the rest to its neighbours in
# proportion to their attraction factor (minus log10 of energy share).
state = EnergyState.uniform(graph, 100.0)
m = build_matrix(graph, state, FlowParams(p=0.5))
print("transformation matrix:\n", m.toarray())
print("after one step:", step(m, state).e)

# %%
# The middle report is in conflict with both others, so it collects
# twice the energy of each end. The fixed point does not depend on p,
# only the speed of getting there does.
for p in (0.25, 0.5, 0.75):
    final = run_flow(graph, FlowParams(p=p))
    print(f"p={p}: energies {np.round(final.e, 6)} after {final.iteration} steps")
