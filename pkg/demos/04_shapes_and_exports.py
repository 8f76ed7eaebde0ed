"""
Component shapes and export formats
===================================

Stars concentrate energy in the centre: at the fixed point the centre of
a k-leaf star holds half of the total and each leaf holds 1/k of the
centre. Balanced complete bipartite ("polygon") components spread it
evenly.
"""

import json

from fands import classify_shape, components, make_preset, run_flow, to_dot, to_force_json

for k in (2, 4, 8, 16):
    state = run_flow(make_preset("star", k=k))
    print(f"star k={k}: centre {state.e[0]:.4f} of {state.total:.0f}, leaf {state.e[1]:.4f}")

polygon = make_preset("polygon", s=4, t=4)
print("polygon energies:", run_flow(polygon).e.round(6))

# %%
# The side-size ratio decides the shape label.
for sides in [(1, 9), (2, 8), (3, 5), (4, 4)]:
    print(sides, classify_shape(sides).value)
print([c.shape.value for c in components(make_preset("graph_b"))])

# %%
# Graphviz DOT for static drawings, and a nodes/links JSON for
# force-directed layouts in the browser.
graph = make_preset("moon_hoax_path")
state = run_flow(graph)
print(to_dot(graph, state))
print(json.dumps(json.loads(to_force_json(graph, state))["nodes"][1]))
