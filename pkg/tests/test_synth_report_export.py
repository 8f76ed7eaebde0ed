import json

import numpy as np
import pytest

from fands import (
    ParameterError,
    build_graph,
    checkworthy_list,
    components,
    make_preset,
    preset_corpus,
    run_flow,
    to_dot,
    to_force_json,
    top_k_report,
)
from fands.report import relative_energy_by_article, report_csv, report_json


# -- presets ---------------------------------------------------------------

def test_moon_hoax_path():
    g = make_preset("moon_hoax_path")
    assert g.nodes == (1, 2, 3)
    assert g.edges == ((1, 2), (2, 3))


def test_star_two_is_path():
    g = make_preset("star", k=2)
    assert sorted(g.degrees.tolist()) == [1, 1, 2]
    assert g.n_edges == 2


def test_polygon():
    g = make_preset("polygon", s=4, t=4)
    assert g.n_nodes == 8 and g.n_edges == 16


def test_graph_a_shape():
    g = make_preset("graph_a")
    assert (g.n_nodes, g.n_edges, len(components(g))) == (17, 15, 2)
    assert g.neighbors[1] == tuple(range(2, 10))
    assert g.neighbors[10] == tuple(range(11, 18))


def test_graph_b_shape_and_restriction():
    a = make_preset("graph_a")
    b = make_preset("graph_b")
    assert (b.n_nodes, b.n_edges, len(components(b))) == (19, 17, 2)
    assert (2, 18) in b.edges and (3, 19) in b.edges
    assert b.subgraph(range(1, 18)) == a
    assert len(preset_corpus("graph_b").topics) == 4
    assert b.topics_per_node[2] == {1, 3}


def test_presets_are_deterministic():
    assert make_preset("graph-b").to_json() == make_preset("graph_b").to_json()


@pytest.mark.parametrize("name, kw", [("star", {"k": 1}), ("star", {}), ("polygon", {"s": 0, "t": 2}), ("nope", {})])
def test_bad_presets(name, kw):
    with pytest.raises(ParameterError):
        make_preset(name, **kw)


# -- reports ---------------------------------------------------------------

def test_top_k_moon_hoax():
    g = make_preset("moon_hoax_path")
    (row,) = top_k_report(g, run_flow(g), 1)
    assert (row.news_id, row.relative_energy, row.n_connected) == (2, 1.0, 2)
    assert row.mean_neighbor_energy == pytest.approx(0.5)
    assert top_k_report(g, run_flow(g), 0) == []
    assert len(top_k_report(g, run_flow(g), 50)) == 3


def test_top_k_star_neighbour_mean():
    # Leaves of a k-star hold 1/k of the centre, so their mean relative energy is 1/k.
    g = make_preset("star", k=13)
    (row,) = top_k_report(g, run_flow(g), 1)
    assert row.mean_neighbor_energy == pytest.approx(1 / 13, abs=1e-9)
    assert row.n_topics == 1


def test_top_k_rows_recomputable():
    g = make_preset("graph_b")
    state = run_flow(g)
    rel = state.e / state.e.max()
    for row in top_k_report(g, state, 19):
        i = g.index[row.news_id]
        assert row.node_id == i + 1
        assert row.relative_energy == rel[i]
        assert row.mean_neighbor_energy == pytest.approx(np.mean([rel[g.index[v]] for v in g.neighbors[row.news_id]]))
    csv_lines = report_csv(top_k_report(g, state, 2)).splitlines()
    assert csv_lines[0] == "rank,node_id,news_id,energy,relative_energy,mean_neighbor_energy,n_connected,n_topics"
    assert json.loads(report_json(top_k_report(g, state, 2)))[0]["news_id"] == 10


def test_checkworthy():
    g = make_preset("graph_b")
    state = run_flow(g)
    assert len(checkworthy_list(state, 0.0)) == g.n_nodes
    assert checkworthy_list(state, 1.0) == [10]
    prev = None
    for th in np.linspace(0, 1, 21):
        cur = set(checkworthy_list(state, th))
        if prev is not None:
            assert cur <= prev
        prev = cur
    with pytest.raises(ValueError):
        checkworthy_list(state, 1.5)


def test_isolated_articles_get_zero():
    g = make_preset("moon_hoax_path")
    rel = relative_energy_by_article([1, 2, 3, 4], g, run_flow(g))
    assert rel == {1: 0.5, 2: 1.0, 3: 0.5, 4: 0.0}


# -- exports ---------------------------------------------------------------

def test_dot_single_edge():
    assert to_dot(build_graph([(1, 2)])) == "graph {\n  1 -- 2;\n}\n"


def test_dot_empty():
    assert to_dot(build_graph([])) == "graph {}\n"


def test_dot_with_energy():
    g = make_preset("moon_hoax_path")
    text = to_dot(g, run_flow(g))
    assert '2 [energy="150"]' in text


def test_force_json_moon_hoax():
    g = make_preset("moon_hoax_path")
    data = json.loads(to_force_json(g, run_flow(g)))
    assert len(data["nodes"]) == 3 and len(data["links"]) == 2
    assert list(data["nodes"][0]) == ["id", "component", "degree", "energy", "relative_energy"]
    assert data["links"][0] == {"source": 1, "target": 2}


def test_force_json_graph_a():
    g = make_preset("graph_a")
    text = to_force_json(g, run_flow(g))
    assert text == to_force_json(g, run_flow(g))
    data = json.loads(text)
    assert len(data["nodes"]) == 17 and len(data["links"]) == 15
    comp = {n["id"]: n["component"] for n in data["nodes"]}
    assert {comp[i] for i in range(1, 10)} == {0}
    assert {comp[i] for i in range(10, 18)} == {1}
