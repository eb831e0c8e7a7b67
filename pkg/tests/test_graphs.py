import json

import pytest

from edgehdepth.graphs import (Cycle, DoubleBroom, DoubleStar, GeneralizedStar, Graph, GraphFormatError,
                               ParameterError, Path, Star, build, dump_graph, is_forest, load_graph)


def test_build_examples():
    assert build(Path(2)) == Graph(2, ((0, 1),))
    assert build(DoubleBroom(2, 2, 2)) == Graph(6, ((0, 2), (1, 2), (2, 3), (3, 4), (3, 5)))
    assert build(GeneralizedStar((1, 1))) == Graph(3, ((0, 1), (0, 2)))
    assert build(Star(3)) == Graph(4, ((0, 3), (1, 3), (2, 3)))
    assert build(Cycle(4)).edges == ((0, 1), (0, 3), (1, 2), (2, 3))
    assert build(GeneralizedStar((2, 3))).edges == ((0, 1), (0, 3), (1, 2), (3, 4), (4, 5))


@pytest.mark.parametrize("spec,needle", [
    (Path(1), "n >= 2"), (Cycle(2), "n >= 3"), (Star(0), "n >= 1"),
    (GeneralizedStar(()), "k >= 1"), (GeneralizedStar((2, 0)), "n_i >= 1"),
    (DoubleBroom(1, 3, 2), "n1 >= 2"), (DoubleBroom(2, 1, 2), "n >= 2"), (DoubleBroom(2, 3, 1), "n2 >= 2"),
    (DoubleStar(0, 1), "n1 >= 1"),
])
def test_parameter_errors_name_the_bound(spec, needle):
    with pytest.raises(ParameterError, match=needle):
        build(spec)


def test_edge_counts():
    for n in range(2, 40):
        assert len(build(Path(n)).edges) == n - 1
    for n in range(3, 40):
        assert len(build(Cycle(n)).edges) == n
    for br in [(1,), (3, 1), (2, 2, 5), (4, 4, 4, 1)]:
        assert len(build(GeneralizedStar(br)).edges) == sum(br)
    for n1 in range(2, 6):
        for n in range(2, 8):
            for n2 in range(2, 6):
                g = build(DoubleBroom(n1, n, n2))
                assert len(g.edges) == n1 + n2 + n - 1
                assert g.n == n1 + n + n2


def test_build_is_deterministic_and_canonical():
    for spec in [Path(7), Cycle(7), Star(5), GeneralizedStar((3, 1, 2)), DoubleBroom(3, 4, 2)]:
        g = build(spec)
        assert g == build(spec)
        assert list(g.edges) == sorted(g.edges)
        assert all(u < v for u, v in g.edges)


def test_path_edges_inside_cycle_edges():
    for n in range(3, 30):
        assert set(build(Path(n)).edges) < set(build(Cycle(n)).edges)


def test_is_forest():
    assert is_forest(build(Path(5)))
    assert not is_forest(build(Cycle(4)))
    assert is_forest(build(DoubleBroom(3, 4, 2)))
    info = is_forest(Graph.from_edges(5, [[0, 1], [3, 4]]))
    assert info.acyclic
    assert info.components == ((0, 1), (2,), (3, 4))
    assert info.roots == (0, 2, 3)


def _write(tmp_path, obj):
    p = tmp_path / "g.json"
    p.write_text(json.dumps(obj) if not isinstance(obj, str) else obj)
    return p


def test_load_graph(tmp_path):
    g = load_graph(_write(tmp_path, {"n": 3, "edges": [[1, 2], [0, 1]]}))
    assert g == build(Path(3))


@pytest.mark.parametrize("obj,needle", [
    ({"n": 2, "edges": [[0, 0]]}, "loop"),
    ({"n": 4, "edges": [[0, 1], [1, 0]]}, r"edges\[1\]: duplicate"),
    ({"n": 2, "edges": [[0, 2]]}, "out of range"),
    ({"n": 2}, "keys"),
    ('{"n": 2, "edges": [', "g.json:1"),
])
def test_load_graph_errors(tmp_path, obj, needle):
    with pytest.raises(GraphFormatError, match=needle):
        load_graph(_write(tmp_path, obj))


def test_dump_roundtrip(tmp_path):
    g = build(DoubleBroom(2, 3, 4))
    dump_graph(g, tmp_path / "out.json")
    assert load_graph(tmp_path / "out.json") == g
