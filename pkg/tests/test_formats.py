import pytest

from ghslab import CyclicGraphError, Dag, ParseError, build
from ghslab.formats import (
    graph_to_json,
    instance_to_json,
    matrix_to_json,
    parse_edge_list,
    parse_graph_json,
    parse_instance_json,
    parse_matrix_json,
)


def test_matrix_roundtrip():
    m = parse_matrix_json('[["3","0","0"],["0","6","1"],["0","0","9"]]')
    assert m.entries == ((3, 0, 0), (0, 6, 1), (0, 0, 9))
    assert parse_matrix_json(matrix_to_json(m)) == m


def test_matrix_accepts_plain_ints():
    assert parse_matrix_json("[[1, -2], [3, 4]]").entries == ((1, -2), (3, 4))


def test_matrix_parse_errors():
    for bad in ("nonsense", "[]", "[[1,2],[3]]", '[["x"]]', "[[true]]", '{"a":1}'):
        with pytest.raises(ParseError):
            parse_matrix_json(bad)


def test_graph_json():
    g = parse_graph_json('{"n": 3, "edges": [[1,2],[2,3]]}')
    assert g == Dag(3, [(1, 2), (2, 3)])
    assert parse_graph_json(graph_to_json(g)) == g


def test_graph_json_undirected():
    g = parse_graph_json('{"n": 3, "edges": [[2,1],[3,2]], "undirected": true}')
    assert g.edges == frozenset({(1, 2), (2, 3)})


def test_graph_json_directed_cycle_rejected():
    with pytest.raises(CyclicGraphError):
        parse_graph_json('{"n": 2, "edges": [[1,2],[2,1]]}')


def test_instance_roundtrip():
    text = '{"d": ["2","5","3"], "graph": {"n": 3, "edges": [[2,3]]}}'
    inst = parse_instance_json(text)
    assert inst.d == (2, 5, 3)
    assert inst.matrix.entries == ((2, 0, 0), (0, 5, 1), (0, 0, 3))
    assert parse_instance_json(instance_to_json(inst)) == build((2, 5, 3), Dag(3, [(2, 3)]))
    with pytest.raises(ParseError):
        parse_instance_json('{"d": ["2"]}')


def test_edge_list():
    g = parse_edge_list("4\n1 2\n2 4\n")
    assert g == Dag(4, [(1, 2), (2, 4)])
    assert parse_edge_list("3\n") == Dag(3, [])
    with pytest.raises(ParseError):
        parse_edge_list("")
    with pytest.raises(ParseError):
        parse_edge_list("3\n1 2 3\n")
    with pytest.raises(ParseError):
        parse_edge_list("x\n1 2\n")
