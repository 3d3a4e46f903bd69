import json

import pytest
from hypothesis import given

from rbkit.algebra import X, AlgebraElement
from rbkit.diagrams import (
    FAMILIES,
    Diagram,
    DiagramError,
    GeneratorWord,
    Letter,
    classify,
    concatenate,
    count,
    enumerate_diagrams,
    evaluate_word,
    factor,
    generator,
    is_planar,
    parse_vertex,
    vertex_name,
)

from conftest import basis, diagram_pairs, diagrams_of

D1 = Diagram.from_named_edges(11, [
    ("t7", "b10"), ("t11", "b8"), ("t2", "b4"), ("t1", "t3"), ("t4", "t8"), ("t5", "t6"),
    ("b1", "b3"), ("b5", "b7"), ("b2", "b6")])
D2 = Diagram.from_named_edges(11, [
    ("t10", "b5"), ("t11", "b8"), ("t1", "b4"), ("t3", "b1"), ("t4", "b3"), ("t8", "b10"),
    ("t2", "t5"), ("t6", "t7"), ("b7", "b11")])
D3 = Diagram.from_named_edges(11, [
    ("t7", "b5"), ("t11", "b10"), ("t2", "b3"), ("t1", "t3"), ("t4", "t8"), ("t5", "t6"),
    ("b1", "b4"), ("b7", "b11")])


def product_oracle(d1: Diagram, d2: Diagram) -> tuple[frozenset, int, int]:
    """Stack the diagrams and walk the resulting graph component by component."""
    k = d1.k
    adj: dict[tuple, list[tuple]] = {}

    def link(u, v):
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)

    def node(layer_top, layer_bottom, v):
        return (layer_top, v) if v < k else (layer_bottom, v - k)

    for a, b in d1.edges:
        link(node("T", "M", a), node("T", "M", b))
    for a, b in d2.edges:
        link(node("M", "B", a), node("M", "B", b))
    nodes = [(layer, i) for layer in "TMB" for i in range(k)]
    seen, edges, loops, isolated = set(), set(), 0, 0
    for start in nodes:
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adj.get(u, []):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        outer = [v for v in comp if v[0] != "M"]
        if len(outer) == 2:
            ids = sorted(i if layer == "T" else k + i for layer, i in outer)
            edges.add(tuple(ids))
        elif not outer:
            is_cycle = all(len(adj.get(v, [])) == 2 for v in comp)
            loops += is_cycle
            isolated += not is_cycle
    return frozenset(edges), loops, isolated


def test_vertex_names_round_trip():
    for v in range(8):
        assert parse_vertex(vertex_name(v, 4), 4) == v
    assert vertex_name(0, 3) == "t1" and vertex_name(3, 3) == "b1"
    with pytest.raises(DiagramError):
        parse_vertex("b5", 4)


def test_invalid_diagrams_rejected():
    with pytest.raises(DiagramError):
        Diagram(2, (1, 0, 2, -1))
    with pytest.raises(DiagramError):
        Diagram.from_edges(2, [(0, 1), (1, 2)])
    with pytest.raises(DiagramError):
        Diagram(2, (1, 0))


def test_t1_squared_closes_one_loop():
    t1 = generator("t", 1, 2)
    res = concatenate(t1, t1)
    assert (res.diagram, res.loops, res.isolated) == (t1, 1, 0)


def test_p1_squared_is_p1():
    p1 = generator("p", 1, 1)
    res = concatenate(p1, p1)
    # the shared middle vertex is stranded, so y^1 appears; y = 1 leaves p1
    assert (res.diagram, res.loops, res.isolated) == (p1, 0, 1)
    assert AlgebraElement.basis(p1) * AlgebraElement.basis(p1) == AlgebraElement.basis(p1)


def test_worked_eleven_column_product():
    res = D1 * D2
    assert res.loops == 1 and res.isolated == 1
    assert res.diagram == D3


@pytest.mark.parametrize("k", range(4))
def test_identity_is_neutral(k):
    one = Diagram.identity(k)
    for d in basis(k):
        assert concatenate(one, d) == concatenate(d, one)
        res = concatenate(one, d)
        assert (res.diagram, res.loops, res.isolated) == (d, 0, 0)


def test_k0_product_is_scalar():
    e = Diagram.empty(0)
    res = concatenate(e, e)
    assert (res.diagram, res.loops, res.isolated) == (e, 0, 0)


@given(diagram_pairs(max_k=4))
def test_concatenate_matches_graph_walk(pair):
    d1, d2 = pair
    res = concatenate(d1, d2)
    assert (frozenset(res.diagram.edges), res.loops, res.isolated) == product_oracle(d1, d2)
    assert res.loops + res.isolated <= d1.k


def test_rank_examples():
    assert Diagram.identity(5).rank == 5
    assert generator("t", 2, 5).rank == 3
    assert Diagram.empty(4).rank == 0


def test_generators():
    s1 = generator("s", 1, 2)
    assert s1.named_edges() == [["t1", "b2"], ["t2", "b1"]]
    assert generator("p", 1, 1) == Diagram.empty(1)
    assert generator("t", 1, 2).named_edges() == [["t1", "t2"], ["b1", "b2"]]
    with pytest.raises(DiagramError):
        generator("t", 2, 2)
    with pytest.raises(DiagramError):
        generator("q", 1, 2)


@pytest.mark.parametrize("k,expected", [(0, 1), (1, 2), (2, 10), (3, 76), (4, 764), (5, 9496),
                                        (6, 140152), (7, 2390480), (8, 46206736)])
def test_count(k, expected):
    assert count(k) == expected


@pytest.mark.parametrize("k", range(6))
def test_enumerate_matches_count(k):
    ds = enumerate_diagrams(k)
    assert len(ds) == len(set(ds)) == count(k)
    assert [d.sort_key() for d in ds] == sorted(d.sort_key() for d in ds)


def test_enumerate_k6_matches_count():
    assert len(enumerate_diagrams(6)) == count(6)


def test_enumerate_bound():
    with pytest.raises(DiagramError):
        enumerate_diagrams(7)


def test_classify_examples():
    assert classify(Diagram.identity(3)) == set(FAMILIES)
    assert classify(generator("s", 1, 2)) == {"brauer", "symmetric", "rook_monoid"}
    assert classify(generator("t", 1, 2)) == {"brauer", "temperley_lieb", "motzkin"}
    assert classify(generator("p", 1, 2)) == {"rook_monoid", "motzkin", "planar_rook"}


def test_planarity_uses_unfolded_order():
    # t1-b2 and t2-b1 cross; t1-t2 nested under nothing
    assert not is_planar(generator("s", 1, 2))
    assert is_planar(Diagram.from_named_edges(3, [("t1", "t3"), ("b1", "b3"), ("t2", "b2")])) is False
    assert is_planar(Diagram.from_named_edges(3, [("t1", "t2"), ("t3", "b1")]))


@pytest.mark.parametrize("k", range(4))
def test_families_closed_under_product(k):
    ds = basis(k)
    for d1 in ds:
        for d2 in ds:
            common = classify(d1) & classify(d2)
            assert common <= classify(concatenate(d1, d2).diagram)


@pytest.mark.parametrize("k", range(4))
def test_rank_never_increases(k):
    for d1 in basis(k):
        for d2 in basis(k):
            assert concatenate(d1, d2).diagram.rank <= min(d1.rank, d2.rank)


@given(diagram_pairs(max_k=4, arity=3))
def test_associativity(triple):
    a, b, c = (AlgebraElement.basis(d) for d in triple)
    assert (a * b) * c == a * (b * c)


def test_factor_examples():
    assert factor(Diagram.identity(3)) == GeneratorWord(3, (), 0)
    assert factor(generator("s", 1, 2)) == GeneratorWord(2, (Letter("s", 1),), 0)


@pytest.mark.parametrize("k", range(5))
def test_factor_round_trip(k):
    for d in basis(k):
        w = factor(d)
        assert AlgebraElement.word(k, w.letters) == AlgebraElement.basis(d, X ** w.loop_power)
        assert evaluate_word(w).diagram == d


@given(diagrams_of(max_k=4))
def test_json_round_trip(d):
    assert Diagram.from_json(d.dumps()) == d
    assert Diagram.from_json(json.loads(json.dumps(d.to_json()))) == d
