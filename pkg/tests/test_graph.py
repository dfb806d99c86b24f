import itertools
import random

import networkx as nx
import pytest
from conftest import small_multigraphs

from expdeg.errors import DirectedCycle, InvalidGraph, InvalidSplit, NonStrict, NotBipartite
from expdeg.graph import (
    BipartiteSplit,
    DualGraph,
    bipartify,
    bipartite_orientations,
    blowup_order,
    has_directed_cycle,
    is_bipartitely_oriented,
    is_strict,
    orient_bipartite,
    reverse_orientation,
    single_edge_graph,
    split_of,
)


def path3():
    return DualGraph.build("abc", [("e", "a", "b"), ("f", "b", "c")])


def triangle():
    return DualGraph.build("abc", [("e", "a", "b"), ("f", "b", "c"), ("g", "c", "a")])


def test_strictness():
    assert is_strict(single_edge_graph())
    assert not is_strict(DualGraph.build("a", [("e", "a", "a")]))
    assert is_strict(DualGraph.build("ab"))


def test_validation():
    with pytest.raises(InvalidGraph):
        DualGraph.build("aa")
    with pytest.raises(InvalidGraph):
        DualGraph.build("ab", [("e", "a", "z")])
    with pytest.raises(InvalidGraph):
        DualGraph.build("ab", [("e", "a", "b"), ("e", "b", "a")])
    with pytest.raises(InvalidGraph):
        DualGraph.build("ab", fibre_dim=-1)


def test_directed_cycles():
    assert not has_directed_cycle(path3())
    assert has_directed_cycle(DualGraph.build("ab", [("e", "a", "b"), ("f", "b", "a")]))
    assert has_directed_cycle(triangle())


def test_blowup_order():
    assert blowup_order(path3()) == [["a"], ["b"], ["c"]]
    assert blowup_order(DualGraph.build("v")) == [["v"]]
    g = DualGraph.build("abcd", [("1", "a", "c"), ("2", "b", "c"), ("3", "b", "d")])
    assert blowup_order(g) == [["a", "b"], ["c", "d"]]
    with pytest.raises(DirectedCycle):
        blowup_order(triangle())


def test_bipartite_orientations_examples():
    splits = bipartite_orientations(path3())
    assert len(splits) == 2
    assert splits[0].swapped() == splits[1]
    assert bipartite_orientations(triangle()) == []
    two = DualGraph.build("abcd", [("e", "a", "b"), ("f", "c", "d")])
    assert len(bipartite_orientations(two)) == 4
    with pytest.raises(NonStrict):
        bipartite_orientations(DualGraph.build("a", [("e", "a", "a")]))


def test_orient_bipartite():
    g = orient_bipartite(path3(), BipartiteSplit({"b"}, {"a", "c"}))
    assert {(e.source, e.target) for e in g.edges} == {("b", "a"), ("b", "c")}
    assert is_bipartitely_oriented(g)
    assert [e.id for e in g.edges] == ["e", "f"]
    with pytest.raises(InvalidSplit):
        orient_bipartite(path3(), BipartiteSplit({"a", "b"}, {"c"}))
    with pytest.raises(InvalidSplit):
        orient_bipartite(path3(), BipartiteSplit({"a"}, {"c"}))


def test_reverse_orientation():
    g = single_edge_graph()
    r = reverse_orientation(g)
    assert (r.edges[0].source, r.edges[0].target) == ("Y2", "Y1")
    assert reverse_orientation(r) == g
    assert split_of(r) == split_of(g).swapped()


def test_split_of():
    sp = split_of(single_edge_graph())
    assert sp.v_minus == {"Y1"} and sp.v_plus == {"Y2"}
    with pytest.raises(NotBipartite):
        split_of(path3())


def test_bipartify_examples():
    b = bipartify(triangle())
    assert len(b.vertices) == 6 and len(b.edges) == 6
    assert is_bipartitely_oriented(b)
    s = bipartify(single_edge_graph())
    assert [(e.source, e.target) for e in s.edges] == [("Y1", "E(D)"), ("Y2", "E(D)")]
    empty = DualGraph.build("ab")
    assert bipartify(empty) == empty
    with pytest.raises(NonStrict):
        bipartify(DualGraph.build("a", [("e", "a", "a")]))


def test_bipartify_avoids_id_clash():
    g = DualGraph.build(["a", "E(x)"], [("x", "a", "E(x)")])
    b = bipartify(g)
    assert len({v.id for v in b.vertices}) == 3


def _proper_colourings(g: DualGraph) -> int:
    vids = g.vertex_ids
    count = 0
    for bits in itertools.product((0, 1), repeat=len(vids)):
        col = dict(zip(vids, bits))
        if all(col[e.source] != col[e.target] for e in g.edges):
            count += 1
    return count


def test_orientations_match_brute_force_colouring():
    rng = random.Random(7)
    for g in small_multigraphs(5, 6):
        splits = bipartite_orientations(g)
        assert len(splits) == _proper_colourings(g)
        und = nx.MultiGraph()
        und.add_nodes_from(g.vertex_ids)
        und.add_edges_from((e.source, e.target) for e in g.edges)
        if nx.is_connected(und) and nx.is_bipartite(und):
            assert len(splits) == 2
        for sp in splits[:2]:
            h = orient_bipartite(g, sp)
            assert is_bipartitely_oriented(h) and not has_directed_cycle(h)
        flipped = g.with_edges(e.reversed() if rng.random() < 0.5 else e for e in g.edges)
        assert reverse_orientation(reverse_orientation(flipped)) == flipped
        b = bipartify(flipped)
        assert is_bipartitely_oriented(b) and not has_directed_cycle(b)
        assert len(b.vertices) == len(g.vertices) + len(g.edges)
