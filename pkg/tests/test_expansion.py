import itertools

import pytest

from expdeg.errors import (
    EmptyIndexSet,
    InvalidAVector,
    NonStrict,
    NotBipartite,
    NotInBijectionRange,
    NotSubset,
    OutOfRange,
    SizeMismatch,
)
from expdeg.expansion import (
    AVector,
    all_avectors,
    all_supports,
    avector_from_set,
    avector_from_support,
    black,
    canonical_support,
    contract,
    expand,
    intervals,
    standard_embed,
    white,
)
from expdeg.graph import DualGraph, single_edge_graph


def test_avector_from_set():
    assert avector_from_set(2, {1, 3}).entries == (1, 1, 3, 3)
    assert avector_from_set(2, {2}).entries == (1, 2, 3)
    assert avector_from_set(3, {1, 2, 3, 4}).entries == (1, 1, 2, 3, 4, 4)
    with pytest.raises(EmptyIndexSet):
        avector_from_set(2, set())
    with pytest.raises(OutOfRange):
        avector_from_set(2, {4})
    with pytest.raises(OutOfRange):
        avector_from_set(2, {0})


def test_avector_validation():
    with pytest.raises(InvalidAVector):
        AVector(2, (1, 2, 2, 3))
    with pytest.raises(InvalidAVector):
        AVector(2, (1, 3))
    with pytest.raises(InvalidAVector):
        AVector(2, (0, 2, 3))


def test_levels():
    a = avector_from_set(3, {2, 4})
    assert a.labels == (2, 4)
    assert [a.level_label(i) for i in range(3)] == [0, 2, 4]
    assert a.level_ordinal(4) == 2
    with pytest.raises(OutOfRange):
        a.level_ordinal(3)


def test_canonical_support():
    assert canonical_support(AVector(2, (1, 1, 3, 3))) == (0, 2, 0)
    assert canonical_support(AVector(2, (1, 1, 2, 3, 3))) == (0, 1, 1, 0)
    assert canonical_support(AVector(2, (1, 2, 3))) == (1, 1)


def test_avector_from_support():
    assert avector_from_support(2, (0, 2, 0)).entries == (1, 1, 3, 3)
    assert avector_from_support(2, (1, 1)).entries == (1, 2, 3)
    with pytest.raises(NotInBijectionRange):
        avector_from_support(2, (0, 0, 2))
    with pytest.raises(InvalidAVector):
        avector_from_support(2, (1, 2))


def test_bijection_exhaustive():
    for n in range(1, 7):
        for a in all_avectors(n):
            v = canonical_support(a)
            assert sum(v) == n
            assert all(x >= 1 for x in v[1:-1])
            assert avector_from_support(n, v) == a
        for r in range(1, n + 2):
            for v in all_supports(n, r):
                if all(x >= 1 for x in v[1:-1]):
                    assert canonical_support(avector_from_support(n, v)) == v


def test_intervals():
    assert intervals(AVector(2, (1, 1, 3, 3))) == [(0, 0), (1, 2), (3, 3)]
    assert intervals(AVector(2, (1, 2, 3))) == [(0, 1), (2, 3)]
    for n in range(1, 7):
        for a in all_avectors(n):
            iv = intervals(a)
            assert iv[0][0] == 0 and iv[-1][1] == n + 1
            assert all(x[1] + 1 == y[0] for x, y in zip(iv, iv[1:]))
            v = canonical_support(a)
            for (lo, hi), vl in zip(iv, v):
                assert len(set(range(lo, hi + 1)) & set(range(1, n + 1))) == vl


def test_standard_embed():
    small = avector_from_set(1, {1, 2})
    assert standard_embed(small, {2, 4}, 3).index_set == {2, 4}
    a = avector_from_set(3, {1, 3})
    assert standard_embed(a, range(1, 5), 3) == a
    with pytest.raises(SizeMismatch):
        standard_embed(small, {2}, 3)
    # composing two embeddings equals embedding along the composite map
    inner = avector_from_set(1, {2})
    mid = standard_embed(inner, {1, 3}, 2)
    outer = standard_embed(mid, {1, 2, 4}, 3)
    assert outer == standard_embed(inner, {1, 4}, 3)


def test_expand_single_edge_chain():
    g = single_edge_graph()
    x = expand(g, avector_from_set(2, {1, 2, 3}))
    assert x.white_nodes == (white("D", 1), white("D", 2))
    assert [(ar.label, ar.source, ar.target) for ar in x.arrows] == [
        (1, black("Y1"), white("D", 1)),
        (2, white("D", 1), white("D", 2)),
        (3, white("D", 2), black("Y2")),
    ]
    assert x.levels == {black("Y1"): 0, white("D", 1): 1, white("D", 2): 2, black("Y2"): 3}
    y = expand(g, avector_from_set(2, {2}))
    assert y.white_nodes == () and len(y.arrows) == 1


def test_expand_two_edges(two_edge_sink):
    x = expand(two_edge_sink, avector_from_set(3, {1, 4}))
    assert len(x.white_nodes) == 2
    for node in x.white_nodes:
        assert x.valence(node) == 2
    for v in two_edge_sink.vertex_ids:
        assert x.valence(black(v)) == two_edge_sink.valence(v)


def test_expand_rejects():
    with pytest.raises(NonStrict):
        expand(DualGraph.build("a", [("e", "a", "a")]), avector_from_set(1, {1}))
    path = DualGraph.build("abc", [("e", "a", "b"), ("f", "b", "c")])
    with pytest.raises(NotBipartite):
        expand(path, avector_from_set(1, {1}))


def test_contract_examples():
    g = single_edge_graph()
    xJ = expand(g, avector_from_set(2, {1, 2, 3}))
    xI, q = contract(xJ, {2})
    assert xI == expand(g, avector_from_set(2, {2}))
    assert q[white("D", 1)] == black("Y1")
    assert q[white("D", 2)] == black("Y2")
    same, ident = contract(xJ, {1, 2, 3})
    assert same == xJ and all(k == v for k, v in ident.items())
    x13 = expand(g, avector_from_set(2, {1, 3}))
    _, q = contract(x13, {1})
    assert q[white("D", 1)] == black("Y2")
    with pytest.raises(NotSubset):
        contract(x13, {2})
    with pytest.raises(NotSubset):
        contract(x13, set())


def _respects_arrows(xJ, xI, q, I):
    """Every surviving arrow maps onto an arrow with the same label and edge."""
    target = {(ar.edge, ar.label, ar.source, ar.target) for ar in xI.arrows}
    kept = [(ar.edge, ar.label, q[ar.source], q[ar.target]) for ar in xJ.arrows if ar.label in I]
    return sorted(kept) == sorted(target)


@pytest.mark.parametrize("graph", ["one", "two"])
def test_expand_contract_commute(graph, two_edge_sink):
    g = single_edge_graph() if graph == "one" else two_edge_sink
    for n in range(1, 5):
        for aJ in all_avectors(n):
            J = aJ.index_set
            xJ = expand(g, aJ)
            for k in range(1, len(J) + 1):
                for I in itertools.combinations(sorted(J), k):
                    xI, q = contract(xJ, I)
                    assert xI == expand(g, avector_from_set(n, I))
                    assert set(q.values()) == set(xI.nodes)
                    assert _respects_arrows(xJ, xI, q, set(I))
                    for K in itertools.combinations(sorted(J), len(J) - 1) if len(J) > k else ():
                        if set(I) <= set(K):
                            xK, qJK = contract(xJ, K)
                            _, qKI = contract(xK, I)
                            assert all(qKI[qJK[x]] == q[x] for x in xJ.nodes)
