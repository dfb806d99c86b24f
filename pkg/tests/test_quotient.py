import math
import random
from fractions import Fraction
from math import comb

import networkx as nx
import pytest

from expdeg.configuration import ConfigPoint, Configuration
from expdeg.errors import (
    MissingFiberCoordinate,
    NonReduced,
    NonSmoothSupport,
    UnsupportedDegree,
    UnsupportedGraph,
)
from expdeg.expansion import avector_from_set
from expdeg.graph import DualGraph, single_edge_graph
from expdeg.quotient import (
    closure_order,
    dual_complex,
    in_closure,
    singularity_report,
    stabilizer,
    stratum_factors,
    strata,
)
from expdeg.stability import git_stable, lw_stable
from expdeg.sweeps import random_reduced_configuration
from expdeg.weights import Corner, PointPosition, Smooth


def reduced(n, I, placements):
    """``placements``: (level label, base, fiber) triples, one per point."""
    a = avector_from_set(n, I)
    pts = tuple(
        ConfigPoint(PointPosition(a, Smooth(lvl), "D"), 1, base, None if f is None else Fraction(f))
        for lvl, base, f in placements
    )
    return Configuration(n, I, pts)


def test_strata_dimensions_n2(one_edge):
    dims = {frozenset(s.index_set): s.dimension for s in strata(one_edge, 2)}
    assert len(dims) == 7
    for I, d in dims.items():
        assert d == {1: 4, 2: 3, 3: 2}[len(I)]


def test_strata_counts_and_extremes():
    for n in range(1, 6):
        for d in (1, 2):
            st = strata(single_edge_graph(d), n)
            assert len(st) == 2 ** (n + 1) - 1
            assert max(s.dimension for s in st) == d * n
            assert min(s.dimension for s in st) == (d - 1) * n
            for s in st:
                assert s.torus_rank == s.a.r - 1
                assert sum(f.length for f in s.factors) == n


def test_stratum_factors():
    f = stratum_factors(single_edge_graph(), avector_from_set(3, {2, 3}))
    assert [(x.component, x.length) for x in f] == [("Y1", 1), ("Delta^2", 1), ("Y2", 1)]
    assert str(f[1]) == "Hilb^1(Delta^2°)"
    with pytest.raises(UnsupportedGraph):
        stratum_factors(DualGraph.build("abc", [("1", "a", "c"), ("2", "b", "c")]), avector_from_set(1, {1}))


def test_strata_multi_edge_and_high_dim():
    g = DualGraph.build("abc", [("1", "a", "c"), ("2", "b", "c")], fibre_dim=2)
    st = strata(g, 2)
    assert len(st) == 7 and all(s.dimension is None and s.factors == () for s in st)
    with pytest.raises(ValueError):
        strata(single_edge_graph(3), 2)


def test_closure_order():
    h = closure_order(strata(single_edge_graph(2), 3))
    assert h.number_of_nodes() == 15
    assert h.has_edge(frozenset({1}), frozenset({1, 2}))
    assert not h.has_edge(frozenset({1}), frozenset({1, 2, 3}))
    assert in_closure({1}, {1, 2, 3}) and not in_closure({1, 2}, {1})
    assert in_closure({2}, {2})


def test_dual_complex_examples():
    assert dual_complex(1).f_vector() == [2, 1]
    assert dual_complex(2).f_vector() == [3, 3, 1]
    assert dual_complex(6).f_vector() == [comb(7, k + 1) for k in range(7)]
    for n in range(1, 6):
        dc = dual_complex(n)
        assert dc.dimension == n and dc.euler_characteristic() == 1 and dc.is_closed()


def test_face_poset_matches_closure_order():
    for n in range(1, 5):
        fp = dual_complex(n).face_poset()
        h = closure_order(strata(single_edge_graph(), n))
        assert nx.is_isomorphic(nx.transitive_reduction(fp), h)


def test_stabilizer_examples():
    c = reduced(2, {1, 3}, [(1, "x", 3), (1, "x", -3)])
    res = stabilizer(c)
    assert res.order == 2 and res.generators == ((Fraction(-1),),)
    assert stabilizer(reduced(2, {1, 3}, [(1, "x", 1), (1, "x", 2)])).order == 1
    empty = reduced(2, {1, 3}, [(0, None, None), (3, None, None)])
    assert stabilizer(empty).order == math.inf and not stabilizer(empty).finite
    assert not lw_stable(empty)


def test_stabilizer_groups_by_base():
    # {u, -u} split across two base points is not preserved by -1
    c = reduced(2, {1, 3}, [(1, "x", 3), (1, "y", -3)])
    assert stabilizer(c).order == 1


def test_stabilizer_several_levels():
    c = reduced(4, {1, 2, 5}, [(1, "x", 1), (1, "x", -1), (2, "x", 4), (2, "x", -4)])
    assert stabilizer(c).order == 4
    c = reduced(4, {1, 2, 5}, [(1, "x", 1), (1, "x", -1), (2, "x", 4), (2, "x", 3)])
    assert stabilizer(c).order == 2
    assert stabilizer(reduced(1, {1}, [(0, None, None)])).order == 1


def test_stabilizer_errors():
    a = avector_from_set(2, {1, 3})
    with pytest.raises(NonReduced):
        stabilizer(Configuration(2, {1, 3}, (ConfigPoint(PointPosition(a, Smooth(1), "D"), 2),)))
    with pytest.raises(MissingFiberCoordinate):
        stabilizer(reduced(2, {1, 3}, [(1, "x", None), (1, "x", 1)]))
    corner = Configuration(
        2, {1, 3}, tuple(ConfigPoint(PointPosition(a, k, "D")) for k in (Corner(0, 1), Smooth(1)))
    )
    with pytest.raises(NonSmoothSupport):
        stabilizer(corner)


def test_stabilizer_finite_iff_lw_randomized():
    rng = random.Random(2024)
    for _ in range(1000):
        c = random_reduced_configuration(rng.randint(1, 4), rng)
        res = stabilizer(c)
        assert res.finite == lw_stable(c)
        if git_stable(c).stable:
            assert res.finite and res.order in {2**k for k in range(c.n + 1)}


def test_singularity_report():
    rep = singularity_report(2, 2)
    assert rep.ones == 4 and rep.type == "1/2(1,1,1,1)"
    assert "P^3" in rep.model
    assert singularity_report(2, 1).ones == 3
    assert singularity_report(2, 5).ones == 7
    with pytest.raises(UnsupportedDegree):
        singularity_report(3, 2)


def test_level_character_constant_on_intervals():
    """With sigma_k = 1 off I, every tau_k on the run [a_j, a_{j+1}) equals tau_{a_j}."""
    from expdeg.expansion import all_avectors, intervals
    from expdeg.weights import sigma_to_tau

    rng = random.Random(5)
    for n in range(1, 6):
        for a in all_avectors(n):
            for _ in range(5):
                w = [0] * (n + 1)
                for i in a.labels:
                    w[i - 1] = rng.randint(-3, 3)
                w[a.labels[-1] - 1] -= sum(w)
                tau = (0, *sigma_to_tau(w), 0)
                for j, (lo, hi) in enumerate(intervals(a)):
                    run = [tau[k] for k in range(max(lo, 1), min(hi, n) + 1)]
                    assert len(set(run)) <= 1
                    if 0 < j < a.r:
                        assert run[0] == tau[a[j]]
