"""Central fibre of the GIT quotient: strata, dual complex, stabilizers."""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import networkx as nx

from .configuration import Configuration
from .errors import (
    InvalidConfiguration,
    MissingFiberCoordinate,
    NonReduced,
    NonSmoothSupport,
    UnsupportedDegree,
    UnsupportedGraph,
)
from .expansion import AVector, all_avectors, canonical_support
from .graph import DualGraph, split_of


@dataclass(frozen=True)
class Factor:
    """``Hilb^length`` of the smooth locus of one (union of) component(s)."""

    component: str
    length: int

    def __str__(self) -> str:
        return f"Hilb^{self.length}({self.component}°)"


@dataclass(frozen=True)
class Stratum:
    a: AVector
    factors: tuple[Factor, ...]
    torus_rank: int
    dimension: Optional[int]

    @property
    def index_set(self) -> frozenset:
        return self.a.index_set


def stratum_factors(g: DualGraph, a: AVector) -> tuple[Factor, ...]:
    if len(g.edges) != 1:
        raise UnsupportedGraph("stratum factors are only described for one double locus")
    split = split_of(g)
    (src,) = split.v_minus
    (tgt,) = split.v_plus
    v = canonical_support(a)
    names = [src, *(f"Delta^{x}" for x in a.labels[:-1]), tgt]
    return tuple(Factor(name, length) for name, length in zip(names, v))


def strata(g: DualGraph, n: int) -> list[Stratum]:
    """One stratum per nonempty ``I``; dimension ``d n - (r - 1)`` for one edge."""
    d = g.fibre_dim
    if d is not None and d > 2:
        raise ValueError("strata are only described for fibre dimension at most 2")
    single = len(g.edges) == 1
    out = []
    for a in all_avectors(n):
        factors = stratum_factors(g, a) if single else ()
        dim = d * n - (a.r - 1) if (single and d is not None) else None
        out.append(Stratum(a, factors, a.r - 1, dim))
    return out


def closure_order(strata_list) -> nx.DiGraph:
    """Hasse diagram: an edge ``I -> J`` when ``J`` covers ``I``.

    The stratum of ``J`` lies in the closure of the stratum of ``I``
    exactly when ``I`` is a subset of ``J``.
    """
    sets = [s.index_set for s in strata_list]
    h = nx.DiGraph()
    h.add_nodes_from(sets)
    for I, J in itertools.permutations(sets, 2):
        if I < J and len(J) == len(I) + 1:
            h.add_edge(I, J)
    return h


def in_closure(I, J) -> bool:
    """Is the stratum of ``J`` contained in the closure of the stratum of ``I``?"""
    return frozenset(I) <= frozenset(J)


@dataclass(frozen=True)
class DualComplex:
    vertices: tuple[int, ...]
    faces: tuple[frozenset, ...]

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.faces) - 1

    def f_vector(self) -> list[int]:
        counts = [0] * (self.dimension + 1)
        for f in self.faces:
            counts[len(f) - 1] += 1
        return counts

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * f for k, f in enumerate(self.f_vector()))

    def is_closed(self) -> bool:
        faces = set(self.faces)
        return all(
            frozenset(sub) in faces
            for f in self.faces
            for k in range(1, len(f))
            for sub in itertools.combinations(sorted(f), k)
        )

    def face_poset(self) -> nx.DiGraph:
        h = nx.DiGraph()
        h.add_nodes_from(self.faces)
        for f in self.faces:
            for x in f:
                if len(f) > 1:
                    h.add_edge(f - {x}, f)
        return h


def dual_complex(n: int) -> DualComplex:
    """The standard ``n``-simplex on the vertices ``1, ..., n+1``."""
    verts = tuple(range(1, n + 2))
    faces = tuple(
        frozenset(c) for k in range(1, n + 2) for c in itertools.combinations(verts, k)
    )
    return DualComplex(verts, faces)


# --- stabilizers ---------------------------------------------------------------


@dataclass(frozen=True)
class StabilizerResult:
    order: Union[int, float]
    generators: tuple[tuple[Fraction, ...], ...]

    @property
    def finite(self) -> bool:
        return self.order != math.inf


def stabilizer(c: Configuration) -> StabilizerResult:
    """Subgroup of the base-fixing torus preserving a reduced cycle.

    On the subtorus with ``sigma_i = 1`` for ``i`` outside ``I``, level ``j``
    of every inserted chain is scaled by ``chi_j = sigma_{a_1} ... sigma_{a_j}``,
    and these ``r - 1`` characters are independent.  Over the rationals a
    finite multiset of nonzero numbers is preserved only by ``+1`` and
    possibly ``-1``.
    """
    if any(p.mult != 1 for p in c.points):
        raise NonReduced("stabilizers are computed for reduced cycles")
    if not c.has_smooth_support:
        raise NonSmoothSupport("stabilizers are computed for smooth-support cycles")
    a = c.a
    if a is None:
        return StabilizerResult(1, ())
    groups: dict[int, dict] = defaultdict(lambda: defaultdict(list))
    for p in c.points:
        j = p.position.ordinal
        if 0 < j < a.r:
            if p.fiber is None:
                raise MissingFiberCoordinate("inserted-level points need a fiber coordinate")
            groups[j][(p.position.edge, p.base)].append(Fraction(p.fiber))
    interior = range(1, a.r)
    if any(j not in groups for j in interior):
        return StabilizerResult(math.inf, ())
    gens = []
    for j in interior:
        if all(sorted(-x for x in xs) == sorted(xs) for xs in groups[j].values()):
            gens.append(tuple(Fraction(-1 if i == j else 1) for i in interior))
    return StabilizerResult(2 ** len(gens), tuple(gens))


@dataclass(frozen=True)
class SingularityReport:
    type: str
    ones: int
    model: str
    locus: str


def singularity_report(n: int, d: int) -> SingularityReport:
    """Transversal singularity of the degree-2 quotient along the double locus."""
    if n != 2:
        raise UnsupportedDegree("only the degree-2 quotient is analysed")
    if d < 1:
        raise InvalidConfiguration("fibre dimension must be positive")
    ones = d + 2
    return SingularityReport(
        type="1/2(" + ",".join(["1"] * ones) + ")",
        ones=ones,
        model=f"cone over the Veronese embedding of P^{d + 1} by |O(2)|",
        locus="I={1,3}: reduced pairs on the inserted component with U+V=0 (stabilizer of order 2)",
    )
