"""Index bookkeeping and expanded dual graphs.

A fibre of ``X[n] -> C[n]`` is determined by the set ``I`` of base
coordinates ``t_i`` that vanish.  ``I = {a_1 < ... < a_r}`` is stored as
the padded tuple ``(1, a_1, ..., a_r, n+1)``; its level-wise differences
give the support vector that a stable cycle must have.

The dual graph of that fibre replaces each edge of the original graph by
a chain of ``r`` arrows labelled ``a_1, ..., a_r``.  Internal (white)
nodes are named ``(edge, label of the incoming arrow)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from .errors import (
    EmptyIndexSet,
    InvalidAVector,
    NotInBijectionRange,
    NotSubset,
    NonStrict,
    NotBipartite,
    OutOfRange,
    SizeMismatch,
)
from .graph import DualGraph, is_bipartitely_oriented, is_strict


@dataclass(frozen=True)
class AVector:
    """Padded index tuple ``1 = a_0 <= a_1 < ... < a_r <= a_{r+1} = n+1``."""

    n: int
    entries: tuple[int, ...]

    def __post_init__(self):
        e = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", e)
        n = self.n
        if n < 1:
            raise InvalidAVector("n must be positive")
        if len(e) < 3:
            raise InvalidAVector("need r >= 1 interior entries")
        if e[0] != 1 or e[-1] != n + 1:
            raise InvalidAVector(f"sentinels must be 1 and {n + 1}, got {e}")
        inner = e[1:-1]
        if inner[0] < 1 or inner[-1] > n + 1:
            raise InvalidAVector(f"interior entries outside [1, {n + 1}]: {e}")
        if any(x >= y for x, y in zip(inner, inner[1:])):
            raise InvalidAVector(f"interior entries must strictly increase: {e}")

    @property
    def r(self) -> int:
        return len(self.entries) - 2

    @property
    def index_set(self) -> frozenset[int]:
        return frozenset(self.entries[1:-1])

    @property
    def labels(self) -> tuple[int, ...]:
        """The sorted elements ``a_1, ..., a_r`` of the index set."""
        return self.entries[1:-1]

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def level_label(self, ordinal: int) -> int:
        """Component label of level ``ordinal``: 0 for the source side, else ``a_ordinal``."""
        if not 0 <= ordinal <= self.r:
            raise OutOfRange(f"level {ordinal} outside 0..{self.r}")
        return 0 if ordinal == 0 else self.entries[ordinal]

    def level_ordinal(self, label: int) -> int:
        if label == 0:
            return 0
        try:
            return self.labels.index(label) + 1
        except ValueError:
            raise OutOfRange(f"{label} is neither 0 nor an element of {sorted(self.index_set)}")

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"


SupportVector = tuple[int, ...]


def avector_from_set(n: int, index_set: Iterable[int]) -> AVector:
    I = sorted(set(index_set))
    if not I:
        raise EmptyIndexSet("index set must be nonempty")
    if I[0] < 1 or I[-1] > n + 1:
        raise OutOfRange(f"index set {I} not contained in [1, {n + 1}]")
    return AVector(n, (1, *I, n + 1))


def canonical_support(a: AVector) -> SupportVector:
    e = a.entries
    return tuple(e[i + 1] - e[i] for i in range(a.r + 1))


def partial_sums(v: Iterable[int]) -> tuple[int, ...]:
    """Padded (possibly non-strict) tuple ``b`` with ``b_{i+1} - b_i = v_i``."""
    out = [1]
    for x in v:
        out.append(out[-1] + x)
    return tuple(out)


def avector_from_support(n: int, v: Iterable[int]) -> AVector:
    v = tuple(v)
    if any(x < 0 for x in v) or sum(v) != n:
        raise InvalidAVector(f"{v} is not a nonnegative vector summing to {n}")
    if len(v) < 2:
        raise InvalidAVector("support vector needs at least two levels")
    if any(x == 0 for x in v[1:-1]):
        raise NotInBijectionRange(f"interior level of {v} is empty")
    return AVector(n, partial_sums(v))


def all_avectors(n: int, r: int | None = None) -> Iterator[AVector]:
    """Every strict index tuple over ``n`` (optionally with fixed ``r``)."""
    sizes = range(1, n + 2) if r is None else [r]
    for size in sizes:
        for I in itertools.combinations(range(1, n + 2), size):
            yield AVector(n, (1, *I, n + 1))


def all_btuples(n: int, r: int) -> Iterator[tuple[int, ...]]:
    """The set of padded weakly increasing tuples with ``r`` interior entries."""
    for inner in itertools.combinations_with_replacement(range(1, n + 2), r):
        yield (1, *inner, n + 1)


def all_supports(n: int, r: int) -> Iterator[SupportVector]:
    """All nonnegative vectors of length ``r + 1`` summing to ``n``."""
    for b in all_btuples(n, r):
        yield tuple(b[i + 1] - b[i] for i in range(r + 1))


def intervals(a: AVector) -> list[tuple[int, int]]:
    """Partition of ``{0, ..., n+1}`` into the runs ``[a_l, a_{l+1} - 1]``.

    The first run starts at 0 and the last one ends at ``n + 1``.
    """
    e = a.entries
    r, n = a.r, a.n
    out = []
    for ell in range(r + 1):
        lo = 0 if ell == 0 else e[ell]
        hi = n + 1 if ell == r else e[ell + 1] - 1
        out.append((lo, hi))
    return out


def standard_embed(a_small: AVector, I: Iterable[int], n: int) -> AVector:
    """Relabel ``a_small`` (over ``m``) through the order-preserving map ``[m+1] -> I``."""
    target = sorted(set(I))
    m = a_small.n
    if len(target) != m + 1:
        raise SizeMismatch(f"need |I| = {m + 1}, got {len(target)}")
    if target[0] < 1 or target[-1] > n + 1:
        raise OutOfRange(f"{target} not contained in [1, {n + 1}]")
    return avector_from_set(n, (target[i - 1] for i in a_small.labels))


# --- expanded graphs -------------------------------------------------------

Node = Union[tuple[str, str], tuple[str, str, int]]


def black(vertex_id: str) -> Node:
    return ("black", vertex_id)


def white(edge_id: str, label: int) -> Node:
    return ("white", edge_id, label)


@dataclass(frozen=True)
class Arrow:
    edge: str
    label: int
    source: Node
    target: Node


@dataclass(frozen=True)
class ExpandedGraph:
    base: DualGraph
    a: AVector
    black_nodes: tuple[Node, ...]
    white_nodes: tuple[Node, ...]
    arrows: tuple[Arrow, ...]
    level_items: tuple[tuple[Node, int], ...]

    @property
    def nodes(self) -> tuple[Node, ...]:
        return self.black_nodes + self.white_nodes

    def valence(self, node: Node) -> int:
        return sum((ar.source == node) + (ar.target == node) for ar in self.arrows)

    @property
    def levels(self) -> dict:
        return dict(self.level_items)

    def level(self, node: Node) -> int:
        return self.levels[node]


def _check_expandable(g: DualGraph) -> None:
    if not is_strict(g):
        raise NonStrict("cannot expand a graph with loops")
    if not is_bipartitely_oriented(g):
        raise NotBipartite("expansion needs a bipartite orientation")


def expand(g: DualGraph, a: AVector) -> ExpandedGraph:
    _check_expandable(g)
    labels = a.labels
    r = a.r
    targets = {e.target for e in g.edges}
    blacks = tuple(black(v) for v in g.vertex_ids)
    levels = {black(v): (r if v in targets else 0) for v in g.vertex_ids}
    whites = []
    arrows = []
    for e in g.edges:
        chain = [black(e.source)]
        for i, lab in enumerate(labels[:-1], start=1):
            node = white(e.id, lab)
            whites.append(node)
            levels[node] = i
            chain.append(node)
        chain.append(black(e.target))
        for lab, s, t in zip(labels, chain, chain[1:]):
            arrows.append(Arrow(e.id, lab, s, t))
    return ExpandedGraph(g, a, blacks, tuple(whites), tuple(arrows), tuple(levels.items()))


def contract(gJ: ExpandedGraph, I: Iterable[int]) -> tuple[ExpandedGraph, dict]:
    """Delete the arrows labelled outside ``I`` and merge their endpoints.

    Returns the expanded graph for ``I`` and the node map.  A white node
    ``(D, j)`` goes to ``(D, i)`` for the largest ``i <= j`` in ``I``, to the
    source when there is none, and to the target when ``i = max I``.
    """
    I = frozenset(I)
    J = gJ.a.index_set
    if not I or not I <= J:
        raise NotSubset(f"{sorted(I)} is not a nonempty subset of {sorted(J)}")
    aI = avector_from_set(gJ.a.n, I)
    gI = expand(gJ.base, aI)
    top = max(I)
    q = {}
    for node in gJ.black_nodes:
        q[node] = node
    for node in gJ.white_nodes:
        _, edge_id, j = node
        below = [i for i in I if i <= j]
        e = gJ.base.edge(edge_id)
        if not below:
            q[node] = black(e.source)
        elif max(below) == top:
            q[node] = black(e.target)
        else:
            q[node] = white(edge_id, max(below))
    return gI, q
