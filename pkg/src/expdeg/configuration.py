"""Degree-n cycles on a fibre of the expansion, recorded at the level of points."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

from .errors import InvalidConfiguration, NonSmoothSupport
from .expansion import AVector, avector_from_set
from .graph import DualGraph, reverse_orientation, single_edge_graph
from .weights import Corner, PointPosition, Smooth


@dataclass(frozen=True)
class ConfigPoint:
    """One support point of the cycle.

    ``position`` is ``None`` exactly when the cycle sits on a generic
    (unexpanded) fibre.  ``fiber`` is the coordinate along the ruling of an
    inserted component and only makes sense there.
    """

    position: Optional[PointPosition]
    mult: int = 1
    base: Optional[str] = None
    fiber: Optional[Fraction] = None


@dataclass(frozen=True)
class Configuration:
    n: int
    index_set: frozenset
    points: tuple[ConfigPoint, ...]
    graph: DualGraph = field(default_factory=single_edge_graph)

    def __post_init__(self):
        object.__setattr__(self, "index_set", frozenset(int(i) for i in self.index_set))
        object.__setattr__(self, "points", tuple(self.points))
        n = self.n
        if n < 1:
            raise InvalidConfiguration("degree must be positive")
        if any(i < 1 or i > n + 1 for i in self.index_set):
            raise InvalidConfiguration(f"index set {sorted(self.index_set)} not in [1, {n + 1}]")
        if sum(p.mult for p in self.points) != n:
            raise InvalidConfiguration("multiplicities must add up to n")
        a = self.a
        edge_ids = {e.id for e in self.graph.edges}
        for p in self.points:
            if p.mult < 1:
                raise InvalidConfiguration("multiplicities must be positive")
            if a is None:
                if p.position is not None:
                    raise InvalidConfiguration("generic-fibre points carry no position")
                if p.fiber is not None:
                    raise InvalidConfiguration("generic-fibre points carry no fiber coordinate")
                continue
            if p.position is None or p.position.a != a:
                raise InvalidConfiguration("every point must live over the same index set")
            if p.position.edge is not None and p.position.edge not in edge_ids:
                raise InvalidConfiguration(f"unknown edge {p.position.edge!r}")
            if p.fiber is not None:
                if p.fiber == 0:
                    raise InvalidConfiguration("fiber coordinates must be nonzero")
                if not p.position.is_smooth or p.position.ordinal in (0, a.r):
                    raise InvalidConfiguration("fiber coordinates only on inserted components")

    @property
    def a(self) -> Optional[AVector]:
        return avector_from_set(self.n, self.index_set) if self.index_set else None

    @property
    def has_smooth_support(self) -> bool:
        return all(p.position is None or p.position.is_smooth for p in self.points)

    @classmethod
    def from_support(
        cls,
        n: int,
        index_set: Iterable[int],
        v: Sequence[int],
        graph: Optional[DualGraph] = None,
        edge: Optional[str] = None,
    ) -> "Configuration":
        """One point per occupied level, carrying that level's multiplicity."""
        graph = graph or single_edge_graph()
        a = avector_from_set(n, index_set)
        if len(v) != a.r + 1:
            raise InvalidConfiguration(f"support needs {a.r + 1} entries")
        if edge is None and graph.edges:
            edge = graph.edges[0].id
        pts = [
            ConfigPoint(PointPosition(a, Smooth(a.level_label(i)), edge), m)
            for i, m in enumerate(v)
            if m
        ]
        return cls(n, a.index_set, tuple(pts), graph)


def numerical_support(c: Configuration) -> tuple[int, ...]:
    """Multiplicity per level, summed over all edges and black components."""
    if not c.has_smooth_support:
        raise NonSmoothSupport("configuration has a point on a corner")
    a = c.a
    if a is None:
        return (c.n,)
    v = [0] * (a.r + 1)
    for p in c.points:
        v[p.position.ordinal] += p.mult
    return tuple(v)


def _slots(a: AVector) -> list:
    labels = (0, *a.labels)
    smooth = [Smooth(x) for x in labels]
    corners = [Corner(x, y) for x, y in zip(labels, labels[1:])]
    return smooth + corners


def enumerate_configurations(
    n: int,
    index_set: Iterable[int],
    kind: str = "smooth",
    graph: Optional[DualGraph] = None,
) -> Iterator[Configuration]:
    """All multiplicity distributions of degree ``n`` over one edge.

    ``kind`` selects smooth-support cycles (``"smooth"``), cycles with at
    least one corner point (``"corner"``) or both (``"all"``).
    """
    graph = graph or single_edge_graph()
    a = avector_from_set(n, index_set)
    edge = graph.edges[0].id if graph.edges else None
    slots = _slots(a)
    n_smooth = a.r + 1
    for combo in itertools.combinations_with_replacement(range(len(slots)), n):
        has_corner = any(i >= n_smooth for i in combo)
        if (kind == "smooth" and has_corner) or (kind == "corner" and not has_corner):
            continue
        counts: dict[int, int] = {}
        for i in combo:
            counts[i] = counts.get(i, 0) + 1
        pts = tuple(
            ConfigPoint(PointPosition(a, slots[i], edge), m) for i, m in sorted(counts.items())
        )
        yield Configuration(n, a.index_set, pts, graph)


def reverse_configuration(c: Configuration) -> Configuration:
    """Reverse the orientation and relabel base coordinates by ``i -> n + 2 - i``."""
    n = c.n
    g = reverse_orientation(c.graph)
    I = frozenset(n + 2 - i for i in c.index_set)
    if not I:
        return Configuration(n, I, c.points, g)
    a, b = c.a, avector_from_set(n, I)
    r = a.r
    pts = []
    for p in c.points:
        pos = p.position
        if pos.is_smooth:
            kind = Smooth(b.level_label(r - pos.ordinal))
        else:
            lo = pos.ordinal
            kind = Corner(b.level_label(r - lo - 1), b.level_label(r - lo))
        fiber = None if p.fiber is None else 1 / Fraction(p.fiber)
        pts.append(ConfigPoint(PointPosition(b, kind, pos.edge), p.mult, p.base, fiber))
    return Configuration(n, I, tuple(pts), g)
