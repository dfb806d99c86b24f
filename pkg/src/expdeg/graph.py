"""Oriented dual graphs of simple degenerations.

Vertices are components of the special fibre, edges are components of
its double locus.  The orientation matters for the expansion: the
construction needs a strict graph (no loops), projectivity needs an
acyclic orientation, and the linearization needs a bipartite one.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import DirectedCycle, InvalidGraph, InvalidSplit, NonStrict, NotBipartite


@dataclass(frozen=True)
class Vertex:
    id: str
    label: Optional[str] = None


@dataclass(frozen=True)
class Edge:
    id: str
    source: str
    target: str

    @property
    def is_loop(self) -> bool:
        return self.source == self.target

    def reversed(self) -> "Edge":
        return Edge(self.id, self.target, self.source)


@dataclass(frozen=True)
class DualGraph:
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...] = ()
    fibre_dim: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        vids = [v.id for v in self.vertices]
        if len(set(vids)) != len(vids):
            raise InvalidGraph("duplicate vertex id")
        eids = [e.id for e in self.edges]
        if len(set(eids)) != len(eids):
            raise InvalidGraph("duplicate edge id")
        known = set(vids)
        for e in self.edges:
            if e.source not in known or e.target not in known:
                raise InvalidGraph(f"edge {e.id!r} references an unknown vertex")
        if self.fibre_dim is not None and self.fibre_dim < 0:
            raise InvalidGraph("fibre_dim must be nonnegative")

    @classmethod
    def build(
        cls,
        vertices: Iterable[str],
        edges: Iterable[tuple[str, str, str]] = (),
        fibre_dim: Optional[int] = None,
    ) -> "DualGraph":
        """Shorthand constructor: ``edges`` are ``(id, source, target)`` triples."""
        return cls(
            tuple(Vertex(v) for v in vertices),
            tuple(Edge(*e) for e in edges),
            fibre_dim,
        )

    @property
    def vertex_ids(self) -> tuple[str, ...]:
        return tuple(v.id for v in self.vertices)

    def edge(self, edge_id: str) -> Edge:
        for e in self.edges:
            if e.id == edge_id:
                return e
        raise KeyError(edge_id)

    def valence(self, vertex_id: str) -> int:
        return sum((e.source == vertex_id) + (e.target == vertex_id) for e in self.edges)

    def with_edges(self, edges: Iterable[Edge]) -> "DualGraph":
        return DualGraph(self.vertices, tuple(edges), self.fibre_dim)


def single_edge_graph(fibre_dim: Optional[int] = None) -> DualGraph:
    """The two-component degeneration ``Y1 -> Y2`` with double locus ``D``."""
    return DualGraph.build(["Y1", "Y2"], [("D", "Y1", "Y2")], fibre_dim)


@dataclass(frozen=True)
class BipartiteSplit:
    v_minus: frozenset = field(default_factory=frozenset)
    v_plus: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "v_minus", frozenset(self.v_minus))
        object.__setattr__(self, "v_plus", frozenset(self.v_plus))

    def swapped(self) -> "BipartiteSplit":
        return BipartiteSplit(self.v_plus, self.v_minus)


def _require_strict(g: DualGraph) -> None:
    if not is_strict(g):
        raise NonStrict("dual graph contains a loop")


def is_strict(g: DualGraph) -> bool:
    return not any(e.is_loop for e in g.edges)


def _out_neighbours(g: DualGraph) -> dict[str, list[str]]:
    out: dict[str, list[str]] = {v: [] for v in g.vertex_ids}
    for e in g.edges:
        out[e.source].append(e.target)
    return out


def has_directed_cycle(g: DualGraph) -> bool:
    """Iterative three-colour DFS; a grey-to-grey edge closes a cycle."""
    out = _out_neighbours(g)
    WHITE, GREY, BLACK = 0, 1, 2
    colour = {v: WHITE for v in out}
    for root in out:
        if colour[root] != WHITE:
            continue
        colour[root] = GREY
        stack = [(root, iter(out[root]))]
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                colour[node] = BLACK
                stack.pop()
            elif colour[nxt] == GREY:
                return True
            elif colour[nxt] == WHITE:
                colour[nxt] = GREY
                stack.append((nxt, iter(out[nxt])))
    return False


def blowup_order(g: DualGraph) -> list[list[str]]:
    """Layer the vertices so that every edge points to a strictly later layer.

    Layer 0 holds the sources; each later layer holds the vertices whose
    predecessors have all been placed.  Within a layer, input order is kept.
    """
    indeg = {v: 0 for v in g.vertex_ids}
    for e in g.edges:
        indeg[e.target] += 1
    out = _out_neighbours(g)
    layer = [v for v in g.vertex_ids if indeg[v] == 0]
    levels = []
    placed = 0
    while layer:
        levels.append(layer)
        placed += len(layer)
        nxt = set()
        for v in layer:
            for w in out[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    nxt.add(w)
        layer = [v for v in g.vertex_ids if v in nxt]
    if placed != len(g.vertices):
        raise DirectedCycle("orientation has a directed cycle")
    return levels


def _components(g: DualGraph) -> list[list[str]]:
    adj: dict[str, list[str]] = {v: [] for v in g.vertex_ids}
    for e in g.edges:
        adj[e.source].append(e.target)
        adj[e.target].append(e.source)
    seen: set[str] = set()
    comps = []
    for v in g.vertex_ids:
        if v in seen:
            continue
        seen.add(v)
        comp, queue = [v], deque([v])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        comps.append(comp)
    return comps


def _two_colour(g: DualGraph, comp: list[str]) -> Optional[dict[str, int]]:
    adj: dict[str, list[str]] = {v: [] for v in comp}
    members = set(comp)
    for e in g.edges:
        if e.source in members:
            adj[e.source].append(e.target)
            adj[e.target].append(e.source)
    colour = {comp[0]: 0}
    queue = deque([comp[0]])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in colour:
                colour[y] = 1 - colour[x]
                queue.append(y)
            elif colour[y] == colour[x]:
                return None
    return colour


def bipartite_orientations(g: DualGraph) -> list[BipartiteSplit]:
    """All splits ``V = V- u V+`` such that no edge stays inside one side.

    The existing orientation is ignored.  A connected bipartite graph has
    exactly two splits; in general there are ``2**components`` of them, and
    none at all if some cycle is odd.
    """
    _require_strict(g)
    colourings = []
    for comp in _components(g):
        col = _two_colour(g, comp)
        if col is None:
            return []
        colourings.append(col)
    splits = [(frozenset(), frozenset())]
    for col in colourings:
        side0 = frozenset(v for v, c in col.items() if c == 0)
        side1 = frozenset(v for v, c in col.items() if c == 1)
        splits = [
            (m | a, p | b)
            for (m, p) in splits
            for (a, b) in ((side0, side1), (side1, side0))
        ]
    return [BipartiteSplit(m, p) for m, p in splits]


def is_bipartitely_oriented(g: DualGraph) -> bool:
    """True if every vertex is a pure source or a pure sink."""
    if not is_strict(g):
        return False
    sources = {e.source for e in g.edges}
    targets = {e.target for e in g.edges}
    return not (sources & targets)


def split_of(g: DualGraph) -> BipartiteSplit:
    """Read the split off a bipartitely oriented graph; isolated vertices go to V-."""
    if not is_bipartitely_oriented(g):
        raise NotBipartite("orientation is not bipartite")
    targets = {e.target for e in g.edges}
    return BipartiteSplit(
        frozenset(v for v in g.vertex_ids if v not in targets),
        frozenset(targets),
    )


def orient_bipartite(g: DualGraph, split: BipartiteSplit) -> DualGraph:
    _require_strict(g)
    vids = set(g.vertex_ids)
    if split.v_minus & split.v_plus or (split.v_minus | split.v_plus) != vids:
        raise InvalidSplit("split must partition the vertex set")
    edges = []
    for e in g.edges:
        s_minus = e.source in split.v_minus
        t_minus = e.target in split.v_minus
        if s_minus == t_minus:
            raise InvalidSplit(f"edge {e.id!r} joins two vertices on the same side")
        edges.append(e if s_minus else e.reversed())
    return g.with_edges(edges)


def reverse_orientation(g: DualGraph) -> DualGraph:
    return g.with_edges(e.reversed() for e in g.edges)


def _fresh(base: str, taken: set[str]) -> str:
    name, k = base, 1
    while name in taken:
        name = f"{base}~{k}"
        k += 1
    taken.add(name)
    return name


def bipartify(g: DualGraph) -> DualGraph:
    """Quadratic base change: insert an exceptional vertex on every edge.

    Each edge ``D: Y -> Y'`` becomes a new vertex ``E(D)`` with two edges
    ``Y -> E(D)`` and ``Y' -> E(D)``, so old vertices are sources and new
    ones are sinks.
    """
    _require_strict(g)
    vtaken = set(g.vertex_ids)
    etaken: set[str] = set()
    vertices = list(g.vertices)
    edges = []
    for e in g.edges:
        new = _fresh(f"E({e.id})", vtaken)
        vertices.append(Vertex(new))
        edges.append(Edge(_fresh(f"{e.id}.s", etaken), e.source, new))
        edges.append(Edge(_fresh(f"{e.id}.t", etaken), e.target, new))
    return DualGraph(tuple(vertices), tuple(edges), g.fibre_dim)
