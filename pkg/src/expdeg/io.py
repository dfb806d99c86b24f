"""JSON and DOT encodings of graphs, configurations and results.

Parsers validate against the schemas below first, so malformed input is
reported with the JSON pointer of the offending value.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Any, Optional

import jsonschema

from .configuration import ConfigPoint, Configuration
from .expansion import ExpandedGraph, avector_from_set
from .graph import DualGraph, Edge, Vertex, single_edge_graph
from .quotient import DualComplex, StabilizerResult, Stratum
from .stability import OracleResult, StabilityVerdict, Status
from .weights import INFINITY, Corner, LimitOutcome, PointPosition, Smooth

GRAPH_SCHEMA = {
    "type": "object",
    "required": ["vertices"],
    "properties": {
        "vertices": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id"],
                "properties": {"id": {"type": "string"}, "label": {"type": ["string", "null"]}},
            },
        },
        "edges": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "source", "target"],
                "properties": {
                    "id": {"type": "string"},
                    "source": {"type": "string"},
                    "target": {"type": "string"},
                },
            },
        },
        "fibre_dim": {"type": ["integer", "null"], "minimum": 0},
    },
}

_INDEX_SET = {"type": "array", "items": {"type": "integer", "minimum": 1}, "uniqueItems": True}
_LOCATION = {
    "level": {"type": "integer", "minimum": 0},
    "corner": {
        "type": "array",
        "items": {"type": "integer", "minimum": 0},
        "minItems": 2,
        "maxItems": 2,
    },
    "edge": {"type": ["string", "null"]},
}

POSITION_SCHEMA = {
    "type": "object",
    "required": ["n", "I"],
    "properties": {"n": {"type": "integer", "minimum": 1}, "I": _INDEX_SET, **_LOCATION},
    "oneOf": [{"required": ["level"]}, {"required": ["corner"]}],
}

CONFIG_SCHEMA = {
    "type": "object",
    "required": ["n", "I", "points"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "I": _INDEX_SET,
        "points": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    **_LOCATION,
                    "mult": {"type": "integer", "minimum": 1},
                    "base": {"type": ["string", "null"]},
                    "fiber": {"type": ["string", "integer", "null"], "pattern": r"^-?\d+(/\d+)?$"},
                },
                "not": {"required": ["level", "corner"]},
            },
        },
        "graph": GRAPH_SCHEMA,
    },
}


class SchemaError(ValueError):
    """Input does not match a schema; ``pointer`` locates the bad value."""

    def __init__(self, message: str, pointer: str):
        super().__init__(message)
        self.pointer = pointer


_VALIDATORS: dict[int, jsonschema.protocols.Validator] = {}


def _validate(doc: Any, schema: dict) -> None:
    v = _VALIDATORS.get(id(schema))
    if v is None:
        cls = jsonschema.validators.validator_for(schema)
        cls.check_schema(schema)
        v = _VALIDATORS[id(schema)] = cls(schema)
    err = jsonschema.exceptions.best_match(v.iter_errors(doc))
    if err is not None:
        pointer = "/" + "/".join(str(p) for p in err.absolute_path)
        raise SchemaError(err.message, pointer)


# --- graphs ----------------------------------------------------------------------


def graph_to_json(g: DualGraph) -> dict:
    verts = []
    for v in g.vertices:
        item = {"id": v.id}
        if v.label is not None:
            item["label"] = v.label
        verts.append(item)
    return {
        "vertices": verts,
        "edges": [{"id": e.id, "source": e.source, "target": e.target} for e in g.edges],
        "fibre_dim": g.fibre_dim,
    }


def graph_from_json(doc: dict) -> DualGraph:
    _validate(doc, GRAPH_SCHEMA)
    return DualGraph(
        tuple(Vertex(v["id"], v.get("label")) for v in doc["vertices"]),
        tuple(Edge(e["id"], e["source"], e["target"]) for e in doc.get("edges", [])),
        doc.get("fibre_dim"),
    )


def _dot_id(x: str) -> str:
    return '"' + str(x).replace('"', r"\"") + '"'


def graph_to_dot(g: DualGraph) -> str:
    lines = [
        "digraph dual_graph {",
        '  node [shape=circle, style=filled, fillcolor=black, width=0.2, label=""];',
    ]
    for v in g.vertices:
        lines.append(f"  {_dot_id(v.id)} [xlabel={_dot_id(v.label or v.id)}];")
    for e in g.edges:
        lines.append(f"  {_dot_id(e.source)} -> {_dot_id(e.target)} [label={_dot_id(e.id)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


# --- expanded graphs ---------------------------------------------------------------


def _node_json(node) -> dict:
    return {"black": node[1]} if node[0] == "black" else {"white": [node[1], node[2]]}


def _node_name(node) -> str:
    return node[1] if node[0] == "black" else f"{node[1]}:{node[2]}"


def expanded_to_json(x: ExpandedGraph) -> dict:
    lv = x.levels
    return {
        "n": x.a.n,
        "I": sorted(x.a.index_set),
        "a": list(x.a.entries),
        "black_nodes": [{"vertex": b[1], "level": lv[b]} for b in x.black_nodes],
        "white_nodes": [{"edge": w[1], "label": w[2], "level": lv[w]} for w in x.white_nodes],
        "arrows": [
            {"edge": ar.edge, "label": ar.label, "source": _node_json(ar.source), "target": _node_json(ar.target)}
            for ar in x.arrows
        ],
    }


def expanded_to_dot(x: ExpandedGraph) -> str:
    lines = ["digraph expanded {", '  node [shape=circle, width=0.2, label=""];']
    for b in x.black_nodes:
        lines.append(f"  {_dot_id(_node_name(b))} [style=filled, fillcolor=black, xlabel={_dot_id(b[1])}];")
    for w in x.white_nodes:
        lines.append(f"  {_dot_id(_node_name(w))} [style=solid, fillcolor=white];")
    for ar in x.arrows:
        lines.append(
            f"  {_dot_id(_node_name(ar.source))} -> {_dot_id(_node_name(ar.target))} [label=\"{ar.label}\"];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


# --- positions and configurations --------------------------------------------------


def _kind_from(doc: dict):
    if "corner" in doc:
        lo, hi = doc["corner"]
        return Corner(lo, hi)
    return Smooth(doc["level"])


def _kind_json(kind) -> dict:
    if isinstance(kind, Corner):
        return {"corner": [kind.lower, kind.upper]}
    return {"level": kind.level}


def position_from_json(doc: dict) -> PointPosition:
    _validate(doc, POSITION_SCHEMA)
    a = avector_from_set(doc["n"], doc["I"])
    return PointPosition(a, _kind_from(doc), doc.get("edge"))


def position_to_json(p: PointPosition) -> dict:
    out = {"n": p.a.n, "I": sorted(p.a.index_set), **_kind_json(p.kind)}
    if p.edge is not None:
        out["edge"] = p.edge
    return out


def _fraction_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def config_from_json(doc: dict) -> Configuration:
    _validate(doc, CONFIG_SCHEMA)
    n = doc["n"]
    I = doc["I"]
    graph = graph_from_json(doc["graph"]) if "graph" in doc else single_edge_graph()
    a = avector_from_set(n, I) if I else None
    default_edge = graph.edges[0].id if len(graph.edges) == 1 else None
    pts = []
    for p in doc["points"]:
        pos = None
        if a is not None:
            pos = PointPosition(a, _kind_from(p), p.get("edge", default_edge))
        fiber = p.get("fiber")
        pts.append(
            ConfigPoint(pos, p.get("mult", 1), p.get("base"), None if fiber is None else Fraction(fiber))
        )
    return Configuration(n, frozenset(I), tuple(pts), graph)


def config_to_json(c: Configuration) -> dict:
    pts = []
    for p in c.points:
        item: dict = {}
        if p.position is not None:
            item.update(_kind_json(p.position.kind))
            if p.position.edge is not None:
                item["edge"] = p.position.edge
        item["mult"] = p.mult
        if p.base is not None:
            item["base"] = p.base
        if p.fiber is not None:
            item["fiber"] = _fraction_str(p.fiber)
        pts.append(item)
    return {"n": c.n, "I": sorted(c.index_set), "points": pts, "graph": graph_to_json(c.graph)}


# --- results -------------------------------------------------------------------------


def weight_json(w) -> Any:
    return "inf" if w == INFINITY else int(w)


def weight_from_json(w) -> Any:
    return INFINITY if w == "inf" else int(w)


def verdict_to_json(v: StabilityVerdict) -> dict:
    return {
        "status": v.status.value,
        "ell": v.ell_threshold,
        "witness": None if v.witness is None else list(v.witness),
        "omega": v.witness_weight,
    }


def verdict_from_json(doc: dict) -> StabilityVerdict:
    w = doc.get("witness")
    return StabilityVerdict(Status(doc["status"]), doc["ell"], None if w is None else tuple(w), doc.get("omega"))


def limit_to_json(out: Optional[LimitOutcome]) -> dict:
    if out is None or not out.exists:
        return {"exists": False}
    return {"exists": True, "J": sorted(out.J), "landing": position_to_json(out.landing)}


def oracle_to_json(o: OracleResult, box: int) -> dict:
    return {
        "stable": o.stable,
        "semistable": o.semistable,
        "min_weight": o.min_weight,
        "argmin": None if o.argmin is None else list(o.argmin),
        "checked": o.checked,
        "box": box,
    }


def stratum_to_json(s: Stratum) -> dict:
    return {
        "I": sorted(s.index_set),
        "a": list(s.a.entries),
        "factors": [{"component": f.component, "length": f.length} for f in s.factors],
        "torus_rank": s.torus_rank,
        "dimension": s.dimension,
    }


def dual_complex_to_json(dc: DualComplex) -> dict:
    return {
        "vertices": list(dc.vertices),
        "faces": [sorted(f) for f in dc.faces],
        "f_vector": dc.f_vector(),
        "euler_characteristic": dc.euler_characteristic(),
    }


def hasse_to_dot(h) -> str:
    def name(I):
        return "{" + ",".join(map(str, sorted(I))) + "}"

    lines = ["digraph closure_order {", "  rankdir=BT;", "  node [shape=box];"]
    for I in sorted(h.nodes, key=lambda x: (len(x), sorted(x))):
        lines.append(f"  {_dot_id(name(I))};")
    for I, J in sorted(h.edges, key=lambda e: (len(e[0]), sorted(e[0]), sorted(e[1]))):
        lines.append(f"  {_dot_id(name(I))} -> {_dot_id(name(J))};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def stabilizer_to_json(res: StabilizerResult) -> dict:
    return {
        "order": "inf" if res.order == math.inf else res.order,
        "generators": [[_fraction_str(x) for x in g] for g in res.generators],
    }
