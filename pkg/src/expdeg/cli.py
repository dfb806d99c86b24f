"""Command-line entry point.

Every subcommand prints one JSON document on stdout.  Exit status 0 means
success (or stable, or true), 1 means unstable (or false) and 2 means the
input was rejected.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Optional, Sequence

from . import io
from .configuration import Configuration
from .errors import ExpDegError, IsStable
from .expansion import avector_from_set, expand
from .graph import (
    bipartify,
    bipartite_orientations,
    blowup_order,
    has_directed_cycle,
    is_bipartitely_oriented,
    is_strict,
    reverse_orientation,
    single_edge_graph,
    split_of,
)
from .quotient import closure_order, dual_complex, stabilizer, strata
from .stability import default_box, default_ell, destabilizing_witness, git_stable, oracle_scan, weight_envelope
from .sweeps import closed_form_sweep, forcing_sweep, lw_sweep, stabilizer_sweep, theorem_sweep
from .weights import limit, limit_exists, omega_config, point_weight

EXIT_OK, EXIT_FALSE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    def __init__(self, message: str, pointer: Optional[str] = None):
        super().__init__(message)
        self.pointer = pointer


# --- input helpers ---------------------------------------------------------------------


def _load(src: Optional[str]) -> Any:
    if src is None:
        raise InputError("missing input document")
    text = sys.stdin.read() if src == "-" else src
    if src != "-" and not src.lstrip().startswith(("{", "[")):
        try:
            text = Path(src).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {src}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc.msg} at line {exc.lineno} column {exc.colno}") from None


def _int_list(text: Optional[str], what: str) -> list[int]:
    if text is None:
        raise InputError(f"--{what} is required")
    text = text.strip()
    try:
        vals = json.loads(text) if text.startswith("[") else [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"--{what} must be a comma-separated list of integers") from None
    if not all(isinstance(x, int) and not isinstance(x, bool) for x in vals):
        raise InputError(f"--{what} must contain integers only")
    return vals


def _need_n(args) -> int:
    if args.n is None:
        raise InputError("--n is required")
    if args.n < 1:
        raise InputError("--n must be positive")
    return args.n


def _write_dot(args, text: str) -> None:
    if args.dot:
        Path(args.dot).write_text(text)


def _graph_arg(args):
    return io.graph_from_json(_load(args.input))


def _config_arg(args) -> Configuration:
    return io.config_from_json(_load(args.input))


# --- subcommands -------------------------------------------------------------------------


def cmd_graph(args):
    g = _graph_arg(args)
    if args.action == "check":
        bip = is_bipartitely_oriented(g)
        cyclic = has_directed_cycle(g)
        out = {
            "strict": is_strict(g),
            "directed_cycle": cyclic,
            "blowup_order": None if cyclic else blowup_order(g),
            "bipartite_orientations": len(bipartite_orientations(g)) if is_strict(g) else 0,
            "bipartitely_oriented": bip,
        }
        if bip:
            sp = split_of(g)
            out["split"] = {"v_minus": sorted(sp.v_minus), "v_plus": sorted(sp.v_plus)}
        _write_dot(args, io.graph_to_dot(g))
        return out, EXIT_OK if bip else EXIT_FALSE
    h = bipartify(g) if args.action == "bipartify" else reverse_orientation(g)
    _write_dot(args, io.graph_to_dot(h))
    return io.graph_to_json(h), EXIT_OK


def cmd_expand(args):
    g = _graph_arg(args) if args.input else single_edge_graph()
    a = avector_from_set(_need_n(args), _int_list(args.I, "I"))
    x = expand(g, a)
    _write_dot(args, io.expanded_to_dot(x))
    return io.expanded_to_json(x), EXIT_OK


def cmd_limit(args):
    p = io.position_from_json(_load(args.input))
    s = _int_list(args.s, "s")
    if len(s) != p.a.n:
        raise InputError(f"--s needs {p.a.n} entries")
    if not limit_exists(p.a.index_set, s):
        return io.limit_to_json(None), EXIT_FALSE
    return io.limit_to_json(limit(p, s)), EXIT_OK


def cmd_weight(args):
    doc = _load(args.input)
    s = _int_list(args.s, "s")
    if isinstance(doc, dict) and "points" in doc:
        c = io.config_from_json(doc)
        if len(s) != c.n:
            raise InputError(f"--s needs {c.n} entries")
        w = omega_config(c, s) if c.a is not None else 0
    else:
        p = io.position_from_json(doc)
        if len(s) != p.a.n:
            raise InputError(f"--s needs {p.a.n} entries")
        w = point_weight(p, s)
    return {"s": s, "weight": io.weight_json(w)}, EXIT_OK


def _ell(args, n: int) -> int:
    return default_ell(n) if args.ell is None else args.ell


def cmd_stability(args):
    c = _config_arg(args)
    v = git_stable(c, _ell(args, c.n))
    return io.verdict_to_json(v), EXIT_OK if v.stable else EXIT_FALSE


def cmd_witness(args):
    c = _config_arg(args)
    ell = _ell(args, c.n)
    try:
        s = destabilizing_witness(c, ell)
    except IsStable:
        return {"status": "stable", "witness": None}, EXIT_OK
    env = weight_envelope(c, s, ell)
    return {
        "status": "unstable",
        "witness": list(s),
        "omega": omega_config(c, s),
        "limit_exists": limit_exists(c.index_set, s),
        "ell": ell,
        "envelope": [env.lower, env.upper],
    }, EXIT_FALSE


def cmd_oracle(args):
    c = _config_arg(args)
    box = default_box(c.n) if args.box is None else args.box
    if box < 1:
        raise InputError("--box must be at least 1")
    o = oracle_scan(c, box)
    return io.oracle_to_json(o, box), EXIT_OK if o.stable else EXIT_FALSE


def cmd_verify(args):
    n = _need_n(args)
    reports = [
        forcing_sweep(n),
        closed_form_sweep(n),
        theorem_sweep(n, args.box),
        lw_sweep(n),
        stabilizer_sweep(args.samples, args.seed, n),
    ]
    out = {"n": n, **{r.name: r.as_dict() for r in reports}}
    ok = all(r.ok for r in reports)
    out["ok"] = ok
    return out, EXIT_OK if ok else EXIT_FALSE


def cmd_strata(args):
    n = _need_n(args)
    g = _graph_arg(args) if args.input else single_edge_graph(args.fibre_dim)
    st = strata(g, n)
    h = closure_order(st)
    _write_dot(args, io.hasse_to_dot(h))
    covers = sorted(([sorted(I), sorted(J)] for I, J in h.edges), key=lambda e: (len(e[0]), e))
    return {"n": n, "strata": [io.stratum_to_json(s) for s in st], "closure_covers": covers}, EXIT_OK


def cmd_dual_complex(args):
    n = _need_n(args)
    dc = dual_complex(n)
    _write_dot(args, io.hasse_to_dot(closure_order(strata(single_edge_graph(), n))))
    return {"n": n, **io.dual_complex_to_json(dc)}, EXIT_OK


def cmd_stabilizer(args):
    res = stabilizer(_config_arg(args))
    return io.stabilizer_to_json(res), EXIT_OK if res.finite else EXIT_FALSE


# --- parser ----------------------------------------------------------------------------


def _global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = {"default": argparse.SUPPRESS} if suppress else {"default": None}
    p.add_argument("--n", type=int, help="degree of the configurations", **d)
    p.add_argument("--box", type=int, metavar="S", help="oracle box radius (default n+1)", **d)
    p.add_argument("--ell", type=int, metavar="L", help="power of the linearization (default 2n^2+1)", **d)
    p.add_argument("--dot", metavar="PATH", help="also write a DOT rendering to PATH", **d)
    p.add_argument("--seed", type=int, help="seed for randomized sweeps", **({"default": argparse.SUPPRESS} if suppress else {"default": 0}))
    p.add_argument("--human", action="store_true", help="plain-text summary instead of JSON", **d)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="expdeg", description="Stability on expanded degenerations.")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, input_help=None):
        p = sub.add_parser(name, help=help)
        _global_flags(p, suppress=True)
        if input_help:
            p.add_argument("input", nargs="?", help=input_help + " (path, inline JSON or -)")
        p.set_defaults(func=func)
        return p

    p = add("graph", cmd_graph, "check, bipartify or reverse a dual graph", None)
    p.add_argument("action", choices=["check", "bipartify", "reverse"])
    p.add_argument("input", help="graph JSON (path, inline JSON or -)")

    p = add("expand", cmd_expand, "expanded graph over an index set", "graph JSON, default one edge")
    p.add_argument("--I", required=True, help="index set, e.g. 1,3")

    p = add("limit", cmd_limit, "limit of a point under a subgroup", "position JSON")
    p.add_argument("--s", required=True, help="subgroup exponents, e.g. 1,0")

    p = add("weight", cmd_weight, "weight of a point or configuration", "position or configuration JSON")
    p.add_argument("--s", required=True, help="subgroup exponents, e.g. 1,0")

    add("stability", cmd_stability, "GIT stability verdict", "configuration JSON")
    add("witness", cmd_witness, "destabilizing subgroup", "configuration JSON")
    add("oracle", cmd_oracle, "brute-force scan over a box of subgroups", "configuration JSON")

    p = add("verify", cmd_verify, "exhaustive sweeps at degree n")
    p.add_argument("--samples", type=int, default=1000, help="random configurations for the stabilizer check")

    p = add("strata", cmd_strata, "strata of the central fibre and their closure order", "graph JSON, default one edge")
    p.add_argument("--fibre-dim", type=int, default=2, help="fibre dimension of the default graph")

    add("dual-complex", cmd_dual_complex, "dual complex of the central fibre")
    add("stabilizer", cmd_stabilizer, "stabilizer of a reduced configuration", "configuration JSON")
    return parser


def _human(doc: Any, indent: str = "") -> list[str]:
    """Indented ``key: value`` lines; only dicts and lists of dicts are expanded."""
    if isinstance(doc, list):
        lines = []
        for item in doc:
            sub = _human(item, indent + "  ")
            lines.append(f"{indent}- " + sub[0].lstrip())
            lines.extend(sub[1:])
        return lines
    if not isinstance(doc, dict):
        return [indent + json.dumps(doc)]
    lines = []
    for k, v in doc.items():
        nested = isinstance(v, dict) or (isinstance(v, list) and any(isinstance(x, dict) for x in v))
        if nested and v:
            lines.append(f"{indent}{k}:")
            lines.extend(_human(v, indent + "  "))
        else:
            lines.append(f"{indent}{k}: {json.dumps(v)}")
    return lines


def run(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        out, code = args.func(args)
    except io.SchemaError as exc:
        out, code = {"error": str(exc), "pointer": exc.pointer}, EXIT_INPUT
    except InputError as exc:
        out, code = {"error": str(exc)}, EXIT_INPUT
        if exc.pointer:
            out["pointer"] = exc.pointer
    except (ExpDegError, ValueError, KeyError, TypeError) as exc:
        out, code = {"error": f"{type(exc).__name__}: {exc}"}, EXIT_INPUT
    if args.human:
        stdout.write("\n".join(_human(out)) + "\n")
    else:
        stdout.write(json.dumps(out, indent=2) + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
