"""Command-line front end: JSON in, JSON out, verdicts as exit codes.

Exit codes: 0 when the command completes (check-morphism reports its
verdict in the JSON output either way); 10 when an arrow check finds a
counterexample coloring or a witness search exhausts its bound; 2 when a
size guard refuses the computation; 1 for malformed input. Objects are
given as a bare integer n (the standard chain 1..n, arcless for graph
classes), inline JSON (anything starting with "{"), or a path to a JSON
file. All output goes to stdout as single-line JSON, except export-dot,
which prints DOT text directly.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .arrows import (
    check_arrow_direct,
    check_arrow_dual,
    check_fdrt_instance,
    find_minimal_dual_witness,
)
from .chains import Chain, VertexMorphism, jsonify, relabel_chain
from .cocones import EDigPair, check_commuting_cocone, cocone_from_json, glue, split_oograph, unsplit_pair
from .errors import GuardExceeded, InvalidInput, PreconditionError
from .graphs import LinExtDigraph, OrderedOrientedGraph, relabel_graph, to_dot
from .homsets import count_homset, iter_homset
from .morphisms import MorphismClass, is_member, object_chain

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_GUARD = 2
EXIT_WITNESS = 10


@dataclass(frozen=True)
class RunConfig:
    """Guards and toggles shared by the commands."""

    max_vertices: int = 8
    max_chain: int = 10
    max_homset: int = 24
    max_colors: int = 4
    mode: str = "dual"
    verify: bool = True

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        return cls(
            max_vertices=getattr(args, "guard_vertices", cls.max_vertices),
            max_chain=getattr(args, "guard_chain", cls.max_chain),
            max_homset=getattr(args, "guard_homset", cls.max_homset),
            max_colors=getattr(args, "guard_colors", cls.max_colors),
            mode=getattr(args, "mode", cls.mode),
            verify=getattr(args, "verify", cls.verify),
        )


def _load_payload(text: str):
    s = text.strip()
    if not s:
        raise InvalidInput("empty object argument")
    if s.isdigit():
        return int(s)
    if s.startswith("{"):
        return json.loads(s)
    with open(s) as fh:
        return json.load(fh)


def _load_object(text: str, cls: MorphismClass):
    payload = _load_payload(text)
    if isinstance(payload, int):
        chain = Chain.standard(payload)
        if cls in (MorphismClass.CH_EMB, MorphismClass.CH_RS):
            return chain
        if cls is MorphismClass.EDIG_SRQ:
            return LinExtDigraph(chain, frozenset())
        return OrderedOrientedGraph(chain, frozenset())
    if cls in (MorphismClass.CH_EMB, MorphismClass.CH_RS):
        return Chain.from_json(payload)
    if cls is MorphismClass.EDIG_SRQ:
        return LinExtDigraph.from_json(payload)
    return OrderedOrientedGraph.from_json(payload)


def _decode_mapping(raw: dict, chain: Chain) -> dict:
    """Match JSON object keys (always strings) back onto chain labels."""
    by_str: dict = {}
    for v in chain:
        by_str.setdefault(str(v), []).append(v)
    mapping = {}
    for key, value in raw.items():
        if key in chain.label_set():
            mapping[key] = value
        elif key in by_str and len(by_str[key]) == 1:
            mapping[by_str[key][0]] = value
        else:
            raise InvalidInput(f"map key {key!r} does not name a unique source label")
    return mapping


def _arc_map_rows(lift: VertexMorphism) -> list:
    return [
        [jsonify(p), jsonify(image)]
        for p, image in zip(lift.source.vertices, lift.images)
    ]


def _print(data) -> None:
    print(json.dumps(data, separators=(", ", ": ")))


def _cmd_enumerate(args) -> int:
    cfg = RunConfig.from_args(args)
    cls = MorphismClass.from_tag(args.cls)
    a = _load_object(args.source, cls)
    b = _load_object(args.target, cls)
    for m in iter_homset(a, b, cls, max_vertices=cfg.max_vertices, max_chain=cfg.max_chain):
        print(json.dumps(m.to_json(), separators=(",", ":")))
    return EXIT_OK


def _cmd_count(args) -> int:
    cfg = RunConfig.from_args(args)
    cls = MorphismClass.from_tag(args.cls)
    a = _load_object(args.source, cls)
    b = _load_object(args.target, cls)
    print(count_homset(a, b, cls, max_vertices=cfg.max_vertices, max_chain=cfg.max_chain))
    return EXIT_OK


def _cmd_check_morphism(args) -> int:
    cls = MorphismClass.from_tag(args.cls)
    a = _load_object(args.source, cls)
    b = _load_object(args.target, cls)
    payload = _load_payload(args.map)
    if not isinstance(payload, dict):
        raise InvalidInput("--map must be a JSON object")
    if "map" in payload and "source" in payload:
        f = VertexMorphism.from_json(payload)
    else:
        sc, tc = object_chain(a), object_chain(b)
        f = VertexMorphism.from_mapping(sc, tc, _decode_mapping(payload, sc))
    verdict = is_member(f, cls, a, b)
    out = verdict.to_json()
    if verdict.accepted and verdict.arc_map is not None:
        if isinstance(verdict.arc_map, tuple):
            fwd, bwd = verdict.arc_map
            out["arc_map"] = {"forward": _arc_map_rows(fwd), "backward": _arc_map_rows(bwd)}
        else:
            out["arc_map"] = _arc_map_rows(verdict.arc_map)
    _print(out)
    return EXIT_OK


def _cmd_arrow(args) -> int:
    cfg = RunConfig.from_args(args)
    cls = MorphismClass.from_tag(args.cls)
    a = _load_object(args.a, cls)
    b = _load_object(args.b, cls)
    guards = dict(
        max_homset=cfg.max_homset,
        max_colors=cfg.max_colors,
        max_vertices=cfg.max_vertices,
        max_chain=cfg.max_chain,
    )
    if args.find_min:
        if cfg.mode != "dual":
            raise InvalidInput("--find-min searches the dual arrow only")
        report = find_minimal_dual_witness(b, a, args.colors, cls, bound=args.bound, **guards)
        _print(report.to_json())
        if report.guard_hit:
            return EXIT_GUARD
        return EXIT_OK if report.found else EXIT_WITNESS
    if args.c is None:
        raise InvalidInput("-c is required unless --find-min is given")
    c = _load_object(args.c, cls)
    checker = check_arrow_dual if cfg.mode == "dual" else check_arrow_direct
    verdict = checker(c, b, a, args.colors, cls, **guards)
    _print(verdict.to_json())
    return EXIT_OK if verdict.holds else EXIT_WITNESS


def _cmd_fdrt(args) -> int:
    cfg = RunConfig.from_args(args)
    verdict = check_fdrt_instance(
        args.colors, args.a, args.m, args.n,
        max_homset=cfg.max_homset, max_colors=cfg.max_colors, max_chain=cfg.max_chain,
    )
    _print(verdict.to_json())
    return EXIT_OK if verdict.holds else EXIT_WITNESS


def _cmd_glue(args) -> int:
    payload = _load_payload(args.input)
    if not isinstance(payload, dict):
        raise InvalidInput("glue needs cocone JSON, not a bare integer")
    data = cocone_from_json(payload)
    glued, maps = glue(data, verify=args.verify)
    out = {"glued": glued.to_json(), "maps": [m.to_json() for m in maps]}
    if data.shape is not None:
        out["commuting"] = check_commuting_cocone(data, maps)
    _print(out)
    return EXIT_OK


def _cmd_split(args) -> int:
    payload = _load_payload(args.input)
    if args.invert:
        if not isinstance(payload, dict):
            raise InvalidInput("split --invert needs pair JSON")
        pair = EDigPair.from_json(payload)
        _print(unsplit_pair(pair).to_json())
        return EXIT_OK
    if isinstance(payload, int):
        g = OrderedOrientedGraph(Chain.standard(payload), frozenset())
    else:
        g = OrderedOrientedGraph.from_json(payload)
    _print(split_oograph(g).to_json())
    return EXIT_OK


def _cmd_relabel(args) -> int:
    payload = _load_payload(args.input)
    raw = _load_payload(args.mapping)
    if not isinstance(raw, dict):
        raise InvalidInput("--mapping must be a JSON object")
    if isinstance(payload, int):
        payload = {"vertices": list(range(1, payload + 1))}
    if "arcs" in payload and payload["arcs"]:
        g = OrderedOrientedGraph.from_json(payload)
        mapping = _decode_mapping(raw, g.chain)
        _print(relabel_graph(g, mapping).to_json())
    else:
        chain = Chain(tuple(payload.get("vertices", ())))
        mapping = _decode_mapping(raw, chain)
        _print(relabel_chain(chain, mapping).to_json())
    return EXIT_OK


def _cmd_export_dot(args) -> int:
    payload = _load_payload(args.input)
    if isinstance(payload, int):
        g = OrderedOrientedGraph(Chain.standard(payload), frozenset())
    else:
        g = OrderedOrientedGraph.from_json(payload)
    print(to_dot(g, name=args.name))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dualramsey",
        description="Rigid surjections, strong rigid quotients, and dual Ramsey arrows at desk scale.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    guards = argparse.ArgumentParser(add_help=False)
    guards.add_argument("--guard-vertices", type=int, default=RunConfig.max_vertices,
                        help="largest graph vertex count accepted")
    guards.add_argument("--guard-chain", type=int, default=RunConfig.max_chain,
                        help="largest chain length accepted")
    guards.add_argument("--guard-homset", type=int, default=RunConfig.max_homset,
                        help="largest colored hom-set accepted by arrow checks")
    guards.add_argument("--guard-colors", type=int, default=RunConfig.max_colors,
                        help="largest color count accepted by arrow checks")

    klass = argparse.ArgumentParser(add_help=False)
    klass.add_argument("--class", dest="cls", required=True,
                       choices=[m.value for m in MorphismClass],
                       help="morphism class")

    p = sub.add_parser("enumerate", parents=[guards, klass],
                       help="stream hom(source, target) as JSON lines")
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("count", parents=[guards, klass],
                       help="print |hom(source, target)|")
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("check-morphism", parents=[guards, klass],
                       help="staged membership verdict for one morphism")
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--map", required=True,
                   help="morphism JSON, bare label map JSON, or a file path")
    p.set_defaults(handler=_cmd_check_morphism)

    p = sub.add_parser("arrow", parents=[guards, klass],
                       help="check c ->(k) b over a, or search for a minimal c")
    p.add_argument("-a", required=True, help="the small object")
    p.add_argument("-b", required=True, help="the middle object")
    p.add_argument("-c", default=None, help="the large object")
    p.add_argument("--colors", type=int, default=2)
    p.add_argument("--mode", choices=["dual", "direct"], default="dual")
    p.add_argument("--find-min", action="store_true",
                   help="scan standard chains for the least witness instead")
    p.add_argument("--bound", type=int, default=7, help="largest chain tried by --find-min")
    p.set_defaults(handler=_cmd_arrow)

    p = sub.add_parser("fdrt", parents=[guards],
                       help="finite dual Ramsey instance on standard chains")
    p.add_argument("-k", "--colors", type=int, required=True)
    p.add_argument("-a", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(handler=_cmd_fdrt)

    p = sub.add_parser("glue", parents=[guards],
                       help="glue a cocone of digraph pairs into one graph")
    p.add_argument("--input", required=True, help="cocone JSON or a file path")
    p.add_argument("--verify", action=argparse.BooleanOptionalAction, default=True,
                   help="assert the output contract (default on)")
    p.set_defaults(handler=_cmd_glue)

    p = sub.add_parser("split", parents=[guards],
                       help="split a graph into its digraph pair (or back)")
    p.add_argument("--input", required=True)
    p.add_argument("--invert", action="store_true", help="pair JSON in, graph out")
    p.set_defaults(handler=_cmd_split)

    p = sub.add_parser("relabel", parents=[guards],
                       help="rename labels of a chain or graph")
    p.add_argument("--input", required=True)
    p.add_argument("--mapping", required=True, help="JSON object old -> new")
    p.set_defaults(handler=_cmd_relabel)

    p = sub.add_parser("export-dot", parents=[guards],
                       help="print a graph as GraphViz DOT")
    p.add_argument("--input", required=True)
    p.add_argument("--name", default="g")
    p.set_defaults(handler=_cmd_export_dot)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except GuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (InvalidInput, PreconditionError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (OSError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
