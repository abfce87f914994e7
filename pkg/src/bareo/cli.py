"""Command-line entry point: ``bareo <subcommand> ...``.

Reads the JSON forms defined in :mod:`bareo.serialize`, prints JSON on
stdout.  Exit status 0 on success, 1 on a domain error, 2 on a usage or
input-format error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import factorization as fz
from . import invariants as inv
from . import maps, topology
from .census import census
from .errors import BareoError, BadParameter
from .serialize import dumps, graph_from_dict, point_map_from_dict, point_set_from_dict


class UsageError(Exception):
    pass


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON from {path}: {exc}") from None


def _parsed(parser, path: str):
    try:
        return parser(_load(path))
    except BadParameter as exc:
        raise UsageError(f"{path}: {exc}") from None


def _graph(path):
    return _parsed(graph_from_dict, path)


def _map(path):
    return _parsed(point_map_from_dict, path)


def _graph_and_set(args):
    g, a = _graph(args.graph), _parsed(point_set_from_dict, args.set)
    return g, a


def cmd_open_check(args):
    g, a = _graph_and_set(args)
    return {"open": topology.is_open(g, a)}


def cmd_closure(args):
    return topology.closure(*_graph_and_set(args))


def cmd_interior(args):
    return topology.interior(*_graph_and_set(args))


def cmd_connected(args):
    return {"connected": topology.is_topologically_connected(_graph(args.graph))}


def cmd_separation(args):
    return topology.separation_report(_graph(args.graph))


def cmd_continuity(args):
    return {"continuous": maps.is_continuous(_map(args.map))}


def cmd_classify(args):
    return maps.classify(_map(args.map))


def cmd_induce(args):
    g, h = _graph(args.domain), _graph(args.codomain)
    fv = _load(args.assignment)
    if not isinstance(fv, dict) or not all(isinstance(k, str) and isinstance(v, str) for k, v in fv.items()):
        raise UsageError("assignment JSON must be an object mapping vertex ids to vertex ids")
    build = maps.induced_from_weak_hom if args.weak else maps.induced_from_hom
    return build(g, h, fv)


def cmd_identify(args):
    w = args.w if args.w is not None else f"{args.u}+{args.v}"
    return maps.vertex_identification(_graph(args.graph), args.u, args.v, w)


def cmd_contract(args):
    edges = _load(args.edges)
    if not isinstance(edges, list) or not all(isinstance(e, list) and len(e) == 2 for e in edges):
        raise UsageError("edge list JSON must be a list of [u, v] pairs")
    return maps.contraction_script(_graph(args.graph), edges)


def cmd_vertexify(args):
    return maps.vertexify(_map(args.map))


def cmd_factorize(args):
    f = _map(args.map)
    return fz.factor_contraction_first(f) if args.order == "ci" else fz.factor_incidence_first(f)


def cmd_chroma(args):
    g = _graph(args.graph)
    chi = inv.chromatic_number(g)
    return {"chi": chi, "witness": inv.find_incidence_coloring(g, chi).to_dict()}


def cmd_theta(args):
    return inv.theta(_graph(args.graph))


def cmd_postman(args):
    return {"min_walk_length": inv.min_covering_closed_walk(_graph(args.graph))}


def cmd_census(args):
    return census(_graph(args.domain), _graph(args.codomain))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bareo", description="Star topology on bare graph representations.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, *positional, help=None):
        sp = sub.add_parser(name, help=help)
        for arg in positional:
            sp.add_argument(arg)
        sp.set_defaults(func=func)
        return sp

    add("open-check", cmd_open_check, "graph", "set", help="is the point set open")
    add("closure", cmd_closure, "graph", "set", help="closure of a point set")
    add("interior", cmd_interior, "graph", "set", help="interior of a point set")
    add("connected", cmd_connected, "graph", help="is B(G) connected")
    add("separation", cmd_separation, "graph", help="T0 / Hausdorff report")
    add("continuity", cmd_continuity, "map", help="is the point map continuous")
    add("classify", cmd_classify, "map", help="classify a point map")
    sp = add("induce", cmd_induce, "domain", "codomain", "assignment",
             help="point map induced by a (weak) homomorphism")
    kind = sp.add_mutually_exclusive_group(required=True)
    kind.add_argument("--hom", action="store_true")
    kind.add_argument("--weak", action="store_true")
    sp = add("identify", cmd_identify, "graph", "u", "v", help="vertex identification")
    sp.add_argument("w", nargs="?", default=None)
    add("contract", cmd_contract, "graph", "edges", help="apply a contraction script")
    add("vertexify", cmd_vertexify, "map", help="continuous vertex map from a continuous map")
    sp = add("factorize", cmd_factorize, "map", help="factor a continuous vertex map")
    sp.add_argument("--order", choices=["ci", "ic"], default="ci")
    add("chroma", cmd_chroma, "graph", help="chromatic number with a witness colouring")
    add("theta", cmd_theta, "graph", help="largest n with a continuous surjection onto B(K_n)")
    add("postman", cmd_postman, "graph", help="shortest closed walk covering every edge")
    add("census", cmd_census, "domain", "codomain", help="exhaustive census of point maps")
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except UsageError as exc:
        print(f"bareo {args.command}: {exc}", file=sys.stderr)
        print(parser.format_usage().strip(), file=sys.stderr)
        return 2
    except BareoError as exc:
        print(f"bareo {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(dumps(result))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
