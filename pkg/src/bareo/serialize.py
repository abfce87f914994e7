"""JSON forms of graphs, point sets and point maps.

Every result type has a ``to_dict`` method; this module holds the parsers and
the canonical dump (sorted keys, sorted lists, trailing newline).
"""

from __future__ import annotations

import json
from typing import Any

from .errors import BadParameter
from .graph import Graph, make_graph
from .maps import PointMap
from .topology import Point, PointSet


def dumps(obj: Any) -> str:
    if hasattr(obj, "to_dict"):
        obj = obj.to_dict()
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _expect(d: Any, keys: tuple[str, ...], what: str) -> dict:
    if not isinstance(d, dict) or any(k not in d for k in keys):
        raise BadParameter(f"{what} JSON needs keys {list(keys)}")
    return d


def graph_from_dict(d: Any) -> Graph:
    d = _expect(d, ("vertices", "edges"), "graph")
    return make_graph(d["vertices"], d["edges"])


def point_from_dict(d: Any) -> Point:
    if isinstance(d, dict) and len(d) == 1:
        if "v" in d and isinstance(d["v"], str):
            return Point.vertex(d["v"])
        if "e" in d and isinstance(d["e"], list) and len(d["e"]) == 2:
            return Point.edge(*d["e"])
    raise BadParameter(f"bad point encoding {d!r}; expected {{'v': id}} or {{'e': [id, id]}}")


def point_set_from_dict(d: Any) -> PointSet:
    d = _expect(d, ("graph", "points"), "point set")
    g = graph_from_dict(d["graph"])
    return PointSet(g, frozenset(point_from_dict(p) for p in d["points"]))


def point_map_from_dict(d: Any) -> PointMap:
    d = _expect(d, ("domain", "codomain", "images"), "point map")
    images = {}
    for item in d["images"]:
        item = _expect(item, ("from", "to"), "image")
        images[point_from_dict(item["from"])] = point_from_dict(item["to"])
    return PointMap(graph_from_dict(d["domain"]), graph_from_dict(d["codomain"]), images)
