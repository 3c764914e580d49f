"""Fault-tolerant shortest path toolkit.

Thin wrapper over the C++ core: graphs stay opaque handles, tables come back
as plain dicts (JSON decoded from the core's canonical serialization).
"""

import json

from ._core import (
    FrpError,
    Graph,
    brute_dist,
    dump_edge_list,
    gen_digraph,
    gen_path_plus,
    gen_undirected,
    has_triangle_brute,
    load_edge_list,
    make_graph,
    triangle_detect,
)
from . import _core

__all__ = [
    "FrpError",
    "Graph",
    "brute_dist",
    "dump_edge_list",
    "f_frp",
    "f_table",
    "gadget",
    "gen_digraph",
    "gen_path_plus",
    "gen_undirected",
    "has_triangle_brute",
    "load_edge_list",
    "make_graph",
    "shortest_path",
    "triangle_detect",
    "two_frp",
    "two_frp_bounded",
]


def shortest_path(graph, s, t):
    """Canonical shortest path: {"vertices": [...], "length": int}."""
    return json.loads(_core.shortest_path_json(graph, s, t))


def two_frp(graph, s, t):
    """Full two-fault replacement table for the pair (s, t)."""
    return json.loads(_core.two_frp_json(graph, s, t))


def f_frp(graph, s, t, k=3):
    """k-fault replacement table over the enumerated fault tuples."""
    return json.loads(_core.f_frp_json(graph, s, t, k))


def two_frp_bounded(graph, s, t, M, g_param=0):
    """Two-fault table via the interval structure (weights bounded by M)."""
    return json.loads(_core.two_frp_bounded_json(graph, s, t, M, g_param))


def f_table(graph, s, t, scaled=False, M=1, L=0, seed=1):
    """Backward-jump table over the canonical path, exact or scaled."""
    if scaled:
        return json.loads(_core.f_table_scaled_json(graph, s, t, M, L, seed))
    return json.loads(_core.f_table_json(graph, s, t))


def gadget(graph, b, L, k=2):
    """One bucket's reduction instance: (edge_list_text, layout_dict)."""
    edges, layout = _core.gadget_json(graph, b, L, k)
    return edges, json.loads(layout)
