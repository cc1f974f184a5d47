"""Python bindings for the vicolor C++ core.

Certificates are returned as dicts parsed from their JSON form.
"""

import json

from . import _core
from ._core import (
    Graph,
    ParseError,
    all_graphs,
    color_complete,
    color_cycle,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    is_valid_vi_coloring,
    parse_graph6,
    path_graph,
    petersen_graph,
    power_graph_edges,
    to_graph6,
)

__all__ = [
    "Graph",
    "ParseError",
    "all_graphs",
    "certificate_dot",
    "chi_vi1_via_tvi1",
    "color_complete",
    "color_cycle",
    "complete_bipartite_graph",
    "complete_graph",
    "construct",
    "cycle_graph",
    "is_valid_vi_coloring",
    "parse_graph6",
    "path_graph",
    "petersen_graph",
    "power_graph_edges",
    "scan",
    "solve",
    "to_graph6",
    "verify_certificate",
]


def solve(g, parameter, s=None, node_budget=50_000_000):
    return json.loads(_core.solve(g, parameter, s, node_budget))


def chi_vi1_via_tvi1(g, node_budget=50_000_000):
    return json.loads(_core.chi_vi1_via_tvi1(g, node_budget))


def construct(family, n=None, m=None, s=None, graph=None):
    return json.loads(_core.construct(family, n, m, s, graph))


def verify_certificate(cert):
    return _core.verify_certificate(json.dumps(cert))


def certificate_dot(cert):
    return _core.certificate_dot(json.dumps(cert))


def scan(graph6_lines, max_n=6, node_budget=50_000_000):
    """Scan report for an iterable of graph6 strings."""
    return json.loads(_core.scan_graph6("\n".join(graph6_lines) + "\n", max_n, node_budget))
