"""Graph colouring reconfiguration toolkit (Python bindings)."""

from ._core import (
    Graph,
    InputError,
    ParseError,
    ResourceError,
    build_base,
    build_family,
    build_reconfig,
    chromatic_number,
    clique_number,
    complete_graph,
    component_of,
    count_colourings,
    cycle,
    enumerate_colourings,
    find_frozen,
    find_induced,
    instance_graph,
    is_frozen,
    is_mixing,
    is_proper,
    join,
    neighbours,
    parse_dimacs,
    parse_edge_list,
    path_graph,
    power,
    verify,
    verify_bundle,
)

__all__ = [name for name in dir() if not name.startswith("_")]
