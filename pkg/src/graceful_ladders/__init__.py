"""Graceful colorings of ladder graphs: generators, closed-form colorings,
validators and an exact solver for the graceful chromatic number."""

from .bounds import extreme_color_set, known_chi_g, lb_max_degree, lb_regular
from .coloring import (
    ValidationReport,
    VertexColoring,
    check_closed_neighborhoods,
    check_midpoint_paths,
    induced_edge_labels,
    is_graceful,
)
from .constructions import construct
from .graphs import (
    Family,
    FamilySpec,
    Graph,
    Vertex,
    build_family,
    cartesian_product,
    cycle,
    is_regular,
    max_degree,
    path,
    strong_product,
)
from .solver import (
    SearchConfig,
    SolveReport,
    certify_infeasibility,
    find_graceful_coloring,
    graceful_chromatic_number,
)

__version__ = "0.1.0"
