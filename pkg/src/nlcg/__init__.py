"""Construction and exhaustive verification of no-lonely-colour graphs."""

from .graphcore import (
    INFINITY,
    Graph,
    Multigraph,
    Verdict,
    check_no_lonely_colour,
    chromatic_number,
    enumerate_cycles,
    find_bridges,
    girth,
    is_proper_edge_colouring,
)
from .hypercore import (
    BergeCycle,
    ClosedWalk,
    Hypergraph,
    berge_girth,
    enumerate_closed_walks,
    hypergraph_chromatic_number,
)
from .tranquil import (
    LabellingFamily,
    TranquilityCertificate,
    certify_tranquil,
    project,
    search_tranquil_labelling,
)
from .gallai import GallaiSliceSpec, build_slice, check_displacement_closure, prune_for_girth
from .tutte import (
    ConstructedGraph,
    base_graph,
    build,
    extend,
    induced_walk,
    verify_constructed,
)

__version__ = "0.1.0"
