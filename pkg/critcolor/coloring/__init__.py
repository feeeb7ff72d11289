from critcolor.coloring.coloring import Coloring, color_classes, greedy_coloring, is_proper
from critcolor.coloring.solver import chromatic_number, k_colorable
from critcolor.coloring.critical import (
    CRITICALITY_DEFINITION,
    critical_subgraph,
    critical_vertex_subset,
    critical_vertices,
    is_critical_vertex,
    is_vertex_critical,
)
from critcolor.coloring.brooks import brooks_coloring
