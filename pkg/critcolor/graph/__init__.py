from critcolor.graph.graph_core import (
    Edge,
    Graph,
    VertexSet,
    complement,
    complete_graph,
    component_of,
    cycle_graph,
    degree,
    delete_vertex,
    distance_within,
    distances_within,
    from_edge_list,
    induced_subgraph,
    is_connected,
    max_degree,
    min_degree,
    relabel,
    shortest_path_within,
)
from critcolor.graph.clique import CliqueSearch, clique_number, contains_clique, is_clique, max_clique
from critcolor.graph.formats import (
    from_graph6,
    parse_dimacs,
    parse_edge_list,
    to_dimacs,
    to_edge_list,
    to_graph6,
)
