from critcolor.structure.profile import GraphProfile
from critcolor.structure.predicates import (
    DegreeClass,
    classify,
    high_subgraph,
    low_vertices,
    ore_degree,
    ore_degree_edge,
)
from critcolor.structure.statements import (
    CHECKS,
    Statement,
    StatementOutcome,
    StructureReport,
    check_statement,
    corollary_n_check,
    corollary_o_check,
    kk_theorem_check,
    structure_report,
    theorem_m_check,
)
