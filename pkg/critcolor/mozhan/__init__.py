from critcolor.mozhan.partition import (
    SINGLETON_COLOR,
    PartitionedColoring,
    PartitionScheme,
    SearchMode,
    internal_edges,
)
from critcolor.mozhan.moves import kempe_path_recolor, swap, z_component, z_degree
from critcolor.mozhan.search import find_minimal_partitioned_coloring
from critcolor.mozhan.lemma import GroupCheck, Lemma1Report, verify_lemma1
from critcolor.mozhan.trace import (
    FormBroken,
    NoEligibleVertex,
    StepCapExceeded,
    StopConditionMet,
    WalkOutcome,
    WalkStep,
    WalkTrace,
)
from critcolor.mozhan.walk import mozhan_walk
