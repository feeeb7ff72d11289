from critcolor.harness.corpus import Corpus, CorpusEntry, CorpusFormat, load_corpus
from critcolor.harness.enumeration import exhaustive_min_degree_scan
from critcolor.harness.generators import (
    FIGURE1_EDGES,
    fixture_figure1,
    random_chi_delta_graph,
    random_critical,
    random_graph,
)
from critcolor.harness.report import GraphRecord, RecordStatus, Report
from critcolor.harness.verification import analyze, lemma1_scan, verify_statement
