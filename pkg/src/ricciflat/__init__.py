"""Exact Ollivier-Ricci / Lin-Lu-Yau curvature on graphs and the classification
of Ricci-flat cubic graphs of girth at least five."""

from .canon import canonical_form, canonical_labeling, is_isomorphic
from .classification import (
    ClassificationResult,
    classify,
    identify,
    search_two_pentagon_completions,
    verify_lemma,
)
from .curvature import CurvatureReport, curvature_report, idleness_report, is_ricci_flat, kappa, kappa_p
from .generation import GenerationConfig, generate, ingest_graph6
from .graph import (
    Graph,
    bfs_distances,
    degree_profile,
    five_cycles_through_edge,
    from_edge_list,
    girth,
    is_connected,
    two_pentagon_condition,
)
from .graph6 import emit_graph6, parse_graph6
from .named import named_graph
from .transport import mu, w1, w1_uniform_regular

__version__ = "0.1.0"
