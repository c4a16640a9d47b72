from .base import DecodeEntry
from .clique import (
    CliqueGadget,
    NiceClassification,
    PreprocessStatus,
    build_clique_gadget,
    check_clique_assumptions,
    classify,
    clique_to_pvc,
    is_nice,
    nice_violations,
    nicify,
    preprocess_clique_instance,
    pvc_to_clique,
)
from .densest import dks_harness, exact_strategy, inflated_strategy, monotone_repair
from .ip_lemma import ip_lemma_enumerate, ip_objective
from .konig import cover_to_edges, coverage, edges_to_cover
from .tedge import (
    CanonicalPair,
    TEdgeGadget,
    build_t_edge_gadget,
    canonicalize,
    check_canonical,
    make_pair,
    pair_to_subgraph,
    subgraph_to_pair,
    verify_pair,
)

__all__ = [
    "DecodeEntry",
    "CliqueGadget",
    "NiceClassification",
    "PreprocessStatus",
    "build_clique_gadget",
    "check_clique_assumptions",
    "classify",
    "clique_to_pvc",
    "is_nice",
    "nice_violations",
    "nicify",
    "preprocess_clique_instance",
    "pvc_to_clique",
    "dks_harness",
    "exact_strategy",
    "inflated_strategy",
    "monotone_repair",
    "ip_lemma_enumerate",
    "ip_objective",
    "cover_to_edges",
    "coverage",
    "edges_to_cover",
    "CanonicalPair",
    "TEdgeGadget",
    "build_t_edge_gadget",
    "canonicalize",
    "check_canonical",
    "make_pair",
    "pair_to_subgraph",
    "subgraph_to_pair",
    "verify_pair",
]
