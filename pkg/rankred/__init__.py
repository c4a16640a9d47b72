import importlib
import os
from typing import TYPE_CHECKING

# Dictionary of objects to lazily import; maps the object's name to its module path
_lazy_imports_obj = {
    "__version__": "rankred._version",
    # GRAPHS
    "Graph": "rankred.graphs.base",
    "BipartiteGraph": "rankred.graphs.base",
    "Matching": "rankred.graphs.base",
    "complete_graph": "rankred.graphs.generators",
    "complete_bipartite": "rankred.graphs.generators",
    "max_matching": "rankred.graphs.matching",
    "konig_cover": "rankred.graphs.matching",
    "deficiency_witness": "rankred.graphs.matching",
    # MATROIDS
    "MatroidModel": "rankred.matroids.base",
    "IndependenceOracle": "rankred.matroids.base",
    "PartitionModel": "rankred.matroids.partition",
    "TransversalModel": "rankred.matroids.transversal",
    "GraphicalModel": "rankred.matroids.graphical",
    "intersection_max_common": "rankred.matroids.intersection",
    # SOLVERS
    "RankReductionInstance": "rankred.solvers.base",
    "Solution": "rankred.solvers.base",
    "solve_partition_rankred": "rankred.solvers.partition",
    "brute_force_rankred": "rankred.solvers.enumeration",
    "transversal_rankred_exact": "rankred.solvers.enumeration",
    # REDUCTIONS
    "TEdgeGadget": "rankred.reductions.tedge",
    "build_t_edge_gadget": "rankred.reductions.tedge",
    "canonicalize": "rankred.reductions.tedge",
    "dks_harness": "rankred.reductions.densest",
    "CliqueGadget": "rankred.reductions.clique",
    "build_clique_gadget": "rankred.reductions.clique",
    "nicify": "rankred.reductions.clique",
    "ip_lemma_enumerate": "rankred.reductions.ip_lemma",
    # SUITES
    "AVAILABLE_SUITES": "rankred.suites",
    "suite": "rankred.suites",
}

_lazy_imports_mod = {
    "graphs": "rankred.graphs",
    "matroids": "rankred.matroids",
    "solvers": "rankred.solvers",
    "reductions": "rankred.reductions",
    "suites": "rankred.suites",
    "utils": "rankred.utils",
}


def __getattr__(name):
    """Lazily import objects from _lazy_imports_obj or _lazy_imports_mod

    Note that this method is only called by Python if the name cannot be found
    in the current module."""
    obj_mod = _lazy_imports_obj.get(name)
    if obj_mod is not None:
        mod = importlib.import_module(obj_mod)
        return mod.__dict__[name]

    lazy_mod = _lazy_imports_mod.get(name)
    if lazy_mod is not None:
        return importlib.import_module(lazy_mod)

    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


def __dir__():
    """Add _lazy_imports_obj and _lazy_imports_mod to dir(<module>)"""
    keys = (*globals().keys(), *_lazy_imports_obj.keys(), *_lazy_imports_mod.keys())
    return sorted(keys)


if TYPE_CHECKING or os.environ.get("RANKRED_DISABLE_LAZY_LOADING", "0") == "1":
    # These types are imported lazily at runtime, but we need to tell type
    # checkers what they are.
    from ._version import __version__
    from .graphs.base import BipartiteGraph, Graph, Matching
    from .graphs.generators import complete_bipartite, complete_graph
    from .graphs.matching import deficiency_witness, konig_cover, max_matching
    from .matroids.base import IndependenceOracle, MatroidModel
    from .matroids.graphical import GraphicalModel
    from .matroids.intersection import intersection_max_common
    from .matroids.partition import PartitionModel
    from .matroids.transversal import TransversalModel
    from .reductions.clique import CliqueGadget, build_clique_gadget, nicify
    from .reductions.densest import dks_harness
    from .reductions.ip_lemma import ip_lemma_enumerate
    from .reductions.tedge import TEdgeGadget, build_t_edge_gadget, canonicalize
    from .solvers.base import RankReductionInstance, Solution
    from .solvers.enumeration import brute_force_rankred, transversal_rankred_exact
    from .solvers.partition import solve_partition_rankred
    from .suites import AVAILABLE_SUITES, suite
