"""
Deterministic dispatcher behind the command line: loads inputs, calls the library,
re-verifies every emitted solution and builds a report.

Exit status: 0 success, 1 input error, 2 infeasible instance or rejected certificate,
3 acceptance suite with failures.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

from loguru import logger
from prettytable import PrettyTable

from rankred.graphs.base import BipartiteGraph, Edge, Graph
from rankred.graphs.matching import matching_number
from rankred.matroids.base import MatroidModel
from rankred.matroids.graphical import GraphicalModel
from rankred.matroids.transversal import TransversalModel
from rankred.reductions.clique import (
    CliqueGadget,
    PreprocessStatus,
    build_clique_gadget,
    check_clique_assumptions,
    preprocess_clique_instance,
    pvc_to_clique,
)
from rankred.reductions.densest import dks_harness, exact_strategy, inflated_strategy
from rankred.reductions.konig import coverage
from rankred.reductions.tedge import TEdgeGadget, build_t_edge_gadget, verify_pair
from rankred.solvers.base import Solution
from rankred.solvers.enumeration import (
    brute_force_rankred,
    densest_k_exact,
    find_clique,
    matching_reduction_exact,
    min_kcut_exact,
    min_t_edge_exact,
    mvc_exact,
    transversal_rankred_exact,
)
from rankred.solvers.partition import solve_partition_rankred
from rankred.suites import suite
from rankred.utils.config import get_default_seed, resolve_cap
from rankred.utils.exceptions import (
    CertificateError,
    InfeasibleInstanceError,
    InputError,
    InvalidParameterError,
    RankRedException,
)
from rankred.utils.io import (
    file_digest,
    format_clique_gadget,
    format_index_list,
    format_record,
    format_tedge_gadget,
    load_bipartite,
    load_gadget,
    load_graph,
    load_index_list,
    load_partition_model,
    write_text,
)

EXIT_OK, EXIT_INPUT_ERROR, EXIT_INFEASIBLE, EXIT_SUITE_FAILED = 0, 1, 2, 3
EXIT_INTERNAL_ERROR = 4


class Command(str, Enum):
    RANK = "rank"
    REDUCE = "reduce"
    GADGET_TEDGE = "gadget-tedge"
    GADGET_CLIQUE = "gadget-clique"
    HARNESS_DKS = "harness-dks"
    VERIFY = "verify"
    ORACLE = "oracle"
    SUITE = "suite"


class OutputFormat(str, Enum):
    TEXT = "text"
    RECORD = "record"


class OracleProblem(str, Enum):
    RANK_REDUCTION = "rank-reduction"
    MIN_T_EDGE = "min-t-edge"
    DENSEST = "densest"
    PARTIAL_VC = "partial-vc"
    KCUT = "kcut"
    MATCHING = "matching"
    CLIQUE = "clique"


@dataclass
class RunConfig:
    """
    Everything one invocation needs. Exactly one model input (graph, bipartite or
    partition) is expected by rank, reduce and oracle.
    """

    command: Command
    graph: Optional[str] = None
    bipartite: Optional[str] = None
    partition: Optional[str] = None
    gadget: Optional[str] = None
    x: Optional[str] = None
    y: Optional[str] = None
    k: Optional[int] = None
    t: Optional[int] = None
    ell: Optional[int] = None
    seed: Optional[int] = None
    cap: Optional[int] = None
    output_format: OutputFormat = OutputFormat.TEXT
    output: Optional[str] = None
    problem: Optional[OracleProblem] = None
    matching: bool = False
    suite_name: Optional[str] = None
    approx_factor: int = 1


@dataclass
class Report:
    """Ordered key/value lines plus an optional payload (gadget file, suite table)."""

    command: str
    entries: List[Tuple[str, Any]] = field(default_factory=list)
    payload: Optional[str] = None

    def add(self, key: str, value: Any) -> "Report":
        self.entries.append((key, value))
        return self

    def value(self, key: str) -> Any:
        return dict(self.entries).get(key)

    def to_text(self) -> str:
        table = PrettyTable(["Key", "Value"])
        for key, value in self.entries:
            table.add_row([key, value])
        table.align = "l"
        text = f"{self.command}\n{table}\n"
        return text + (self.payload or "")

    def to_record(self) -> str:
        return format_record([("command", self.command)] + self.entries) + (self.payload or "")

    def render(self, output_format: OutputFormat) -> str:
        return self.to_record() if output_format == OutputFormat.RECORD else self.to_text()


def _fmt(elements: Iterable) -> str:
    return " ".join(f"{e[0]}-{e[1]}" if isinstance(e, tuple) else str(e) for e in sorted(elements))


def _require(value: Any, name: str, command: Command) -> Any:
    if value is None:
        raise InvalidParameterError(name, None, f"is required by the {command.value} command")
    return value


def _load_model(config: RunConfig) -> Tuple[MatroidModel, str, str]:
    """(model, problem id, input digest) from whichever model file is given."""
    given = [p for p in (config.graph, config.bipartite, config.partition) if p is not None]
    if len(given) != 1:
        raise InputError("Exactly one of --graph, --bipartite or --partition must be given")
    if config.partition is not None:
        return load_partition_model(config.partition), "partition", file_digest(config.partition)
    if config.bipartite is not None:
        return TransversalModel(load_bipartite(config.bipartite)), "transversal", file_digest(config.bipartite)
    return GraphicalModel(load_graph(config.graph)), "graphical", file_digest(config.graph)


def _removal(model: MatroidModel, path: Optional[str]) -> List:
    """Removal set from an index list. Graphical elements are addressed by edge index."""
    if path is None:
        return []
    indices, _ = load_index_list(path)
    if isinstance(model, GraphicalModel):
        edges = model.ground_set
        outside = [i for i in indices if not 0 <= i < len(edges)]
        if outside:
            raise InvalidParameterError("x", outside, f"edge indices must lie in 0..{len(edges) - 1}")
        return [edges[i] for i in indices]
    return indices


def _removed_indices(model: MatroidModel, removed: Iterable) -> List[int]:
    """Removed elements as indices; graphical edges become their edge index."""
    if isinstance(model, GraphicalModel):
        return sorted(model.element_index[e] for e in removed)
    return sorted(removed)


def _solution_entries(report: Report, solution: Solution, model: MatroidModel):
    if not solution.verify(model):
        raise CertificateError(f"Solution of size {solution.size} failed re-verification")
    report.add("k", solution.k).add("size", solution.size)
    report.add("removed", _fmt(_removed_indices(model, solution.removed)))
    report.add("rank_before", solution.full_rank).add("rank_after", model.rank(solution.removed))
    report.add("bound", solution.full_rank - solution.k)


def _write_certificate(config: RunConfig, indices: Iterable[int], metadata: Dict[str, int]):
    if config.output is not None:
        write_text(config.output, format_index_list(indices, metadata))


def _run_rank(config: RunConfig) -> Tuple[int, Report]:
    model, problem, digest = _load_model(config)
    removed = _removal(model, config.x)
    report = Report(config.command.value).add("problem", problem).add("digest", digest)
    report.add("ground_size", len(model)).add("rank", model.full_rank)
    if config.x is not None:
        report.add("removed", _fmt(_removed_indices(model, model.check_subset(removed))))
        report.add("rank_after", model.rank(removed))
    return EXIT_OK, report


def _run_reduce(config: RunConfig) -> Tuple[int, Report]:
    model, problem, digest = _load_model(config)
    k = _require(config.k, "k", config.command)
    report = Report(config.command.value)
    if config.matching:
        if not isinstance(model, TransversalModel):
            raise InputError("--matching needs a bipartite graph")
        g = model.model
        edges = matching_reduction_exact(g, k, config.cap)
        report.add("problem", "matching").add("digest", digest).add("t", k).add("size", len(edges))
        indices = sorted(g.sorted_edges.index(e) for e in edges)
        report.add("removed", _fmt(indices))
        report.add("matching_after", _matching_after(g, edges))
        _write_certificate(config, indices, {"rank": report.value("matching_after")})
        return EXIT_OK, report

    if problem == "partition":
        solution = solve_partition_rankred(model, k)
    elif problem == "transversal":
        solution = transversal_rankred_exact(model, k, config.cap)
    else:
        solution = brute_force_rankred(model, k, config.cap)
    report.add("problem", problem).add("digest", digest)
    _solution_entries(report, solution, model)
    _write_certificate(config, _removed_indices(model, solution.removed), {"rank": model.rank(solution.removed)})
    return EXIT_OK, report


def _matching_after(g: BipartiteGraph, edges: Iterable[Edge]) -> int:
    return matching_number(g.without_edges(edges))


def _emit(config: RunConfig, report: Report, text: str):
    if config.output is not None:
        write_text(config.output, text)
        report.add("written", config.output)
    else:
        report.payload = text


def _run_gadget_tedge(config: RunConfig) -> Tuple[int, Report]:
    path = _require(config.graph, "graph", config.command)
    t = _require(config.t, "t", config.command)
    g = load_graph(path)
    gad = build_t_edge_gadget(g, t)
    report = Report(config.command.value).add("digest", file_digest(path))
    report.add("n", gad.n).add("m", gad.m).add("t", gad.t)
    report.add("side_a", len(gad.side_a)).add("side_b", len(gad.side_b)).add("rank", gad.full_rank)
    _emit(config, report, format_tedge_gadget(gad))
    return EXIT_OK, report


def _run_gadget_clique(config: RunConfig) -> Tuple[int, Report]:
    path = _require(config.graph, "graph", config.command)
    ell = _require(config.ell, "ell", config.command)
    h, status = preprocess_clique_instance(load_graph(path), ell)
    report = Report(config.command.value).add("digest", file_digest(path)).add("status", status.value)
    if status == PreprocessStatus.NO_CLIQUE:
        report.add("clique", "none")
        return EXIT_OK, report
    if status == PreprocessStatus.SOLVE_DIRECTLY:
        clique = find_clique(h, ell, config.cap)
        report.add("clique", "none" if clique is None else _fmt(clique))
        return EXIT_OK, report
    check_clique_assumptions(h, ell)
    gad = build_clique_gadget(h, ell)
    report.add("source_vertices", h.order).add("source_edges", h.size)
    report.add("vertices", gad.g.vertex_count).add("edges", gad.g.size).add("k", gad.k).add("ell", gad.ell)
    report.add("threshold", gad.threshold)
    _emit(config, report, format_clique_gadget(gad))
    return EXIT_OK, report


def _run_harness(config: RunConfig) -> Tuple[int, Report]:
    path = _require(config.graph, "graph", config.command)
    k = _require(config.k, "k", config.command)
    g = load_graph(path)
    strategy = exact_strategy(config.cap)
    if config.approx_factor > 1:
        strategy = inflated_strategy(strategy, config.approx_factor)
    found = dks_harness(g, k, strategy, approx_factor=config.approx_factor)
    edges = g.induced_edge_count(found)
    report = Report(config.command.value).add("digest", file_digest(path)).add("k", k)
    report.add("approx_factor", config.approx_factor).add("vertices", _fmt(found)).add("edges", edges)
    if g.order <= resolve_cap(config.cap):
        report.add("optimum", g.induced_edge_count(densest_k_exact(g, k, config.cap)))
    _write_certificate(config, found, {"edges": edges})
    return EXIT_OK, report


def _verify_tedge(config: RunConfig, gad: TEdgeGadget, report: Report) -> int:
    x, _ = load_index_list(_require(config.x, "x", config.command))
    bound = gad.full_rank - gad.t
    rank_after = gad.host.rank(x)
    report.add("size", len(x)).add("rank_after", rank_after).add("bound", bound)
    feasible = rank_after <= bound
    if config.y is not None:
        y, _ = load_index_list(config.y)
        holds = verify_pair(gad, x, y)
        report.add("witness", "holds" if holds else "fails")
        feasible = feasible and holds
    report.add("verdict", "accepted" if feasible else "rejected")
    return EXIT_OK if feasible else EXIT_INFEASIBLE


def _verify_clique(config: RunConfig, gad: CliqueGadget, report: Report) -> int:
    x, metadata = load_index_list(_require(config.x, "x", config.command))
    covered = coverage(gad.g, x)
    report.add("size", len(x)).add("k", gad.k).add("coverage", covered).add("threshold", gad.threshold)
    accepted = len(x) == gad.k
    if "coverage" in metadata and metadata["coverage"] != covered:
        logger.warning(f"Certificate claims coverage {metadata['coverage']}, recomputed {covered}")
        accepted = False
    if accepted:
        clique = pvc_to_clique(gad, x)
        report.add("clique", "none" if clique is None else _fmt(clique))
        accepted = clique is not None
    report.add("verdict", "accepted" if accepted else "rejected")
    return EXIT_OK if accepted else EXIT_INFEASIBLE


def _run_verify(config: RunConfig) -> Tuple[int, Report]:
    path = _require(config.gadget, "gadget", config.command)
    gad = load_gadget(path)
    report = Report(config.command.value).add("digest", file_digest(path))
    if isinstance(gad, TEdgeGadget):
        report.add("gadget", "t-edge")
        return _verify_tedge(config, gad, report), report
    report.add("gadget", "clique")
    return _verify_clique(config, gad, report), report


def _run_oracle(config: RunConfig) -> Tuple[int, Report]:
    problem = _require(config.problem, "problem", config.command)
    report = Report(config.command.value).add("problem", problem.value)
    if problem == OracleProblem.RANK_REDUCTION:
        model, kind, digest = _load_model(config)
        report.add("model", kind).add("digest", digest)
        solution = brute_force_rankred(model, _require(config.k, "k", config.command), config.cap)
        _solution_entries(report, solution, model)
        return EXIT_OK, report
    if problem == OracleProblem.MATCHING:
        g = load_bipartite(_require(config.bipartite, "bipartite", config.command))
        edges = matching_reduction_exact(g, _require(config.t, "t", config.command), config.cap)
        report.add("digest", file_digest(config.bipartite)).add("size", len(edges)).add("removed", _fmt(edges))
        report.add("matching_after", _matching_after(g, edges))
        return EXIT_OK, report

    g: Graph = load_graph(_require(config.graph, "graph", config.command))
    report.add("digest", file_digest(config.graph))
    if problem == OracleProblem.MIN_T_EDGE:
        found = min_t_edge_exact(g, _require(config.t, "t", config.command), config.cap)
        report.add("size", len(found)).add("vertices", _fmt(found)).add("edges", g.induced_edge_count(found))
    elif problem == OracleProblem.DENSEST:
        found = densest_k_exact(g, _require(config.k, "k", config.command), config.cap)
        report.add("vertices", _fmt(found)).add("edges", g.induced_edge_count(found))
    elif problem == OracleProblem.PARTIAL_VC:
        found, covered = mvc_exact(g, _require(config.k, "k", config.command), config.cap)
        report.add("vertices", _fmt(found)).add("coverage", covered)
    elif problem == OracleProblem.KCUT:
        cut = min_kcut_exact(g, _require(config.k, "k", config.command), config.cap)
        report.add("size", len(cut)).add("removed", _fmt(cut))
    else:
        clique = find_clique(g, _require(config.ell, "ell", config.command), config.cap)
        report.add("clique", "none" if clique is None else _fmt(clique))
    return EXIT_OK, report


def _run_suite(config: RunConfig) -> Tuple[int, Report]:
    name = _require(config.suite_name, "suite", config.command)
    seed = get_default_seed() if config.seed is None else config.seed
    result = suite(name, seed=seed, cap=config.cap, progress=config.output_format == OutputFormat.TEXT)
    report = Report(config.command.value).add("suite", name).add("seed", seed)
    report.add("passed", result.passed).add("failed", result.failed)
    body = result.to_record() if config.output_format == OutputFormat.RECORD else result.to_text()
    _emit(config, report, body)
    return (EXIT_OK if result.ok else EXIT_SUITE_FAILED), report


_DISPATCH: Dict[Command, Callable[[RunConfig], Tuple[int, Report]]] = {
    Command.RANK: _run_rank,
    Command.REDUCE: _run_reduce,
    Command.GADGET_TEDGE: _run_gadget_tedge,
    Command.GADGET_CLIQUE: _run_gadget_clique,
    Command.HARNESS_DKS: _run_harness,
    Command.VERIFY: _run_verify,
    Command.ORACLE: _run_oracle,
    Command.SUITE: _run_suite,
}


def run(config: RunConfig) -> Tuple[int, Report]:
    """
    Dispatch `config` and return (exit status, report). Library errors never escape:
    they become an "error" line and the matching exit status.
    """
    try:
        return _DISPATCH[config.command](config)
    except CertificateError as e:
        logger.error(str(e))
        return EXIT_INTERNAL_ERROR, Report(config.command.value).add("error", str(e)).add("status", "internal-error")
    except InfeasibleInstanceError as e:
        logger.error(str(e))
        return EXIT_INFEASIBLE, Report(config.command.value).add("error", str(e)).add("status", "infeasible")
    except RankRedException as e:
        logger.error(str(e))
        return EXIT_INPUT_ERROR, Report(config.command.value).add("error", str(e)).add("status", "input-error")


__all__ = [
    "Command",
    "OracleProblem",
    "OutputFormat",
    "Report",
    "RunConfig",
    "run",
]
