from typing import Optional, Tuple

import typer
from loguru import logger
from prettytable import PrettyTable
from rich import print
from typing_extensions import Annotated

from rankred.runner import Command, OracleProblem, OutputFormat, RunConfig, run
from rankred.suites import AVAILABLE_SUITES
from rankred.utils.config import get_default_seed, get_enumeration_cap, set_default_seed, set_enumeration_cap

app = typer.Typer(help="rankred CLI")

GraphOption = Annotated[Optional[str], typer.Option(help="Edge-list file ('p <n> <m>' header).")]
BipartiteOption = Annotated[Optional[str], typer.Option(help="Bipartite edge-list file with a 'bip <|A|>' line.")]
PartitionOption = Annotated[Optional[str], typer.Option(help="Partition model file ('partition <p>' header).")]
CapOption = Annotated[
    Optional[int],
    typer.Option(help="Largest ground/vertex/edge count an exhaustive search accepts.", envvar="RANKRED_CAP"),
]
SeedOption = Annotated[
    Optional[int], typer.Option(help="Seed of the random instance generator.", envvar="RANKRED_SEED")
]
FormatOption = Annotated[
    OutputFormat, typer.Option("--format", help="text tables or line-oriented 'key value' records.")
]
OutputOption = Annotated[
    Optional[str], typer.Option(help="Where to write the certificate, gadget or suite report (any fsspec path).")
]


def _finish(config: RunConfig):
    """Run the command, echo its report and exit with its status."""
    set_enumeration_cap(config.cap)
    code, report = run(config)
    typer.echo(report.render(config.output_format), nl=False)
    if code != 0:
        logger.error(f"{config.command.value} finished with exit status {code}")
        raise typer.Exit(code)


@app.command()
def rank(
    graph: GraphOption = None,
    bipartite: BipartiteOption = None,
    partition: PartitionOption = None,
    x: Annotated[Optional[str], typer.Option(help="Index list of removed elements.")] = None,
    output_format: FormatOption = OutputFormat.TEXT,
):
    """
    Rank of a partition, transversal (--bipartite) or graphical (--graph) model,
    optionally after removing the elements listed in --x.
    """
    _finish(
        RunConfig(
            Command.RANK, graph=graph, bipartite=bipartite, partition=partition, x=x, output_format=output_format
        )
    )


@app.command()
def reduce(
    k: Annotated[int, typer.Option(help="Required rank drop (t for --matching).")],
    graph: GraphOption = None,
    bipartite: BipartiteOption = None,
    partition: PartitionOption = None,
    matching: Annotated[
        bool, typer.Option(help="Lower the matching number of --bipartite by deleting edges instead.")
    ] = False,
    cap: CapOption = None,
    output: OutputOption = None,
    output_format: FormatOption = OutputFormat.TEXT,
):
    """
    Minimum removal set lowering the rank by k.

    Example:
        rankred reduce --partition model.txt --k 2
    """
    _finish(
        RunConfig(
            Command.REDUCE,
            graph=graph,
            bipartite=bipartite,
            partition=partition,
            k=k,
            matching=matching,
            cap=cap,
            output=output,
            output_format=output_format,
        )
    )


@app.command("gadget-tedge")
def gadget_tedge(
    graph: Annotated[str, typer.Option(help="Source graph G.")],
    t: Annotated[int, typer.Option(help="Number of edges the subgraph must induce.")],
    output: OutputOption = None,
    output_format: FormatOption = OutputFormat.TEXT,
):
    """
    Transversal rank reduction instance encoding min t-edge subgraph on --graph.
    """
    _finish(RunConfig(Command.GADGET_TEDGE, graph=graph, t=t, output=output, output_format=output_format))


@app.command("gadget-clique")
def gadget_clique(
    graph: Annotated[str, typer.Option(help="Clique instance H.")],
    ell: Annotated[int, typer.Option(help="Clique size.")],
    cap: CapOption = None,
    output: OutputOption = None,
    output_format: FormatOption = OutputFormat.TEXT,
):
    """
    Partial vertex cover gadget for (H, ell), after preprocessing H.

    Example:
        rankred gadget-clique --graph h.txt --ell 6
    """
    _finish(RunConfig(Command.GADGET_CLIQUE, graph=graph, ell=ell, cap=cap, output=output, output_format=output_format))


@app.command("harness-dks")
def harness_dks(
    graph: Annotated[str, typer.Option(help="Input graph.")],
    k: Annotated[int, typer.Option(help="Number of vertices to select.")],
    approx_factor: Annotated[
        int, typer.Option(help="Inflate the exact min t-edge strategy by this factor before running the harness.")
    ] = 1,
    cap: CapOption = None,
    output: OutputOption = None,
    output_format: FormatOption = OutputFormat.TEXT,
):
    """
    Densest k-subgraph through the min t-edge subgraph harness.
    """
    _finish(
        RunConfig(
            Command.HARNESS_DKS,
            graph=graph,
            k=k,
            approx_factor=approx_factor,
            cap=cap,
            output=output,
            output_format=output_format,
        )
    )


@app.command()
def verify(
    gadget: Annotated[Optional[str], typer.Option(help="Gadget file written by gadget-tedge or gadget-clique.")] = None,
    x: Annotated[Optional[str], typer.Option(help="Index list of the removal set / partial vertex cover.")] = None,
    y: Annotated[Optional[str], typer.Option(help="Index list of the witness set (t-edge gadgets).")] = None,
    pair: Annotated[
        Tuple[str, str, str], typer.Option(help="Shorthand for --gadget, --x and --y.")
    ] = (None, None, None),
    output_format: FormatOption = OutputFormat.TEXT,
):
    """
    Check a certificate against a gadget. Exit status 2 when it is rejected.

    Example:
        rankred verify --pair gadget.txt x.txt y.txt
    """
    if pair[0] is not None:
        gadget, x, y = pair
    _finish(RunConfig(Command.VERIFY, gadget=gadget, x=x, y=y, output_format=output_format))


@app.command()
def oracle(
    problem: Annotated[OracleProblem, typer.Option(help="Problem solved by exhaustive search.")],
    graph: GraphOption = None,
    bipartite: BipartiteOption = None,
    partition: PartitionOption = None,
    k: Annotated[Optional[int], typer.Option(help="k for rank-reduction, densest, partial-vc and kcut.")] = None,
    t: Annotated[Optional[int], typer.Option(help="t for min-t-edge and matching.")] = None,
    ell: Annotated[Optional[int], typer.Option(help="Clique size for clique.")] = None,
    cap: CapOption = None,
    output_format: FormatOption = OutputFormat.TEXT,
):
    """
    Exhaustive reference solvers, refused above the enumeration cap.
    """
    _finish(
        RunConfig(
            Command.ORACLE,
            problem=problem,
            graph=graph,
            bipartite=bipartite,
            partition=partition,
            k=k,
            t=t,
            ell=ell,
            cap=cap,
            output_format=output_format,
        )
    )


@app.command()
def suite(
    name: str,
    seed: SeedOption = None,
    cap: CapOption = None,
    output: OutputOption = None,
    output_format: FormatOption = OutputFormat.TEXT,
):
    """
    Run an acceptance suite. The same name and seed always produce the same report.

    Example:
        rankred suite ip-lemma
    """
    set_default_seed(seed)
    _finish(RunConfig(Command.SUITE, suite_name=name, seed=seed, cap=cap, output=output, output_format=output_format))


@app.command()
def suites():
    """
    Print a formatted table of the available acceptance suites.
    """
    table = PrettyTable(["Name", "Description", "Properties"])
    for name, cls in AVAILABLE_SUITES.items():
        table.add_row([name, cls.description, ", ".join(cls.properties)])
    table.align = "l"
    print(table)


@app.command()
def config():
    """
    Print the effective enumeration cap and default seed (RANKRED_CAP, RANKRED_SEED).
    """
    table = PrettyTable(["Setting", "Value"])
    table.add_row(["RANKRED_CAP", get_enumeration_cap()])
    table.add_row(["RANKRED_SEED", get_default_seed()])
    table.align = "l"
    print(table)


if __name__ == "__main__":
    app()
