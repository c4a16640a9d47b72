from typing import Optional

from rankred.utils.exceptions import InvalidParameterError

from .base import AcceptanceSuite, PropertyResult, SuiteReport
from .clique import CliqueClaimsSuite
from .densest import DensestSuite
from .intersection import IntersectionSuite
from .ip_lemma import IpLemmaSuite
from .kcut import KCutSuite
from .konig import KonigSuite
from .partition import PartitionSuite
from .tedge import TEdgeIdentitySuite

AVAILABLE_SUITES = {
    s.name: s
    for s in (
        PartitionSuite,
        TEdgeIdentitySuite,
        DensestSuite,
        CliqueClaimsSuite,
        KonigSuite,
        IpLemmaSuite,
        IntersectionSuite,
        KCutSuite,
    )
}


def suite(name: str, seed: Optional[int] = None, cap: Optional[int] = None, progress: bool = True) -> SuiteReport:
    """
    Run the acceptance suite registered under `name`.

    Raises:
        InvalidParameterError: unknown suite name
    """
    if name not in AVAILABLE_SUITES:
        raise InvalidParameterError("suite", name, f"must be one of {', '.join(AVAILABLE_SUITES)}")
    return AVAILABLE_SUITES[name](seed=seed, cap=cap, progress=progress).run()


__all__ = [
    "AVAILABLE_SUITES",
    "AcceptanceSuite",
    "PropertyResult",
    "SuiteReport",
    "CliqueClaimsSuite",
    "DensestSuite",
    "IntersectionSuite",
    "IpLemmaSuite",
    "KCutSuite",
    "KonigSuite",
    "PartitionSuite",
    "TEdgeIdentitySuite",
    "suite",
]
