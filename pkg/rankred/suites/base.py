from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

import numpy as np
from loguru import logger
from prettytable import PrettyTable
from tqdm import tqdm

from rankred.utils.config import get_default_seed, resolve_cap
from rankred.utils.exceptions import RankRedException
from rankred.utils.io import format_record


@dataclass
class PropertyResult:
    """
    Pass and failure counts of one checked property
    """

    name: str
    passed: int = 0
    failed: int = 0
    counterexamples: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0


@dataclass
class SuiteReport:
    """
    Outcome of an acceptance suite run. Contains no timings, so identical
    (suite, seed, cap) triples give identical reports.
    """

    suite: str
    seed: int
    cap: int
    instances: int
    properties: List[PropertyResult]

    @property
    def ok(self) -> bool:
        return all(p.ok for p in self.properties)

    @property
    def passed(self) -> int:
        return sum(p.passed for p in self.properties)

    @property
    def failed(self) -> int:
        return sum(p.failed for p in self.properties)

    def to_text(self) -> str:
        table = PrettyTable(["Property", "Passed", "Failed"])
        for p in self.properties:
            table.add_row([p.name, p.passed, p.failed])
        table.align = "l"
        lines = [f"suite {self.suite} seed {self.seed} cap {self.cap} instances {self.instances}", str(table)]
        for p in self.properties:
            lines.extend(f"counterexample {p.name}: {c}" for c in p.counterexamples)
        lines.append("PASS" if self.ok else "FAIL")
        return "\n".join(lines) + "\n"

    def to_record(self) -> str:
        entries: List[Tuple[str, Any]] = [
            ("suite", self.suite),
            ("seed", self.seed),
            ("cap", self.cap),
            ("instances", self.instances),
        ]
        for p in self.properties:
            entries.append((f"passed.{p.name}", p.passed))
            entries.append((f"failed.{p.name}", p.failed))
            entries.extend((f"counterexample.{p.name}", c) for c in p.counterexamples)
        entries.append(("status", "pass" if self.ok else "fail"))
        return format_record(entries)


class AcceptanceSuite(ABC):
    """
    Abstract acceptance suite. Subclasses list their properties, generate
    instances from the seeded generator and check each instance.

    Instances are checked sequentially in generation order.
    """

    name: Optional[str] = None
    description = ""
    properties: Tuple[str, ...] = ()
    max_counterexamples = 5

    def __init__(self, seed: Optional[int] = None, cap: Optional[int] = None, progress: bool = True):
        """
        Parameters:
            seed :
                Seed of the instance generator. Defaults to RANKRED_SEED.
            cap :
                Enumeration cap handed to the exhaustive oracles. Defaults to RANKRED_CAP.
            progress :
                Whether to display a tqdm progress bar.
        """
        self.seed = get_default_seed() if seed is None else int(seed)
        self.cap = resolve_cap(cap)
        self.progress = progress
        self.rng = np.random.default_rng(self.seed)
        self._results: Dict[str, PropertyResult] = {p: PropertyResult(p) for p in self.properties}

    @abstractmethod
    def generate(self) -> Iterable[Any]:
        """Instances of the suite, drawn from `self.rng`."""
        raise NotImplementedError

    @abstractmethod
    def check(self, instance: Any):
        """Check every property on one instance through `expect`."""
        raise NotImplementedError

    def describe(self, instance: Any) -> str:
        """Replayable one-line description of an instance."""
        return repr(instance)

    def expect(self, prop: str, instance: Any, predicate: Callable[[], bool]):
        """
        Record the outcome of `predicate` for `prop`. A library exception counts as
        a failure and its message is kept with the counterexample.
        """
        try:
            holds = bool(predicate())
        except RankRedException as e:
            self._fail(prop, instance, e)
            return
        if holds:
            self._results[prop].passed += 1
        else:
            self._fail(prop, instance)

    def compute(self, prop: str, instance: Any, func: Callable[[], Any]) -> Optional[Any]:
        """Value of `func`, or None after recording a failure of `prop` when it raises."""
        try:
            return func()
        except RankRedException as e:
            self._fail(prop, instance, e)
            return None

    def _fail(self, prop: str, instance: Any, error: Optional[Exception] = None):
        result = self._results[prop]
        reason = "" if error is None else f" ({error.__class__.__name__}: {error})"
        result.failed += 1
        if len(result.counterexamples) < self.max_counterexamples:
            result.counterexamples.append(self.describe(instance) + reason)
        logger.debug(f"{self.name}: {prop} fails on {self.describe(instance)}{reason}")

    def run(self) -> SuiteReport:
        instances = list(self.generate())
        logger.info(f"Running suite {self.name} on {len(instances)} instances (seed={self.seed}, cap={self.cap})")
        for instance in tqdm(instances, desc=self.name, disable=not self.progress):
            self.check(instance)
        report = SuiteReport(self.name, self.seed, self.cap, len(instances), list(self._results.values()))
        if report.ok:
            logger.info(f"Suite {self.name}: {report.passed} checks passed")
        else:
            logger.warning(f"Suite {self.name}: {report.failed} checks failed")
        return report
