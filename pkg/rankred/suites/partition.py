from typing import Iterator

from rankred.matroids.partition import PartitionModel
from rankred.solvers.enumeration import brute_force_rankred
from rankred.solvers.partition import solve_partition_rankred
from rankred.suites.base import AcceptanceSuite
from rankred.utils.constants import (
    PARTITION_SUITE_INSTANCES,
    PARTITION_SUITE_MAX_BLOCKS,
    PARTITION_SUITE_MAX_ELEMENTS,
)


class PartitionSuite(AcceptanceSuite):
    """
    Random partition models with at most 10 elements and 4 blocks. For every valid k the
    knapsack-style dynamic program must match brute force, and the transversal encoding
    of the model must agree with it on the rank after removal.
    """

    name = "partition"
    description = "partition rank reduction: dynamic program vs brute force"
    properties = ("dp-equals-brute-force", "certificate", "transversal-encoding")

    def generate(self) -> Iterator[PartitionModel]:
        for _ in range(PARTITION_SUITE_INSTANCES):
            n = int(self.rng.integers(1, PARTITION_SUITE_MAX_ELEMENTS + 1))
            p = int(self.rng.integers(1, min(n, PARTITION_SUITE_MAX_BLOCKS) + 1))
            cuts = sorted(int(c) for c in self.rng.choice(range(1, n), size=p - 1, replace=False)) if p > 1 else []
            bounds = [0] + cuts + [n]
            sizes = [bounds[i + 1] - bounds[i] for i in range(p)]
            caps = [int(self.rng.integers(0, s + 1)) for s in sizes]
            # at least one valid k
            caps[0] = max(caps[0], 1)
            yield PartitionModel.from_sizes(list(zip(sizes, caps)))

    def describe(self, instance: PartitionModel) -> str:
        blocks = "; ".join(f"cap {b.cap}: {','.join(map(str, b.sorted_elements))}" for b in instance.blocks)
        return f"partition [{blocks}]"

    def check(self, instance: PartitionModel):
        transversal = instance.to_transversal()
        for k in range(1, instance.full_rank + 1):
            solution = self.compute("dp-equals-brute-force", instance, lambda: solve_partition_rankred(instance, k))
            if solution is None:
                continue
            self.expect(
                "dp-equals-brute-force",
                instance,
                lambda: solution.size == brute_force_rankred(instance, k, self.cap).size,
            )
            self.expect("certificate", instance, lambda: solution.verify(instance))
            self.expect(
                "transversal-encoding",
                instance,
                lambda: transversal.rank(solution.removed) == instance.rank(solution.removed)
                and transversal.full_rank == instance.full_rank,
            )
