from dataclasses import dataclass, field
from typing import FrozenSet, Hashable, Iterable, Tuple

from rankred.matroids.base import MatroidModel
from rankred.utils.exceptions import CertificateError, InfeasibleSolutionError, InvalidParameterError


@dataclass(frozen=True)
class RankReductionInstance:
    """
    Rank reduction: find a minimum X with r(E \\ X) <= r(E) - k, for 1 <= k <= r(E).
    """

    matroid: MatroidModel
    k: int
    full_rank: int = field(init=False)

    def __post_init__(self):
        full_rank = self.matroid.full_rank
        if not 1 <= self.k <= full_rank:
            raise InvalidParameterError("k", self.k, f"must lie in 1..r(E) = 1..{full_rank}")
        object.__setattr__(self, "full_rank", full_rank)

    @property
    def bound(self) -> int:
        """Largest admissible rank after removal, r(E) - k."""
        return self.full_rank - self.k

    def is_feasible(self, removed: Iterable) -> bool:
        return self.matroid.rank(removed) <= self.bound


@dataclass(frozen=True)
class Solution:
    """Removal set together with its rank certificate."""

    removed: FrozenSet[Hashable]
    certified_rank_after: int
    full_rank: int
    k: int

    @classmethod
    def certify(cls, instance: RankReductionInstance, removed: Iterable) -> "Solution":
        """
        Re-evaluate the rank oracle on E \\ X.

        Raises:
            InfeasibleSolutionError: the rank did not drop by k
        """
        removed = instance.matroid.check_subset(removed)
        rank_after = instance.matroid.rank(removed)
        if rank_after > instance.bound:
            raise InfeasibleSolutionError(len(removed), rank_after, instance.bound)
        return cls(removed, rank_after, instance.full_rank, instance.k)

    @classmethod
    def certified_by_solver(cls, instance: RankReductionInstance, removed: Iterable) -> "Solution":
        """Like `certify`, but a failure is a solver bug rather than a user error."""
        try:
            return cls.certify(instance, removed)
        except InfeasibleSolutionError as e:
            raise CertificateError(f"Solver output for {instance.matroid!r}, k={instance.k} is infeasible: {e}")

    @property
    def size(self) -> int:
        return len(self.removed)

    @property
    def sorted_removed(self) -> Tuple:
        return tuple(sorted(self.removed))

    def verify(self, matroid: MatroidModel) -> bool:
        rank_after = matroid.rank(self.removed)
        return rank_after == self.certified_rank_after and rank_after <= self.full_rank - self.k
