from abc import ABC, abstractmethod
from functools import cached_property
from itertools import combinations
from typing import Callable, Dict, FrozenSet, Hashable, Iterable, Optional, Tuple

from loguru import logger

from rankred.utils.config import resolve_cap
from rankred.utils.exceptions import (
    ElementNotInGroundSetError,
    EnumerationCapExceededError,
    MatroidOracleError,
)


class MatroidModel(ABC):
    """
    Base class of every matroid representation.

    Subclasses implement `_rank_after_removal`; all rank queries take the set X
    of removed elements and answer r(E \\ X).
    """

    @property
    def name(self) -> str:
        return self.__class__.__name__

    @property
    @abstractmethod
    def ground_set(self) -> Tuple[Hashable, ...]:
        """Elements of the matroid in their canonical (sorted) order."""
        raise NotImplementedError

    @abstractmethod
    def _rank_after_removal(self, removed: FrozenSet) -> int:
        raise NotImplementedError

    @cached_property
    def _ground_lookup(self) -> FrozenSet:
        return frozenset(self.ground_set)

    @cached_property
    def element_index(self) -> Dict[Hashable, int]:
        return {e: i for i, e in enumerate(self.ground_set)}

    def check_subset(self, elements: Iterable) -> FrozenSet:
        chosen = frozenset(elements)
        outside = chosen - self._ground_lookup
        if outside:
            raise ElementNotInGroundSetError(outside, repr(self))
        return chosen

    def rank(self, removed: Iterable = ()) -> int:
        """r(E \\ X) for the removed set X."""
        return self._rank_after_removal(self.check_subset(removed))

    @cached_property
    def full_rank(self) -> int:
        """r(E)"""
        return self.rank(())

    def rank_of(self, subset: Iterable) -> int:
        """r(S) for a subset S of the ground set."""
        kept = self.check_subset(subset)
        return self._rank_after_removal(self._ground_lookup - kept)

    def is_independent(self, subset: Iterable) -> bool:
        kept = self.check_subset(subset)
        return self.rank_of(kept) == len(kept)

    def as_oracle(self) -> "IndependenceOracle":
        """
        Independence oracle over element indices 0..|E|-1, index i standing for
        `ground_set[i]`.
        """
        ground = self.ground_set
        return IndependenceOracle(len(ground), lambda s: self.is_independent(ground[i] for i in s), name=self.name)

    def __len__(self) -> int:
        return len(self.ground_set)

    def __repr__(self) -> str:
        return f"{self.name}(|E|={len(self.ground_set)})"


class IndependenceOracle(MatroidModel):
    """
    Matroid on the elements 0..ground_size-1 known only through an independence test.

    Ranks are computed with the matroid greedy algorithm, which is exact whenever
    the oracle describes a matroid.
    """

    def __init__(
        self, ground_size: int, is_independent: Callable[[FrozenSet[int]], bool], name: Optional[str] = None
    ):
        self.ground_size = int(ground_size)
        self._is_independent = is_independent
        self._name = name or "IndependenceOracle"

    @property
    def name(self) -> str:
        return self._name

    @property
    def ground_set(self) -> Tuple[int, ...]:
        return tuple(range(self.ground_size))

    def is_independent(self, subset: Iterable[int]) -> bool:
        return bool(self._is_independent(self.check_subset(subset)))

    def greedy_basis(self, subset: Iterable[int]) -> FrozenSet[int]:
        basis = set()
        for e in sorted(self.check_subset(subset)):
            if self.is_independent(basis | {e}):
                basis.add(e)
        return frozenset(basis)

    def rank_of(self, subset: Iterable[int]) -> int:
        return len(self.greedy_basis(subset))

    def _rank_after_removal(self, removed: FrozenSet) -> int:
        return self.rank_of(self._ground_lookup - removed)

    def as_oracle(self) -> "IndependenceOracle":
        return self

    def restrict(self, removed: Iterable[int]) -> "IndependenceOracle":
        """
        Same ground set with the removed elements turned into loops, so that
        the rank of the result equals r(E \\ X).
        """
        dropped = self.check_subset(removed)
        return IndependenceOracle(
            self.ground_size,
            lambda s: not (s & dropped) and self._is_independent(s),
            name=f"{self.name}\\{sorted(dropped)}",
        )

    def check_axioms(self, cap: Optional[int] = None) -> bool:
        """
        Exhaustively check the independence axioms (empty set, downward closure, exchange).

        Raises:
            EnumerationCapExceededError: the ground set is larger than the cap
            MatroidOracleError: an axiom fails
        """
        cap = resolve_cap(cap)
        if self.ground_size > cap:
            raise EnumerationCapExceededError("Axiom check ground set", self.ground_size, cap)
        if not self._is_independent(frozenset()):
            raise MatroidOracleError(self.name, "the empty set is dependent")
        independent = [
            frozenset(c)
            for size in range(self.ground_size + 1)
            for c in combinations(range(self.ground_size), size)
            if self._is_independent(frozenset(c))
        ]
        family = set(independent)
        for s in independent:
            for e in s:
                if s - {e} not in family:
                    raise MatroidOracleError(self.name, f"{sorted(s)} is independent but {sorted(s - {e})} is not")
        for small in independent:
            for large in independent:
                if len(large) > len(small) and not any(small | {e} in family for e in large - small):
                    raise MatroidOracleError(
                        self.name, f"no element of {sorted(large)} extends the independent set {sorted(small)}"
                    )
        logger.debug(f"{self.name}: {len(independent)} independent sets satisfy the matroid axioms")
        return True

    def __repr__(self) -> str:
        return f"{self.name}(ground_size={self.ground_size})"
