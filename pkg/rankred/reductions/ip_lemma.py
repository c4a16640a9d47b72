from math import comb
from typing import FrozenSet, Tuple

from loguru import logger

from rankred.utils.constants import MIN_CLIQUE_GADGET_ELL
from rankred.utils.exceptions import InvalidParameterError

IpTuple = Tuple[int, int, int, int]


def ip_objective(solution: IpTuple) -> int:
    x, y, z, _ = solution
    return x + 2 * y + 3 * z


def ip_lemma_enumerate(ell: int) -> FrozenSet[IpTuple]:
    """
    All minimizers of x + 2y + 3z over non-negative integers (x, y, z, s) with
    x + y + z - s = C(ell, 2) - ell and x <= C(s, 2).

    (C(ell, 2), 0, 0, ell) is feasible with objective C(ell, 2), and any tuple has
    objective >= x + y + z = C(ell, 2) - ell + s, so s <= ell bounds the search.
    """
    if ell < MIN_CLIQUE_GADGET_ELL:
        raise InvalidParameterError("ell", ell, f"must be at least {MIN_CLIQUE_GADGET_ELL}")
    budget = comb(ell, 2) - ell
    incumbent = comb(ell, 2)
    s_max = incumbent - budget

    best, minimizers = None, set()
    for s in range(s_max + 1):
        total = budget + s
        for x in range(min(comb(s, 2), total) + 1):
            for y in range(total - x + 1):
                candidate = (x, y, total - x - y, s)
                value = ip_objective(candidate)
                if best is None or value < best:
                    best, minimizers = value, {candidate}
                elif value == best:
                    minimizers.add(candidate)
    logger.debug(f"ell={ell}: optimum {best} reached by {sorted(minimizers)}")
    return frozenset(minimizers)
