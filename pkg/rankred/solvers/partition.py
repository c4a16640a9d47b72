"""Exact rank reduction on partition matroids by a knapsack-style dynamic program."""

from typing import List, Tuple

import numpy as np
from loguru import logger

from rankred.matroids.partition import PartitionModel
from rankred.solvers.base import RankReductionInstance, Solution

_UNREACHABLE = np.iinfo(np.int64).max // 4


def min_slack_table(model: PartitionModel, k: int) -> np.ndarray:
    """
    table[i, v] = minimum sum of slacks c_j over subsets J of the blocks i..p-1
    with sum of caps d_j >= v, for v in 0..k. Row p is the empty suffix.
    """
    p = len(model.blocks)
    table = np.full((p + 1, k + 1), _UNREACHABLE, dtype=np.int64)
    table[p, 0] = 0
    targets = np.arange(k + 1)
    for i in range(p - 1, -1, -1):
        block = model.blocks[i]
        following = table[i + 1]
        taken = following[np.maximum(targets - block.cap, 0)] + block.slack
        taken = np.where(following[np.maximum(targets - block.cap, 0)] >= _UNREACHABLE, _UNREACHABLE, taken)
        table[i] = np.minimum(following, taken)
    return table


def choose_blocks(model: PartitionModel, k: int) -> Tuple[List[int], int]:
    """
    Lexicographically smallest optimal J: minimum sum of c_i subject to sum of d_i >= k.

    Returns:
        (J as sorted block indices, sum of c_i over J)
    """
    table = min_slack_table(model, k)
    chosen, target = [], k
    for i, block in enumerate(model.blocks):
        if target == 0:
            break
        if block.cap == 0:
            continue
        rest = table[i + 1, max(target - block.cap, 0)]
        if rest < _UNREACHABLE and rest + block.slack == table[i, target]:
            chosen.append(i)
            target = max(target - block.cap, 0)
    return chosen, int(table[0, k])


def solve_partition_rankred(m: PartitionModel, k: int) -> Solution:
    """
    Minimum removal set X with r(E \\ X) <= r(E) - k on a partition matroid.

    Picks the optimal block set J, removes the c_i lowest elements of each chosen block
    (leaving exactly d_i), then k further elements of the chosen blocks in block order,
    lowest first. The result has size k + sum of c_i over J.
    """
    instance = RankReductionInstance(m, k)
    chosen, slack = choose_blocks(m, k)
    removed, leftovers = [], []
    for i in chosen:
        elements = m.blocks[i].sorted_elements
        c = m.blocks[i].slack
        removed.extend(elements[:c])
        leftovers.extend(elements[c:])
    removed.extend(leftovers[:k])
    logger.info(f"Partition rank reduction k={k}: blocks {chosen}, slack {slack}, |X|={len(removed)}")
    return Solution.certified_by_solver(instance, removed)
