from typing import Final, Tuple

DEFAULT_ENUMERATION_CAP: Final[int] = 16
DEFAULT_SEED: Final[int] = 1

# Clique gadget
MIN_CLIQUE_GADGET_ELL: Final[int] = 6
PADDING_CLIQUE_ORDER: Final[int] = 4

# Densest k-subgraph harness guarantee is z* / (DKS_GUARANTEE_DENOMINATOR * f**2)
DKS_GUARANTEE_DENOMINATOR: Final[int] = 9

# Acceptance suites
PARTITION_SUITE_INSTANCES: Final[int] = 200
PARTITION_SUITE_MAX_ELEMENTS: Final[int] = 10
PARTITION_SUITE_MAX_BLOCKS: Final[int] = 4
TEDGE_SUITE_MAX_ORDER: Final[int] = 4
TEDGE_SUITE_RANDOM_SUBSETS: Final[int] = 3
DKS_SUITE_INSTANCES: Final[int] = 100
DKS_SUITE_MAX_ORDER: Final[int] = 10
DKS_SUITE_INFLATED_FACTOR: Final[int] = 2
CLIQUE_SUITE_SAMPLES: Final[int] = 500
KONIG_SUITE_INSTANCES: Final[int] = 60
KONIG_SUITE_MAX_VERTICES: Final[int] = 10
KONIG_SUITE_MAX_EDGES: Final[int] = 12
IP_LEMMA_SUITE_ELLS: Final[Tuple[int, ...]] = tuple(range(6, 13))
INTERSECTION_SUITE_INSTANCES: Final[int] = 100
INTERSECTION_SUITE_MAX_EDGES: Final[int] = 12
INTERSECTION_SUITE_EXHAUSTIVE_EDGES: Final[int] = 8
KCUT_SUITE_MAX_ORDER: Final[int] = 5
