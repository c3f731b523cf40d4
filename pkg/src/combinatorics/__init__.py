from src.combinatorics.partitions import Partition, multinomial, partitions_of, z_of
from src.combinatorics.permutations import Permutation, all_permutations, sign

__all__ = [
    "Partition",
    "Permutation",
    "all_permutations",
    "multinomial",
    "partitions_of",
    "sign",
    "z_of",
]
