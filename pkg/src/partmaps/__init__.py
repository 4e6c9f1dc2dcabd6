"""Finite transformation semigroups that preserve a set partition.

Membership tests, theorem-based classification of regular / unit-regular /
idempotent elements with explicit witnesses, deterministic exhaustive
enumeration, and exact counting formulas cross-validated against brute-force
oracles.
"""

from partmaps.algebra import (
    BlockMap,
    BlockMapFamily,
    Character,
    block_map_family,
    character,
    in_Gamma,
    in_S,
    in_Sigma,
    in_T,
)
from partmaps.classify import (
    ClassificationReport,
    classify,
    idempotent_in_Gamma,
    is_idempotent,
    regular_brute,
    regular_in_Gamma,
    unit_regular_brute,
    unit_regular_in_Sigma,
    unit_regular_in_T,
    witness_regular_Gamma,
    witness_unit_regular_T,
)
from partmaps.core import (
    CapExceeded,
    MembershipError,
    ParseError,
    Partition,
    PartitionShape,
    SubShape,
    Transformation,
    compose,
    parse_partition,
    parse_shape,
    parse_transformation,
)
from partmaps.counting import (
    binomial,
    count_E_Gamma,
    count_E_Gamma_uniform,
    count_E_with_image,
    count_Gamma,
    count_image_subpartitions,
    count_image_subpartitions_formula,
    count_Reg_Gamma,
    count_Reg_with_image,
    factorial,
    stirling2,
    surjections,
)
from partmaps.enumeration import (
    enum_all,
    enum_Gamma,
    enum_Gamma_with_image,
    enum_Gamma_with_rank,
    enum_image_subpartitions,
    enum_S,
    enum_Sigma,
    enum_T,
    iter_set_partitions,
)
from partmaps.kernels import BACKEND, PackedPool

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BlockMap",
    "BlockMapFamily",
    "CapExceeded",
    "Character",
    "ClassificationReport",
    "MembershipError",
    "PackedPool",
    "ParseError",
    "Partition",
    "PartitionShape",
    "SubShape",
    "Transformation",
    "binomial",
    "block_map_family",
    "character",
    "classify",
    "compose",
    "count_E_Gamma",
    "count_E_Gamma_uniform",
    "count_E_with_image",
    "count_Gamma",
    "count_Reg_Gamma",
    "count_Reg_with_image",
    "count_image_subpartitions",
    "count_image_subpartitions_formula",
    "enum_Gamma",
    "enum_Gamma_with_image",
    "enum_Gamma_with_rank",
    "enum_S",
    "enum_Sigma",
    "enum_T",
    "enum_all",
    "enum_image_subpartitions",
    "factorial",
    "idempotent_in_Gamma",
    "in_Gamma",
    "in_S",
    "in_Sigma",
    "in_T",
    "is_idempotent",
    "iter_set_partitions",
    "parse_partition",
    "parse_shape",
    "parse_transformation",
    "regular_brute",
    "regular_in_Gamma",
    "stirling2",
    "surjections",
    "unit_regular_brute",
    "unit_regular_in_Sigma",
    "unit_regular_in_T",
    "witness_regular_Gamma",
    "witness_unit_regular_T",
]
