"""Generator counts for finite algebras and orders."""

from ._core import (
    OrdgenError,
    analyze,
    copy_capacity,
    density,
    gen_count,
    gen_count_lower,
    gen_count_power,
    gen_count_twisted,
    oracle_count,
    quaternion,
    sample,
)

__all__ = [
    "OrdgenError",
    "analyze",
    "copy_capacity",
    "density",
    "gen_count",
    "gen_count_lower",
    "gen_count_power",
    "gen_count_twisted",
    "oracle_count",
    "quaternion",
    "sample",
]
