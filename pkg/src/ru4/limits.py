"""Desk-scale budgets shared by the enumeration kernels."""

import os

DEFAULT_ENUM_BITS = 26
DEFAULT_MATERIALIZE_WORDS = 1 << 22
DEFAULT_MAX_CODES = 100_000
SAMPLE_SIZE = 10_000
PAIRWISE_CHECK_WORDS = 1 << 12


def enum_bits_cap(override: int | None = None) -> int:
    """Enumeration cap in bits; ``RU4_MAX_ENUM_BITS`` overrides the default."""
    if override is not None:
        cap = override
    else:
        cap = int(os.environ.get("RU4_MAX_ENUM_BITS", DEFAULT_ENUM_BITS))
    if cap <= 0:
        raise ValueError(f"enumeration cap must be positive, got {cap}")
    return cap
