"""Exact congruence verification for cycle-indicator and Meixner polynomials."""

from .cycle_index import (
    CycleType,
    coefficient,
    cycle_indicator,
    cycle_indicator_direct,
    cycle_indicator_via_determinant,
    cycle_indicator_via_egf,
    enumerate_cycle_types,
    partition_count,
)
from .meixner import meixner_q, meixner_qstar
from .padic import PadicContext, binomial, factorial, is_prime
from .polyring import (
    KERNEL_BACKEND,
    MultiPoly,
    UniPoly,
    congruent_mod,
    substitute_univariate,
)

__version__ = "0.1.0"

__all__ = [
    "CycleType",
    "KERNEL_BACKEND",
    "MultiPoly",
    "PadicContext",
    "UniPoly",
    "binomial",
    "coefficient",
    "congruent_mod",
    "cycle_indicator",
    "cycle_indicator_direct",
    "cycle_indicator_via_determinant",
    "cycle_indicator_via_egf",
    "enumerate_cycle_types",
    "factorial",
    "is_prime",
    "meixner_q",
    "meixner_qstar",
    "partition_count",
    "substitute_univariate",
]
