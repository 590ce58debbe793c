"""Computations in the classical Weyl groups ``A x| S_n`` with ``A`` inside ``(C_2)^n``."""

from .groups import (
    CutoffExceeded,
    CycleType,
    GroupSpec,
    Permutation,
    WeylElement,
    compose,
    conjugate,
    enumerate_group,
    inverse,
    order,
    power,
    sign_cycle_decompose,
)

__version__ = "0.1.0"

__all__ = [
    "CutoffExceeded",
    "CycleType",
    "GroupSpec",
    "Permutation",
    "WeylElement",
    "compose",
    "conjugate",
    "enumerate_group",
    "inverse",
    "order",
    "power",
    "sign_cycle_decompose",
]
