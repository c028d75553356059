"""Exact spectral toolkit for the sequence-defined cograph family C(a1,...,a2k)."""

from ._core import (
    __version__,
    antiregular,
    build,
    build_direct,
    charpoly_exact,
    graph6_dumps,
    graph6_loads,
    inertia,
    interval_check,
    multiplicities,
    psi,
    psi_pi,
    quotient_matrix,
    recognize,
    verify,
)

__all__ = [
    "__version__",
    "antiregular",
    "build",
    "build_direct",
    "charpoly_exact",
    "graph6_dumps",
    "graph6_loads",
    "inertia",
    "interval_check",
    "multiplicities",
    "psi",
    "psi_pi",
    "quotient_matrix",
    "recognize",
    "verify",
]
