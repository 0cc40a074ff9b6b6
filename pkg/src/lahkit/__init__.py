"""Exact higher-level Lah and Stirling numbers.

Triangles live in :mod:`lahkit.triangles`, polynomial bases and their
transition matrices in :mod:`lahkit.polynomials`, and the brute-force
partition oracle in :mod:`lahkit.oracle`.
"""
from ._backend import BACKEND
from .errors import ConsistencyError, OracleLimitError, ParameterError
from .oracle import BlockWeighting, classic_count, enumerate_profiles, oracle_count
from .polynomials import (
    STANDARD,
    BasisTag,
    Polynomial,
    TransitionMatrix,
    convert,
    derivative,
    evaluate,
    factorial_poly,
    falling,
    rising,
    transition_matrix,
)
from .triangles import (
    HLAH,
    OLAH,
    STIRLING1,
    STIRLING2,
    Family,
    TriangleKind,
    TriangleTable,
    closed_form,
    lah_hl_explicit,
    lah_higher_level,
    lah_order,
    lah_order_via_stirling,
    lr_lah,
    lrlah_kind,
    signed_value,
    stirling1_hl,
    stirling2_hl,
    triangle,
)

__version__ = "0.1.0"
