"""Desk-scale computations over a prime field: resolutions, colon ideals, pfaffians."""

from .colon import colon_ideal
from .linalg import DEFAULT_P
from .pfaffian import pfaffian_gorenstein_sample
from .poly import GradedIdealFp
from .regseq import OracleMinProvider, probabilistic_min_provider, random_ci_inside, regular_sequence_test
from .resolution import minimal_resolution_fp

__all__ = [
    "DEFAULT_P",
    "GradedIdealFp",
    "OracleMinProvider",
    "colon_ideal",
    "minimal_resolution_fp",
    "pfaffian_gorenstein_sample",
    "probabilistic_min_provider",
    "random_ci_inside",
    "regular_sequence_test",
]
