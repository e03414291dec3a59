"""Strongly MDS convolutional codes: construction, classification, decoding.

The package is organized in layers.  ``galois`` implements finite field
arithmetic on int-encoded elements, ``poly`` and ``linalg`` build polynomial
and matrix utilities on top of it, ``code`` holds convolutional code
descriptions and their sliding matrices, ``distances`` computes column
distances and classification flags, ``superregular`` covers lower triangular
Toeplitz matrices with nonzero proper minors, ``construct`` turns such a
matrix into a certified code, and ``decoder`` runs windowed feedback
decoding.  ``fixtures`` bundles the reference codes used by the golden
self-checks in ``selftest`` and by the ``convmds`` command line tool.
"""

from .code import (CodeSpec, dual, laurent_table, load_code, make_code,
                   save_code, sliding_generator, sliding_parity,
                   systematic_sliding_parity)
from .construct import construct_dual_mds, construct_strongly_mds
from .decoder import (DecodeReport, ReceivedWord, encode_word,
                      feedback_decode, load_received, make_error_pattern,
                      make_received, save_received, simulate, solve_eta0)
from .distances import (column_distance, free_distance, griesmer_feasible,
                        has_mdp_bruteforce, has_mdp_minors, is_strongly_mds,
                        lm_params, profile, singleton_bound)
from .errors import CodingError
from .fixtures import all_fixtures, fixture, reference_toeplitz
from .galois import FiniteField, field_make, parse_field, standard_field
from .superregular import (LowerToeplitz, inverse_superregular,
                           is_superregular, search_toeplitz, toeplitz)

__version__ = "0.1.0"

__all__ = [
    "CodeSpec",
    "CodingError",
    "DecodeReport",
    "FiniteField",
    "LowerToeplitz",
    "ReceivedWord",
    "all_fixtures",
    "column_distance",
    "construct_dual_mds",
    "construct_strongly_mds",
    "dual",
    "encode_word",
    "feedback_decode",
    "field_make",
    "fixture",
    "free_distance",
    "griesmer_feasible",
    "has_mdp_bruteforce",
    "has_mdp_minors",
    "inverse_superregular",
    "is_strongly_mds",
    "is_superregular",
    "laurent_table",
    "lm_params",
    "load_code",
    "load_received",
    "make_code",
    "make_error_pattern",
    "make_received",
    "parse_field",
    "profile",
    "reference_toeplitz",
    "save_code",
    "save_received",
    "search_toeplitz",
    "simulate",
    "singleton_bound",
    "sliding_generator",
    "sliding_parity",
    "solve_eta0",
    "standard_field",
    "systematic_sliding_parity",
    "toeplitz",
]
