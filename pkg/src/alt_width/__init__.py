"""Conjugacy width in the infinite alternating group.

Constructive certificates for the bound ``width_h(g) <= 4 wl(g)/wl(h) + 4``,
an exhaustive oracle for small supports, and the class metric built on top.
"""

from .constructions import (
    Certificate,
    Chirality,
    FactorPair,
    VerificationReport,
    decompose,
    lemma_a,
    lemma_b,
    lemma_c,
    sublemma_factor,
    verify_certificate,
)
from .errors import AltWidthError
from .metrics import ClassId, d_bounds, experiment_quasi_isometry, lambda_class, psi, sample_classes
from .oracle import ExactLambda, UniverseSpec, enumerate_class, exact_d, exact_lambda
from .perm import (
    CycleType,
    Parity,
    Permutation,
    compose,
    conjugate,
    conjugator,
    cycle_type,
    even_conjugator,
    format_cycles,
    inverse,
    iota,
    parity,
    parse_cycles,
    product,
    word_length,
)

__version__ = "0.1.0"

__all__ = [
    "AltWidthError",
    "Certificate",
    "Chirality",
    "ClassId",
    "CycleType",
    "ExactLambda",
    "FactorPair",
    "Parity",
    "Permutation",
    "UniverseSpec",
    "VerificationReport",
    "compose",
    "conjugate",
    "conjugator",
    "cycle_type",
    "d_bounds",
    "decompose",
    "enumerate_class",
    "even_conjugator",
    "exact_d",
    "exact_lambda",
    "experiment_quasi_isometry",
    "format_cycles",
    "inverse",
    "iota",
    "lambda_class",
    "lemma_a",
    "lemma_b",
    "lemma_c",
    "parity",
    "parse_cycles",
    "product",
    "psi",
    "sample_classes",
    "sublemma_factor",
    "verify_certificate",
    "word_length",
]
