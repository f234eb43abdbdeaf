"""Exact computations behind the classification of Weierstrass loci of genus at most 6."""

from .semigroup import (
    NumericalSemigroup,
    RamificationSequence,
    SemigroupError,
    VanishingSequence,
    expected_dimension,
    from_gaps,
    from_generators,
    is_symmetric,
    minimal_generators,
    named_semigroups,
    ordinary_weierstrass_count,
    ramification_and_weight,
    vanishing_sequence,
)

__version__ = "0.1.0"
