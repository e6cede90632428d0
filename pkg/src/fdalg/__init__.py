"""Finite-dimensional commutative algebras over the complex numbers.

Algebras are given by structure constants. The package computes products,
inverses, spectra, characters, ideals and quotients, semigroup convolution
algebras and their semicharacters, and checks normed-algebra inequalities.
"""

from .chars import (
    Character,
    Spectrum,
    characters,
    semisimple_reduction,
    spectral_radius,
    spectrum,
    witness_noninvertible,
)
from .config import Tolerances, tolerances
from .core import (
    Algebra,
    ValidationReport,
    function_algebra,
    invert,
    is_invertible,
    multiply,
    polynomial_quotient_algebra,
    random_element,
    regular_representation,
    validate_algebra,
)
from .errors import (
    ConvergenceFailure,
    DimensionMismatch,
    InapplicableNorm,
    NotAnIdeal,
    NotApplicable,
    NotASubsetIdeal,
    NotInvertible,
    NotProper,
    ParseError,
    PreconditionViolated,
    RankDeficient,
    SingularMatrix,
    ValidationError,
)
from .ideals import (
    Ideal,
    QuotientResult,
    character_kernel,
    ideal_to_subset,
    is_ideal,
    is_proper,
    maximal_ideal_containing,
    maximal_ideals,
    principal_ideal,
    quotient,
    vanishing_ideal,
)
from .norms import NormKind, check_normed_algebra, neumann_inverse, norm, verify_spectral_bounds
from .semigroup import (
    Semicharacter,
    Semigroup,
    character_from_semicharacter,
    convolve,
    delta,
    semicharacters,
    semigroup_algebra,
    validate_semigroup,
)

__version__ = "0.1.0"
