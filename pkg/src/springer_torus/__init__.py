"""Exact computation of the Springer morphism on the maximal torus of a simple group."""

__version__ = "0.1.0"

from .exact_linear import RationalMatrix, SingularMatrixError, mat_inverse, mat_mul, solve
from .rootsystem import LieType, RootSystemData, build, inner_product
from .weyl import is_dominant, orbit, simple_reflection, to_dominant
from .repweights import WeightMultiset, dominant_weights_below, expand, freudenthal, weyl_dimension
from .springer import (
    CharacterCombo,
    NotAlmostFaithfulError,
    SpringerResult,
    TorusPoint,
    coefficients,
    evaluate,
    identity_report,
    moment_vector,
    s_matrix_bruteforce,
    s_matrix_closed,
    springer_torus,
    torus_from_symplectic_eigenvalues,
    x_long,
)
