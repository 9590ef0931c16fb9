"""Exact Clifford algebra engine for deciding innerness of Bogolyubov automorphisms."""

from .bogolyubov import BogolyubovAction, check_automorphism, lemma3_witness_check
from .clifford import Multivector, blade_mul, grade_project, mv_inverse, mv_mul, parse_multivector
from .errors import (
    CliffordError,
    DimensionMismatch,
    InfiniteCodimension,
    InvariantViolation,
    NotInvertible,
    NotOrthogonal,
    WindowTooSmall,
)
from .finitary import FinitaryOrthogonal, check_orthogonal, eigen_data, invariant_core
from .innerness import InnernessVerdict, centralizer, criterion, decide, solve_witness, tensor_split_check
from .quadratic import QuadraticSpace, Subspace
from .scalars import Scalar, parse_scalar

__version__ = "0.1.0"
