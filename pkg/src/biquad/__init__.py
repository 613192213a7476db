"""Exact biquadratic solving, nested-radical denesting and golden-ratio representations."""

from .denest import DenestResult, DenestStatus, canonicalize, denest_sqrt, equal, minimal_polynomial, same_roots
from .exact import QuadExt, Radical, Rational, nth_root_decimal, sign_of, sqrt_rational, to_decimal
from .matrices import Matrix, charpoly, det, path_adjacency
from .polynomial import Polynomial, RingValue, eval_at, is_root
from .solver import (
    GOLDEN_RATIO,
    GoldenRep,
    Method,
    SolutionSet,
    StepLabel,
    TraceStep,
    golden_power,
    golden_section,
    nth_root_representation,
    solve_biquadratic_perfect_square,
    solve_biquadratic_substitution,
    solve_equation,
    solve_quadratic,
    verify_golden_rep,
)

__version__ = "0.1.0"
