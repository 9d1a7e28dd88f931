"""Folded Reed-Solomon codes and their list decoding."""

from .bounds import decoding_radius, frs_affine_bound, frs_list_bound, generic_list_bound, johnson_compare
from .decoder import DecodeOutcome, InterpolationPoly, decode, extract_subspace, interpolate
from .errors import ContractViolation, EnumerationLimitExceeded, ParameterError, ParseError
from .field import FieldElement, PrimeField, make_field
from .frs import FoldedWord, FrsParams, agreement, canonical_params, corrupt, distance, encode, make_params
from .linalg import Matrix, nullspace, rank, solve_affine
from .poly import Poly
from .subspace import AffineSubspace

__version__ = "0.1.0"
