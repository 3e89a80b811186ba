"""Structured inverse least squares: ``min_{A in S} ||A X - B||_F`` in closed form."""

from .dkw import dilation, min_dilation_mu
from .numlin import TrimmedSvd, pseudo_inverse, trimmed_svd
from .oracle import OracleResult, oracle_solve, residual
from .reduction import ReducedProblem, from_prototype, to_prototype
from .solver import (DegenerateInputError, Solution, SolutionCore, core, min_frobenius,
                     min_spectral_family, rho, sigma_spectral, solution_family, solve,
                     vector_min_frobenius, vector_min_spectral_family, vector_rho)
from .structures import (Kind, ScalarProduct, StructureClass, adjoint, is_member,
                         orthonormal_basis, structured_project)

__version__ = "0.1.0"
