"""Pentadiagonal linear system solvers with an exact symbolic rescue.

The package offers two single-sweep transformation solvers (downward with
backward substitution, upward with forward substitution), exact symbolic
variants that survive zero-pivot breakdown by substituting an indeterminate
and evaluating the result at zero, backward (column-reversed) systems, and
determinants as pivot products.  A FastAPI service exposes everything over
HTTP and the ``pentasolve`` CLI is a thin client for it.
"""

__version__ = "0.1.0"

from .backward import (BackwardPentaMatrix, backward_from_bands,
                       reversal_sign, reverse_permutation_apply,
                       solve_backward)
from .core import (Algorithm, DegreeCapExceeded, DimensionMismatch,
                   DivisionByZeroFunction, InvalidOrder, InvalidPadding,
                   ParseError, PentaError, PentaMatrix, PoleAtZero,
                   SingularMatrix, SolveReport, ZeroPivot, penta_from_bands,
                   penta_matvec)
from .fileformat import PentaFile, format_penta, parse_penta
from .oracle import DenseMatrix, dense_det, dense_solve
from .ptrans import (Ptrans1Factorization, Ptrans2Factorization, determinant,
                     factor_ptrans1, factor_ptrans2, solve_ptrans1,
                     solve_ptrans2)
from .symbolic import (Poly, RationalFunction, as_fraction, eval_at_zero,
                       format_ratfun, indeterminate, sptrans1, sptrans2)
from .systems import fourth_difference_system

__all__ = [
    "__version__",
    "Algorithm",
    "BackwardPentaMatrix",
    "DegreeCapExceeded",
    "DenseMatrix",
    "DimensionMismatch",
    "DivisionByZeroFunction",
    "InvalidOrder",
    "InvalidPadding",
    "ParseError",
    "PentaError",
    "PentaFile",
    "PentaMatrix",
    "Poly",
    "PoleAtZero",
    "Ptrans1Factorization",
    "Ptrans2Factorization",
    "RationalFunction",
    "SingularMatrix",
    "SolveReport",
    "ZeroPivot",
    "as_fraction",
    "backward_from_bands",
    "dense_det",
    "dense_solve",
    "determinant",
    "eval_at_zero",
    "factor_ptrans1",
    "factor_ptrans2",
    "format_penta",
    "format_ratfun",
    "fourth_difference_system",
    "indeterminate",
    "parse_penta",
    "penta_from_bands",
    "penta_matvec",
    "reversal_sign",
    "reverse_permutation_apply",
    "solve_backward",
    "solve_ptrans1",
    "solve_ptrans2",
    "sptrans1",
    "sptrans2",
]
