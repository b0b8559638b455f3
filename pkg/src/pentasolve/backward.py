"""Backward (column-reversed) pentadiagonal systems.

A backward pentadiagonal matrix carries its five bands along the
anti-diagonals: row ``i`` holds ``b_i, a_i, d_i, c_i, e_i`` ending at
column ``n - i + 1``.  Multiplying a forward pentadiagonal matrix on the
right by the reversal permutation (which is its own inverse) produces
exactly this layout, so the backward matrix is stored through its forward
companion and solved by solving the companion system and reversing the
result.  The reversal permutation has determinant ``(-1)^(n(n-1)/2)``,
which is the only difference between the two determinants.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence, Union

from .core import Algorithm, PentaMatrix, SolveReport, penta_from_bands
from .ptrans import solve_ptrans1, solve_ptrans2
from .symbolic import sptrans1, sptrans2


@dataclass(frozen=True)
class BackwardPentaMatrix:
    """Anti-banded matrix stored as its forward companion ``P``.

    The represented matrix is ``P`` with its columns reversed.
    """

    forward: PentaMatrix

    @property
    def n(self) -> int:
        return self.forward.n

    def to_dense(self) -> list[list]:
        return [row[::-1] for row in self.forward.to_dense()]


def backward_from_bands(d: Sequence, a: Sequence, b: Sequence,
                        c: Sequence, e: Sequence) -> BackwardPentaMatrix:
    """Build a backward matrix from the five anti-bands.

    The band vectors are read exactly as for the forward constructor; only
    their placement in the dense matrix differs.
    """
    return BackwardPentaMatrix(penta_from_bands(d, a, b, c, e))


def reverse_permutation_apply(x: Sequence) -> list:
    """Apply the reversal permutation: entry i goes to entry n - i + 1.

    The permutation is an involution, so applying it twice is a no-op.
    """
    return list(reversed(x))


def reversal_sign(n: int) -> int:
    """Determinant of the n-by-n reversal permutation matrix."""
    return -1 if (n * (n - 1) // 2) % 2 else 1


_SOLVERS = {
    Algorithm.PTRANS1: solve_ptrans1,
    Algorithm.PTRANS2: solve_ptrans2,
    Algorithm.SPTRANS1: sptrans1,
    Algorithm.SPTRANS2: sptrans2,
}


def solve_backward(Phat: BackwardPentaMatrix, y: Sequence,
                   algorithm: Union[Algorithm, str] = Algorithm.PTRANS1) -> SolveReport:
    """Solve the backward system by solving the forward companion.

    The companion solution is reversed into the backward solution, and the
    reported determinant picks up the permutation sign.  Solver errors
    (zero pivots, singularity) propagate unchanged.
    """
    algorithm = Algorithm(algorithm)
    report = _SOLVERS[algorithm](Phat.forward, y)
    sign = reversal_sign(Phat.n)
    symbolic = report.symbolic_solution
    return replace(
        report,
        solution=tuple(reverse_permutation_apply(report.solution)),
        determinant=sign * report.determinant,
        symbolic_solution=None if symbolic is None
        else tuple(reverse_permutation_apply(symbolic)),
    )
