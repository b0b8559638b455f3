"""Banded storage for pentadiagonal matrices and the shared error taxonomy.

A pentadiagonal matrix of order ``n`` (``n >= 4``) is held as five bands,
each stored at full length ``n`` so that band index ``k`` always refers to
row ``k + 1`` of the matrix:

    d   main diagonal          d[0] .. d[n-1]
    a   first superdiagonal    a[0] .. a[n-2],  a[n-1] forced to 0
    b   second superdiagonal   b[0] .. b[n-3],  b[n-2], b[n-1] forced to 0
    c   first subdiagonal      c[1] .. c[n-1],  c[0] forced to 0
    e   second subdiagonal     e[2] .. e[n-1],  e[0], e[1] forced to 0

The slots that fall outside the matrix must hold exact zeros; constructors
enforce this and all containers are immutable after construction, so they
are safe to share between threads.

Scalars are deliberately generic: the same containers carry floats for the
numeric solvers, ``fractions.Fraction`` for exact arithmetic, and rational
functions for the symbolic rescue path.  Vectors are plain sequences.

Indices reported in errors and solve reports (pivot positions, rescue
positions) are 1-based, matching the usual subscript convention for these
recurrences.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional, Sequence


class PentaError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(PentaError):
    """Band or vector lengths are inconsistent with the matrix order."""


class InvalidOrder(PentaError):
    """Matrix order outside the supported range (n >= 4)."""


class InvalidPadding(PentaError):
    """A nonzero value sits in a band slot that must be zero."""


class ZeroPivot(PentaError):
    """An elimination pivot came out exactly zero.

    ``index`` is the 1-based position of the offending pivot.  The symbolic
    solvers can rescue this case; the numeric ones cannot.
    """

    def __init__(self, index: int, message: str | None = None):
        self.index = index
        super().__init__(message or f"pivot at index {index} is exactly zero")


class SingularMatrix(PentaError):
    """The coefficient matrix is singular: no solutions."""


class ParseError(PentaError):
    """Malformed PENTA v1 input."""


class DivisionByZeroFunction(PentaError):
    """Division by the zero rational function."""


class PoleAtZero(PentaError):
    """A rational function has a pole at the evaluation point zero."""


class DegreeCapExceeded(PentaError):
    """Polynomial degree grew past the hard safety cap."""


class Algorithm(str, Enum):
    """Name of the solver that produced a report."""

    PTRANS1 = "PTRANS-I"
    PTRANS2 = "PTRANS-II"
    SPTRANS1 = "SPTRANS-I"
    SPTRANS2 = "SPTRANS-II"


@dataclass(frozen=True)
class PentaMatrix:
    """Immutable five-band storage of an n-by-n pentadiagonal matrix."""

    n: int
    d: tuple
    a: tuple
    b: tuple
    c: tuple
    e: tuple

    def __post_init__(self):
        n = self.n
        if n < 4:
            raise InvalidOrder(f"pentadiagonal order must be >= 4, got {n}")
        for name in ("d", "a", "b", "c", "e"):
            band = tuple(getattr(self, name))
            if len(band) != n:
                raise DimensionMismatch(
                    f"band {name} has length {len(band)}, expected {n}")
            object.__setattr__(self, name, band)
        for name, slots in (("a", (n - 1,)), ("b", (n - 2, n - 1)),
                            ("c", (0,)), ("e", (0, 1))):
            band = getattr(self, name)
            for k in slots:
                if band[k] != 0:
                    raise InvalidPadding(
                        f"band {name} must be zero at position {k + 1}, "
                        f"got {band[k]!r}")

    def to_dense(self) -> list[list]:
        """Expand to row-major dense form (zeros off the five bands)."""
        n = self.n
        zero = self.d[0] * 0
        rows = [[zero] * n for _ in range(n)]
        for k in range(n):
            rows[k][k] = self.d[k]
            if k >= 1:
                rows[k][k - 1] = self.c[k]
            if k >= 2:
                rows[k][k - 2] = self.e[k]
            if k + 1 < n:
                rows[k][k + 1] = self.a[k]
            if k + 2 < n:
                rows[k][k + 2] = self.b[k]
        return rows


def _pad(band: Sequence, n: int, name: str, left: int, right: int) -> list:
    """Accept a band at natural length and pad it to length n with zeros."""
    band = list(band)
    if len(band) == n:
        return band
    if len(band) == n - left - right:
        return [0] * left + band + [0] * right
    raise DimensionMismatch(
        f"band {name} has length {len(band)}, expected {n} (padded) or "
        f"{n - left - right} (natural)")


def penta_from_bands(d: Sequence, a: Sequence, b: Sequence,
                     c: Sequence, e: Sequence) -> PentaMatrix:
    """Build a :class:`PentaMatrix` from its five bands.

    Each band may be given either at full length ``n`` (with the forced
    zeros present) or at its natural length, in which case it is padded:
    ``a`` and ``b`` on the right, ``c`` and ``e`` on the left.
    """
    n = len(d)
    if n < 4:
        raise InvalidOrder(f"pentadiagonal order must be >= 4, got {n}")
    return PentaMatrix(
        n=n,
        d=tuple(d),
        a=tuple(_pad(a, n, "a", 0, 1)),
        b=tuple(_pad(b, n, "b", 0, 2)),
        c=tuple(_pad(c, n, "c", 1, 0)),
        e=tuple(_pad(e, n, "e", 2, 0)),
    )


def penta_matvec(P: PentaMatrix, x: Sequence) -> list:
    """Multiply the banded matrix by a vector.

    Used for residual checks and for regenerating right-hand sides; the
    solvers themselves never call this.
    """
    n = P.n
    if len(x) != n:
        raise DimensionMismatch(
            f"vector has length {len(x)}, expected {n}")
    d, a, b, c, e = P.d, P.a, P.b, P.c, P.e
    out = []
    for k in range(n):
        acc = d[k] * x[k]
        if k >= 1:
            acc = acc + c[k] * x[k - 1]
        if k >= 2:
            acc = acc + e[k] * x[k - 2]
        if k + 1 < n:
            acc = acc + a[k] * x[k + 1]
        if k + 2 < n:
            acc = acc + b[k] * x[k + 2]
        out.append(acc)
    return out


@dataclass(frozen=True)
class SolveReport:
    """Solution vector plus the diagnostics a solve produced along the way.

    ``pivots`` holds the divisor sequence actually used: floats or
    fractions on the numeric paths, rational functions of the rescue
    indeterminate on the symbolic paths.  ``determinant`` is the product
    of the pivots (evaluated at zero on the symbolic paths).  ``op_count``
    counts the scalar +, -, *, / performed by the elimination and the
    substitution sweep; diagnostics such as the determinant product are
    not included.  ``rescued_indices`` lists the 1-based pivot positions
    where an identically-zero pivot was replaced by the indeterminate;
    it is empty whenever a numeric path completed.  ``near_zero_indices``
    flags float pivots that were nonzero but suspiciously small relative
    to the band magnitudes.  ``symbolic_solution`` preserves the solution
    expressions before evaluation, on symbolic paths only.
    """

    solution: tuple
    pivots: tuple
    determinant: Any
    op_count: int
    rescued_indices: tuple[int, ...]
    algorithm: Algorithm
    near_zero_indices: tuple[int, ...] = ()
    symbolic_solution: Optional[tuple] = field(default=None, repr=False)
