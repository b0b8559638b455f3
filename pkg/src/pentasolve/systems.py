"""Built-in test-problem generator.

The generated family is the classic fourth-difference (squared second
difference) operator: interior rows carry the Toeplitz stencil
``(1, -4, 6, -4, 1)`` and the four boundary rows close it so that the row
sums give the right-hand side ``(6, -1, 0, ..., 0)``, making the exact
solution the all-ones vector at every order.  This is the system behind
the ``gen-example3`` CLI command and the benchmark harness.
"""
from __future__ import annotations

from fractions import Fraction

from .core import InvalidOrder, PentaMatrix, penta_from_bands


def fourth_difference_system(n: int, *, exact: bool = False) -> tuple[PentaMatrix, list]:
    """The order-n member of the family, as ``(matrix, rhs)``.

    Scalars are floats unless ``exact`` is set, in which case they are
    integer fractions.  Orders below 6 are rejected: the two top and two
    bottom closure rows would overlap.
    """
    if n < 6:
        raise InvalidOrder(
            f"the fourth-difference family needs n >= 6, got {n}")
    conv = Fraction if exact else float
    d = [conv(6)] * n
    d[0] = conv(9)
    d[n - 2] = conv(5)
    d[n - 1] = conv(1)
    a = [conv(-4)] * n
    a[n - 2] = conv(-2)
    a[n - 1] = conv(0)
    b = [conv(1)] * n
    b[n - 2] = conv(0)
    b[n - 1] = conv(0)
    c = [conv(-4)] * n
    c[0] = conv(0)
    c[n - 1] = conv(-2)
    e = [conv(1)] * n
    e[0] = conv(0)
    e[1] = conv(0)
    y = [conv(0)] * n
    y[0] = conv(6)
    y[1] = conv(-1)
    return penta_from_bands(d, a, b, c, e), y
