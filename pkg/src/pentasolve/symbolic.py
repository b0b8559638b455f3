"""Exact rational-function arithmetic and the zero-pivot rescue solvers.

The numeric solvers in :mod:`pentasolve.ptrans` break down when a divisor
comes out exactly zero.  The rescue variants here rerun the same
recurrences over rational functions of one indeterminate ``p``: whenever a
divisor is identically the zero function it is replaced by the monomial
``p`` and the position recorded, and after the substitution sweep every
solution component is evaluated at ``p = 0``.  Because the arithmetic is
exact and every quotient is kept gcd-reduced, the substitution cancels the
artificial ``p`` completely whenever the system itself is nonsingular.

Exact rationals are plain :class:`fractions.Fraction` values (arbitrary
precision, denominator positive, always reduced).  Polynomials store
Fraction coefficients in ascending powers of ``p``; a rational function is
a numerator/denominator pair kept in canonical form:

* the polynomial gcd of numerator and denominator is 1,
* both are scaled to integer coefficients with no common integer factor,
* the denominator's leading coefficient is positive.

Canonical form makes structural equality mathematical equality and makes
evaluation at zero a constant-term lookup.  Arithmetic is provided through
the usual operators (``+ - * /``); all values are immutable.

Float inputs to the rescue solvers are converted to exact rationals via
their exact binary expansion, so no rounding happens behind the caller's
back.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence, Union

from .core import (Algorithm, DegreeCapExceeded, DivisionByZeroFunction,
                   PentaMatrix, PoleAtZero, SingularMatrix, SolveReport)
from .ptrans import (_back_substitute, _check_rhs, _eliminate_down,
                     _eliminate_up, _forward_substitute, _product)

Rational = Fraction

#: Hard cap on numerator/denominator degree after reduction; the degree can
#: only grow with the number of rescued pivots, so hitting this means the
#: input is pathological.
DEGREE_CAP = 64


def as_fraction(value) -> Fraction:
    """Convert an int, Fraction, or float (exactly) to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value)
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


class Poly:
    """Univariate polynomial over Fraction, coefficients in ascending powers.

    The zero polynomial is the empty coefficient tuple; otherwise the
    leading (last) coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1]

    @property
    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero or other.is_zero:
            return _ZERO_POLY
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci == 0:
                continue
            for j, cj in enumerate(other.coeffs):
                out[i + j] += ci * cj
        return Poly(out)

    def scale(self, factor: Fraction) -> "Poly":
        if factor == 0:
            return _ZERO_POLY
        return Poly(tuple(c * factor for c in self.coeffs))

    def __repr__(self):
        return f"Poly({self.coeffs!r})"


_ZERO_POLY = Poly(())
_ONE_POLY = Poly((1,))
_P_POLY = Poly((0, 1))


def _poly_divmod(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Long division over Fraction coefficients: f = q*g + r, deg r < deg g."""
    if g.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f.coeffs)
    dg = g.degree
    if f.degree < dg:
        return _ZERO_POLY, f
    q = [Fraction(0)] * (f.degree - dg + 1)
    inv_lead = 1 / g.leading
    for i in range(f.degree, dg - 1, -1):
        coef = r[i] * inv_lead
        if coef == 0:
            continue
        q[i - dg] = coef
        for j, gc in enumerate(g.coeffs):
            r[i - dg + j] -= coef * gc
    return Poly(q), Poly(r[:dg])


def _primitive(f: Poly) -> Poly:
    """Scale to coprime integer coefficients with positive leading term."""
    if f.is_zero:
        return f
    mult = math.lcm(*(c.denominator for c in f.coeffs))
    ints = [c.numerator * (mult // c.denominator) for c in f.coeffs]
    g = math.gcd(*ints)
    if ints[-1] < 0:
        g = -g
    return Poly(tuple(Fraction(v, g) for v in ints))


def _poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic-free Euclidean gcd, renormalising each remainder to keep the
    coefficients small."""
    f, g = _primitive(f), _primitive(g)
    while not g.is_zero:
        _, r = _poly_divmod(f, g)
        f, g = g, _primitive(r)
    if f.is_zero or f.degree == 0:
        return _ONE_POLY
    return f


Operand = Union["RationalFunction", Poly, Fraction, int]


class RationalFunction:
    """Quotient of two polynomials in ``p``, kept in canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = self._as_poly(num)
        den = _ONE_POLY if den is None else self._as_poly(den)
        if den.is_zero:
            raise DivisionByZeroFunction("denominator is the zero polynomial")
        if num.is_zero:
            self.num, self.den = _ZERO_POLY, _ONE_POLY
            return
        g = _poly_gcd(num, den)
        if g.degree > 0:
            num, _ = _poly_divmod(num, g)
            den, _ = _poly_divmod(den, g)
        # Joint integer scaling: one common rational factor is pulled out so
        # both polynomials carry coprime integer coefficients, then the sign
        # is moved into the numerator.
        mult = math.lcm(*(c.denominator for c in num.coeffs),
                        *(c.denominator for c in den.coeffs))
        ints = [c.numerator * (mult // c.denominator) for c in num.coeffs]
        ints += [c.numerator * (mult // c.denominator) for c in den.coeffs]
        g2 = math.gcd(*ints)
        if den.leading < 0:
            g2 = -g2
        scale = Fraction(mult, g2)
        num, den = num.scale(scale), den.scale(scale)
        if num.degree > DEGREE_CAP or den.degree > DEGREE_CAP:
            raise DegreeCapExceeded(
                f"rational function degree exceeds the cap of {DEGREE_CAP}")
        self.num, self.den = num, den

    @staticmethod
    def _as_poly(value) -> Poly:
        if isinstance(value, Poly):
            return value
        if isinstance(value, (int, Fraction, float)):
            return Poly((as_fraction(value),))
        raise TypeError(f"cannot build a polynomial from "
                        f"{type(value).__name__}")

    @classmethod
    def _coerce(cls, value) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            return value
        return cls(value)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __bool__(self) -> bool:
        return not self.num.is_zero

    def __eq__(self, other) -> bool:
        if isinstance(other, (RationalFunction, Poly, Fraction, int)):
            other = self._coerce(other)
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __add__(self, other: Operand) -> "RationalFunction":
        other = self._coerce(other)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    def __sub__(self, other: Operand) -> "RationalFunction":
        other = self._coerce(other)
        return RationalFunction(self.num * other.den - other.num * self.den,
                                self.den * other.den)

    def __mul__(self, other: Operand) -> "RationalFunction":
        other = self._coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: Operand) -> "RationalFunction":
        other = self._coerce(other)
        if other.is_zero:
            raise DivisionByZeroFunction("division by the zero function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __radd__(self, other):
        return self._coerce(other) + self

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __rmul__(self, other):
        return self._coerce(other) * self

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __repr__(self):
        return f"RationalFunction({format_ratfun(self)!r})"


def indeterminate() -> RationalFunction:
    """The monomial ``p`` substituted for rescued pivots."""
    return RationalFunction(_P_POLY)


def eval_at_zero(f: RationalFunction) -> Fraction:
    """Value of the canonical rational function at ``p = 0``.

    Raises :class:`PoleAtZero` when the reduced denominator vanishes at
    zero, which (thanks to gcd reduction) means a genuine pole.
    """
    f = RationalFunction._coerce(f)
    den0 = f.den.constant_term
    if den0 == 0:
        raise PoleAtZero("denominator vanishes at p = 0")
    return f.num.constant_term / den0


def _poly_str(poly: Poly) -> str:
    if poly.is_zero:
        return "0"
    parts: list[str] = []
    for k in range(poly.degree, -1, -1):
        coef = poly.coeffs[k]
        if coef == 0:
            continue
        if coef.denominator == 1:
            cs = str(coef.numerator)
        else:
            cs = str(coef)
        if k == 0:
            term = cs
        else:
            base = "p" if k == 1 else f"p^{k}"
            if coef == 1:
                term = base
            elif coef == -1:
                term = f"-{base}"
            else:
                term = f"{cs}*{base}"
        if not parts:
            parts.append(term)
        elif term.startswith("-"):
            parts.append(f" - {term[1:]}")
        else:
            parts.append(f" + {term}")
    return "".join(parts)


def _term_count(poly: Poly) -> int:
    return sum(1 for c in poly.coeffs if c != 0)


def format_ratfun(f: RationalFunction) -> str:
    """Deterministic text rendering of a canonical rational function.

    Grammar (stable; regression tests depend on it)::

        rendering  = polynomial                   when the denominator is 1
                   | part "/" part                otherwise
        part       = polynomial                   when it has one term
                   | "(" polynomial ")"           when it has several
        polynomial = term { (" + " | " - ") term }    in descending powers
        term       = integer | integer "*" power | power | "-" power
        power      = "p" | "p^" exponent

    A unit coefficient is dropped (``p``, not ``1*p``) and the canonical
    form guarantees integer coefficients with the denominator's leading
    coefficient positive, e.g. ``-21/(8*p - 21)`` and ``(8*p - 21)/p``.
    """
    f = RationalFunction._coerce(f)
    num_s = _poly_str(f.num)
    if f.den == _ONE_POLY:
        return num_s
    den_s = _poly_str(f.den)
    if _term_count(f.num) > 1:
        num_s = f"({num_s})"
    if _term_count(f.den) > 1:
        den_s = f"({den_s})"
    return f"{num_s}/{den_s}"


def _exact_system(P: PentaMatrix, y: Sequence):
    """Lift a matrix and right-hand side into rational-function scalars."""
    def lift_band(band):
        return tuple(RationalFunction(as_fraction(v)) for v in band)

    rf = PentaMatrix(n=P.n, d=lift_band(P.d), a=lift_band(P.a),
                     b=lift_band(P.b), c=lift_band(P.c), e=lift_band(P.e))
    rhs = [RationalFunction(as_fraction(v)) for v in y]
    return rf, rhs


def _rescue_hook(rescued: list[int]):
    mono = indeterminate()

    def hook(index: int, value):
        if value == 0:
            rescued.append(index)
            return mono
        return value

    return hook


def _evaluate_all(values: Sequence[RationalFunction]) -> list[Fraction]:
    try:
        return [eval_at_zero(v) for v in values]
    except PoleAtZero as exc:
        raise SingularMatrix(
            "solution has a pole at p = 0: no solutions") from exc


def _symbolic_solve(P: PentaMatrix, y: Sequence, algorithm: Algorithm) -> SolveReport:
    _check_rhs(P, y)
    rf, rhs = _exact_system(P, y)
    rescued: list[int] = []
    hook = _rescue_hook(rescued)
    if algorithm is Algorithm.SPTRANS1:
        alpha, beta, z, _, pivots, ops1 = _eliminate_down(rf, rhs, hook)
        x_rf, ops2 = _back_substitute(alpha, beta, z)
    else:
        sigma, phi, w, _, pivots, ops1 = _eliminate_up(rf, rhs, hook)
        x_rf, ops2 = _forward_substitute(sigma, phi, w)
    det = eval_at_zero(_product(pivots))
    if det == 0:
        raise SingularMatrix("zero determinant: no solutions")
    solution = _evaluate_all(x_rf)
    return SolveReport(
        solution=tuple(solution),
        pivots=tuple(pivots),
        determinant=det,
        op_count=ops1 + ops2,
        rescued_indices=tuple(sorted(rescued)),
        algorithm=algorithm,
        symbolic_solution=tuple(x_rf),
    )


def sptrans1(P: PentaMatrix, y: Sequence) -> SolveReport:
    """Downward-sweep solve with exact zero-pivot rescue.

    Runs the same recurrences as ``solve_ptrans1`` over rational functions
    of ``p``, substituting the monomial ``p`` for every identically-zero
    pivot, and evaluates the solution (and the determinant, as the pivot
    product) at ``p = 0``.  Raises :class:`SingularMatrix` when the
    determinant evaluates to zero or a solution component keeps a pole,
    i.e. when the system itself has no unique solution.
    """
    return _symbolic_solve(P, y, Algorithm.SPTRANS1)


def sptrans2(P: PentaMatrix, y: Sequence) -> SolveReport:
    """Upward-sweep solve with exact zero-pivot rescue; see :func:`sptrans1`."""
    return _symbolic_solve(P, y, Algorithm.SPTRANS2)


def symbolic_determinant(P: PentaMatrix) -> Fraction:
    """Exact determinant via the rescued downward sweep, evaluated at zero."""
    rf, rhs = _exact_system(P, [0] * P.n)
    rescued: list[int] = []
    _, _, _, _, mu, _ = _eliminate_down(rf, rhs, _rescue_hook(rescued))
    return eval_at_zero(_product(mu))
