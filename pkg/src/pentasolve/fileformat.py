"""The PENTA v1 banded-matrix text format.

This is the on-disk and over-the-wire contract for whole systems::

    # comments run from '#' to end of line, blank lines are skipped
    PENTA <n> [BACKWARD]
    <d_1 ... d_n>        main diagonal
    <a_1 ... a_n>        first superdiagonal, a_n = 0
    <b_1 ... b_n>        second superdiagonal, b_{n-1} = b_n = 0
    <c_1 ... c_n>        first subdiagonal, c_1 = 0
    <e_1 ... e_n>        second subdiagonal, e_1 = e_2 = 0
    <y_1 ... y_n>        right-hand side

All six value lines carry exactly ``n`` whitespace-separated decimals,
forced zeros included.  The optional ``BACKWARD`` token marks the bands as
anti-bands (see :mod:`pentasolve.backward`).  Values parse as floats by
default, or as exact fractions of the decimal literals when requested.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .backward import BackwardPentaMatrix, backward_from_bands
from .core import ParseError, PentaError, PentaMatrix, penta_from_bands


@dataclass(frozen=True)
class PentaFile:
    """A parsed PENTA v1 document: the matrix plus its right-hand side."""

    system: Union[PentaMatrix, BackwardPentaMatrix]
    rhs: tuple

    @property
    def backward(self) -> bool:
        return isinstance(self.system, BackwardPentaMatrix)

    @property
    def n(self) -> int:
        return self.system.n


def _value_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append(stripped)
    return lines


def _parse_values(line: str, n: int, what: str, lineno: int, exact: bool) -> list:
    tokens = line.split()
    if len(tokens) != n:
        raise ParseError(
            f"line {lineno}: expected {n} values for {what}, "
            f"got {len(tokens)}")
    out = []
    for tok in tokens:
        try:
            out.append(Fraction(tok) if exact else float(tok))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(
                f"line {lineno}: bad value {tok!r} in {what}") from exc
    return out


def parse_penta(text: str, *, exact: bool = False) -> PentaFile:
    """Parse a PENTA v1 document.

    With ``exact=True`` the decimal literals become ``Fraction`` values
    with no rounding, which is what the symbolic solvers expect.
    """
    lines = _value_lines(text)
    if not lines:
        raise ParseError("empty input")
    header = lines[0].split()
    if not header or header[0] != "PENTA":
        raise ParseError("line 1: expected 'PENTA <n> [BACKWARD]'")
    backward = False
    if len(header) == 3 and header[2] == "BACKWARD":
        backward = True
    elif len(header) != 2:
        raise ParseError("line 1: expected 'PENTA <n> [BACKWARD]'")
    try:
        n = int(header[1])
    except ValueError as exc:
        raise ParseError(f"line 1: bad order {header[1]!r}") from exc
    if len(lines) != 7:
        raise ParseError(
            f"expected 6 value lines after the header, got {len(lines) - 1}")
    names = ("diagonal d", "band a", "band b", "band c", "band e",
             "right-hand side y")
    values = [_parse_values(lines[i + 1], n, names[i], i + 2, exact)
              for i in range(6)]
    d, a, b, c, e, y = values
    try:
        if backward:
            system: Union[PentaMatrix, BackwardPentaMatrix] = \
                backward_from_bands(d, a, b, c, e)
        else:
            system = penta_from_bands(d, a, b, c, e)
    except PentaError as exc:
        raise ParseError(f"invalid bands: {exc}") from exc
    return PentaFile(system=system, rhs=tuple(y))


def _format_value(v) -> str:
    if isinstance(v, float):
        return f"{v:.17g}"
    return str(v)


def format_penta(system: Union[PentaMatrix, BackwardPentaMatrix],
                 rhs: Sequence, *, comments: Sequence[str] = ()) -> str:
    """Serialise a system back to PENTA v1 text."""
    backward = isinstance(system, BackwardPentaMatrix)
    P = system.forward if backward else system
    if len(rhs) != P.n:
        raise ParseError(
            f"right-hand side has length {len(rhs)}, expected {P.n}")
    out = [f"# {c}" for c in comments]
    out.append(f"PENTA {P.n} BACKWARD" if backward else f"PENTA {P.n}")
    for band in (P.d, P.a, P.b, P.c, P.e, tuple(rhs)):
        out.append(" ".join(_format_value(v) for v in band))
    return "\n".join(out) + "\n"
