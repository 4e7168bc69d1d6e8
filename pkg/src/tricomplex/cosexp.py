"""The three cosexponential functions cx, mx, px.

They partition the exponential series by the residue of the power mod 3:
cx collects the powers 0, 3, 6, ...; mx the powers 1, 4, 7, ...; px the
powers 2, 5, 8, ...  So cx + mx + px = exp, and each is the exponential
of a pure h (or k) argument read off on components.

The production implementation is the closed form

    cx y = e^y/3 + (2/3) cos(sqrt(3) y / 2 + shift) e^(-y/2)

with shift 0 for cx, -2pi/3 for mx, +2pi/3 for px; the defining series
is kept as the slow oracle.
"""

from __future__ import annotations

import cmath
import enum
import math

_SQRT3_HALF = math.sqrt(3.0) / 2.0
_TWO_THIRDS_PI = 2.0 * math.pi / 3.0


class CosexpKind(enum.Enum):
    """Selector for the three cosexponential functions."""

    CX = 0
    MX = 1
    PX = 2


_PHASE = {CosexpKind.CX: 0.0, CosexpKind.MX: -_TWO_THIRDS_PI, CosexpKind.PX: _TWO_THIRDS_PI}
_AT_ZERO = {CosexpKind.CX: 1.0, CosexpKind.MX: 0.0, CosexpKind.PX: 0.0}

#: Truncation giving < 1e-16 tail for |y| <= 5 (the term y^30/30! already
#: underflows the last retained digit there).
DEFAULT_TERMS = 30


def cosexp(kind: CosexpKind, y: float) -> float:
    """Closed-form cosexponential value."""
    if y == 0.0:
        # The closed form loses the exact 1/0/0 values to rounding.
        return _AT_ZERO[kind]
    return (
        math.exp(y) / 3.0
        + (2.0 / 3.0) * math.cos(_SQRT3_HALF * y + _PHASE[kind]) * math.exp(-0.5 * y)
    )


def cx(y: float) -> float:
    return cosexp(CosexpKind.CX, y)


def mx(y: float) -> float:
    return cosexp(CosexpKind.MX, y)


def px(y: float) -> float:
    return cosexp(CosexpKind.PX, y)


def cosexp_series(kind: CosexpKind, y: float, terms: int = DEFAULT_TERMS) -> float:
    """Partial sum of the defining series with ``terms`` nonzero terms."""
    if terms < 1:
        raise ValueError("terms must be >= 1")
    offset = kind.value
    total = 0.0
    for n in range(terms):
        p = 3 * n + offset
        total += y**p / math.factorial(p)
    return total


def cosexp_derivative(kind: CosexpKind, y: float) -> float:
    """Derivative value; differentiation permutes the three functions
    cyclically (cx' = px, mx' = cx, px' = mx)."""
    shifted = {
        CosexpKind.CX: CosexpKind.PX,
        CosexpKind.MX: CosexpKind.CX,
        CosexpKind.PX: CosexpKind.MX,
    }[kind]
    return cosexp(shifted, y)


def _cosexp_complex(kind: CosexpKind, w: complex) -> complex:
    """Closed form continued to a complex argument.

    Internal: the elementary-function module recombines values at +iw
    and -iw to evaluate circular functions of pure h/k arguments.
    """
    if w == 0.0:
        return complex(_AT_ZERO[kind])
    return (
        cmath.exp(w) / 3.0
        + (2.0 / 3.0) * cmath.cos(_SQRT3_HALF * w + _PHASE[kind]) * cmath.exp(-0.5 * w)
    )
