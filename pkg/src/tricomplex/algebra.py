"""Core arithmetic of the commutative three-dimensional algebra.

A number u = x + h*y + k*z is stored as the real triple (x, y, z).  The
two extra units multiply by the rules h*h = k, k*k = h, h*k = 1, which
make the algebra commutative and associative.  Division fails exactly on
two nodal sets: the plane x + y + z = 0 and the line x = y = z.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass

import numpy as np

from .errors import ZeroDivisor

_SQRT3 = math.sqrt(3.0)

_LITERAL_RE = re.compile(
    r"^\(\s*([^\s,()]+)\s*,\s*([^\s,()]+)\s*,\s*([^\s,()]+)\s*\)$"
)


def _cbrt(v: float) -> float:
    """Signed cube root, Newton-polished so that exact cubes come out exact."""
    if v == 0.0:
        return 0.0
    r = math.copysign(abs(v) ** (1.0 / 3.0), v)
    # One Newton step removes the ulp-level error of the pow-based seed.
    return r - (r * r * r - v) / (3.0 * r * r)


class AlgebraClass(enum.Enum):
    """Position of a number relative to the nodal sets."""

    REGULAR = "regular"
    ON_TRISECTOR_LINE = "on-trisector-line"
    ON_NODAL_PLANE = "on-nodal-plane"
    ZERO = "zero"


@dataclass(frozen=True)
class Tricomplex:
    """Immutable value x + h*y + k*z with real components.

    Equality is componentwise and exact; all components must be finite.
    Supports ``+``, ``-``, ``*`` (both with another Tricomplex and with a
    real scalar), unary ``-``, ``abs`` (Euclidean modulus) and integer
    ``**``.
    """

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        for name in ("x", "y", "z"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"non-finite component {name}={v!r}")
            object.__setattr__(self, name, v)

    # -- construction / formatting ------------------------------------

    @classmethod
    def parse(cls, text: str) -> "Tricomplex":
        """Parse the literal form ``(x,y,z)`` with decimal reals."""
        m = _LITERAL_RE.match(text.strip())
        if m is None:
            raise ValueError(f"not a (x,y,z) literal: {text!r}")
        try:
            return cls(float(m.group(1)), float(m.group(2)), float(m.group(3)))
        except ValueError as exc:
            raise ValueError(f"not a (x,y,z) literal: {text!r}") from exc

    def literal(self) -> str:
        """Round-trip-safe literal ``(x,y,z)`` at 17 significant digits."""
        return f"({self.x:.17g},{self.y:.17g},{self.z:.17g})"

    def __str__(self) -> str:
        return self.literal()

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "Tricomplex") -> "Tricomplex":
        return Tricomplex(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Tricomplex") -> "Tricomplex":
        return Tricomplex(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Tricomplex":
        return Tricomplex(-self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Tricomplex):
            x, y, z = self.x, self.y, self.z
            X, Y, Z = other.x, other.y, other.z
            return Tricomplex(
                x * X + y * Z + z * Y,
                z * Z + x * Y + y * X,
                y * Y + x * Z + z * X,
            )
        if isinstance(other, (int, float)):
            return Tricomplex(self.x * other, self.y * other, self.z * other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, m: int) -> "Tricomplex":
        if not isinstance(m, int):
            return NotImplemented
        if m < 0:
            return inverse(self) ** (-m)
        result = ONE
        base = self
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result

    def __abs__(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def max_abs_component(self) -> float:
        return max(abs(self.x), abs(self.y), abs(self.z))


ZERO = Tricomplex(0.0, 0.0, 0.0)
ONE = Tricomplex(1.0, 0.0, 0.0)
H = Tricomplex(0.0, 1.0, 0.0)
K = Tricomplex(0.0, 0.0, 1.0)


def add(u: Tricomplex, v: Tricomplex) -> Tricomplex:
    """Componentwise sum."""
    return u + v


def mul(u: Tricomplex, v: Tricomplex) -> Tricomplex:
    """Commutative, associative product of two numbers."""
    return u * v


def quadratic_form(u: Tricomplex) -> float:
    """x^2 + y^2 + z^2 - xy - xz - yz, computed in the cancellation-free
    sum-of-squared-differences form.  Vanishes exactly on the trisector
    line; equals the squared distance to that line times 3/2."""
    dxy = u.x - u.y
    dxz = u.x - u.z
    dyz = u.y - u.z
    return 0.5 * (dxy * dxy + dxz * dxz + dyz * dyz)


def component_sum(u: Tricomplex) -> float:
    """x + y + z; vanishes exactly on the nodal plane."""
    return u.x + u.y + u.z


def determinant_form(u: Tricomplex) -> float:
    """x^3 + y^3 + z^3 - 3xyz via its factorization
    (x+y+z)(x^2+y^2+z^2-xy-xz-yz), which is stable near both nodal sets."""
    return component_sum(u) * quadratic_form(u)


def amplitude(u: Tricomplex) -> float:
    """Signed cube root of x^3 + y^3 + z^3 - 3xyz.

    Multiplicative under the product, including sign.  Zero exactly on
    the two nodal sets.
    """
    return _cbrt(determinant_form(u))


def default_tolerance(u: Tricomplex) -> float:
    return 1e-12 * max(1.0, u.max_abs_component())


def classify(u: Tricomplex, tol: float | None = None) -> AlgebraClass:
    """Classify a number against the nodal sets.

    Both defining forms (the component sum and the quadratic form) are
    compared to an absolute tolerance; ``tol`` defaults to
    1e-12 * max(1, max-abs-component).
    """
    if tol is None:
        tol = default_tolerance(u)
    elif tol < 0.0:
        raise ValueError("tolerance must be >= 0")
    if u.max_abs_component() <= tol:
        return AlgebraClass.ZERO
    if quadratic_form(u) <= tol:
        return AlgebraClass.ON_TRISECTOR_LINE
    if abs(component_sum(u)) <= tol:
        return AlgebraClass.ON_NODAL_PLANE
    return AlgebraClass.REGULAR


def inverse(u: Tricomplex, tol: float | None = None) -> Tricomplex:
    """Multiplicative inverse.

    Raises ZeroDivisor (carrying the algebra class) when the number lies
    on the nodal plane, on the trisector line, or is zero.
    """
    cls = classify(u, tol)
    if cls is not AlgebraClass.REGULAR:
        raise ZeroDivisor(f"{u} has no inverse ({cls.value})", cls)
    nu = determinant_form(u)
    return Tricomplex(
        (u.x * u.x - u.y * u.z) / nu,
        (u.z * u.z - u.x * u.y) / nu,
        (u.y * u.y - u.x * u.z) / nu,
    )


def to_matrix(u: Tricomplex) -> np.ndarray:
    """Circulant 3x3 representation; matrix product mirrors the algebra
    product and the determinant equals amplitude(u)**3."""
    return np.array(
        [
            [u.x, u.y, u.z],
            [u.z, u.x, u.y],
            [u.y, u.z, u.x],
        ]
    )


def irreducible_rep(u: Tricomplex) -> np.ndarray:
    """Block-diagonal real representation: a 2x2 rotation-scaling block
    acting on the plane transverse to the trisector line, plus the 1x1
    component sum along it."""
    a = u.x - 0.5 * (u.y + u.z)
    b = 0.5 * _SQRT3 * (u.y - u.z)
    return np.array(
        [
            [a, b, 0.0],
            [-b, a, 0.0],
            [0.0, 0.0, component_sum(u)],
        ]
    )
