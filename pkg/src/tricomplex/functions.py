"""Elementary functions of a three-component hypercomplex variable.

Every function here is the analytic continuation, through its power
series, of the usual real function.  The production routes avoid the
canonical-basis isomorphism on purpose:

* exp splits the argument into x + hy + kz and multiplies the three
  factor exponentials, with the pure h/k factors read off from the
  cosexponential functions;
* log inverts the exponential form in closed form (amplitude, polar
  angle, azimuthal angle);
* circular/hyperbolic functions assemble f(x + hy + kz) with the
  addition theorems from closed forms of the pure h/k arguments.

``oracle_eval`` evaluates instead through the isomorphism with the
direct sum of the complex plane and the real line, and exists so tests
can compare two fully independent routes.
"""

from __future__ import annotations

import cmath
import enum
import math

from .algebra import (
    Tricomplex,
    component_sum,
    inverse,
    quadratic_form,
)
from .cosexp import CosexpKind, _cosexp_complex, cx, mx, px
from .errors import (
    REASON_NODAL_PLANE_SIDE,
    REASON_TRISECTOR_LINE,
    DomainError,
    Overflow,
)
from .geometry import CanonicalForm, from_canonical, normalize_phi, to_canonical

_SQRT3 = math.sqrt(3.0)
_TWO_PI = 2.0 * math.pi


class ElementaryFn(enum.Enum):
    """Uniform selector over the elementary functions."""

    EXP = "exp"
    LOG = "log"
    SIN = "sin"
    COS = "cos"
    SINH = "sinh"
    COSH = "cosh"


def texp(u: Tricomplex) -> Tricomplex:
    """Exponential: exp(x) * exp(hy) * exp(kz).

    The pure-argument factors are exp(hy) = cx y + h mx y + k px y and
    exp(kz) = cx z + h px z + k mx z.
    """
    try:
        scale = math.exp(u.x)
        eh = Tricomplex(cx(u.y), mx(u.y), px(u.y))
        ek = Tricomplex(cx(u.z), px(u.z), mx(u.z))
        p = eh * ek
        return Tricomplex(scale * p.x, scale * p.y, scale * p.z)
    except (OverflowError, ValueError) as exc:
        raise Overflow(f"exp overflows at {u}") from exc


def _log_pieces(u: Tricomplex) -> tuple[float, float, float]:
    """(sigma, delta, phi) with the domain checks shared by log and the
    fractional power: component sum > 0 and strictly off the trisector
    line."""
    q = quadratic_form(u)
    if q <= 0.0:
        raise DomainError(
            "argument lies on the trisector line (azimuthal angle undefined)",
            REASON_TRISECTOR_LINE,
        )
    sigma = component_sum(u)
    if sigma <= 0.0:
        raise DomainError(
            "component sum x+y+z must be > 0 for a real logarithm",
            REASON_NODAL_PLANE_SIDE,
        )
    phi = normalize_phi(
        math.atan2(_SQRT3 * (u.y - u.z), 2.0 * u.x - u.y - u.z)
    )
    return sigma, math.sqrt(q), phi


def tlog(u: Tricomplex) -> Tricomplex:
    """Principal logarithm, the inverse of ``texp``.

    Defined for x+y+z > 0 off the trisector line; the azimuthal angle is
    taken in [0, 2*pi).  On the transverse plane this is the complex
    log of magnitude delta and argument phi; along the trisector line it
    is the real log of the component sum.
    """
    sigma, delta, phi = _log_pieces(u)
    # amplitude^3 = sigma * delta^2, so log(amplitude) = (log sigma + 2 log delta)/3
    ls = math.log(sigma)
    ld = math.log(delta)
    scalar = (ls + 2.0 * ld) / 3.0
    longitudinal = (ls - ld) / 3.0  # (1/3) log(sigma/delta)
    transverse = phi / _SQRT3
    return Tricomplex(
        scalar,
        longitudinal + transverse,
        longitudinal - transverse,
    )


def power_from_polar(u: Tricomplex, m: float) -> Tricomplex:
    """Power through the exponential form: transverse magnitude delta^m
    rotated by m*phi, longitudinal component sigma^m.

    Exact for integer m whenever the azimuthal angle exists; for
    fractional m this is the principal branch (phi in [0, 2*pi)) and
    requires x+y+z > 0.
    """
    q = quadratic_form(u)
    if q <= 0.0:
        raise DomainError(
            "argument lies on the trisector line (azimuthal angle undefined)",
            REASON_TRISECTOR_LINE,
        )
    sigma = component_sum(u)
    integral = float(m).is_integer()
    if not integral and sigma <= 0.0:
        raise DomainError(
            "component sum x+y+z must be > 0 for a fractional power",
            REASON_NODAL_PLANE_SIDE,
        )
    delta = math.sqrt(q)
    phi = normalize_phi(math.atan2(_SQRT3 * (u.y - u.z), 2.0 * u.x - u.y - u.z))
    dm = delta**m
    sm = math.pow(sigma, m)
    return from_canonical(
        CanonicalForm(dm * math.cos(m * phi), dm * math.sin(m * phi), sm)
    )


def tpow(u: Tricomplex, m: float) -> Tricomplex:
    """Power function.

    Integer exponents use exact repeated multiplication (negative ones
    invert first, so zero divisors are rejected); fractional exponents
    go through the principal-branch exponential form.
    """
    if isinstance(m, int) or float(m).is_integer():
        mi = int(m)
        if mi >= 0:
            return u**mi
        return inverse(u) ** (-mi)
    return power_from_polar(u, float(m))


# -- pure-argument circular/hyperbolic factors -----------------------------


def _circular_pure(y: float, swap: bool) -> tuple[Tricomplex, Tricomplex]:
    """(cos, sin) of hy (swap=False) or ky (swap=True).

    Obtained by recombining cosexponential values at +iy and -iy, which
    for real y reduces to the real and imaginary parts at +iy.
    """
    a = _cosexp_complex(CosexpKind.CX, 1j * y)
    b = _cosexp_complex(CosexpKind.MX, 1j * y)
    c = _cosexp_complex(CosexpKind.PX, 1j * y)
    if swap:
        b, c = c, b
    return (
        Tricomplex(a.real, b.real, c.real),
        Tricomplex(a.imag, b.imag, c.imag),
    )


def _hyperbolic_pure(y: float, swap: bool) -> tuple[Tricomplex, Tricomplex]:
    """(cosh, sinh) of hy (swap=False) or ky (swap=True), as the even and
    odd halves of the pure-argument exponential."""
    ap, bp, cp = cx(y), mx(y), px(y)
    am, bm, cm = cx(-y), mx(-y), px(-y)
    if swap:
        bp, cp = cp, bp
        bm, cm = cm, bm
    return (
        Tricomplex(0.5 * (ap + am), 0.5 * (bp + bm), 0.5 * (cp + cm)),
        Tricomplex(0.5 * (ap - am), 0.5 * (bp - bm), 0.5 * (cp - cm)),
    )


def _assemble(u: Tricomplex, circular: bool) -> tuple[Tricomplex, Tricomplex]:
    """(cos-like, sin-like) of hy + kz combined by the addition theorems."""
    pure = _circular_pure if circular else _hyperbolic_pure
    ch, sh = pure(u.y, False)
    ck, sk = pure(u.z, True)
    if circular:
        return ch * ck - sh * sk, sh * ck + ch * sk
    return ch * ck + sh * sk, sh * ck + ch * sk


def tcos(u: Tricomplex) -> Tricomplex:
    """Cosine via cos(x + v) = cos x cos v - sin x sin v with v = hy + kz."""
    try:
        a, b = _assemble(u, circular=True)
        return math.cos(u.x) * a - math.sin(u.x) * b
    except (OverflowError, ValueError) as exc:
        raise Overflow(f"cos overflows at {u}") from exc


def tsin(u: Tricomplex) -> Tricomplex:
    """Sine via sin(x + v) = sin x cos v + cos x sin v with v = hy + kz."""
    try:
        a, b = _assemble(u, circular=True)
        return math.sin(u.x) * a + math.cos(u.x) * b
    except (OverflowError, ValueError) as exc:
        raise Overflow(f"sin overflows at {u}") from exc


def tcosh(u: Tricomplex) -> Tricomplex:
    """Hyperbolic cosine assembled with the hyperbolic addition theorems."""
    try:
        a, b = _assemble(u, circular=False)
        return math.cosh(u.x) * a + math.sinh(u.x) * b
    except (OverflowError, ValueError) as exc:
        raise Overflow(f"cosh overflows at {u}") from exc


def tsinh(u: Tricomplex) -> Tricomplex:
    """Hyperbolic sine assembled with the hyperbolic addition theorems."""
    try:
        a, b = _assemble(u, circular=False)
        return math.sinh(u.x) * a + math.cosh(u.x) * b
    except (OverflowError, ValueError) as exc:
        raise Overflow(f"sinh overflows at {u}") from exc


# -- independent oracle -----------------------------------------------------

_COMPLEX_REAL_PAIRS = {
    ElementaryFn.EXP: (cmath.exp, math.exp),
    ElementaryFn.SIN: (cmath.sin, math.sin),
    ElementaryFn.COS: (cmath.cos, math.cos),
    ElementaryFn.SINH: (cmath.sinh, math.sinh),
    ElementaryFn.COSH: (cmath.cosh, math.cosh),
}

DIRECT = {
    ElementaryFn.EXP: texp,
    ElementaryFn.LOG: tlog,
    ElementaryFn.SIN: tsin,
    ElementaryFn.COS: tcos,
    ElementaryFn.SINH: tsinh,
    ElementaryFn.COSH: tcosh,
}


def oracle_eval(fn: ElementaryFn, u: Tricomplex) -> Tricomplex:
    """Evaluate ``fn`` through the split into a complex transverse plane
    and a real longitudinal axis.

    The standard complex function is applied to v1 + i*v1t and the
    standard real function to vp; the domains mirror the direct
    implementations (for log: vp > 0 and a nonzero transverse part,
    with the complex argument taken in [0, 2*pi)).
    """
    c = to_canonical(u)
    w = complex(c.v1, c.v1t)
    try:
        if fn is ElementaryFn.LOG:
            if w == 0:
                raise DomainError(
                    "argument lies on the trisector line (azimuthal angle undefined)",
                    REASON_TRISECTOR_LINE,
                )
            if c.vp <= 0.0:
                raise DomainError(
                    "component sum x+y+z must be > 0 for a real logarithm",
                    REASON_NODAL_PLANE_SIDE,
                )
            fw = cmath.log(w)
            if fw.imag < 0.0:
                fw = complex(fw.real, fw.imag + _TWO_PI)
            fp = math.log(c.vp)
        else:
            cfn, rfn = _COMPLEX_REAL_PAIRS[fn]
            fw = cfn(w)
            fp = rfn(c.vp)
        return from_canonical(CanonicalForm(fw.real, fw.imag, fp))
    except (OverflowError, ValueError) as exc:
        raise Overflow(f"{fn.value} overflows at {u}") from exc
