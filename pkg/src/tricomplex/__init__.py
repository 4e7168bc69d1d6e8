"""Commutative hypercomplex numbers in three dimensions.

Numbers of the form x + h*y + k*z over the reals, with unit rules
h*h = k, k*k = h, h*k = 1.  The package covers arithmetic and zero
divisors, geometric/exponential/trigonometric forms, cosexponential and
elementary functions, power series with convergence regions, numerical
analyticity checks, loop integrals with residues, and polynomial
factorization, plus a deterministic CLI front end.
"""

from .algebra import (
    AlgebraClass,
    H,
    K,
    ONE,
    Tricomplex,
    ZERO,
    add,
    amplitude,
    classify,
    component_sum,
    default_tolerance,
    determinant_form,
    inverse,
    irreducible_rep,
    mul,
    quadratic_form,
    to_matrix,
)
from .calculus import (
    POLE_LOOP_VALUE,
    Path3,
    PoleSpec,
    RiemannReport,
    cauchy_value,
    check_analytic,
    derivative,
    loop_integral_pole,
    path_integral,
    residue_sum,
    taylor_recenter,
    winding_count,
)
from .cosexp import (
    CosexpKind,
    cosexp,
    cosexp_derivative,
    cosexp_series,
    cx,
    mx,
    px,
)
from .errors import (
    AmbiguousWinding,
    ComplexLongitudinalRoot,
    DomainError,
    Indeterminate,
    NonConvergent,
    Overflow,
    SingularOnPath,
    TricomplexError,
    UndefinedAngle,
    ZeroDivisor,
)
from .functions import (
    DIRECT,
    ElementaryFn,
    oracle_eval,
    power_from_polar,
    tcos,
    tcosh,
    texp,
    tlog,
    tpow,
    tsin,
    tsinh,
)
from .geometry import (
    CanonicalForm,
    E1,
    E1T,
    EP,
    PolarForm,
    basis_constants,
    canonical_mul,
    from_canonical,
    from_exponential,
    invariant_circle_point,
    normalize_phi,
    polar,
    projection_on_nodal_plane,
    to_canonical,
)
from .poly import (
    DecomposedPoly,
    RootSet,
    TriPolynomial,
    decompose,
    enumerate_root_sets,
    factor,
)
from .series import (
    ConvergenceRegion,
    TriSeries,
    delta,
    eval_series,
    exp_series,
    modulus,
    radius_cylindrical,
    radius_spherical,
    sigma,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraClass",
    "AmbiguousWinding",
    "CanonicalForm",
    "ComplexLongitudinalRoot",
    "ConvergenceRegion",
    "CosexpKind",
    "DecomposedPoly",
    "DIRECT",
    "DomainError",
    "E1",
    "E1T",
    "EP",
    "ElementaryFn",
    "H",
    "Indeterminate",
    "K",
    "NonConvergent",
    "ONE",
    "Overflow",
    "POLE_LOOP_VALUE",
    "Path3",
    "PolarForm",
    "PoleSpec",
    "RiemannReport",
    "RootSet",
    "SingularOnPath",
    "TriPolynomial",
    "TriSeries",
    "Tricomplex",
    "TricomplexError",
    "UndefinedAngle",
    "ZERO",
    "ZeroDivisor",
    "add",
    "amplitude",
    "basis_constants",
    "canonical_mul",
    "cauchy_value",
    "check_analytic",
    "classify",
    "component_sum",
    "cosexp",
    "cosexp_derivative",
    "cosexp_series",
    "cx",
    "decompose",
    "default_tolerance",
    "delta",
    "derivative",
    "determinant_form",
    "enumerate_root_sets",
    "eval_series",
    "exp_series",
    "factor",
    "from_canonical",
    "from_exponential",
    "invariant_circle_point",
    "inverse",
    "irreducible_rep",
    "loop_integral_pole",
    "modulus",
    "mul",
    "mx",
    "normalize_phi",
    "oracle_eval",
    "path_integral",
    "polar",
    "power_from_polar",
    "projection_on_nodal_plane",
    "px",
    "quadratic_form",
    "radius_cylindrical",
    "radius_spherical",
    "residue_sum",
    "sigma",
    "taylor_recenter",
    "tcos",
    "tcosh",
    "texp",
    "tlog",
    "to_canonical",
    "to_matrix",
    "tpow",
    "tsin",
    "tsinh",
    "winding_count",
]
