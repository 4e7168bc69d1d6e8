"""Monic polynomials and their factorization into linear factors.

In the canonical basis a polynomial splits into an ordinary complex
polynomial in the transverse variable and a real polynomial in the
longitudinal variable.  Each part factors on its own; a full set of
roots is produced by pairing a transverse root with a longitudinal root,
and since the pairing is arbitrary the factorization is not unique.
``factor`` fixes a canonical pairing (both lists sorted); the
alternatives are exposed by ``enumerate_root_sets``.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .algebra import ONE, Tricomplex
from .errors import ComplexLongitudinalRoot
from .geometry import CanonicalForm, from_canonical, to_canonical

ROOT_TOL = 1e-12
MAX_ITERATIONS = 200
IMAG_SNAP = 1e-10
CLUSTER_RADIUS = 1e-8


@dataclass(frozen=True)
class TriPolynomial:
    """Monic polynomial, coefficients in descending powers.

    ``coeffs[0]`` must be the unity; the degree is ``len(coeffs) - 1``
    and must be at least 1.
    """

    coeffs: tuple[Tricomplex, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.coeffs) < 2:
            raise ValueError("degree must be >= 1")
        if self.coeffs[0] != ONE:
            raise ValueError("leading coefficient must be the unity")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, u: Tricomplex) -> Tricomplex:
        acc = self.coeffs[0]
        for a in self.coeffs[1:]:
            acc = acc * u + a
        return acc

    @classmethod
    def from_components(cls, rows: Sequence[Sequence[float]]) -> "TriPolynomial":
        return cls(tuple(Tricomplex(p, q, r) for p, q, r in rows))

    @classmethod
    def from_roots(cls, roots: Sequence[Tricomplex]) -> "TriPolynomial":
        """Expand the product of (u - root) over the given roots."""
        coeffs = [ONE]
        for r in roots:
            prev = coeffs
            coeffs = [prev[0]]
            coeffs += [prev[j] - r * prev[j - 1] for j in range(1, len(prev))]
            coeffs.append(-(r * prev[-1]))
        return cls(tuple(coeffs))


@dataclass(frozen=True)
class DecomposedPoly:
    """Split coefficients, descending powers: complex transverse pairs
    and real longitudinal components."""

    transverse: tuple[complex, ...]
    longitudinal: tuple[float, ...]


@dataclass(frozen=True)
class RootSet:
    """One complete set of roots.

    ``pairing[i]`` records which entry of the sorted longitudinal root
    list was combined with the i-th sorted transverse root.
    """

    roots: tuple[Tricomplex, ...]
    pairing: tuple[int, ...]


def decompose(p: TriPolynomial) -> DecomposedPoly:
    """Split into the transverse complex polynomial and the longitudinal
    real polynomial; evaluating both and recombining through the
    canonical basis reproduces the polynomial's values."""
    trans = []
    longi = []
    for a in p.coeffs:
        c = to_canonical(a)
        trans.append(complex(c.v1, c.v1t))
        longi.append(c.vp)
    return DecomposedPoly(tuple(trans), tuple(longi))


def _poly_value(coeffs: Sequence[complex], w: complex) -> complex:
    acc = complex(0.0)
    for c in coeffs:
        acc = acc * w + c
    return acc


def _simultaneous_roots(
    coeffs: Sequence[complex],
    tol: float = ROOT_TOL,
    max_iterations: int = MAX_ITERATIONS,
) -> list[complex]:
    """All roots of a monic complex polynomial by simultaneous
    (Weierstrass-style) iteration, then a couple of Newton polish steps
    so simple representable roots land exactly."""
    m = len(coeffs) - 1
    if m < 1:
        return []
    bound = 1.0 + max(abs(c) for c in coeffs[1:])
    roots = [
        bound * cmath.exp(2j * math.pi * (i / m) + 0.4j) for i in range(m)
    ]
    for _ in range(max_iterations):
        moved = 0.0
        nxt = []
        for i, w in enumerate(roots):
            den = complex(1.0)
            for j, wj in enumerate(roots):
                if j != i:
                    den *= w - wj
            if den == 0.0:
                nxt.append(w + complex(CLUSTER_RADIUS, CLUSTER_RADIUS))
                moved = math.inf
                continue
            step = _poly_value(coeffs, w) / den
            nxt.append(w - step)
            moved = max(moved, abs(step))
        roots = nxt
        if moved < tol:
            break
    # Newton polish: quadratic on simple roots (representable roots land
    # exactly); linear but still contracting on multiple roots, where the
    # simultaneous iteration stalls at the sqrt(eps) jitter floor.
    deriv = [c * (m - i) for i, c in enumerate(coeffs[:-1])]
    polished = []
    for w in roots:
        for _ in range(12):
            dp = _poly_value(deriv, w)
            if dp == 0.0:
                break
            step = _poly_value(coeffs, w) / dp
            w -= step
            if abs(step) <= 1e-15 * (1.0 + abs(w)):
                break
        polished.append(w)
    return polished


def _cluster(values: list[complex], radius: float = CLUSTER_RADIUS) -> list[complex]:
    """Snap near-coincident roots to their cluster mean (multiplicities
    are kept: each member is replaced, none dropped).  The radius scales
    with magnitude; 1e-8 at unit scale matches the accuracy floor of a
    double root located through an eps-accurate polynomial evaluation."""
    ordered = sorted(values, key=lambda w: (w.real, w.imag))
    out: list[complex] = []
    group: list[complex] = []
    for w in ordered:
        if group and abs(w - group[0]) > radius * (1.0 + abs(group[0])):
            mean = sum(group) / len(group)
            out.extend([mean] * len(group))
            group = []
        group.append(w)
    if group:
        mean = sum(group) / len(group)
        out.extend([mean] * len(group))
    return out


def _root_lists(p: TriPolynomial) -> tuple[list[complex], list[float]]:
    parts = decompose(p)
    trans = _cluster(_simultaneous_roots(parts.transverse))
    trans.sort(key=lambda w: (w.real, w.imag))
    longi_raw = _cluster(_simultaneous_roots([complex(c) for c in parts.longitudinal]))
    longi: list[float] = []
    # A conjugate pair closer to the real axis than the cluster radius is
    # indistinguishable in double precision from a repeated real root
    # (the separating coefficient perturbation is below one ulp), so the
    # snap window widens from IMAG_SNAP to the cluster radius.
    snap = max(IMAG_SNAP, CLUSTER_RADIUS)
    for w in longi_raw:
        if abs(w.imag) >= snap * (1.0 + abs(w)):
            raise ComplexLongitudinalRoot(
                f"longitudinal root {w} is complex; no all-real linear factorization exists"
            )
        longi.append(w.real)
    longi.sort()
    return trans, longi


def _combine(trans: Sequence[complex], longi: Sequence[float], order: Sequence[int]) -> RootSet:
    roots = tuple(
        from_canonical(CanonicalForm(t.real, t.imag, longi[j]))
        for t, j in zip(trans, order)
    )
    return RootSet(roots=roots, pairing=tuple(order))


def factor(p: TriPolynomial) -> RootSet:
    """Canonical factorization into degree-many linear factors.

    Both root lists are sorted (transverse by real then imaginary part,
    longitudinal by value) and paired index by index, which makes the
    result deterministic.
    """
    trans, longi = _root_lists(p)
    return _combine(trans, longi, range(len(longi)))


def _root_key(roots: Sequence[Tricomplex]) -> tuple:
    rounded = sorted(
        (round(r.x, 8), round(r.y, 8), round(r.z, 8)) for r in roots
    )
    return tuple(rounded)


def enumerate_root_sets(p: TriPolynomial, cap: int = 24) -> list[RootSet]:
    """Distinct root sets over all pairings of the two root lists.

    At most ``cap`` sets are returned, canonical pairing first; sets
    that coincide after clustering (repeated roots) are emitted once.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    trans, longi = _root_lists(p)
    seen = set()
    out: list[RootSet] = []
    for order in itertools.permutations(range(len(longi))):
        rs = _combine(trans, longi, order)
        key = _root_key(rs.roots)
        if key in seen:
            continue
        seen.add(key)
        out.append(rs)
        if len(out) >= cap:
            break
    return out
