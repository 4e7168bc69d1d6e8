import math

import numpy as np
import pytest

from tricomplex import (
    CanonicalForm,
    ComplexLongitudinalRoot,
    EP,
    ONE,
    RootSet,
    Tricomplex,
    TriPolynomial,
    ZERO,
    decompose,
    enumerate_root_sets,
    factor,
    from_canonical,
    to_canonical,
)
from util import random_triples, tri_err

U2M1 = TriPolynomial((ONE, ZERO, Tricomplex(-1, 0, 0)))


def test_validation():
    with pytest.raises(ValueError):
        TriPolynomial((ONE,))
    with pytest.raises(ValueError):
        TriPolynomial((Tricomplex(2, 0, 0), ZERO))


def test_evaluation_horner():
    p = TriPolynomial((ONE, Tricomplex(0, 1, 0), Tricomplex(-2, 0, 0)))
    u = Tricomplex(1.5, -0.5, 2.0)
    want = u * u + Tricomplex(0, 1, 0) * u + Tricomplex(-2, 0, 0)
    assert tri_err(p(u), want) < 1e-14


def test_from_roots_expands_products():
    r1, r2 = Tricomplex(1, 2, 0), Tricomplex(-1, 0, 1)
    p = TriPolynomial.from_roots([r1, r2])
    # compare against the hand expansion u^2 - (r1+r2) u + r1 r2
    assert tri_err(p.coeffs[1], -(r1 + r2)) < 1e-14
    assert tri_err(p.coeffs[2], r1 * r2) < 1e-14
    assert abs(p(r1)) < 1e-12
    assert abs(p(r2)) < 1e-12


def test_decompose_square_minus_one():
    parts = decompose(U2M1)
    assert parts.transverse == (complex(1.0), complex(0.0), complex(-1.0))
    assert parts.longitudinal == (1.0, 0.0, -1.0)


def test_decompose_linear():
    c = Tricomplex(0.5, -1.5, 2.0)
    parts = decompose(TriPolynomial((ONE, -c)))
    cc = to_canonical(c)
    assert parts.transverse[1] == complex(-cc.v1, -cc.v1t)
    assert parts.longitudinal[1] == -cc.vp


def test_decompose_evaluation_equivalence():
    rng = np.random.default_rng(179)
    coeffs = [ONE] + [Tricomplex(*rng.uniform(-2, 2, 3)) for _ in range(4)]
    p = TriPolynomial(tuple(coeffs))
    parts = decompose(p)
    for u in random_triples(rng, 100, lo=-2.0, hi=2.0):
        cu = to_canonical(u)
        w = complex(cu.v1, cu.v1t)
        acc_w = complex(0.0)
        acc_p = 0.0
        for cw, cp in zip(parts.transverse, parts.longitudinal):
            acc_w = acc_w * w + cw
            acc_p = acc_p * cu.vp + cp
        rebuilt = from_canonical(CanonicalForm(acc_w.real, acc_w.imag, acc_p))
        assert tri_err(rebuilt, p(u)) < 1e-10


def test_factor_square_minus_one():
    rs = factor(U2M1)
    assert rs.roots == (Tricomplex(-1, 0, 0), Tricomplex(1, 0, 0))
    assert rs.pairing == (0, 1)


def test_enumerate_square_minus_one():
    sets = enumerate_root_sets(U2M1)
    assert len(sets) == 2
    assert sets[0].roots == (Tricomplex(-1, 0, 0), Tricomplex(1, 0, 0))
    third = 1.0 / 3.0
    want = {
        (third, -2.0 * third, -2.0 * third),
        (-third, 2.0 * third, 2.0 * third),
    }
    got = {(r.x, r.y, r.z) for r in sets[1].roots}
    assert all(
        min(max(abs(a - b) for a, b in zip(g, w)) for w in want) < 1e-12 for g in got
    )
    # every emitted set reconstructs the polynomial
    for rs in sets:
        rebuilt = TriPolynomial.from_roots(rs.roots)
        for a, b in zip(rebuilt.coeffs, U2M1.coeffs):
            assert abs(a - b) < 1e-8


def test_repeated_root_collapses_pairings():
    p = TriPolynomial.from_roots([ONE, ONE])
    sets = enumerate_root_sets(p)
    assert len(sets) == 1
    assert all(tri_err(r, ONE) < 1e-7 for r in sets[0].roots)


def test_cubic_with_distinct_roots_has_six_pairings():
    rng = np.random.default_rng(181)
    while True:
        roots = random_triples(rng, 3, lo=-2.0, hi=2.0, regular=True)
        spread = min(
            abs(a - b) for i, a in enumerate(roots) for b in roots[i + 1 :]
        )
        if spread > 0.5:
            break
    p = TriPolynomial.from_roots(roots)
    sets = enumerate_root_sets(p, cap=24)
    assert len(sets) == 6
    for rs in sets:
        rebuilt = TriPolynomial.from_roots(rs.roots)
        scale = max(abs(c) for c in p.coeffs)
        for a, b in zip(rebuilt.coeffs, p.coeffs):
            assert abs(a - b) <= 1e-8 * max(1.0, scale)


def test_cap_limits_enumeration():
    rng = np.random.default_rng(191)
    roots = random_triples(rng, 4, lo=-2.0, hi=2.0, regular=True)
    p = TriPolynomial.from_roots(roots)
    assert len(enumerate_root_sets(p, cap=3)) == 3
    with pytest.raises(ValueError):
        enumerate_root_sets(p, cap=0)


def test_construct_then_factor_recovers_roots():
    rng = np.random.default_rng(193)
    for _ in range(20):
        r1, r2 = random_triples(rng, 2, lo=-2.0, hi=2.0, regular=True)
        p = TriPolynomial.from_roots([r1, r2])
        sets = enumerate_root_sets(p)
        best = min(
            min(
                max(tri_err(a, b) for a, b in zip(rs.roots, perm))
                for perm in ([r1, r2], [r2, r1])
            )
            for rs in sets
        )
        assert best < 1e-7


def test_roots_annihilate_polynomial():
    rng = np.random.default_rng(197)
    roots = random_triples(rng, 4, lo=-1.5, hi=1.5, regular=True)
    p = TriPolynomial.from_roots(roots)
    norm = sum(abs(c) for c in p.coeffs)
    for rs in enumerate_root_sets(p, cap=24):
        for r in rs.roots:
            assert abs(p(r)) < 1e-7 * (1.0 + norm)


def test_component_root_multisets_are_pairing_invariant():
    rng = np.random.default_rng(199)
    roots = random_triples(rng, 3, lo=-2.0, hi=2.0, regular=True)
    p = TriPolynomial.from_roots(roots)
    sets = enumerate_root_sets(p, cap=24)

    def multisets(rs: RootSet):
        trans = sorted(
            (round(to_canonical(r).v1, 6), round(to_canonical(r).v1t, 6))
            for r in rs.roots
        )
        longi = sorted(round(to_canonical(r).vp, 6) for r in rs.roots)
        return tuple(trans), tuple(longi)

    reference = multisets(sets[0])
    for rs in sets[1:]:
        assert multisets(rs) == reference


def test_complex_longitudinal_roots_are_reported():
    # longitudinal part v^2 + 1 has no real roots
    p = TriPolynomial((ONE, ZERO, EP))
    with pytest.raises(ComplexLongitudinalRoot):
        factor(p)
    with pytest.raises(ComplexLongitudinalRoot):
        enumerate_root_sets(p)


def test_degree_from_csv_style_rows():
    p = TriPolynomial.from_components([(1, 0, 0), (0, 0, 0), (-1, 0, 0)])
    assert p.degree == 2
    assert p.coeffs == U2M1.coeffs
