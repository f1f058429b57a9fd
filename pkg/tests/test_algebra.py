"""Polynomial and series ring: axioms on random elements, frozen values,
basis conversions, and the container type."""

import random

import pytest

from degenpoly.algebra import (
    EgfSeries,
    PolyX,
    Triangle,
    binomial_series,
    from_lambda_falling_basis,
    series_comp_inverse,
    series_compose,
    series_mul,
    to_lambda_falling_basis,
)
from degenpoly.rationals import Q, QONE, QZERO

CAP = 6


def rand_q(rng):
    return Q(rng.randint(-9, 9), rng.randint(1, 7))


def rand_poly(rng, max_deg=5):
    return PolyX([rand_q(rng) for _ in range(rng.randint(0, max_deg + 1))])


def rand_series(rng, cap=CAP):
    return EgfSeries(cap, [rand_q(rng) for _ in range(cap + 1)])


def test_poly_ring_axioms():
    rng = random.Random(42)
    for _ in range(120):
        a, b, c = rand_poly(rng), rand_poly(rng), rand_poly(rng)
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + PolyX.zero() == a
        assert a * PolyX.one() == a
        assert a - a == PolyX.zero()


def test_series_ring_axioms():
    rng = random.Random(43)
    for _ in range(120):
        a, b, c = rand_series(rng), rand_series(rng), rand_series(rng)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a - a == EgfSeries.zero(CAP)
        assert a * EgfSeries.one(CAP) == a


def test_poly_scalar_ops():
    p = PolyX([Q(1, 2), Q(-2), QONE])
    assert 2 * p == p * 2 == PolyX([QONE, Q(-4), Q(2)])
    assert p / 2 == PolyX([Q(1, 4), Q(-1), Q(1, 2)])
    assert p + 1 == PolyX([Q(3, 2), Q(-2), QONE])
    assert -p == PolyX([Q(-1, 2), Q(2), Q(-1)])
    assert p.coeff(7) == 0
    assert p.degree == 2


def test_poly_eval_and_substitution():
    p = PolyX([QONE, QZERO, QONE])  # 1 + x^2
    assert p(Q(2)) == 5
    assert p(QZERO) == 1
    # substituting x+1 gives 1 + (x+1)^2
    q = p(PolyX([QONE, QONE]))
    assert q == PolyX([Q(2), Q(2), QONE])
    # evaluation is a ring morphism
    rng = random.Random(44)
    for _ in range(40):
        a, b, v = rand_poly(rng), rand_poly(rng), rand_q(rng)
        assert (a * b)(v) == a(v) * b(v)
        assert (a + b)(v) == a(v) + b(v)


def test_poly_pow_and_normalization():
    x = PolyX.x()
    assert (x + 1) ** 2 == PolyX([QONE, Q(2), QONE])
    assert (x + 1) ** 0 == PolyX.one()
    assert PolyX([QZERO, QZERO]).is_zero()
    assert PolyX([QONE, QZERO]).degree == 0
    assert PolyX.zero().degree == -1
    assert PolyX.monomial(3, Q(5)).coeffs == (QZERO, QZERO, QZERO, Q(5))


def test_series_is_egf_normalized():
    # a[n] counts with weight n!: t*t must give a[2] = 2
    t = EgfSeries.t(4)
    assert (t * t).a[2] == 2
    assert (t * t * t).a[3] == 6
    # exp * exp doubles: all-ones series squared has a[n] = 2^n
    e = EgfSeries(8, [QONE] * 9)
    sq = e * e
    assert all(sq.a[n] == Q(2) ** n for n in range(9))


def test_series_mul_matches_binomial_convolution():
    rng = random.Random(45)
    for _ in range(30):
        f, g = rand_series(rng, 5), rand_series(rng, 5)
        prod = series_mul(f, g)
        binom = [[1], [1, 1]]
        for n in range(2, 6):
            row = [1] + [binom[-1][j - 1] + binom[-1][j] for j in range(1, n)] + [1]
            binom.append(row)
        for n in range(6):
            want = sum(
                (binom[n][j] * f.a[j] * g.a[n - j] for j in range(n + 1)), QZERO
            )
            assert prod.a[n] == want


def test_binomial_series_frozen():
    s = binomial_series(Q(-1, 2), Q(2), 4)
    assert s.a[0] == 1
    assert s.a[1] == -1
    assert s.a[2] == 3
    # alpha = 1: just 1 + c t
    s = binomial_series(QONE, Q(3), 4)
    assert s.a == (QONE, Q(3), QZERO, QZERO, QZERO)


def test_compose_and_inverse():
    # f = t/(1-t) has EGF coefficients n!; its inverse is t/(1+t)
    cap = 7
    fact = [1]
    for n in range(1, cap + 1):
        fact.append(fact[-1] * n)
    f = EgfSeries(cap, [QZERO] + [Q(fact[n]) for n in range(1, cap + 1)])
    g = f.comp_inverse()
    for n in range(1, cap + 1):
        want = Q((-1) ** (n - 1) * fact[n])
        assert g.a[n] == want
    assert series_compose(f, g) == EgfSeries.t(cap)
    assert series_compose(g, f) == EgfSeries.t(cap)


def test_comp_inverse_random_round_trip():
    rng = random.Random(46)
    for _ in range(20):
        coeffs = [QZERO, Q(rng.choice([1, -1]) * rng.randint(1, 5))]
        coeffs += [rand_q(rng) for _ in range(CAP - 1)]
        f = EgfSeries(CAP, coeffs)
        g = series_comp_inverse(f)
        assert series_compose(f, g) == EgfSeries.t(CAP)


def test_reciprocal():
    rng = random.Random(47)
    for _ in range(20):
        coeffs = [Q(rng.choice([1, -1]) * rng.randint(1, 5))]
        coeffs += [rand_q(rng) for _ in range(CAP)]
        f = EgfSeries(CAP, coeffs)
        assert f * f.reciprocal() == EgfSeries.one(CAP)


def test_shift_down():
    t = EgfSeries.t(4)
    one = t.shift_down()
    assert one.order_cap == 3
    assert one.a[0] == 1
    f = EgfSeries(3, [QZERO, QONE, Q(4), Q(9)])
    g = f.shift_down()
    # a'[n] = a[n+1]/(n+1)
    assert g.a == (QONE, Q(2), Q(3))


def test_series_errors():
    f = EgfSeries(4, [QONE])
    g = EgfSeries(5, [QONE])
    with pytest.raises(ValueError):
        f + g
    with pytest.raises(ValueError):
        f * g
    with pytest.raises(ValueError):
        f.compose(EgfSeries(4, [QONE, QONE]))  # inner must kill the constant
    with pytest.raises(ValueError):
        EgfSeries(4, [QZERO, QZERO, QONE]).comp_inverse()  # order 2, not 1
    with pytest.raises(ValueError):
        EgfSeries(4, [QZERO, QONE]).reciprocal()
    with pytest.raises(ValueError):
        EgfSeries(4, [QONE, QONE]).shift_down()
    with pytest.raises(ValueError):
        EgfSeries(2, [QONE] * 5)  # more coefficients than the cap allows


def test_falling_basis_frozen_example():
    lam = Q(1, 3)
    # x^2 = lam * (x)_{1,lam} + (x)_{2,lam}
    coeffs = to_lambda_falling_basis(PolyX.monomial(2), lam)
    assert coeffs == [QZERO, lam, QONE]


def test_falling_basis_round_trip():
    rng = random.Random(48)
    for lam in (QZERO, Q(1, 2), Q(-1, 3), Q(2), Q(7, 5)):
        for _ in range(10):
            p = rand_poly(rng, max_deg=16)
            coeffs = to_lambda_falling_basis(p, lam)
            assert from_lambda_falling_basis(coeffs, lam) == p
    # lam = 0 is the monomial basis
    p = PolyX([Q(3), Q(-1), Q(5)])
    assert to_lambda_falling_basis(p, QZERO) == list(p.coeffs)


def test_triangle_container():
    tri = Triangle(((QONE,), (QZERO, QONE), (QZERO, QONE, QONE)))
    assert tri.n_max == 2
    assert tri[2, 1] == 1
    assert tri[1, 2] == 0  # above the diagonal reads as zero
    assert tri.row(1) == (QZERO, QONE)
    with pytest.raises(IndexError):
        tri[3, 0]
    with pytest.raises(IndexError):
        tri[0, -1]
    with pytest.raises(ValueError):
        Triangle(((QONE,), (QZERO,)))  # ragged row lengths
    with pytest.raises(ValueError):
        Triangle(())
    assert tri == Triangle(tri.rows)
