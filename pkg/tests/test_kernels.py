"""Deformed exponential and logarithm kernels: closed forms, the
inverse-pair relation, and the lam = 0 limit flag."""

import pytest

from degenpoly.algebra import EgfSeries, PolyX
from degenpoly.kernels import (
    classical_falling,
    degenerate_exp,
    lambda_falling,
    lambda_falling_eval,
    lambda_log_series,
)
from degenpoly.rationals import Q, QONE, QZERO


def test_lambda_falling_shapes():
    lam = Q(1, 2)
    # x(x - 1/2)(x - 1) = x^3 - 3/2 x^2 + 1/2 x
    assert lambda_falling(3, lam) == PolyX([QZERO, Q(1, 2), Q(-3, 2), QONE])
    assert lambda_falling(0, lam) == PolyX.one()
    assert lambda_falling(1, lam) == PolyX.x()
    assert classical_falling(3) == PolyX([QZERO, Q(2), Q(-3), QONE])
    # lam = 0 collapses to the pure power
    assert lambda_falling(4, QZERO) == PolyX.monomial(4)


def test_lambda_falling_eval_matches_poly():
    for lam in (QZERO, Q(1, 3), Q(-2, 7)):
        for n in range(8):
            p = lambda_falling(n, lam)
            for v in (QZERO, QONE, Q(-3, 2), Q(5)):
                assert lambda_falling_eval(v, n, lam) == p(v)


def test_degenerate_exp_scalar_coefficients():
    # a[n] = generalized falling factorial of x; at x = 1, lam = 1/2
    # the factors hit zero from n = 3 on
    s = degenerate_exp(QONE, Q(1, 2), 6)
    assert s.a == (QONE, QONE, Q(1, 2), QZERO, QZERO, QZERO, QZERO)
    # lam = 1 with symbolic x is the binomial series (1 + t)^x
    s = degenerate_exp(PolyX.x(), QONE, 5)
    for n in range(6):
        assert s.a[n] == classical_falling(n)


def test_degenerate_exp_symbolic_coefficients():
    lam = Q(2, 7)
    s = degenerate_exp(PolyX.x(), lam, 8)
    for n in range(9):
        assert s.a[n] == lambda_falling(n, lam)


def test_exp_exponent_additivity():
    # e^x e^y = e^(x+y): exact in x, sampled in y at cap+1 points,
    # which settles the bivariate identity at each lam
    cap = 10
    for lam in (Q(1, 2), Q(-1, 3)):
        sym = degenerate_exp(PolyX.x(), lam, cap)
        for y in range(cap + 1):
            at_y = degenerate_exp(Q(y), lam, cap)
            shifted = degenerate_exp(PolyX([Q(y), QONE]), lam, cap)
            assert sym * at_y == shifted


def test_lambda_log_closed_form():
    # a[n] = lam^(n-1) * product over the deformed factors, which
    # telescopes to prod_{j=1}^{n-1} (lam - j)
    for lam in (Q(1, 2), Q(-1, 3), Q(5, 3)):
        s = lambda_log_series(lam, 12)
        assert s.a[0] == 0
        assert s.a[1] == 1
        for n in range(2, 13):
            prod = QONE
            for j in range(1, n):
                prod = prod * (lam - j)
            assert s.a[n] == prod
    assert lambda_log_series(Q(1, 2), 3).a[2] == Q(1, 2) - 1


def test_log_is_compositional_inverse_of_exp():
    cap = 12
    for lam in (Q(1, 2), Q(-2, 5)):
        e = degenerate_exp(QONE, lam, cap) - 1
        log = lambda_log_series(lam, cap)
        assert e.compose(log) == EgfSeries.t(cap)
        assert log.compose(e) == EgfSeries.t(cap)
        # and independently via the generic inverter
        assert e.comp_inverse() == log


def test_limit_mode_flag():
    with pytest.raises(ValueError):
        degenerate_exp(QONE, QZERO, 4)
    with pytest.raises(ValueError):
        lambda_log_series(QZERO, 4)
    # with the flag, the classical limits appear
    e = degenerate_exp(QONE, QZERO, 6, limit_mode=True)
    assert e.a == (QONE,) * 7
    log = lambda_log_series(QZERO, 6, limit_mode=True)
    fact = 1
    for n in range(1, 7):
        assert log.a[n] == Q((-1) ** (n - 1) * fact)
        fact *= n
    # the classical pair still inverts
    assert (e - 1).compose(log) == EgfSeries.t(6)


def test_limit_mode_matches_small_lambda_trend():
    # the lam = 0 branch is the constant term of the polynomial family:
    # evaluating the generic closed form at lam = 0 must agree
    log0 = lambda_log_series(QZERO, 8, limit_mode=True)
    for n in range(2, 9):
        prod = QONE
        for j in range(1, n):
            prod = prod * (QZERO - j)
        assert log0.a[n] == prod
