"""Generalized falling factorials and the deformed exp/log kernels.

The deformation parameter lam is an exact rational.  The two series that
everything else is built from:

* ``degenerate_exp(x, lam, N)`` is the series with EGF coefficients
  x (x - lam) (x - 2 lam) ..., i.e. the expansion of (1 + lam t)^(x/lam);
  x may be a scalar or a symbolic PolyX.
* ``lambda_log_series(lam, N)`` is its compositional-inverse companion:
  the series inverse of degenerate_exp(1, lam, N) - 1, with the closed
  coefficient form prod_{j=1}^{n-1} (lam - j) for n >= 1.

lam = 0 is a limit convention of this package, not part of the deformed
definitions: both constructors then produce the classical exp/log
coefficients, and they insist on an explicit ``limit_mode=True`` so the
caller acknowledges the convention.  No reciprocal of lam is ever
evaluated in that mode.
"""

from __future__ import annotations

from .algebra import EgfSeries, PolyX, factorial
from .rationals import Q, QONE, QZERO


def lambda_falling(n: int, lam) -> PolyX:
    """The degree-n generalized falling factorial x (x-lam) ... (x-(n-1) lam)."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    lam = Q(lam)
    x = PolyX.x()
    acc = PolyX.one()
    for j in range(n):
        acc = acc * (x - j * lam)
    return acc


def lambda_falling_eval(value, n: int, lam):
    """Scalar value of the generalized falling factorial at x = value."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    lam = Q(lam)
    v = Q(value)
    acc = QONE
    for j in range(n):
        acc = acc * (v - j * lam)
    return acc


def classical_falling(n: int) -> PolyX:
    """x (x-1) ... (x-n+1), the lam = 1 case."""
    return lambda_falling(n, QONE)


def _require_limit_flag(lam, limit_mode: bool):
    lam = Q(lam)
    if not lam and not limit_mode:
        raise ValueError(
            "lam = 0 is outside the deformed definitions; pass "
            "limit_mode=True to request the classical limit"
        )
    return lam


def degenerate_exp(x, lam, order_cap: int, limit_mode: bool = False) -> EgfSeries:
    """Deformed exponential with parameter x: a[n] is the generalized
    falling factorial of degree n evaluated at x.

    x may be an exact scalar or a PolyX (typically PolyX.x() for the
    symbolic generating function of a polynomial family).  At lam = 0 in
    limit mode this is the classical exp(x t).
    """
    lam = _require_limit_flag(lam, limit_mode)
    if not isinstance(x, PolyX):
        x = Q(x)
    out = [QONE]
    acc = QONE
    for n in range(1, order_cap + 1):
        acc = acc * (x - (n - 1) * lam)
        out.append(acc)
    return EgfSeries(order_cap, out)


def lambda_log_series(lam, order_cap: int, limit_mode: bool = False) -> EgfSeries:
    """Deformed logarithm of 1 + t.

    EGF coefficients for n >= 1 are lam^(n-1) times the generalized
    falling factorial of 1 with parameter 1/lam, equivalently the closed
    product (lam - 1)(lam - 2) ... (lam - (n-1)).  Compositionally
    inverts degenerate_exp(1, lam, N) - 1.  In limit mode (lam = 0) the
    classical log(1 + t) coefficients (-1)^(n-1) (n-1)! are produced
    directly.
    """
    lam = _require_limit_flag(lam, limit_mode)
    out = [QZERO]
    if not lam:
        sign = QONE
        for n in range(1, order_cap + 1):
            out.append(sign * factorial(n - 1))
            sign = -sign
        return EgfSeries(order_cap, out)
    inv = QONE / lam
    fall = QONE  # generalized falling factorial of 1, parameter 1/lam
    lampow = inv  # lam^(n-1) tracked one step behind
    for n in range(1, order_cap + 1):
        fall = fall * (QONE - (n - 1) * inv)
        lampow = lampow * lam
        out.append(lampow * fall)
    return EgfSeries(order_cap, out)
