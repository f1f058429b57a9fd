"""Polynomial families built on the deformed kernels.

Every constructor returns the degree-n member of its family as an exact
PolyX.  Two construction styles appear:

* triangle sums (Bell and Dowling variants): the polynomial is a linear
  combination of monomials or generalized falling factorials with
  Stirling/Whitney triangle entries as weights;
* series products (Bernoulli variants and the polyexponential Bell
  family): the polynomial is an EGF coefficient of an explicit product
  of kernel series, with symbolic x carried in the coefficients.

The generating-function route for the triangle-sum families is *not*
computed here; the verifier recomputes those polynomials through series
composition precisely so the two routes stay independent.

``dobinski_eval`` is the package's single floating-point surface: the
series summation itself is exact, floats appear only in the final
conversion and in the transcendental prefactor.
"""

from __future__ import annotations

from . import kernels, triangles
from .algebra import EgfSeries, PolyX, factorial
from .rationals import Q, QONE, QZERO


def _as_poly(value) -> PolyX:
    return value if isinstance(value, PolyX) else PolyX.constant(value)


def _check_n(n: int):
    if n < 0:
        raise ValueError("n must be >= 0")


def fully_degenerate_bell(n: int, lam) -> PolyX:
    """Second-kind triangle entries against the generalized falling basis."""
    _check_n(n)
    tri = triangles.degenerate_stirling2(n, lam)
    acc = PolyX.zero()
    for k in range(n + 1):
        c = tri[n, k]
        if c:
            acc = acc + c * kernels.lambda_falling(k, lam)
    return acc


def partial_degenerate_bell(n: int, lam) -> PolyX:
    """Second-kind triangle entries against plain powers of x."""
    _check_n(n)
    tri = triangles.degenerate_stirling2(n, lam)
    return PolyX(tri.row(n))


def bell_polynomial(n: int) -> PolyX:
    """Classical Bell polynomial (the lam = 0 limit of the partial family)."""
    return partial_degenerate_bell(n, QZERO)


def fully_degenerate_dowling(n: int, m: int, lam) -> PolyX:
    """Whitney triangle entries against the generalized falling basis."""
    _check_n(n)
    tri = triangles.degenerate_whitney2(n, m, lam)
    acc = PolyX.zero()
    for k in range(n + 1):
        c = tri[n, k]
        if c:
            acc = acc + c * kernels.lambda_falling(k, lam)
    return acc


def degenerate_dowling(n: int, m: int, lam) -> PolyX:
    """Whitney triangle entries against plain powers of x."""
    _check_n(n)
    tri = triangles.degenerate_whitney2(n, m, lam)
    return PolyX(tri.row(n))


def dowling_polynomial(n: int, m: int) -> PolyX:
    """Classical Dowling polynomial (lam = 0 limit)."""
    return degenerate_dowling(n, m, QZERO)


def degenerate_bernoulli(n: int, lam) -> PolyX:
    """EGF coefficient n of (t over the deformed exp minus one) times the
    symbolic deformed exponential."""
    _check_n(n)
    grown = kernels.degenerate_exp(QONE, lam, n + 1, limit_mode=True) - 1
    unit = grown.shift_down().reciprocal()
    sym = kernels.degenerate_exp(PolyX.x(), lam, n, limit_mode=True)
    return _as_poly((unit * sym).a[n])


def degenerate_bernoulli2(n: int, lam) -> PolyX:
    """Second-kind variant: t over the deformed log, against (1 + t)^x.

    (1 + t)^x is the lam = 1 deformed exponential, so its EGF
    coefficients are the classical falling factorials of x.
    """
    _check_n(n)
    grown = kernels.lambda_log_series(lam, n + 1, limit_mode=True)
    unit = grown.shift_down().reciprocal()
    sym = kernels.degenerate_exp(PolyX.x(), QONE, n)
    return _as_poly((unit * sym).a[n])


def degenerate_polyexp_series(k: int, lam, order_cap: int) -> EgfSeries:
    """Polyexponential kernel of integer order k.

    EGF coefficients: a[0] = 0 and a[n] = (1)(1 - lam)...(1 - (n-1) lam)
    times n^(1-k) for n >= 1.  Order k may be any integer; k = 1 gives
    the deformed exp minus one.
    """
    if not isinstance(k, int):
        raise ValueError("the polyexponential order k must be an int")
    lam = Q(lam)
    out = [QZERO]
    fall = QONE
    for n in range(1, order_cap + 1):
        fall = fall * (QONE - (n - 1) * lam)
        out.append(fall * Q(n) ** (1 - k))
    return EgfSeries(order_cap, out)


def degenerate_poly_bell(n: int, k: int, lam) -> PolyX:
    """Coefficient n of (polyexp of the deformed log, over the deformed
    exp minus one) times the symbolic deformed exponential.

    k = 1 collapses the first factor to t/(e - 1), i.e. the Bernoulli
    family.
    """
    _check_n(n)
    cap = n + 1
    log_series = kernels.lambda_log_series(lam, cap, limit_mode=True)
    numer = degenerate_polyexp_series(k, lam, cap).compose(log_series)
    denom = kernels.degenerate_exp(QONE, lam, cap, limit_mode=True) - 1
    unit = numer.shift_down() * denom.shift_down().reciprocal()
    sym = kernels.degenerate_exp(PolyX.x(), lam, n, limit_mode=True)
    return _as_poly((unit * sym).a[n])


# ---------------------------------------------------------------------------
# numeric surface


def _dobinski_terms(n: int, lam, x, count: int):
    """Exact partial sums of the Dobinski-style series, yielded per term."""
    inv = QONE / (QONE - lam)
    acc = QZERO
    xfall = QONE  # generalized falling factorial of x, degree k
    invpow = QONE
    kfact = QONE
    for k in range(count + 1):
        if k:
            xfall = xfall * (x - (k - 1) * lam)
            invpow = invpow * inv
            kfact = kfact * k
        kfall = QONE  # generalized falling factorial of k, degree n
        for j in range(n):
            kfall = kfall * (k - j * lam)
        acc = acc + kfall / kfact * invpow * xfall
        yield k, acc


def dobinski_eval(n: int, lam, x, terms: int = 200):
    """Truncated Dobinski-style numeric value and its exact reference.

    Returns (approximation, reference) as floats.  The partial sum is
    accumulated exactly and floated once; the prefactor (1 - lam)^(x/lam)
    is evaluated in floating point.  Restricted to 0 < lam < 1, the
    conservatively safe region for this summation.
    """
    _check_n(n)
    if terms < 0:
        raise ValueError("terms must be >= 0")
    lam = Q(lam)
    x = Q(x)
    if not (0 < lam < 1):
        raise ValueError("dobinski evaluation requires 0 < lam < 1")
    acc = QZERO
    for _, acc in _dobinski_terms(n, lam, x, terms):
        pass
    prefactor = float(1 - lam) ** float(x / lam)
    reference = float(fully_degenerate_bell(n, lam)(x))
    return prefactor * float(acc), reference


def dobinski_trace(n: int, lam, x, terms: int = 200) -> dict:
    """Convergence trace: floated partial sums at ten checkpoints plus
    the exact reference and final relative error."""
    _check_n(n)
    if terms < 0:
        raise ValueError("terms must be >= 0")
    lam = Q(lam)
    x = Q(x)
    if not (0 < lam < 1):
        raise ValueError("dobinski evaluation requires 0 < lam < 1")
    prefactor = float(1 - lam) ** float(x / lam)
    step = max(1, terms // 10)
    checkpoints = []
    final = 0.0
    for k, acc in _dobinski_terms(n, lam, x, terms):
        value = prefactor * float(acc)
        if k == terms or (k and k % step == 0):
            checkpoints.append((k, value))
        if k == terms:
            final = value
    reference = float(fully_degenerate_bell(n, lam)(x))
    denom = abs(reference) if reference else 1.0
    return {
        "checkpoints": checkpoints,
        "reference": reference,
        "final": final,
        "rel_error": abs(final - reference) / denom,
    }
