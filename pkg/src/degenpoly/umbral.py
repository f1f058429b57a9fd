"""Sheffer machinery over the generalized falling-factorial basis.

The pairing at the heart of this module sends a series f and a
polynomial p to sum_j f.a[j] q_j, where q is p written in the
generalized falling basis at the deformation lam.  Against that pairing
a pair (g, f) of series with orders 0 and 1 owns a unique polynomial
sequence s_n, characterized by

    <g f^k | s_n> = n! delta_{n,k},

and ``sheffer_generate`` produces it by expanding the symbolic
generating series (1/g(fbar)) e^x(fbar) with fbar the compositional
inverse of f.  The biorthogonality characterization is re-checked after
generation; an exact engine has no excuse not to.

``connection_coefficients`` and ``expand_in_basis`` change coordinates
between two such sequences: both are instances of the same pairing
formula, the former routed through fbar, the latter applied directly to
a given polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import families, kernels
from .algebra import (
    EgfSeries,
    PolyX,
    Triangle,
    binomial_series,
    factorial,
    to_lambda_falling_basis,
)
from .rationals import Q, QONE, QZERO


@dataclass(frozen=True)
class ShefferPair:
    """A pair (g, f) with o(g) = 0 and o(f) = 1 at a fixed deformation.

    The two series must share a truncation cap; the cap bounds the
    degrees this pair can generate or expand.
    """

    g: EgfSeries
    f: EgfSeries
    lam: object

    def __post_init__(self):
        if self.g.order_cap != self.f.order_cap:
            raise ValueError("pair series must share a truncation cap")
        a0 = self.g.a[0]
        if isinstance(a0, PolyX) or not a0:
            raise ValueError("g must have a nonzero scalar constant term")
        if self.f.a[0] or not self.f.a[1]:
            raise ValueError("f must have order exactly 1")
        object.__setattr__(self, "lam", Q(self.lam))

    @property
    def order_cap(self) -> int:
        return self.g.order_cap


def pair_functional(series: EgfSeries, p: PolyX, lam):
    """<series | p> at deformation lam: the dot product of the series
    coefficients with p in the generalized falling basis."""
    if p.degree > series.order_cap:
        raise ValueError(
            "functional cap %d cannot see degree %d"
            % (series.order_cap, p.degree)
        )
    q = to_lambda_falling_basis(p, lam)
    acc = QZERO
    for j, qj in enumerate(q):
        if qj and series.a[j]:
            acc = acc + series.a[j] * qj
    return acc


def apply_lambda_diff_op(k: int, p: PolyX, lam) -> PolyX:
    """Action of the k-th deformed differential operator on p.

    On the generalized falling basis the operator sends the degree-n
    basis polynomial to (n)_k x^(n-k) (a plain monomial with a classical
    falling-number weight) and kills degrees below k; the result is
    returned in the monomial basis.
    """
    if k < 0:
        raise ValueError("operator order must be >= 0")
    q = to_lambda_falling_basis(p, lam)
    out = [QZERO] * max(len(q) - k, 0)
    for n in range(k, len(q)):
        if q[n]:
            fall = factorial(n) / factorial(n - k)
            out[n - k] = out[n - k] + q[n] * fall
    return PolyX(out)


def sheffer_generate(pair: ShefferPair, n_max: int) -> list:
    """The first n_max + 1 polynomials owned by the pair.

    Expanded from the symbolic generating series, then certified against
    the biorthogonality characterization and the degree grading; any
    violation is a bug in the pair's construction, so it raises.
    """
    cap = pair.order_cap
    if n_max > cap:
        raise ValueError("pair cap %d cannot generate degree %d" % (cap, n_max))
    fbar = pair.f.comp_inverse()
    unit = pair.g.compose(fbar).reciprocal()
    sym = kernels.degenerate_exp(PolyX.x(), pair.lam, cap, limit_mode=True)
    series = unit * sym.compose(fbar)
    polys = []
    for n in range(n_max + 1):
        p = series.a[n]
        polys.append(p if isinstance(p, PolyX) else PolyX.constant(p))
    _assert_biorthogonal(pair, polys)
    return polys


def _assert_biorthogonal(pair: ShefferPair, polys: list):
    basis_rows = [to_lambda_falling_basis(p, pair.lam) for p in polys]
    for n, p in enumerate(polys):
        if p.degree != n:
            raise AssertionError("generated polynomial %d has wrong degree" % n)
    probe = pair.g
    for k in range(len(polys)):
        for n, q in enumerate(basis_rows):
            acc = QZERO
            for j, qj in enumerate(q):
                if qj and probe.a[j]:
                    acc = acc + probe.a[j] * qj
            want = factorial(n) if n == k else QZERO
            if acc != want:
                raise AssertionError(
                    "biorthogonality failed at n=%d k=%d" % (n, k)
                )
        probe = probe * pair.f


def connection_coefficients(
    source: ShefferPair, target: ShefferPair, n_max: int
) -> Triangle:
    """Coefficients rewriting the source sequence in the target sequence.

    Row n holds c_{n,0} .. c_{n,n} with source_n = sum_k c_{n,k}
    target_k.  Entries above the diagonal vanish by the order grading;
    that is asserted rather than assumed.
    """
    if source.lam != target.lam:
        raise ValueError("pairs live at different deformations")
    cap = source.order_cap
    if target.order_cap != cap:
        raise ValueError("pairs must share a truncation cap")
    if n_max > cap:
        raise ValueError("pair cap %d cannot expand degree %d" % (cap, n_max))
    fbar = source.f.comp_inverse()
    ratio = target.g.compose(fbar) * source.g.compose(fbar).reciprocal()
    inner = target.f.compose(fbar)
    rows = [[] for _ in range(n_max + 1)]
    col = ratio
    for k in range(n_max + 1):
        kfact = factorial(k)
        for n in range(n_max + 1):
            value = col.a[n] / kfact
            if n < k:
                if value:
                    raise AssertionError(
                        "connection matrix not triangular at (%d, %d)" % (n, k)
                    )
            elif k <= n:
                rows[n].append(value)
        col = col * inner
    return Triangle(rows)


def expand_in_basis(p: PolyX, target: ShefferPair) -> list:
    """Coefficients of p against the target pair's sequence.

    Returns C_0 .. C_deg(p) with p = sum_k C_k target_k; each C_k is the
    pairing of g f^k against p scaled by 1/k!.
    """
    if p.degree > target.order_cap:
        raise ValueError(
            "pair cap %d cannot expand degree %d"
            % (target.order_cap, p.degree)
        )
    q = to_lambda_falling_basis(p, target.lam)
    out = []
    probe = target.g
    for k in range(len(q)):
        acc = QZERO
        for j, qj in enumerate(q):
            if qj and probe.a[j]:
                acc = acc + probe.a[j] * qj
        out.append(acc / factorial(k))
        probe = probe * target.f
    return out


def combine_basis(coeffs, polys) -> PolyX:
    """sum_k coeffs[k] polys[k] as a PolyX."""
    coeffs = list(coeffs)
    if len(coeffs) > len(polys):
        raise ValueError(
            "got %d coefficients for %d basis polynomials"
            % (len(coeffs), len(polys))
        )
    acc = PolyX.zero()
    for c, p in zip(coeffs, polys):
        if c:
            acc = acc + c * p
    return acc


# ---------------------------------------------------------------------------
# the standard pairs


def falling_pair(lam, order_cap: int) -> ShefferPair:
    """(1, t): owns the generalized falling factorials themselves."""
    return ShefferPair(
        EgfSeries.one(order_cap), EgfSeries.t(order_cap), lam
    )


def bell_pair(lam, order_cap: int) -> ShefferPair:
    """(1, deformed log): owns the fully deformed Bell polynomials."""
    return ShefferPair(
        EgfSeries.one(order_cap),
        kernels.lambda_log_series(lam, order_cap, limit_mode=True),
        lam,
    )


def bernoulli_pair(lam, order_cap: int) -> ShefferPair:
    """((e - 1)/t, t): owns the deformed Bernoulli polynomials."""
    grown = kernels.degenerate_exp(QONE, lam, order_cap + 1, limit_mode=True) - 1
    return ShefferPair(grown.shift_down(), EgfSeries.t(order_cap), lam)


def bernoulli2_pair(lam, order_cap: int) -> ShefferPair:
    """(t/(e - 1), e - 1): owns the second-kind Bernoulli polynomials."""
    grown = kernels.degenerate_exp(QONE, lam, order_cap + 1, limit_mode=True) - 1
    g = grown.shift_down().reciprocal()
    f = kernels.degenerate_exp(QONE, lam, order_cap, limit_mode=True) - 1
    return ShefferPair(g, f, lam)


def poly_bell_pair(k: int, lam, order_cap: int) -> ShefferPair:
    """((e - 1)/polyexp(log), t): owns the order-k polyexponential Bell
    polynomials."""
    cap1 = order_cap + 1
    log_series = kernels.lambda_log_series(lam, cap1, limit_mode=True)
    numer = kernels.degenerate_exp(QONE, lam, cap1, limit_mode=True) - 1
    denom = families.degenerate_polyexp_series(k, lam, cap1).compose(log_series)
    g = numer.shift_down() * denom.shift_down().reciprocal()
    return ShefferPair(g, EgfSeries.t(order_cap), lam)


def dowling_pair(m: int, lam, order_cap: int) -> ShefferPair:
    """((mt+1)^(-1/m), (1/m) log at lam/m of (mt+1)): owns the fully
    deformed Dowling polynomials."""
    if m < 1:
        raise ValueError("m must be >= 1")
    g = binomial_series(Q(-1, m), m, order_cap)
    lam = Q(lam)
    f = kernels.lambda_log_series(lam / m, order_cap, limit_mode=True)
    f = f.scale_argument(m) * Q(1, m)
    return ShefferPair(g, f, lam)


def rescaled_bell_pair(m: int, lam, order_cap: int) -> ShefferPair:
    """(1, (1/m) log at lam/m of (mt+1)): owns m^n times the Bell
    polynomial at deformation lam/m evaluated at x/m."""
    if m < 1:
        raise ValueError("m must be >= 1")
    lam = Q(lam)
    f = kernels.lambda_log_series(lam / m, order_cap, limit_mode=True)
    f = f.scale_argument(m) * Q(1, m)
    return ShefferPair(EgfSeries.one(order_cap), f, lam)
