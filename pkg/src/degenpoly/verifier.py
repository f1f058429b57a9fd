"""Mechanical verification of the package's identity inventory.

Every identity the package claims is checked here as an exact statement
on a finite grid: polynomial equalities are compared coefficient by
coefficient, and identities polynomial in the deformation lam are
certified by sampling lam at more points than a conservative degree
bound (4n, deliberately loose), which upgrades grid evidence to proof.
The one numeric tag (THM2_DOBINSKI, the floating-point summation) is
tolerance-checked and never claims exact certification.

Checkers recompute both sides of each identity through deliberately
different routes: triangle sums against series compositions, engine
connection coefficients against independent closed-form double/quadruple
sums, algebra against brute-force enumeration.  Shared inputs (triangles,
kernel series, family polynomials) are cached per run in a workspace;
the cache is created fresh for every verification call so a patched or
corrupted constructor is always honored.

Reports are deterministic: identical arguments produce identical report
objects, byte-identical once serialized.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum

from . import families, kernels, triangles, umbral
from .algebra import PolyX, binom_row, factorial, to_lambda_falling_basis
from .rationals import Q, QONE, QZERO, format_rational


class IdentityId(str, Enum):
    EQ_1A_2A_ORTHO = "EQ_1A_2A_ORTHO"
    EQ_3A_4A_ORTHO = "EQ_3A_4A_ORTHO"
    LEMMA1 = "LEMMA1"
    THM2_DOBINSKI = "THM2_DOBINSKI"
    THM3_GF = "THM3_GF"
    EQ25_ADDITION = "EQ25_ADDITION"
    THM5 = "THM5"
    THM6 = "THM6"
    THM7 = "THM7"
    THM8 = "THM8"
    THM9_ROUNDTRIP = "THM9_ROUNDTRIP"
    THM10 = "THM10"
    THM11 = "THM11"
    EQ56_CLOSING = "EQ56_CLOSING"
    STIRLING_ORTHO = "STIRLING_ORTHO"
    DEG_STIRLING_ORTHO = "DEG_STIRLING_ORTHO"
    POLYBELL_K1_IS_BERNOULLI = "POLYBELL_K1_IS_BERNOULLI"
    LIMIT_LAMBDA0_SUITE = "LIMIT_LAMBDA0_SUITE"
    WHITNEY_ORACLE = "WHITNEY_ORACLE"


IDENTITY_DESCRIPTIONS = {
    IdentityId.EQ_1A_2A_ORTHO: "classical Whitney pair (r = 1): the two triangles are mutually inverse",
    IdentityId.EQ_3A_4A_ORTHO: "r-parameterized Whitney pair: mutual inversion for each (m, r)",
    IdentityId.LEMMA1: "deformed Bell polynomials: triangle sum equals the composed generating series",
    IdentityId.THM2_DOBINSKI: "Dobinski-style series: floated truncation approaches the exact polynomial value",
    IdentityId.THM3_GF: "deformed Dowling polynomials: triangle sum equals the composed generating series",
    IdentityId.EQ25_ADDITION: "binomial addition rule for deformed Bell polynomials in x + y",
    IdentityId.THM5: "deformed Bernoulli polynomials in the Bell basis: closed coefficient sum",
    IdentityId.THM6: "generalized falling factorials in the Bell basis via the first-kind triangle",
    IdentityId.THM7: "polyexponential Bell polynomials in the Bell basis: closed coefficient sum",
    IdentityId.THM8: "deformed Bell polynomials in the second-kind Bernoulli basis",
    IdentityId.THM9_ROUNDTRIP: "basis expansion round trip (Bell and Dowling bases) on a polynomial test family",
    IdentityId.THM10: "deformed Bernoulli polynomials in the Dowling basis: quadruple-sum coefficients",
    IdentityId.THM11: "deformed Dowling polynomials in the Bell basis via first-kind times Whitney",
    IdentityId.EQ56_CLOSING: "rescaled deformed Bell polynomials as binomial sums of Dowling polynomials",
    IdentityId.STIRLING_ORTHO: "classical Stirling triangles are mutually inverse",
    IdentityId.DEG_STIRLING_ORTHO: "deformed Stirling triangles are mutually inverse at every sampled lam",
    IdentityId.POLYBELL_K1_IS_BERNOULLI: "order-1 polyexponential Bell family collapses to the Bernoulli family",
    IdentityId.LIMIT_LAMBDA0_SUITE: "lam = 0 limits reproduce the classical objects and counts",
    IdentityId.WHITNEY_ORACLE: "r-Whitney triangle matches the colored-partition enumeration",
}

_LAMBDA_FREE = frozenset(
    {
        IdentityId.EQ_1A_2A_ORTHO,
        IdentityId.EQ_3A_4A_ORTHO,
        IdentityId.STIRLING_ORTHO,
        IdentityId.LIMIT_LAMBDA0_SUITE,
        IdentityId.WHITNEY_ORACLE,
    }
)

_NUMERIC = frozenset({IdentityId.THM2_DOBINSKI})

_DOBINSKI_GRID = (Q(1, 10), Q(1, 3), Q(1, 2))


def lambda_degree_bound(identity, n: int, m: int | None = None) -> int:
    """Conservative bound on the lam-degree of the identity at size n.

    4n dominates every exact identity in the inventory (each side is a
    product of at most three triangle or falling factors, each of
    lam-degree at most n).  Identities with no lam dependence are
    degree 0, as is the numeric tag, which never certifies anyway.
    """
    identity = _as_identity(identity)
    if identity in _LAMBDA_FREE or identity in _NUMERIC:
        return 0
    return 4 * n


def default_lambda_samples(count: int) -> tuple:
    """Deterministic sample points for the deformation parameter.

    Seeded with small fixed rationals, then filled from the family s/7
    (7 not dividing s, alternating signs).  No sample is 0, an integer,
    or an integer multiple of any small m, so no grid point collapses a
    kernel into a degenerate special case.
    """
    seeds = [
        Q(1, 7), Q(-1, 7), Q(1, 3), Q(-1, 3),
        Q(1, 2), Q(2, 5), Q(3, 4), Q(5, 3),
    ]
    out = []
    for s in seeds:
        if len(out) >= count:
            break
        out.append(s)
    s = 2
    while len(out) < count:
        if s % 7:
            for cand in (Q(s, 7), Q(-s, 7)):
                if cand not in out and len(out) < count:
                    out.append(cand)
        s += 1
    return tuple(out)


@dataclass(frozen=True)
class SuiteConfig:
    n_max: int = 8
    lambda_samples: tuple | None = None
    m_values: tuple = (1, 2, 3)
    k_values: tuple = (0, 1, 2, 3)
    r_values: tuple = (0, 1, 2)
    seed: int = 0
    enumeration_cap: int = 8
    dobinski_terms: int = 200
    dobinski_tolerance: float = 1e-8

    def samples(self) -> tuple:
        if self.lambda_samples is not None:
            return tuple(Q(v) for v in self.lambda_samples)
        return default_lambda_samples(4 * self.n_max + 1)


@dataclass
class PointResult:
    n: int | None = None
    lam: object = None
    m: int | None = None
    k: int | None = None
    r: int | None = None
    ok: bool = True
    detail: str = ""

    def to_dict(self) -> dict:
        d = {
            "n": self.n,
            "lambda": None if self.lam is None else format_rational(self.lam),
            "m": self.m,
            "k": self.k,
            "r": self.r,
            "ok": self.ok,
        }
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass
class VerificationReport:
    identity: IdentityId
    n_max: int
    points: list = field(default_factory=list)
    passed: bool = True
    witness: dict | None = None
    lambda_degree_bound: int = 0
    distinct_passing_lambda_samples: int = 0
    certified_polynomial_in_lambda: bool = False
    notes: str = ""

    def to_dict(self) -> dict:
        return {
            "identity": self.identity.value,
            "description": IDENTITY_DESCRIPTIONS[self.identity],
            "n_max": self.n_max,
            "passed": self.passed,
            "witness": self.witness,
            "lambda_degree_bound": self.lambda_degree_bound,
            "distinct_passing_lambda_samples": self.distinct_passing_lambda_samples,
            "certified_polynomial_in_lambda": self.certified_polynomial_in_lambda,
            "notes": self.notes,
            "points_total": len(self.points),
            "grid": [p.to_dict() for p in self.points],
        }


def _fmt(value) -> str:
    if isinstance(value, PolyX):
        return "[" + ", ".join(format_rational(c) for c in value.coeffs) + "]"
    if isinstance(value, float):
        return repr(value)
    return format_rational(value)


def _fail(point: PointResult, lhs, rhs, context: str = ""):
    point.ok = False
    prefix = context + ": " if context else ""
    point.detail = "%slhs=%s rhs=%s" % (prefix, _fmt(lhs), _fmt(rhs))


class _Workspace:
    """Per-run cache of triangles, kernel series, and family polynomials.

    All construction goes through the public module functions so that a
    deliberately substituted (or corrupted) constructor is honored; the
    workspace never outlives the verification call that created it.
    """

    def __init__(self, cfg: SuiteConfig):
        self.cfg = cfg
        self._cache = {}

    def _get(self, key, build):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    # triangles -----------------------------------------------------------
    def s1(self):
        return self._get(("s1",), lambda: triangles.stirling1(self.cfg.n_max))

    def s2(self):
        return self._get(("s2",), lambda: triangles.stirling2(self.cfg.n_max))

    def s1deg(self, lam):
        return self._get(
            ("s1deg", lam),
            lambda: triangles.degenerate_stirling1(self.cfg.n_max, lam),
        )

    def s2deg(self, lam):
        return self._get(
            ("s2deg", lam),
            lambda: triangles.degenerate_stirling2(self.cfg.n_max, lam),
        )

    def wdeg(self, m, lam):
        return self._get(
            ("wdeg", m, lam),
            lambda: triangles.degenerate_whitney2(self.cfg.n_max, m, lam),
        )

    def rw1(self, m, r):
        return self._get(
            ("rw1", m, r), lambda: triangles.r_whitney1(self.cfg.n_max, m, r)
        )

    def rw2(self, m, r):
        return self._get(
            ("rw2", m, r), lambda: triangles.r_whitney2(self.cfg.n_max, m, r)
        )

    # kernel series -------------------------------------------------------
    def dexp1(self, lam):
        return self._get(
            ("dexp1", lam),
            lambda: kernels.degenerate_exp(
                QONE, lam, self.cfg.n_max, limit_mode=True
            ),
        )

    def dexpm(self, m, lam):
        return self._get(
            ("dexpm", m, lam),
            lambda: kernels.degenerate_exp(
                Q(m), lam, self.cfg.n_max, limit_mode=True
            ),
        )

    def dexp_sym(self, lam):
        return self._get(
            ("dexp_sym", lam),
            lambda: kernels.degenerate_exp(
                PolyX.x(), lam, self.cfg.n_max, limit_mode=True
            ),
        )

    def falling(self, k, lam):
        return self._get(
            ("falling", k, lam), lambda: kernels.lambda_falling(k, lam)
        )

    # family polynomials --------------------------------------------------
    def bell_polys(self, lam):
        def build():
            tri = self.s2deg(lam)
            out = []
            for n in range(self.cfg.n_max + 1):
                acc = PolyX.zero()
                for k in range(n + 1):
                    c = tri[n, k]
                    if c:
                        acc = acc + c * self.falling(k, lam)
                out.append(acc)
            return out

        return self._get(("bell_polys", lam), build)

    def dowling_polys(self, m, lam):
        def build():
            tri = self.wdeg(m, lam)
            out = []
            for n in range(self.cfg.n_max + 1):
                acc = PolyX.zero()
                for k in range(n + 1):
                    c = tri[n, k]
                    if c:
                        acc = acc + c * self.falling(k, lam)
                out.append(acc)
            return out

        return self._get(("dowling_polys", m, lam), build)

    def _series_family(self, key, build_series):
        def build():
            series = build_series()
            out = []
            for n in range(self.cfg.n_max + 1):
                p = series.a[n]
                out.append(p if isinstance(p, PolyX) else PolyX.constant(p))
            return out

        return self._get(key, build)

    def bernoulli_polys(self, lam):
        def series():
            cap = self.cfg.n_max
            grown = kernels.degenerate_exp(QONE, lam, cap + 1, limit_mode=True) - 1
            return grown.shift_down().reciprocal() * self.dexp_sym(lam)

        return self._series_family(("bernoulli_polys", lam), series)

    def bernoulli_numbers(self, lam):
        return self._get(
            ("bernoulli_numbers", lam),
            lambda: [p.coeff(0) for p in self.bernoulli_polys(lam)],
        )

    def bernoulli2_polys(self, lam):
        def series():
            cap = self.cfg.n_max
            grown = kernels.lambda_log_series(lam, cap + 1, limit_mode=True)
            sym = kernels.degenerate_exp(PolyX.x(), QONE, cap)
            return grown.shift_down().reciprocal() * sym

        return self._series_family(("bernoulli2_polys", lam), series)

    def polybell_polys(self, k, lam):
        def series():
            cap = self.cfg.n_max
            log_series = kernels.lambda_log_series(lam, cap + 1, limit_mode=True)
            numer = families.degenerate_polyexp_series(k, lam, cap + 1).compose(
                log_series
            )
            denom = kernels.degenerate_exp(QONE, lam, cap + 1, limit_mode=True) - 1
            unit = numer.shift_down() * denom.shift_down().reciprocal()
            return unit * self.dexp_sym(lam)

        return self._series_family(("polybell_polys", k, lam), series)

    # engine pairs --------------------------------------------------------
    def pair(self, name, lam, m=None, k=None):
        cap = self.cfg.n_max

        def build():
            if name == "falling":
                return umbral.falling_pair(lam, cap)
            if name == "bell":
                return umbral.bell_pair(lam, cap)
            if name == "bernoulli":
                return umbral.bernoulli_pair(lam, cap)
            if name == "bernoulli2":
                return umbral.bernoulli2_pair(lam, cap)
            if name == "polybell":
                return umbral.poly_bell_pair(k, lam, cap)
            if name == "dowling":
                return umbral.dowling_pair(m, lam, cap)
            if name == "rescaled_bell":
                return umbral.rescaled_bell_pair(m, lam, cap)
            raise ValueError("unknown pair %r" % name)

        return self._get(("pair", name, lam, m, k), build)

    # oracles -------------------------------------------------------------
    def bell_number(self, n):
        return self._get(
            ("bell_number", n),
            lambda: sum(1 for _ in triangles.set_partitions(range(n))),
        )

    def classical_bernoulli(self):
        def build():
            out = [QONE]
            for n in range(1, self.cfg.n_max + 1):
                row = binom_row(n + 1)
                acc = QZERO
                for j in range(n):
                    acc = acc + row[j] * out[j]
                out.append(-acc / row[n])
            return out

        return self._get(("classical_bernoulli",), build)


# ---------------------------------------------------------------------------
# checkers


def _check_inverse_pair(points, first, second, n_max, lam=None, m=None, r=None):
    """Both products of the two triangles must be the identity."""
    for n in range(n_max + 1):
        for k in range(n + 1):
            want = QONE if n == k else QZERO
            fwd = sum(
                (first[n, j] * second[j, k] for j in range(k, n + 1)),
                QZERO,
            )
            bwd = sum(
                (second[n, j] * first[j, k] for j in range(k, n + 1)),
                QZERO,
            )
            point = PointResult(n=n, lam=lam, m=m, k=k, r=r)
            if fwd != want:
                _fail(point, fwd, want, "forward product")
            elif bwd != want:
                _fail(point, bwd, want, "reverse product")
            points.append(point)


def check_stirling_ortho(ws: _Workspace, cfg: SuiteConfig):
    points = []
    _check_inverse_pair(points, ws.s1(), ws.s2(), cfg.n_max)
    return points


def check_deg_stirling_ortho(ws: _Workspace, cfg: SuiteConfig):
    points = []
    for lam in cfg.samples():
        _check_inverse_pair(points, ws.s1deg(lam), ws.s2deg(lam), cfg.n_max, lam=lam)
    return points


def check_eq_1a_2a(ws: _Workspace, cfg: SuiteConfig):
    points = []
    for m in cfg.m_values:
        _check_inverse_pair(points, ws.rw1(m, 1), ws.rw2(m, 1), cfg.n_max, m=m)
    return points


def check_eq_3a_4a(ws: _Workspace, cfg: SuiteConfig):
    points = []
    for m in cfg.m_values:
        for r in cfg.r_values:
            _check_inverse_pair(
                points, ws.rw1(m, r), ws.rw2(m, r), cfg.n_max, m=m, r=r
            )
    return points


def check_lemma1(ws: _Workspace, cfg: SuiteConfig):
    """Triangle-sum Bell polynomials against the composed series route."""
    points = []
    for lam in cfg.samples():
        sum_side = ws.bell_polys(lam)
        inner = ws.dexp1(lam) - 1
        series = ws.dexp_sym(lam).compose(inner)
        for n in range(cfg.n_max + 1):
            gf = series.a[n]
            gf = gf if isinstance(gf, PolyX) else PolyX.constant(gf)
            point = PointResult(n=n, lam=lam)
            if sum_side[n] != gf:
                _fail(point, sum_side[n], gf)
            points.append(point)
    return points


def check_thm3_gf(ws: _Workspace, cfg: SuiteConfig):
    """Triangle-sum Dowling polynomials against the composed series route."""
    points = []
    for lam in cfg.samples():
        for m in cfg.m_values:
            sum_side = ws.dowling_polys(m, lam)
            inner = (ws.dexpm(m, lam) - 1) * Q(1, m)
            series = ws.dexp1(lam) * ws.dexp_sym(lam).compose(inner)
            for n in range(cfg.n_max + 1):
                gf = series.a[n]
                gf = gf if isinstance(gf, PolyX) else PolyX.constant(gf)
                point = PointResult(n=n, lam=lam, m=m)
                if sum_side[n] != gf:
                    _fail(point, sum_side[n], gf)
                points.append(point)
    return points


def check_thm2_dobinski(ws: _Workspace, cfg: SuiteConfig):
    """Floated truncation against the exact value, x = 1."""
    points = []
    for lam in _DOBINSKI_GRID:
        for n in range(cfg.n_max + 1):
            approx, reference = families.dobinski_eval(
                n, lam, QONE, cfg.dobinski_terms
            )
            denom = abs(reference) if reference else 1.0
            err = abs(approx - reference) / denom
            point = PointResult(n=n, lam=lam)
            if not err < cfg.dobinski_tolerance:
                _fail(point, approx, reference, "rel err %.3e" % err)
            points.append(point)
    return points


def check_eq25_addition(ws: _Workspace, cfg: SuiteConfig):
    """phi_n(x + y) is the binomial convolution of the family with itself.

    Both sides are polynomials in y of degree at most n, so agreement at
    n + 1 integer values of y settles the bivariate identity at this lam.
    """
    points = []
    for lam in cfg.samples():
        polys = ws.bell_polys(lam)
        for n in range(cfg.n_max + 1):
            row = binom_row(n)
            point = PointResult(n=n, lam=lam)
            for y in range(n + 1):
                shifted = polys[n](PolyX((Q(y), QONE)))
                shifted = (
                    shifted if isinstance(shifted, PolyX) else PolyX.constant(shifted)
                )
                acc = PolyX.zero()
                for l in range(n + 1):
                    value = polys[n - l](Q(y))
                    if value:
                        acc = acc + row[l] * value * polys[l]
                if shifted != acc:
                    _fail(point, shifted, acc, "y=%d" % y)
                    break
            points.append(point)
    return points


def _expand_and_compare(point, ws, closed_rows, engine_tri, target_polys, expected, n):
    """Shared tail for the basis-expansion identities: closed-form row
    equals the engine row, and the reconstruction equals the expected
    polynomial."""
    closed = closed_rows[n]
    engine = [engine_tri[n, k] for k in range(n + 1)]
    if closed != engine:
        _fail(point, PolyX(closed), PolyX(engine), "coefficients")
        return
    rebuilt = umbral.combine_basis(closed, target_polys)
    if rebuilt != expected:
        _fail(point, rebuilt, expected, "reconstruction")


def check_thm5(ws: _Workspace, cfg: SuiteConfig):
    """Bernoulli-to-Bell coefficients: binomial convolution of Bernoulli
    numbers with the first-kind triangle."""
    points = []
    for lam in cfg.samples():
        s1d = ws.s1deg(lam)
        numbers = ws.bernoulli_numbers(lam)
        bern = ws.bernoulli_polys(lam)
        bell = ws.bell_polys(lam)
        engine = umbral.connection_coefficients(
            ws.pair("bernoulli", lam), ws.pair("bell", lam), cfg.n_max
        )
        closed = []
        for n in range(cfg.n_max + 1):
            row = binom_row(n)
            closed.append(
                [
                    sum(
                        (
                            row[l] * numbers[n - l] * s1d[l, k]
                            for l in range(k, n + 1)
                        ),
                        QZERO,
                    )
                    for k in range(n + 1)
                ]
            )
        for n in range(cfg.n_max + 1):
            point = PointResult(n=n, lam=lam)
            _expand_and_compare(point, ws, closed, engine, bell, bern[n], n)
            points.append(point)
    return points


def check_thm6(ws: _Workspace, cfg: SuiteConfig):
    """Falling factorials expand in the Bell basis through the
    first-kind triangle itself."""
    points = []
    for lam in cfg.samples():
        s1d = ws.s1deg(lam)
        bell = ws.bell_polys(lam)
        engine = umbral.connection_coefficients(
            ws.pair("falling", lam), ws.pair("bell", lam), cfg.n_max
        )
        closed = [
            [s1d[n, k] for k in range(n + 1)] for n in range(cfg.n_max + 1)
        ]
        for n in range(cfg.n_max + 1):
            point = PointResult(n=n, lam=lam)
            _expand_and_compare(
                point, ws, closed, engine, bell, ws.falling(n, lam), n
            )
            points.append(point)
    return points


def check_thm7(ws: _Workspace, cfg: SuiteConfig):
    """Polyexponential Bell to Bell: binomial convolution of the family's
    own constants with the first-kind triangle."""
    points = []
    for lam in cfg.samples():
        s1d = ws.s1deg(lam)
        bell = ws.bell_polys(lam)
        for k_order in cfg.k_values:
            polys = ws.polybell_polys(k_order, lam)
            numbers = [p.coeff(0) for p in polys]
            engine = umbral.connection_coefficients(
                ws.pair("polybell", lam, k=k_order),
                ws.pair("bell", lam),
                cfg.n_max,
            )
            closed = []
            for n in range(cfg.n_max + 1):
                row = binom_row(n)
                closed.append(
                    [
                        sum(
                            (
                                row[l] * s1d[l, j] * numbers[n - l]
                                for l in range(j, n + 1)
                            ),
                            QZERO,
                        )
                        for j in range(n + 1)
                    ]
                )
            for n in range(cfg.n_max + 1):
                point = PointResult(n=n, lam=lam, k=k_order)
                _expand_and_compare(
                    point, ws, closed, engine, bell, polys[n], n
                )
                points.append(point)
    return points


def check_thm8(ws: _Workspace, cfg: SuiteConfig):
    """Bell polynomials in the second-kind Bernoulli basis.

    The constant coefficient contracts Bernoulli numbers against the
    second-kind triangle; higher coefficients are alternating double
    sums over evaluations of lower Bell polynomials at integers.
    """
    points = []
    for lam in cfg.samples():
        s2d = ws.s2deg(lam)
        numbers = ws.bernoulli_numbers(lam)
        bell = ws.bell_polys(lam)
        b2 = ws.bernoulli2_polys(lam)
        engine = umbral.connection_coefficients(
            ws.pair("bell", lam), ws.pair("bernoulli2", lam), cfg.n_max
        )
        bell_at = [
            [p(Q(l)) for l in range(cfg.n_max + 1)] for p in bell
        ]
        ones = [
            kernels.lambda_falling_eval(QONE, d, lam)
            for d in range(cfg.n_max + 1)
        ]
        closed = []
        for n in range(cfg.n_max + 1):
            rown = binom_row(n)
            row = [
                sum((numbers[l] * s2d[n, l] for l in range(n + 1)), QZERO)
            ]
            for k in range(1, n + 1):
                rowk = binom_row(k - 1)
                acc = QZERO
                for j in range(n):
                    outer = rown[j] * ones[n - j]
                    if not outer:
                        continue
                    inner = QZERO
                    for l in range(k):
                        term = rowk[l] * bell_at[j][l]
                        inner = inner - term if (k - 1 - l) % 2 else inner + term
                    acc = acc + outer * inner
                row.append(acc / factorial(k))
            closed.append(row)
        for n in range(cfg.n_max + 1):
            point = PointResult(n=n, lam=lam)
            _expand_and_compare(point, ws, closed, engine, b2, bell[n], n)
            points.append(point)
    return points


def _roundtrip_family(ws, cfg, lam, rng):
    """Test polynomials for the expansion round trips: the falling
    factorial, the monomial, and a seeded random polynomial per degree."""
    out = []
    for n in range(cfg.n_max + 1):
        coeffs = [
            Q(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(n)
        ]
        lead = Q(rng.choice([-1, 1]) * rng.randint(1, 6), rng.randint(1, 4))
        out.append(
            (
                ws.falling(n, lam),
                PolyX.monomial(n),
                PolyX(coeffs + [lead]),
            )
        )
    return out


def check_thm9_roundtrip(ws: _Workspace, cfg: SuiteConfig):
    """Expansion in the Bell and Dowling bases reconstructs the input."""
    points = []
    for lam in cfg.samples():
        rng = random.Random("%d:thm9:%s" % (cfg.seed, lam))
        test_polys = _roundtrip_family(ws, cfg, lam, rng)
        bell = ws.bell_polys(lam)
        bell_pair = ws.pair("bell", lam)
        for m in cfg.m_values:
            dow = ws.dowling_polys(m, lam)
            dow_pair = ws.pair("dowling", lam, m=m)
            for n in range(cfg.n_max + 1):
                point = PointResult(n=n, lam=lam, m=m)
                for p in test_polys[n]:
                    c_bell = umbral.expand_in_basis(p, bell_pair)
                    back = umbral.combine_basis(c_bell, bell)
                    if back != p:
                        _fail(point, back, p, "bell basis")
                        break
                    c_dow = umbral.expand_in_basis(p, dow_pair)
                    back = umbral.combine_basis(c_dow, dow)
                    if back != p:
                        _fail(point, back, p, "dowling basis")
                        break
                points.append(point)
    return points


def check_thm10(ws: _Workspace, cfg: SuiteConfig):
    """Bernoulli polynomials in the Dowling basis: the quadruple sum over
    both Stirling kinds at two deformation scales."""
    points = []
    for lam in cfg.samples():
        numbers = ws.bernoulli_numbers(lam)
        bern = ws.bernoulli_polys(lam)
        s1c = ws.s1()
        for m in cfg.m_values:
            s1dm = ws.s1deg(Q(lam) / m)
            dow = ws.dowling_polys(m, lam)
            engine = umbral.connection_coefficients(
                ws.pair("bernoulli", lam),
                ws.pair("dowling", lam, m=m),
                cfg.n_max,
            )
            closed = []
            for n in range(cfg.n_max + 1):
                rown = binom_row(n)
                row = []
                for k in range(n + 1):
                    acc = QZERO
                    for l in range(n + 1):
                        rowl = binom_row(l)
                        outer = rown[l] * numbers[n - l]
                        if not outer:
                            continue
                        for j in range(k, l + 1):
                            s1v = s1dm[j, k]
                            if not s1v:
                                continue
                            base = outer * rowl[j] * s1v
                            for i in range(l - j + 1):
                                s1cv = s1c[l - j, i]
                                if not s1cv:
                                    continue
                                term = base * Q(m) ** (l - k - i) * s1cv
                                acc = acc - term if i % 2 else acc + term
                    row.append(acc)
                closed.append(row)
            for n in range(cfg.n_max + 1):
                point = PointResult(n=n, lam=lam, m=m)
                _expand_and_compare(point, ws, closed, engine, dow, bern[n], n)
                points.append(point)
    return points


def check_thm11(ws: _Workspace, cfg: SuiteConfig):
    """Dowling polynomials in the Bell basis: first-kind triangle
    contracted against the Whitney triangle."""
    points = []
    for lam in cfg.samples():
        s1d = ws.s1deg(lam)
        bell = ws.bell_polys(lam)
        for m in cfg.m_values:
            wd = ws.wdeg(m, lam)
            dow = ws.dowling_polys(m, lam)
            engine = umbral.connection_coefficients(
                ws.pair("dowling", lam, m=m), ws.pair("bell", lam), cfg.n_max
            )
            closed = [
                [
                    sum(
                        (s1d[j, k] * wd[n, j] for j in range(k, n + 1)),
                        QZERO,
                    )
                    for k in range(n + 1)
                ]
                for n in range(cfg.n_max + 1)
            ]
            for n in range(cfg.n_max + 1):
                point = PointResult(n=n, lam=lam, m=m)
                _expand_and_compare(point, ws, closed, engine, bell, dow[n], n)
                points.append(point)
    return points


def check_eq56_closing(ws: _Workspace, cfg: SuiteConfig):
    """Rescaled Bell polynomials as binomial sums of Dowling polynomials,
    with the engine route through the rescaled pair as cross-check."""
    points = []
    for lam in cfg.samples():
        for m in cfg.m_values:
            rescaled = ws.bell_polys(Q(lam) / m)
            dow = ws.dowling_polys(m, lam)
            engine = umbral.connection_coefficients(
                ws.pair("rescaled_bell", lam, m=m),
                ws.pair("dowling", lam, m=m),
                cfg.n_max,
            )
            sub = PolyX((QZERO, Q(1, m)))
            minus_one = [
                kernels.lambda_falling_eval(-1, d, lam)
                for d in range(cfg.n_max + 1)
            ]
            for n in range(cfg.n_max + 1):
                row = binom_row(n)
                point = PointResult(n=n, lam=lam, m=m)
                closed = [row[k] * minus_one[n - k] for k in range(n + 1)]
                engine_row = [engine[n, k] for k in range(n + 1)]
                if closed != engine_row:
                    _fail(point, PolyX(closed), PolyX(engine_row), "coefficients")
                    points.append(point)
                    continue
                lhs = rescaled[n](sub)
                lhs = lhs if isinstance(lhs, PolyX) else PolyX.constant(lhs)
                acc = PolyX.zero()
                for k in range(n + 1):
                    if closed[k]:
                        acc = acc + closed[k] * dow[k]
                rhs = Q(m) ** (-n) * acc
                if lhs != rhs:
                    _fail(point, lhs, rhs)
                points.append(point)
    return points


def check_polybell_k1(ws: _Workspace, cfg: SuiteConfig):
    points = []
    for lam in cfg.samples():
        bern = ws.bernoulli_polys(lam)
        poly1 = ws.polybell_polys(1, lam)
        for n in range(cfg.n_max + 1):
            point = PointResult(n=n, lam=lam, k=1)
            if poly1[n] != bern[n]:
                _fail(point, poly1[n], bern[n])
            points.append(point)
    return points


def check_limit_suite(ws: _Workspace, cfg: SuiteConfig):
    """lam = 0 must reproduce the classical world, checked against
    independent classical constructions and brute-force counts."""
    points = []
    zero = QZERO
    s1c, s2c = ws.s1(), ws.s2()
    s1z, s2z = ws.s1deg(zero), ws.s2deg(zero)
    bell0 = ws.bell_polys(zero)
    b2 = ws.bernoulli2_polys(zero)
    bern0 = ws.bernoulli_numbers(zero)
    classical = ws.classical_bernoulli()
    poly1 = ws.polybell_polys(1, zero)
    enum_cap = min(cfg.n_max, cfg.enumeration_cap)
    for n in range(cfg.n_max + 1):
        point = PointResult(n=n)
        checks = []
        if s1z.row(n) != s1c.row(n):
            checks.append(("first-kind row", PolyX(s1z.row(n)), PolyX(s1c.row(n))))
        if s2z.row(n) != s2c.row(n):
            checks.append(("second-kind row", PolyX(s2z.row(n)), PolyX(s2c.row(n))))
        for m in cfg.m_values:
            if ws.wdeg(m, zero).row(n) != ws.rw2(m, 1).row(n):
                checks.append(
                    (
                        "whitney row m=%d" % m,
                        PolyX(ws.wdeg(m, zero).row(n)),
                        PolyX(ws.rw2(m, 1).row(n)),
                    )
                )
        if n <= enum_cap:
            counted = ws.bell_number(n)
            if bell0[n](QONE) != counted:
                checks.append(("bell count", bell0[n](QONE), Q(counted)))
        if n <= enum_cap:
            counted = ws.bell_number(n + 1)
            dowling_at_one = families.degenerate_dowling(n, 1, zero)(QONE)
            if dowling_at_one != counted:
                checks.append(("dowling shift count", dowling_at_one, Q(counted)))
        if bern0[n] != classical[n]:
            checks.append(("bernoulli number", bern0[n], classical[n]))
        row = binom_row(n)
        bpoly = PolyX([row[j] * classical[n - j] for j in range(n + 1)])
        if poly1[n] != bpoly:
            checks.append(("order-1 polyexp family", poly1[n], bpoly))
        cauchy = sum(
            (s1c[n, k] / (k + 1) for k in range(n + 1)), QZERO
        )
        if b2[n].coeff(0) != cauchy:
            checks.append(("second-kind constant", b2[n].coeff(0), cauchy))
        if checks:
            name, lhs, rhs = checks[0]
            _fail(point, lhs, rhs, name)
        points.append(point)
    return points


def check_whitney_oracle(ws: _Workspace, cfg: SuiteConfig):
    """Triangular-solve Whitney numbers against colored-partition counts,
    plus the m = 1, r = 1 collapse onto shifted second-kind numbers."""
    points = []
    for r in cfg.r_values:
        for m in cfg.m_values:
            tri = ws.rw2(m, r)
            for n in range(min(cfg.n_max, cfg.enumeration_cap - r) + 1):
                for k in range(n + 1):
                    point = PointResult(n=n, m=m, k=k, r=r)
                    counted = triangles.enumerate_colored_partitions(
                        n, k, m, r, max_elements=cfg.enumeration_cap
                    )
                    if tri[n, k] != counted:
                        _fail(point, tri[n, k], Q(counted))
                    elif m == 1 and r == 1:
                        shifted = triangles.count_partitions(n + 1, k + 1)
                        if tri[n, k] != shifted:
                            _fail(point, tri[n, k], Q(shifted), "shifted second kind")
                    points.append(point)
    return points


_CHECKERS = {
    IdentityId.EQ_1A_2A_ORTHO: check_eq_1a_2a,
    IdentityId.EQ_3A_4A_ORTHO: check_eq_3a_4a,
    IdentityId.LEMMA1: check_lemma1,
    IdentityId.THM2_DOBINSKI: check_thm2_dobinski,
    IdentityId.THM3_GF: check_thm3_gf,
    IdentityId.EQ25_ADDITION: check_eq25_addition,
    IdentityId.THM5: check_thm5,
    IdentityId.THM6: check_thm6,
    IdentityId.THM7: check_thm7,
    IdentityId.THM8: check_thm8,
    IdentityId.THM9_ROUNDTRIP: check_thm9_roundtrip,
    IdentityId.THM10: check_thm10,
    IdentityId.THM11: check_thm11,
    IdentityId.EQ56_CLOSING: check_eq56_closing,
    IdentityId.STIRLING_ORTHO: check_stirling_ortho,
    IdentityId.DEG_STIRLING_ORTHO: check_deg_stirling_ortho,
    IdentityId.POLYBELL_K1_IS_BERNOULLI: check_polybell_k1,
    IdentityId.LIMIT_LAMBDA0_SUITE: check_limit_suite,
    IdentityId.WHITNEY_ORACLE: check_whitney_oracle,
}


def _as_identity(identity) -> IdentityId:
    if isinstance(identity, IdentityId):
        return identity
    return IdentityId(str(identity).upper())


def _build_report(identity: IdentityId, cfg: SuiteConfig, points) -> VerificationReport:
    passed = all(p.ok for p in points)
    bound = lambda_degree_bound(identity, cfg.n_max)
    distinct = len({p.lam for p in points if p.ok and p.lam is not None})
    if identity in _NUMERIC:
        certified = False
        notes = (
            "numeric tolerance %.0e on the floated truncation; excluded "
            "from exact certification" % cfg.dobinski_tolerance
        )
    elif identity in _LAMBDA_FREE:
        certified = passed
        notes = "no deformation dependence; exact on the whole grid"
    else:
        certified = passed and distinct > bound
        notes = ""
    witness = None
    for p in points:
        if not p.ok:
            witness = p.to_dict()
            break
    return VerificationReport(
        identity=identity,
        n_max=cfg.n_max,
        points=points,
        passed=passed,
        witness=witness,
        lambda_degree_bound=bound,
        distinct_passing_lambda_samples=distinct,
        certified_polynomial_in_lambda=certified,
        notes=notes,
    )


def verify(
    identity,
    n_max: int = 8,
    lambda_samples=None,
    m_values=(1, 2, 3),
    k_values=(0, 1, 2, 3),
    *,
    r_values=(0, 1, 2),
    seed: int = 0,
    enumeration_cap: int = 8,
    dobinski_terms: int = 200,
    dobinski_tolerance: float = 1e-8,
) -> VerificationReport:
    """Run one identity's checker over its grid and report."""
    identity = _as_identity(identity)
    cfg = SuiteConfig(
        n_max=n_max,
        lambda_samples=None if lambda_samples is None else tuple(lambda_samples),
        m_values=tuple(m_values),
        k_values=tuple(k_values),
        r_values=tuple(r_values),
        seed=seed,
        enumeration_cap=enumeration_cap,
        dobinski_terms=dobinski_terms,
        dobinski_tolerance=dobinski_tolerance,
    )
    ws = _Workspace(cfg)
    points = _CHECKERS[identity](ws, cfg)
    return _build_report(identity, cfg, points)


def run_full_suite(config: SuiteConfig | None = None) -> list:
    """All identities in declaration order, sharing one workspace."""
    cfg = config or SuiteConfig()
    ws = _Workspace(cfg)
    return [
        _build_report(identity, cfg, _CHECKERS[identity](ws, cfg))
        for identity in IdentityId
    ]
