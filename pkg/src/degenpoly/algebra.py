"""Exact truncated series algebra.

Three value types carry all the mathematics in this package:

* ``PolyX``     dense univariate polynomials over Q, symbol written x;
* ``EgfSeries`` truncated power series in EGF normalization, i.e. a
  series f is stored as the list a with f = sum_n a[n] t^n / n!;
* ``Triangle``  lower-triangular arrays T(n, k), 0 <= k <= n.

EgfSeries coefficients may themselves be PolyX values; that is how a
series with a symbolic parameter (the generating function of a polynomial
sequence) is represented, and the ring operations are written so the two
coefficient domains mix freely.

Everything is exact.  Binary series operations insist on equal truncation
caps rather than silently aligning them: a mismatch is a bug in the
caller's bookkeeping, not something to smooth over.  In EGF normalization
the ring product is the binomial convolution

    (f g).a[n] = sum_j C(n, j) f.a[j] g.a[n - j],

composition is Horner evaluation of sum_k f.a[k]/k! g^k in the truncated
ring (exact because the inner series has positive order), and the
compositional inverse is solved order by order against the identity.
"""

from __future__ import annotations

from .rationals import Q, QONE, QZERO

_PASCAL = [(1,)]
_FACT = [QONE]


def binom_row(n: int) -> tuple:
    """Row n of Pascal's triangle as plain ints."""
    while len(_PASCAL) <= n:
        prev = _PASCAL[-1]
        mid = [prev[i - 1] + prev[i] for i in range(1, len(prev))]
        _PASCAL.append((1, *mid, 1))
    return _PASCAL[n]


def factorial(n: int):
    while len(_FACT) <= n:
        _FACT.append(_FACT[-1] * len(_FACT))
    return _FACT[n]


def _coerce(value):
    """Coefficient intake: exact scalars pass through Q, PolyX as-is."""
    if isinstance(value, PolyX):
        return value
    return Q(value)


class PolyX:
    """Dense univariate polynomial over Q in the symbol x.

    Immutable.  Coefficients are stored ascending with no trailing zeros,
    so the zero polynomial has an empty coefficient tuple and degree -1.
    Arithmetic mixes with exact scalars on either side, and calling the
    polynomial evaluates it by Horner's rule; the argument may itself be
    a PolyX, which is how substitutions like x -> x + c or x -> x/m are
    done.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=()):
        c = [_coerce(v) for v in coeffs]
        while c and not c[-1]:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def _raw(cls, coeffs: tuple) -> "PolyX":
        # trusted fast path: coeffs already exact, already normalized
        p = object.__new__(cls)
        p._c = coeffs
        return p

    @classmethod
    def zero(cls) -> "PolyX":
        return cls._raw(())

    @classmethod
    def one(cls) -> "PolyX":
        return cls._raw((QONE,))

    @classmethod
    def x(cls) -> "PolyX":
        return cls._raw((QZERO, QONE))

    @classmethod
    def constant(cls, value) -> "PolyX":
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "PolyX":
        return cls([QZERO] * degree + [coeff])

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def coeff(self, i: int):
        return self._c[i] if 0 <= i < len(self._c) else QZERO

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def _normalized(self, c: list) -> "PolyX":
        while c and not c[-1]:
            c.pop()
        return PolyX._raw(tuple(c))

    def __add__(self, other):
        if isinstance(other, PolyX):
            a, b = self._c, other._c
            if len(a) < len(b):
                a, b = b, a
            c = list(a)
            for i, v in enumerate(b):
                c[i] = c[i] + v
            return self._normalized(c)
        try:
            s = Q(other)
        except TypeError:
            return NotImplemented
        if not self._c:
            return PolyX((s,))
        c = list(self._c)
        c[0] = c[0] + s
        return self._normalized(c)

    __radd__ = __add__

    def __neg__(self):
        return PolyX._raw(tuple(-v for v in self._c))

    def __sub__(self, other):
        out = self + (-other if isinstance(other, PolyX) else -Q(other))
        return out

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PolyX):
            a, b = self._c, other._c
            if not a or not b:
                return PolyX._raw(())
            c = [QZERO] * (len(a) + len(b) - 1)
            for i, av in enumerate(a):
                if av:
                    for j, bv in enumerate(b):
                        if bv:
                            c[i + j] = c[i + j] + av * bv
            return self._normalized(c)
        try:
            s = Q(other)
        except TypeError:
            return NotImplemented
        if not s:
            return PolyX._raw(())
        return PolyX._raw(tuple(v * s for v in self._c))

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        s = Q(scalar)
        return PolyX._raw(tuple(v / s for v in self._c))

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers take a nonnegative int")
        out = PolyX.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, value):
        """Evaluate by Horner; value may be a scalar or another PolyX."""
        if not self._c:
            return PolyX.zero() if isinstance(value, PolyX) else QZERO
        acc = self._c[-1]
        for v in reversed(self._c[:-1]):
            acc = acc * value + v
        if isinstance(value, PolyX) and not isinstance(acc, PolyX):
            return PolyX((acc,))
        return acc

    def __eq__(self, other):
        if isinstance(other, PolyX):
            return self._c == other._c
        try:
            s = Q(other)
        except TypeError:
            return NotImplemented
        if not self._c:
            return not s
        return len(self._c) == 1 and self._c[0] == s

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return "PolyX([%s])" % ", ".join(str(v) for v in self._c)


class EgfSeries:
    """Truncated power series in EGF normalization.

    ``a[n]`` is the coefficient of t^n/n!; the truncation cap N is
    inclusive, so len(a) == N + 1 always.  Coefficients are exact scalars
    or PolyX values.  Mixing caps in a binary operation raises.
    """

    __slots__ = ("_a",)

    def __init__(self, order_cap: int, coeffs=()):
        if order_cap < 0:
            raise ValueError("order cap must be >= 0")
        c = [_coerce(v) for v in coeffs]
        if len(c) > order_cap + 1:
            raise ValueError("more coefficients than the cap allows")
        c.extend([QZERO] * (order_cap + 1 - len(c)))
        self._a = tuple(c)

    @classmethod
    def _raw(cls, coeffs: tuple) -> "EgfSeries":
        s = object.__new__(cls)
        s._a = coeffs
        return s

    @classmethod
    def zero(cls, order_cap: int) -> "EgfSeries":
        return cls._raw((QZERO,) * (order_cap + 1))

    @classmethod
    def one(cls, order_cap: int) -> "EgfSeries":
        return cls.constant(order_cap, QONE)

    @classmethod
    def constant(cls, order_cap: int, value) -> "EgfSeries":
        return cls(order_cap, (value,))

    @classmethod
    def t(cls, order_cap: int) -> "EgfSeries":
        return cls(order_cap, (QZERO, QONE))

    @classmethod
    def t_power(cls, order_cap: int, k: int) -> "EgfSeries":
        """The monomial t^k, i.e. a[k] = k!."""
        if k > order_cap:
            return cls.zero(order_cap)
        return cls(order_cap, [QZERO] * k + [factorial(k)])

    @property
    def a(self) -> tuple:
        return self._a

    @property
    def order_cap(self) -> int:
        return len(self._a) - 1

    def coeff(self, n: int):
        return self._a[n]

    def order(self):
        """Index of the first nonzero coefficient, or None for zero."""
        for n, v in enumerate(self._a):
            if v:
                return n
        return None

    def _match(self, other: "EgfSeries"):
        if len(self._a) != len(other._a):
            raise ValueError(
                "order caps differ: %d vs %d"
                % (len(self._a) - 1, len(other._a) - 1)
            )

    def __add__(self, other):
        if isinstance(other, EgfSeries):
            self._match(other)
            return EgfSeries._raw(
                tuple(u + v for u, v in zip(self._a, other._a))
            )
        v = _coerce(other)
        c = list(self._a)
        c[0] = c[0] + v
        return EgfSeries._raw(tuple(c))

    __radd__ = __add__

    def __neg__(self):
        return EgfSeries._raw(tuple(-v for v in self._a))

    def __sub__(self, other):
        if isinstance(other, EgfSeries):
            self._match(other)
            return EgfSeries._raw(
                tuple(u - v for u, v in zip(self._a, other._a))
            )
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, EgfSeries):
            v = _coerce(other)
            return EgfSeries._raw(tuple(u * v for u in self._a))
        self._match(other)
        a, b = self._a, other._a
        out = []
        for n in range(len(a)):
            row = binom_row(n)
            s = QZERO
            for j in range(n + 1):
                u = a[j]
                v = b[n - j]
                if u and v:
                    s = s + row[j] * u * v
            out.append(s)
        return EgfSeries._raw(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        """k-th ring power by repeated squaring."""
        if not isinstance(k, int) or k < 0:
            raise ValueError("series powers take a nonnegative int")
        out = EgfSeries.one(self.order_cap)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, EgfSeries):
            return NotImplemented
        return len(self._a) == len(other._a) and all(
            u == v for u, v in zip(self._a, other._a)
        )

    def __repr__(self):
        return "EgfSeries(%d, [%s])" % (
            self.order_cap,
            ", ".join(str(v) for v in self._a),
        )

    def compose(self, inner: "EgfSeries") -> "EgfSeries":
        """self(inner(t)); requires inner to have no constant term.

        Truncation is exact because every dropped term of inner^k sits
        above the cap.
        """
        self._match(inner)
        if inner._a[0]:
            raise ValueError("composition needs an inner series of order >= 1")
        cap = self.order_cap
        acc = EgfSeries.constant(cap, self._a[cap] / factorial(cap))
        for k in range(cap - 1, -1, -1):
            acc = acc * inner
            ck = self._a[k]
            if ck:
                acc = acc + ck / factorial(k)
        return acc

    def comp_inverse(self) -> "EgfSeries":
        """Compositional inverse, solved order by order.

        Requires order exactly 1.  Each pass composes against the current
        candidate and cancels the lowest surviving defect; with a[1]
        invertible the correction is unique, so the result is exact.
        """
        cap = self.order_cap
        if self._a[0] or not self._a[1]:
            raise ValueError("compositional inverse needs order exactly 1")
        c1 = self._a[1]
        coeffs = [QZERO] * (cap + 1)
        if cap >= 1:
            coeffs[1] = QONE / c1
        inv = EgfSeries._raw(tuple(coeffs))
        for n in range(2, cap + 1):
            defect = self.compose(inv)._a[n]
            if defect:
                c = list(inv._a)
                c[n] = c[n] - defect / c1
                inv = EgfSeries._raw(tuple(c))
        return inv

    def reciprocal(self) -> "EgfSeries":
        """Multiplicative inverse; the constant term must be a nonzero scalar."""
        a0 = self._a[0]
        if isinstance(a0, PolyX) or not a0:
            raise ValueError("not invertible: constant term must be a nonzero scalar")
        inv0 = QONE / a0
        out = [inv0]
        a = self._a
        for n in range(1, len(a)):
            row = binom_row(n)
            s = QZERO
            for j in range(1, n + 1):
                if a[j] and out[n - j]:
                    s = s + row[j] * a[j] * out[n - j]
            out.append(-inv0 * s)
        return EgfSeries._raw(tuple(out))

    def shift_down(self) -> "EgfSeries":
        """Divide by t.  Requires order >= 1; the cap drops by one."""
        if self._a[0]:
            raise ValueError("not divisible by t: nonzero constant term")
        if self.order_cap == 0:
            raise ValueError("cannot shift below cap 0")
        return EgfSeries._raw(
            tuple(self._a[n] / n for n in range(1, len(self._a)))
        )

    def scale_argument(self, c) -> "EgfSeries":
        """Substitute t -> c t, i.e. a[n] -> c^n a[n]."""
        s = Q(c)
        out = []
        power = QONE
        for v in self._a:
            out.append(v * power)
            power = power * s
        return EgfSeries._raw(tuple(out))

    def truncate(self, order_cap: int) -> "EgfSeries":
        if order_cap > self.order_cap:
            raise ValueError("cannot truncate upward")
        return EgfSeries._raw(self._a[: order_cap + 1])


def series_mul(f: EgfSeries, g: EgfSeries) -> EgfSeries:
    """Ring product in EGF normalization (binomial convolution)."""
    return f * g


def series_compose(f: EgfSeries, g: EgfSeries) -> EgfSeries:
    return f.compose(g)


def series_comp_inverse(f: EgfSeries) -> EgfSeries:
    return f.comp_inverse()


def series_pow(f: EgfSeries, k: int) -> EgfSeries:
    return f**k


def binomial_series(alpha, c, order_cap: int) -> EgfSeries:
    """(1 + c t)^alpha with exact rational alpha and c.

    EGF coefficients are the falling products a[n] = alpha (alpha-1)
    ... (alpha-n+1) c^n.
    """
    al = Q(alpha)
    sc = Q(c)
    out = [QONE]
    for n in range(1, order_cap + 1):
        out.append(out[-1] * (al - (n - 1)) * sc)
    return EgfSeries._raw(tuple(out))


def to_lambda_falling_basis(p: PolyX, lam) -> list:
    """Coefficients of p in the generalized falling-factorial basis.

    The basis polynomial of degree n is x (x - lam) ... (x - (n-1) lam);
    coefficients come out of a cascade of synthetic divisions by the
    linear factors (x - j lam), so no basis polynomial is ever expanded.
    Returns a list of scalars of length deg(p) + 1 (empty for the zero
    polynomial).
    """
    lam = Q(lam)
    cur = list(p.coeffs)
    out = []
    j = 0
    while cur:
        node = j * lam
        deg = len(cur) - 1
        quot = [QZERO] * deg
        acc = cur[deg]
        for i in range(deg - 1, -1, -1):
            quot[i] = acc
            acc = cur[i] + node * acc
        out.append(acc)
        cur = quot
        j += 1
    return out


def from_lambda_falling_basis(coeffs, lam) -> PolyX:
    """Inverse of to_lambda_falling_basis: rebuild the polynomial."""
    lam = Q(lam)
    x = PolyX.x()
    acc = PolyX.zero()
    for j in range(len(coeffs) - 1, -1, -1):
        acc = acc * (x - j * lam) + coeffs[j]
    return acc


class Triangle:
    """Lower-triangular array T(n, k) with exact entries.

    Row n holds the n + 1 entries T(n, 0) .. T(n, n).  Indexing with
    tri[n, k] returns 0 for k > n (triangularity is a convention, not an
    error); a row index out of range raises.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows):
        packed = []
        for n, row in enumerate(rows):
            row = tuple(_coerce(v) for v in row)
            if len(row) != n + 1:
                raise ValueError("row %d must have %d entries" % (n, n + 1))
            packed.append(row)
        if not packed:
            raise ValueError("a triangle has at least row 0")
        self._rows = tuple(packed)

    @property
    def rows(self) -> tuple:
        return self._rows

    @property
    def n_max(self) -> int:
        return len(self._rows) - 1

    def row(self, n: int) -> tuple:
        return self._rows[n]

    def __getitem__(self, nk):
        n, k = nk
        if k < 0:
            raise IndexError("negative column")
        row = self._rows[n]
        return row[k] if k < len(row) else QZERO

    def __eq__(self, other):
        if not isinstance(other, Triangle):
            return NotImplemented
        if len(self._rows) != len(other._rows):
            return False
        return all(
            u == v
            for r, s in zip(self._rows, other._rows)
            for u, v in zip(r, s)
        )

    def __repr__(self):
        return "Triangle(n_max=%d)" % self.n_max
