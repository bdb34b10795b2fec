"""Truncated power series with unit constant term and exact coefficients.

A ``TruncSeries`` of order N stores coefficients c_0..c_N with c_0 = 1,
i.e. an element of the multiplicative group 1 + t*A[[t]] known only up
to O(t^{N+1}).  Coefficients are ``Fraction`` by default, but anything
with ring arithmetic (+, -, *, ==, and division by an integer where an
operation needs it) works: ``QExpPoly`` for formal-q series, group-ring
elements for series whose coefficients are sums of roots of unity.

Mixing orders never raises; binary operations truncate to the smaller
order so pipelines compose.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial


def _one_like(c):
    if isinstance(c, (int, Fraction)):
        return Fraction(1)
    return c.one_like()


def _zero_like(c):
    if isinstance(c, (int, Fraction)):
        return Fraction(0)
    return c.zero_like()


def _div_int(c, n: int):
    """Exact division of a coefficient by a nonzero integer."""
    if isinstance(c, int):
        return Fraction(c, n)
    return c * Fraction(1, n)


def _mul_lists(a, b, order):
    n = min(len(a) - 1, len(b) - 1, order)
    zero = _zero_like(a[0])
    out = []
    for k in range(n + 1):
        acc = zero
        for i in range(max(0, k - (len(b) - 1)), min(k, len(a) - 1) + 1):
            acc = acc + a[i] * b[k - i]
        out.append(acc)
    return out


def _inv_list(a, order):
    # requires a[0] == 1; needs no division, so works over any ring
    one = _one_like(a[0])
    zero = _zero_like(a[0])
    out = [one]
    for k in range(1, order + 1):
        acc = zero
        for j in range(1, k + 1):
            aj = a[j] if j < len(a) else zero
            acc = acc + aj * out[k - j]
        out.append(-acc)
    return out


def _log_list(a, order):
    # log(a) for a[0] == 1, constant term dropped from the input's unit
    inv = _inv_list(a, order)
    zero = _zero_like(a[0])
    deriv = [(_one_like(a[0]) * (j + 1)) * a[j + 1] if j + 1 < len(a) else zero
             for j in range(order)]
    quot = _mul_lists(deriv, inv, order - 1) if order >= 1 else []
    out = [zero]
    for k in range(1, order + 1):
        out.append(_div_int(quot[k - 1], k))
    return out


def _exp_list(g, order):
    # exp(g) for g[0] == 0
    one = _one_like(g[0]) if g else Fraction(1)
    zero = _zero_like(g[0]) if g else Fraction(0)
    out = [one]
    for k in range(1, order + 1):
        acc = zero
        for j in range(1, k + 1):
            gj = g[j] if j < len(g) else zero
            acc = acc + (gj * j) * out[k - j]
        out.append(_div_int(acc, k))
    return out


def _rising_over_factorial(e, k: int):
    """e(e+1)...(e+k-1)/k!, exact; stays integral when e is an integer."""
    if k == 0:
        return 1 if isinstance(e, int) else _one_like(e)
    num = e
    for j in range(1, k):
        num = num * (e + j)
    if isinstance(num, int):
        return num // factorial(k)          # product of k consecutive ints
    return num * Fraction(1, factorial(k))


class TruncSeries:
    """Power series 1 + c_1 t + ... + c_N t^N, exact and immutable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = []
        for c in coeffs:
            if isinstance(c, (int, str)):
                c = Fraction(c)
            cs.append(c)
        if not cs:
            raise ValueError("a series needs at least its constant term")
        if not cs[0] == 1:
            raise ValueError(f"constant term must be 1, got {cs[0]!r}")
        self.coeffs = tuple(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    # -- constructors ------------------------------------------------

    @classmethod
    def one(cls, order: int, like=None) -> "TruncSeries":
        one = Fraction(1) if like is None else _one_like(like)
        zero = Fraction(0) if like is None else _zero_like(like)
        return cls([one] + [zero] * order)

    @classmethod
    def geometric(cls, a, order: int) -> "TruncSeries":
        """(1 - a t)^{-1} = 1 + a t + a^2 t^2 + ..."""
        if isinstance(a, int):
            a = Fraction(a)
        out = [_one_like(a)]
        for _ in range(order):
            out.append(out[-1] * a)
        return cls(out)

    @classmethod
    def from_factor(cls, a, r: int, exponent, order: int) -> "TruncSeries":
        """(1 - a t^r)^{-exponent}; the exponent may live in any Q-algebra."""
        if isinstance(a, int):
            a = Fraction(a)
        one, zero = _one_like(a), _zero_like(a)
        out = [zero] * (order + 1)
        out[0] = one
        apow = one
        for k in range(1, order // r + 1):
            apow = apow * a
            c = _rising_over_factorial(exponent, k)
            out[r * k] = apow * c if not isinstance(c, int) else apow * c
        return cls(out)

    @classmethod
    def from_ghost(cls, ghosts, order: int | None = None) -> "TruncSeries":
        """exp(sum_m g_m t^m / m) from ghost components g_1, g_2, ..."""
        gs = [Fraction(g) if isinstance(g, int) else g for g in ghosts]
        if order is None:
            order = len(gs)
        if not gs:
            return cls.one(order)
        zero = _zero_like(gs[0])
        body = [zero]
        for m in range(1, order + 1):
            body.append(_div_int(gs[m - 1], m) if m - 1 < len(gs) else zero)
        return cls(_exp_list(body, order))

    # -- arithmetic --------------------------------------------------

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        order = min(self.order, other.order)
        return TruncSeries(_mul_lists(list(self.coeffs), list(other.coeffs), order))

    def inv(self) -> "TruncSeries":
        return TruncSeries(_inv_list(list(self.coeffs), self.order))

    def pow(self, exponent) -> "TruncSeries":
        """f^e.  Integer exponents avoid division (any coefficient ring);
        fractional exponents go through exp(e log f)."""
        if isinstance(exponent, Fraction) and exponent.denominator == 1:
            exponent = int(exponent)
        if isinstance(exponent, int):
            if exponent == 0:
                return TruncSeries.one(self.order, like=self.coeffs[0])
            base = self if exponent > 0 else self.inv()
            e = abs(exponent)
            acc = TruncSeries.one(self.order, like=self.coeffs[0])
            while e:
                if e & 1:
                    acc = acc * base
                base = base * base if e > 1 else base
                e >>= 1
            return acc
        exponent = Fraction(exponent)
        lg = _log_list(list(self.coeffs), self.order)
        scaled = [c * exponent for c in lg]
        return TruncSeries(_exp_list(scaled, self.order))

    def ghost_components(self, count: int | None = None):
        """g_m = [t^m] (t f'/f) for m = 1..count; division-free."""
        n = self.order if count is None else min(count, self.order)
        inv = _inv_list(list(self.coeffs), n - 1 if n >= 1 else 0)
        zero = _zero_like(self.coeffs[0])
        deriv = [(_one_like(self.coeffs[0]) * (j + 1)) * self.coeffs[j + 1]
                 if j + 1 <= self.order else zero for j in range(n)]
        quot = _mul_lists(deriv, inv, n - 1) if n >= 1 else []
        return [quot[m - 1] for m in range(1, n + 1)]

    def substitute_scale(self, a) -> "TruncSeries":
        """t -> a t."""
        if isinstance(a, int):
            a = Fraction(a)
        out, apow = [self.coeffs[0]], _one_like(a)
        for k in range(1, self.order + 1):
            apow = apow * a
            out.append(self.coeffs[k] * apow)
        return TruncSeries(out)

    def substitute_power(self, n: int) -> "TruncSeries":
        """t -> t^n; the result is reliable to order n*N."""
        zero = _zero_like(self.coeffs[0])
        out = [zero] * (self.order * n + 1)
        for k, c in enumerate(self.coeffs):
            out[k * n] = c
        return TruncSeries(out)

    def truncate(self, order: int) -> "TruncSeries":
        if order >= self.order:
            return self
        return TruncSeries(self.coeffs[: order + 1])

    def agrees_with(self, other: "TruncSeries", order: int | None = None) -> bool:
        n = min(self.order, other.order)
        if order is not None:
            n = min(n, order)
        return all(self.coeffs[k] == other.coeffs[k] for k in range(n + 1))

    # -- plumbing ----------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncSeries) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:5])
        tail = ", ..." if self.order >= 5 else ""
        return f"TruncSeries(order={self.order}, [{head}{tail}])"

    def to_json(self):
        return {"order": self.order,
                "coeffs": [c.to_json() if hasattr(c, "to_json") else str(c)
                           for c in self.coeffs]}

    @classmethod
    def from_json(cls, data, coeff_decoder=None) -> "TruncSeries":
        def dec(c):
            if isinstance(c, str):
                return Fraction(c)
            if coeff_decoder is None:
                raise ValueError("non-rational coefficient without a decoder")
            return coeff_decoder(c)
        coeffs = [dec(c) for c in data["coeffs"]]
        if len(coeffs) != data["order"] + 1:
            raise ValueError("coefficient count does not match order")
        return cls(coeffs)


def series_mul(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """Cauchy product, truncated to the smaller order."""
    return f * g


def series_pow(f: TruncSeries, exponent) -> TruncSeries:
    """f^e for integer or rational e (constant term 1 keeps this exact)."""
    return f.pow(exponent)
