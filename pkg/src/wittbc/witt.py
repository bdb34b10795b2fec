"""Big Witt ring arithmetic in three coordinate systems.

* Witt coordinates: sequences (x_1..x_N), with the ghost map
  g_n = sum_{d|n} d x_d^{n/d} and its rational inverse.
* Series coordinates: unit-constant-term series, where Witt addition is
  series multiplication and the Witt product acts through ghost
  components read off the logarithmic derivative.
* Eigenvalue coordinates (the W0 layer): classes of endomorphisms of
  finite projective modules over an algebraically closed field, modeled
  by their eigenvalue divisors with eigenvalues in Q/Z (roots of unity)
  optionally scaled by formal q-powers.

The Artin-Hasse exponential converts between the first two; the
characteristic-polynomial map L and the divisor map connect the third.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .arith import divisors
from .groupring import GroupRingElem, QmodZ, qmz
from .series import TruncSeries


@dataclass(frozen=True)
class WittVector:
    components: tuple[Fraction, ...]

    def __init__(self, components):
        object.__setattr__(self, "components",
                           tuple(Fraction(c) for c in components))

    @property
    def order(self) -> int:
        return len(self.components)

    def __getitem__(self, n: int) -> Fraction:
        """1-based coordinate access."""
        return self.components[n - 1]


@dataclass(frozen=True)
class GhostVector:
    components: tuple[Fraction, ...]

    def __init__(self, components):
        object.__setattr__(self, "components",
                           tuple(Fraction(c) for c in components))

    @property
    def order(self) -> int:
        return len(self.components)

    def __getitem__(self, n: int) -> Fraction:
        return self.components[n - 1]


def teichmuller(a, order: int) -> WittVector:
    """[a]_w = (a, 0, 0, ...)."""
    return WittVector([Fraction(a)] + [Fraction(0)] * (order - 1))


def ghost_from_witt(x: WittVector) -> GhostVector:
    """g_n = sum over d | n of d * x_d^{n/d}."""
    out = []
    for n in range(1, x.order + 1):
        out.append(sum((d * x[d] ** (n // d) for d in divisors(n)), Fraction(0)))
    return GhostVector(out)


def witt_from_ghost(g: GhostVector) -> WittVector:
    """Invert the ghost map over the rationals:
    x_n = (g_n - sum_{d|n, d<n} d x_d^{n/d}) / n."""
    xs: list[Fraction] = []
    for n in range(1, g.order + 1):
        partial = sum((d * xs[d - 1] ** (n // d) for d in divisors(n) if d < n),
                      Fraction(0))
        xs.append((g[n] - partial) / n)
    return WittVector(xs)


def artin_hasse(x: WittVector) -> TruncSeries:
    """(x_n) -> product over n of (1 - x_n t^n)^{-1}."""
    out = TruncSeries.one(x.order)
    for n in range(1, x.order + 1):
        if x[n]:
            out = out * TruncSeries.from_factor(x[n], n, 1, x.order)
    return out


def series_to_witt(f: TruncSeries) -> WittVector:
    """Inverse of the Artin-Hasse map, peeling one factor per degree."""
    xs: list[Fraction] = []
    rem = f
    for n in range(1, f.order + 1):
        xn = rem.coeffs[n]
        xs.append(xn)
        if xn:
            rem = rem * TruncSeries.from_factor(xn, n, -1, f.order)
    return WittVector(xs)


def witt_add(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """Witt addition carried by series: plain multiplication."""
    return f * g


def witt_mul(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """The Witt product, via componentwise multiplication of ghost
    components; satisfies (1-at)^{-1} * (1-bt)^{-1} -> (1-abt)^{-1}."""
    order = min(f.order, g.order)
    gf = f.ghost_components(order)
    gg = g.ghost_components(order)
    return TruncSeries.from_ghost([a * b for a, b in zip(gf, gg)], order)


def frobenius(f: TruncSeries, n: int) -> TruncSeries:
    """F_n on series: keep every n-th ghost component.  Output order is
    floor(N/n) when n does not divide N."""
    if n < 1:
        raise ValueError("n must be >= 1")
    gs = f.ghost_components()
    picked = [gs[n * m - 1] for m in range(1, f.order // n + 1)]
    return TruncSeries.from_ghost(picked, f.order // n)


def verschiebung(f: TruncSeries, n: int) -> TruncSeries:
    """V_n on series: t -> t^n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return f.substitute_power(n)


def witt_vector_add(x: WittVector, y: WittVector) -> WittVector:
    """Witt-coordinate sum, computed through the series picture."""
    return series_to_witt(artin_hasse(x) * artin_hasse(y))


def witt_vector_mul(x: WittVector, y: WittVector) -> WittVector:
    """Witt-coordinate product, computed through the series picture."""
    return series_to_witt(witt_mul(artin_hasse(x), artin_hasse(y)))


# ---------------------------------------------------------------------------
# The W0 layer: virtual endomorphism classes over an algebraically closed
# field, recorded by eigenvalue multiplicities.  Eigenvalues are roots of
# unity e(r); multiplicities may be negative (K-group classes).
# ---------------------------------------------------------------------------


class W0Elem:
    """Finite eigenvalue divisor {root of unity -> multiplicity}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[QmodZ, int] = {}
        if terms:
            for a, m in (terms.items() if isinstance(terms, dict) else terms):
                if not isinstance(a, QmodZ):
                    a = QmodZ.from_value(a)
                if m:
                    clean[a] = clean.get(a, 0) + m
        self.terms = {a: m for a, m in clean.items() if m}

    @classmethod
    def of(cls, *eigenvalues) -> "W0Elem":
        """Class of a diagonal endomorphism with the given eigenvalues."""
        return cls([(qmz(a), 1) for a in eigenvalues])

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, W0Elem) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items(),
                                 key=lambda kv: (kv[0].den, kv[0].num))))

    def __add__(self, other: "W0Elem") -> "W0Elem":
        out = dict(self.terms)
        for a, m in other.terms.items():
            out[a] = out.get(a, 0) + m
        return W0Elem(out)

    def __neg__(self) -> "W0Elem":
        return W0Elem({a: -m for a, m in self.terms.items()})

    def __sub__(self, other: "W0Elem") -> "W0Elem":
        return self + (-other)

    def tensor(self, other: "W0Elem") -> "W0Elem":
        """Tensor product: eigenvalues multiply, multiplicities multiply."""
        out: dict[QmodZ, int] = {}
        for a, m in self.terms.items():
            for b, k in other.terms.items():
                c = a + b
                out[c] = out.get(c, 0) + m * k
        return W0Elem(out)

    def __repr__(self):
        body = ", ".join(f"e({a}):{m}" for a, m in sorted(
            self.terms.items(), key=lambda kv: (kv[0].den, kv[0].num)))
        return f"W0Elem({{{body}}})"

    def to_json(self):
        return [{"alpha": str(a), "mult": m} for a, m in sorted(
            self.terms.items(), key=lambda kv: (kv[0].den, kv[0].num))]

    @classmethod
    def from_json(cls, data) -> "W0Elem":
        return cls({QmodZ.from_value(Fraction(t["alpha"])): int(t["mult"])
                    for t in data})


def w0_frobenius(e: W0Elem, n: int) -> W0Elem:
    """(E, f) -> (E, f^n): each eigenvalue to its n-th power."""
    out: dict[QmodZ, int] = {}
    for a, m in e.terms.items():
        b = a.scale(n)
        out[b] = out.get(b, 0) + m
    return W0Elem(out)


def w0_verschiebung(e: W0Elem, n: int) -> W0Elem:
    """Each eigenvalue is replaced by its n distinct n-th roots, keeping
    the multiplicity; raises when a prime restriction forbids the roots."""
    out: dict[QmodZ, int] = {}
    for a, m in e.terms.items():
        for w in a.preimages(n):
            out[w] = out.get(w, 0) + m
    return W0Elem(out)


def w0_divisor(e: W0Elem) -> GroupRingElem:
    """Ring isomorphism onto Z[k^*]: sum of mult * [eigenvalue]."""
    return GroupRingElem({(Fraction(0), a): m for a, m in e.terms.items()}, "Z")


class FactorProduct:
    """Formal product of factors (1 - q^qexp e(tors) t)^{-mult}.

    This is the exact carrier for characteristic polynomials of W0
    classes (all qexp = 0) and for their q-scaled deformations.  All the
    series-level operators act factor-by-factor without ever expanding
    cyclotomic coefficients.
    """

    __slots__ = ("factors",)

    def __init__(self, factors=None):
        clean: dict[tuple[Fraction, QmodZ], int] = {}
        if factors:
            for key, m in (factors.items() if isinstance(factors, dict) else factors):
                qexp, tors = key
                qexp = Fraction(qexp)
                if not isinstance(tors, QmodZ):
                    tors = QmodZ.from_value(tors)
                if m:
                    k = (qexp, tors)
                    clean[k] = clean.get(k, 0) + m
        self.factors = {k: m for k, m in clean.items() if m}

    def __bool__(self):
        return bool(self.factors)

    def __eq__(self, other):
        return isinstance(other, FactorProduct) and self.factors == other.factors

    def __mul__(self, other: "FactorProduct") -> "FactorProduct":
        """Product of the underlying series: exponents add."""
        out = dict(self.factors)
        for k, m in other.factors.items():
            out[k] = out.get(k, 0) + m
        return FactorProduct(out)

    def inv(self) -> "FactorProduct":
        return FactorProduct({k: -m for k, m in self.factors.items()})

    def star(self, other: "FactorProduct") -> "FactorProduct":
        """Witt product: factors pair off, eigenvalues multiply."""
        out: dict[tuple[Fraction, QmodZ], int] = {}
        for (e1, t1), m1 in self.factors.items():
            for (e2, t2), m2 in other.factors.items():
                k = (e1 + e2, t1 + t2)
                out[k] = out.get(k, 0) + m1 * m2
        return FactorProduct(out)

    def pow_scalar(self, c: int) -> "FactorProduct":
        return FactorProduct({k: c * m for k, m in self.factors.items()})

    def frobenius(self, n: int) -> "FactorProduct":
        """(1 - g t)^{-m} -> (1 - g^n t)^{-m}."""
        out: dict[tuple[Fraction, QmodZ], int] = {}
        for (e, t), m in self.factors.items():
            k = (e * n, t.scale(n))
            out[k] = out.get(k, 0) + m
        return FactorProduct(out)

    def verschiebung(self, n: int) -> "FactorProduct":
        """t -> t^n, re-expressed through the n-th roots of each
        eigenvalue: 1 - g t^n = prod over w^n = g of (1 - w t)."""
        out: dict[tuple[Fraction, QmodZ], int] = {}
        for (e, t), m in self.factors.items():
            for w in t.preimages(n):
                k = (e / n, w)
                out[k] = out.get(k, 0) + m
        return FactorProduct(out)

    def ghost(self, j: int, ring: str = "Z") -> GroupRingElem:
        """j-th ghost component: sum of mult * (eigenvalue)^j, exact in
        the group ring."""
        out: dict = {}
        for (e, t), m in self.factors.items():
            k = (e * j, t.scale(j))
            out[k] = out.get(k, 0) + m
        return GroupRingElem(out, ring)

    def log_deriv(self, order: int, ring: str = "Z") -> list[GroupRingElem]:
        """Coefficients of d/dt log of the series, degrees 0..order-1."""
        return [self.ghost(j, ring) for j in range(1, order + 1)]

    def divisor(self, ring: str = "Z") -> GroupRingElem:
        """Multiplicity divisor: sum of mult * q^qexp [eigenvalue]."""
        return GroupRingElem({k: m for k, m in self.factors.items()}, ring)

    def to_series(self, order: int, ring: str = "Z") -> TruncSeries:
        """Exact expansion with group-ring coefficients."""
        one = GroupRingElem.one(ring)
        out = TruncSeries([one] + [GroupRingElem.zero(ring)] * order)
        for (e, t), m in self.factors.items():
            gamma = GroupRingElem({(e, t): 1}, ring)
            fac = [one]
            for k in range(1, order + 1):
                fac.append(_signed_binom(m, k) * _gk(gamma, k))
            out = out * TruncSeries(fac)
        return out

    def to_complex_coeffs(self, order: int, q_value: float = 1.0,
                          unit: int = 1) -> list[complex]:
        """Numeric expansion, embedding e(a/b) as exp(2*pi*i*unit*a/b)."""
        coeffs = [complex(1)] + [complex(0)] * order
        for (e, t), m in self.factors.items():
            gamma = q_value ** float(e) * cmath.exp(
                2j * cmath.pi * ((unit * t.num) % t.den) / t.den)
            fac = [complex(1)]
            for k in range(1, order + 1):
                fac.append(_signed_binom(m, k) * gamma ** k)
            coeffs = [sum(coeffs[i] * fac[j - i] for i in range(j + 1))
                      for j in range(order + 1)]
        return coeffs

    def __repr__(self):
        parts = []
        for (e, t), m in sorted(self.factors.items(),
                                key=lambda kv: (kv[0][1].den, kv[0][1].num, kv[0][0])):
            qpart = "" if e == 0 else f"q^({e})·"
            parts.append(f"(1-{qpart}e({t})t)^{-m}")
        return " ".join(parts) or "1"

    def to_json(self):
        out = []
        for (e, t), m in sorted(self.factors.items(),
                                key=lambda kv: (kv[0][1].den, kv[0][1].num, kv[0][0])):
            term = {"alpha": str(t), "mult": m}
            if e != 0:
                term["qexp"] = f"{e.numerator}/{e.denominator}"
            out.append(term)
        return out

    @classmethod
    def from_json(cls, data) -> "FactorProduct":
        return cls({(Fraction(t.get("qexp", 0)),
                     QmodZ.from_value(Fraction(t["alpha"]))): int(t["mult"])
                    for t in data})


def _gk(gamma: GroupRingElem, k: int) -> GroupRingElem:
    """gamma^k for a single-term group-ring element, by key scaling."""
    ((e, t), c), = gamma.terms.items()
    return GroupRingElem({(e * k, t.scale(k)): c ** k}, gamma.ring)


def _signed_binom(m: int, k: int) -> int:
    """[t^k] (1 - t)^{-m} = C(m+k-1, k), valid for negative m too."""
    if m > 0:
        return comb(m + k - 1, k)
    num = 1
    for j in range(k):
        num *= m + j
    return num // factorial(k)


def w0_L(e: W0Elem) -> FactorProduct:
    """Characteristic-polynomial map: product of (1 - alpha t)^{-n(alpha)}."""
    return FactorProduct({(Fraction(0), a): m for a, m in e.terms.items()})
