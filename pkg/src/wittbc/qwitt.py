"""q-deformed Witt vectors, the deformed lambda ring with its star_q
product, the q-characteristic polynomial, and executable commuting-square
checks relating them to the undeformed operators.

The deformation parameter q is a positive integer.  The deformed ghost
map reads g_n = sum_{d|n} d q^{n/d - 1} x_d^{n/d}; ring operations on
deformed Witt vectors are defined by transporting through it, and the
deformed lambda-ring product is pinned down by
(1-at)^{-q} star_q (1-bt)^{-q} = (1-abt)^{-q}, realized by conjugating
the plain Witt product with the q-th-power isomorphism eta(f) = f^q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import divisors
from .groupring import GroupRingElem
from .series import TruncSeries, series_pow
from .witt import (FactorProduct, GhostVector, W0Elem, w0_L, w0_frobenius,
                   w0_verschiebung, witt_mul)


@dataclass(frozen=True)
class QWittVector:
    q: int
    components: tuple[Fraction, ...]

    def __init__(self, q: int, components):
        if q < 2:
            raise ValueError("deformation parameter q must be an integer >= 2")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "components",
                           tuple(Fraction(c) for c in components))

    @property
    def order(self) -> int:
        return len(self.components)

    def __getitem__(self, n: int) -> Fraction:
        return self.components[n - 1]


def qghost_components(xs, q: int) -> list[Fraction]:
    """g_n = sum_{d|n} d q^{n/d - 1} x_d^{n/d}; q = 1 degenerates to the
    plain ghost map."""
    xs = [Fraction(x) for x in xs]
    out = []
    for n in range(1, len(xs) + 1):
        out.append(sum((d * Fraction(q) ** (n // d - 1) * xs[d - 1] ** (n // d)
                        for d in divisors(n)), Fraction(0)))
    return out


def qghost(x: QWittVector) -> GhostVector:
    return GhostVector(qghost_components(x.components, x.q))


def qwitt_from_ghost(g, q: int) -> QWittVector:
    comps = [Fraction(c) for c in (g.components if isinstance(g, GhostVector) else g)]
    xs: list[Fraction] = []
    for n in range(1, len(comps) + 1):
        partial = sum((d * Fraction(q) ** (n // d - 1) * xs[d - 1] ** (n // d)
                       for d in divisors(n) if d < n), Fraction(0))
        xs.append((comps[n - 1] - partial) / n)
    return QWittVector(q, xs)


def _check_q(a, b):
    if a.q != b.q:
        raise ValueError(f"mismatched deformation parameters: {a.q} vs {b.q}")


def qwitt_add(a: QWittVector, b: QWittVector) -> QWittVector:
    """Addition transported through the deformed ghost map."""
    _check_q(a, b)
    ga, gb = qghost(a), qghost(b)
    return qwitt_from_ghost([x + y for x, y in zip(ga.components, gb.components)], a.q)


def qwitt_mul(a: QWittVector, b: QWittVector) -> QWittVector:
    """Multiplication transported through the deformed ghost map."""
    _check_q(a, b)
    ga, gb = qghost(a), qghost(b)
    return qwitt_from_ghost([x * y for x, y in zip(ga.components, gb.components)], a.q)


def qwitt_one(q: int, order: int) -> QWittVector:
    """Multiplicative unit: the preimage of (1, 1, 1, ...)."""
    return qwitt_from_ghost([Fraction(1)] * order, q)


@dataclass(frozen=True)
class LambdaQElem:
    """A unit-constant-term series regarded in the q-deformed lambda ring."""

    q: int
    series: TruncSeries

    def __post_init__(self):
        if self.q < 1:
            raise ValueError("q must be a positive integer")


def eta(f: TruncSeries, q: int) -> LambdaQElem:
    """The q-th-power isomorphism into the deformed ring."""
    return LambdaQElem(q, series_pow(f, q))


def eta_inv(a: LambdaQElem) -> TruncSeries:
    return series_pow(a.series, Fraction(1, a.q))


def lambda_q_add(a: LambdaQElem, b: LambdaQElem) -> LambdaQElem:
    """Deformed addition; transported through eta it is still plain
    series multiplication."""
    if a.q != b.q:
        raise ValueError(f"mismatched deformation parameters: {a.q} vs {b.q}")
    return LambdaQElem(a.q, a.series * b.series)


def star_q(a: LambdaQElem, b: LambdaQElem) -> LambdaQElem:
    """Deformed product eta(eta^{-1}(a) * eta^{-1}(b)) with * the Witt
    product."""
    if a.q != b.q:
        raise ValueError(f"mismatched deformation parameters: {a.q} vs {b.q}")
    return eta(witt_mul(eta_inv(a), eta_inv(b)), a.q)


def Lq(e: W0Elem, q: int) -> FactorProduct:
    """q-characteristic polynomial det(1 - t f)^{-q}, kept as the exact
    factor product with multiplicities scaled by q."""
    return w0_L(e).pow_scalar(q)


def lq_series(e: W0Elem, q: int, order: int, ring: str = "Z") -> LambdaQElem:
    return LambdaQElem(q, Lq(e, q).to_series(order, ring))


@dataclass(frozen=True)
class AqtSeries:
    """Polynomial carrier for the deformed ghost ring, with the scaled
    Hadamard product (a*b)_n = a_n b_n / q."""

    q: int
    coeffs: tuple

    def __init__(self, q: int, coeffs):
        if q < 1:
            raise ValueError("q must be a positive integer")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "coeffs", tuple(
            Fraction(c) if isinstance(c, int) else c for c in coeffs))

    def __mul__(self, other: "AqtSeries") -> "AqtSeries":
        if self.q != other.q:
            raise ValueError(f"mismatched deformation parameters: {self.q} vs {other.q}")
        n = min(len(self.coeffs), len(other.coeffs))
        return AqtSeries(self.q, [(self.coeffs[k] * other.coeffs[k]) * Fraction(1, self.q)
                                  for k in range(n)])


def aqt_mul(f: AqtSeries, g: AqtSeries) -> AqtSeries:
    return f * g


def aqt_unit(q: int, order: int) -> AqtSeries:
    """The series with every coefficient q is the unit for aqt_mul."""
    return AqtSeries(q, [Fraction(q)] * (order + 1))


def iota_q(g: GhostVector, q: int) -> AqtSeries:
    """(x_n) -> sum_n q x_n t^{n-1}."""
    return AqtSeries(q, [q * c for c in g.components])


def w0_ghost(e: W0Elem, count: int, ring: str = "Z") -> list[GroupRingElem]:
    """Trace ghost components tr(f^n) = sum of mult * alpha^n, exact in
    the group ring, for n = 1..count."""
    return [w0_L(e).ghost(n, ring) for n in range(1, count + 1)]


@dataclass(frozen=True)
class SquareReport:
    square: str
    passed: bool
    first_failure: str | None = None

    def to_json(self):
        return {"square": self.square, "pass": self.passed,
                "firstFailure": self.first_failure}


def diagram_checks(e: W0Elem, q: int, n: int, order: int = 8,
                   unit: int = 1, tol: float = 1e-9) -> list[SquareReport]:
    """Verify the three compatibility squares between the W0 operators
    and the deformed series-level operators.

    * ghost: the q-identification of the trace ghost components equals
      the logarithmic derivative of the q-characteristic polynomial.
    * frobenius: the series-level F_n of L^q(e) equals L^q applied after
      the eigenvalue-power Frobenius.
    * verschiebung: L^q after the root-spreading V_n equals the t -> t^n
      substitution on the series side.

    Each square is checked exactly (group-ring / factor-list equality)
    and numerically on the complex expansion at tolerance `tol`.
    """
    reports = []

    # ghost square
    lhs = [q * g for g in w0_ghost(e, order)]
    rhs = Lq(e, q).log_deriv(order)
    failure = None
    for j, (a, b) in enumerate(zip(lhs, rhs)):
        if a != b:
            failure = f"coefficient of t^{j} differs: {a!r} vs {b!r}"
            break
    reports.append(SquareReport("ghost", failure is None, failure))

    # frobenius square
    fa = Lq(e, q).frobenius(n)
    fb = Lq(w0_frobenius(e, n), q)
    failure = None if fa == fb else "factor lists differ"
    if failure is None:
        ca = fa.to_complex_coeffs(order, unit=unit)
        cb = fb.to_complex_coeffs(order, unit=unit)
        dev = max(abs(x - y) for x, y in zip(ca, cb))
        if dev > tol:
            failure = f"complex expansion deviates by {dev:.3e}"
    reports.append(SquareReport("frobenius", failure is None, failure))

    # verschiebung square
    va = Lq(w0_verschiebung(e, n), q)
    vb = Lq(e, q).verschiebung(n)
    failure = None if va == vb else "factor lists differ"
    if failure is None:
        ca = va.to_complex_coeffs(order, unit=unit)
        cb = vb.to_complex_coeffs(order, unit=unit)
        dev = max(abs(x - y) for x, y in zip(ca, cb))
        if dev > tol:
            failure = f"complex expansion deviates by {dev:.3e}"
    reports.append(SquareReport("verschiebung", failure is None, failure))

    return reports


@dataclass(frozen=True)
class DeltaQResult:
    raw: GroupRingElem         # divisor of L^q(e): q * n(alpha) at each alpha
    rescaled: GroupRingElem    # raw / q, the undeformed divisor


def delta_q_rescale(e: W0Elem, q: int) -> DeltaQResult:
    """Divisor of the q-characteristic polynomial and its q^{-1}
    rescaling, which recovers the undeformed divisor map."""
    raw = Lq(e, q).divisor()
    rescaled = GroupRingElem({k: c // q for k, c in raw.terms.items()}, "Z")
    return DeltaQResult(raw, rescaled)
