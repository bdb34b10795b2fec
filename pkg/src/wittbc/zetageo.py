"""Zeta functions of schemes over a finite field as Witt-ring elements.

A zeta function carries three equivalent encodings and remembers which
one it was built from:

* point counts N_1..N_M over the field extensions, giving
  exp(sum N_m t^m / m);
* closed-point degree counts a_1..a_M, giving prod (1 - t^r)^{-a_r};
* a symbolic factor list prod (1 - c q^e t)^{-mult}.

Counts and degrees convert both ways (divisor sums / Moebius
inversion); products of varieties are the Witt star product, disjoint
unions are series multiplication.  The deformation parameter may be a
concrete integer or the formal variable q (coefficients then live in
the polynomial ring with fractional q-exponents).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import divisors, mobius
from .groupring import QExpPoly
from .series import TruncSeries
from .witt import witt_mul

FORMAL = "formal"


@dataclass(frozen=True)
class Provenance:
    kind: str            # "counts" | "degrees" | "symbolic"
    data: tuple

    def to_json(self):
        if self.kind == "symbolic":
            return {"kind": self.kind,
                    "factors": [{"coeff": str(c),
                                 "qexp": f"{e.numerator}/{e.denominator}",
                                 "mult": m} for c, e, m in self.data]}
        return {"kind": self.kind,
                self.kind: [v.to_json() if isinstance(v, QExpPoly) else str(v)
                            for v in self.data]}

    @classmethod
    def from_json(cls, obj) -> "Provenance":
        kind = obj["kind"]
        if kind == "symbolic":
            return cls(kind, tuple((Fraction(f["coeff"]), Fraction(f["qexp"]),
                                    int(f["mult"])) for f in obj["factors"]))
        vals = tuple(QExpPoly.from_json(v) if isinstance(v, list) else Fraction(v)
                     for v in obj[kind])
        return cls(kind, vals)


@dataclass(frozen=True)
class ZetaFunction:
    series: TruncSeries
    provenance: Provenance
    q: object = None          # int, "formal", or None when irrelevant

    @property
    def order(self) -> int:
        return self.series.order

    def counts(self, m: int | None = None):
        """N_1..N_m recovered from the ghost components (exact)."""
        return self.series.ghost_components(m)

    def to_json(self):
        return {"q": self.q, "order": self.order,
                "coeffs": self.series.to_json()["coeffs"],
                "provenance": self.provenance.to_json()}

    @classmethod
    def from_json(cls, obj) -> "ZetaFunction":
        series = TruncSeries.from_json(
            {"order": obj["order"], "coeffs": obj["coeffs"]},
            coeff_decoder=QExpPoly.from_json)
        return cls(series, Provenance.from_json(obj["provenance"]), obj["q"])


def counts_to_degrees(counts) -> tuple[list, bool]:
    """Moebius inversion a_r = (1/r) sum_{d|r} mu(d) N_{r/d}.

    Returns (degrees, integral) where `integral` reports whether every
    a_r came out a (polynomial with) integer coefficient(s); virtual
    classes may legitimately fail this.
    """
    degrees = []
    integral = True
    for r in range(1, len(counts) + 1):
        acc = sum((mobius(d) * counts[r // d - 1] for d in divisors(r)),
                  Fraction(0) if not isinstance(counts[0], QExpPoly) else QExpPoly.zero())
        a = acc * Fraction(1, r)
        if isinstance(a, QExpPoly):
            integral = integral and a.is_integral
        else:
            integral = integral and Fraction(a).denominator == 1
        degrees.append(a)
    return degrees, integral


def degrees_to_counts(degrees) -> list:
    """N_m = sum_{r|m} r * a_r."""
    out = []
    for m in range(1, len(degrees) + 1):
        out.append(sum((r * degrees[r - 1] for r in divisors(m)),
                       Fraction(0) if not isinstance(degrees[0], QExpPoly)
                       else QExpPoly.zero()))
    return out


def zeta_from_counts(counts, order: int | None = None, q=None) -> ZetaFunction:
    """exp(sum N_m t^m / m) truncated at `order` (default: len(counts))."""
    counts = [Fraction(c) if isinstance(c, int) else c for c in counts]
    if order is None:
        order = len(counts)
    if len(counts) < order:
        raise ValueError(f"need {order} counts, got {len(counts)}")
    series = TruncSeries.from_ghost(counts[:order], order)
    return ZetaFunction(series, Provenance("counts", tuple(counts[:order])), q)


def zeta_from_degrees(degrees, order: int | None = None, q=None) -> ZetaFunction:
    """prod over r of (1 - t^r)^{-a_r}."""
    degrees = [Fraction(d) if isinstance(d, int) else d for d in degrees]
    if order is None:
        order = len(degrees)
    like = degrees[0] if degrees and isinstance(degrees[0], QExpPoly) else None
    out = TruncSeries.one(order, like=QExpPoly.one() if like is not None else None)
    for r, a in enumerate(degrees[:order], start=1):
        if a:
            one = QExpPoly.one() if isinstance(a, QExpPoly) else Fraction(1)
            out = out * TruncSeries.from_factor(one, r, a, order)
    return ZetaFunction(out, Provenance("degrees", tuple(degrees[:order])), q)


def necklace(x, r: int):
    """Necklace numbers M(x, r) = (1/r) sum_{d|r} mu(d) x^{r/d}.

    Integer x gives an integer (asserted).  A polynomial argument stays
    a polynomial; its coefficients may be fractional (M(q, 2) is
    (q^2 - q)/2) even though its values at integers are whole.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    if isinstance(x, int):
        acc = sum(mobius(d) * x ** (r // d) for d in divisors(r))
        if acc % r:
            raise ArithmeticError(f"necklace number M({x},{r}) not integral")
        return acc // r
    acc = x.zero_like() if hasattr(x, "zero_like") else Fraction(0)
    for d in divisors(r):
        acc = acc + mobius(d) * x ** (r // d)
    return acc * Fraction(1, r)


def _q_power(q, exponent: Fraction):
    """q^exponent as an exact coefficient: integer q with integral
    exponent stays rational, formal q becomes a monomial."""
    exponent = Fraction(exponent)
    if q == FORMAL:
        return QExpPoly.q(exponent)
    if exponent.denominator != 1:
        raise ValueError(
            f"fractional power {exponent} of a numeric q={q} is not exact; "
            f"use q='formal'")
    return Fraction(q) ** exponent


def zeta_affine(l: int, q, order: int = 12) -> ZetaFunction:
    """Affine space of dimension l: (1 - q^l t)^{-1}."""
    gamma = _q_power(q, Fraction(l))
    counts = [gamma ** m for m in range(1, order + 1)]
    series = TruncSeries.geometric(gamma, order)
    return ZetaFunction(series, Provenance("counts", tuple(counts)), q)


def zeta_projective(n: int, q, order: int = 12) -> ZetaFunction:
    """Projective space of dimension n: prod_{i=0..n} (1 - q^i t)^{-1}."""
    if n < 0:
        raise ValueError("dimension must be >= 0")
    factors = [(Fraction(1), Fraction(i), 1) for i in range(n + 1)]
    series = None
    for i in range(n + 1):
        f = TruncSeries.geometric(_q_power(q, Fraction(i)), order)
        series = f if series is None else series * f
    return ZetaFunction(series, Provenance("symbolic", tuple(factors)), q)


def tate_root(r, q=FORMAL, order: int = 12) -> ZetaFunction:
    """Formal r-th power of the Lefschetz class: (1 - q^r t)^{-1}."""
    r = Fraction(r)
    gamma = _q_power(q, r)
    series = TruncSeries.geometric(gamma, order)
    return ZetaFunction(series, Provenance("symbolic", ((Fraction(1), r, 1),)), q)


def _check_same_q(z1: ZetaFunction, z2: ZetaFunction):
    if z1.q is not None and z2.q is not None and z1.q != z2.q:
        raise ValueError(f"mismatched base fields: q={z1.q} vs q={z2.q}")


def _merge_q(z1: ZetaFunction, z2: ZetaFunction):
    return z1.q if z1.q is not None else z2.q


def zeta_product(z1: ZetaFunction, z2: ZetaFunction) -> ZetaFunction:
    """Zeta of a product of varieties: the Witt star product (point
    counts multiply)."""
    _check_same_q(z1, z2)
    series = witt_mul(z1.series, z2.series)
    counts = series.ghost_components()
    return ZetaFunction(series, Provenance("counts", tuple(counts)),
                        _merge_q(z1, z2))


def zeta_disjoint_union(z1: ZetaFunction, z2: ZetaFunction) -> ZetaFunction:
    """Zeta of a disjoint union: series multiply (Witt addition)."""
    _check_same_q(z1, z2)
    series = z1.series * z2.series
    counts = series.ghost_components()
    return ZetaFunction(series, Provenance("counts", tuple(counts)),
                        _merge_q(z1, z2))


def zeta_affine_shift(z: ZetaFunction, l: int) -> ZetaFunction:
    """Zeta of X x A^l: substitute t -> q^l t."""
    if z.q is None:
        raise ValueError("affine shift needs the base-field parameter q")
    gamma = _q_power(z.q, Fraction(l))
    series = z.series.substitute_scale(gamma)
    counts = series.ghost_components()
    return ZetaFunction(series, Provenance("counts", tuple(counts)), z.q)


def q_integer_witt(n: int, q, order: int = 12) -> ZetaFunction:
    """The Witt-ring avatar of the q-integer [n]_q: the zeta function of
    projective (n-1)-space, whose first ghost component is
    1 + q + ... + q^{n-1}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return zeta_projective(n - 1, q, order)
