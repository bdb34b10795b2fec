"""Graded geometric deformations of the W0 layer.

Two gradings are supported:

* kind="points": grade l copies an endomorphism class q^l times; the
  series form of a grade-l class is L(e)^{q^l} and all operators leave
  the grade alone.
* kind="affine": grade r (any non-negative rational) scales every
  eigenvalue by a formal q^r; Frobenius multiplies the grade by n,
  Verschiebung divides it by n.

Divisor maps land in the group ring with q-power keys, where the
deformed endomorphisms sigma_hat / rho_hat act.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .groupring import GroupRingElem, QmodZ, Q_RINGS
from .witt import FactorProduct, W0Elem, w0_frobenius, w0_verschiebung

KINDS = ("points", "affine")


class GradedW0Elem:
    """Finite sum of graded components {grade: W0Elem}."""

    __slots__ = ("kind", "terms")

    def __init__(self, terms=None, kind: str = "affine"):
        if kind not in KINDS:
            raise ValueError(f"unknown grading kind {kind!r}")
        self.kind = kind
        clean: dict[Fraction, W0Elem] = {}
        if terms:
            for grade, part in (terms.items() if isinstance(terms, dict) else terms):
                grade = Fraction(grade)
                if grade < 0:
                    raise ValueError(f"negative grade {grade}")
                if kind == "points" and grade.denominator != 1:
                    raise ValueError(
                        f"points-kind grades must be integers, got {grade}")
                if grade in clean:
                    part = clean[grade] + part
                if part:
                    clean[grade] = part
                elif grade in clean:
                    del clean[grade]
        self.terms = {g: p for g, p in clean.items() if p}

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, GradedW0Elem) and self.kind == other.kind
                and self.terms == other.terms)

    def _check(self, other: "GradedW0Elem"):
        if self.kind != other.kind:
            raise ValueError(f"mixed grading kinds: {self.kind!r} vs {other.kind!r}")

    def __add__(self, other: "GradedW0Elem") -> "GradedW0Elem":
        self._check(other)
        out = dict(self.terms)
        for g, p in other.terms.items():
            out[g] = out[g] + p if g in out else p
        return GradedW0Elem(out, self.kind)

    def __repr__(self):
        body = ", ".join(f"q^{g}: {p!r}" for g, p in sorted(self.terms.items()))
        return f"GradedW0Elem[{self.kind}]({{{body}}})"

    def to_json(self):
        return {"kind": self.kind,
                "terms": [{"grade": f"{g.numerator}/{g.denominator}",
                           "eigen": p.to_json()}
                          for g, p in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, data) -> "GradedW0Elem":
        return cls({Fraction(t["grade"]): W0Elem.from_json(t["eigen"])
                    for t in data["terms"]}, data["kind"])


def omega(e: W0Elem, grade, kind: str = "affine") -> GradedW0Elem:
    """Place a W0 class in a single grade; grade 0 is the identity
    embedding for either kind."""
    return GradedW0Elem({Fraction(grade): e}, kind)


def graded_mul(x: GradedW0Elem, y: GradedW0Elem) -> GradedW0Elem:
    """Grades add; the underlying classes multiply by tensor product."""
    x._check(y)
    out: dict[Fraction, W0Elem] = {}
    for g1, p1 in x.terms.items():
        for g2, p2 in y.terms.items():
            g = g1 + g2
            prod = p1.tensor(p2)
            out[g] = out[g] + prod if g in out else prod
    return GradedW0Elem(out, x.kind)


def graded_frobenius(x: GradedW0Elem, n: int) -> GradedW0Elem:
    """points: grade fixed; affine: grade -> n * grade.  Either way the
    eigenvalue part maps through the W0 Frobenius."""
    out: dict[Fraction, W0Elem] = {}
    for g, p in x.terms.items():
        ng = g if x.kind == "points" else g * n
        fp = w0_frobenius(p, n)
        out[ng] = out[ng] + fp if ng in out else fp
    return GradedW0Elem(out, x.kind)


def graded_verschiebung(x: GradedW0Elem, n: int) -> GradedW0Elem:
    """points: grade fixed; affine: grade -> grade / n, with eigenvalues
    spread over their n-th roots."""
    out: dict[Fraction, W0Elem] = {}
    for g, p in x.terms.items():
        ng = g if x.kind == "points" else g / n
        vp = w0_verschiebung(p, n)
        out[ng] = out[ng] + vp if ng in out else vp
    return GradedW0Elem(out, x.kind)


def deformed_divisor(x: GradedW0Elem, ring: str = "R") -> GroupRingElem:
    """Grade r contributes q^r times the plain divisor; a ring
    isomorphism onto the polynomial-coefficient group ring."""
    terms: dict[tuple[Fraction, QmodZ], int] = {}
    for g, p in x.terms.items():
        for a, m in p.terms.items():
            k = (g, a)
            terms[k] = terms.get(k, 0) + m
    return GroupRingElem(terms, ring)


def affine_factor_product(x: GradedW0Elem) -> FactorProduct:
    """Series form of an affine graded class: grade-r eigenvalue alpha
    becomes the factor (1 - q^r alpha t)^{-mult}."""
    if x.kind != "affine":
        raise ValueError("factor form with formal q-powers is the affine form")
    return FactorProduct({(g, a): m
                          for g, p in x.terms.items()
                          for a, m in p.terms.items()})


def points_factor_product(x: GradedW0Elem, q: int) -> FactorProduct:
    """Series form of a points-kind class at a numeric q: grade l scales
    every multiplicity by q^l."""
    if x.kind != "points":
        raise ValueError("points factor form needs a points-kind element")
    out: dict[tuple[Fraction, QmodZ], int] = {}
    for g, p in x.terms.items():
        scale = q ** int(g)
        for a, m in p.terms.items():
            k = (Fraction(0), a)
            out[k] = out.get(k, 0) + scale * m
    return FactorProduct(out)


@dataclass(frozen=True)
class DeformedGenerator:
    """A single generator q^qexp * e(torsion) of the deformed group ring."""

    qexp: Fraction
    torsion: QmodZ

    def __init__(self, qexp, torsion):
        object.__setattr__(self, "qexp", Fraction(qexp))
        tors = torsion if isinstance(torsion, QmodZ) else QmodZ.from_value(torsion)
        object.__setattr__(self, "torsion", tors)

    def to_elem(self, ring: str = "R") -> GroupRingElem:
        return GroupRingElem.E(self.qexp, self.torsion, ring)


def _as_elem(x, ring: str = "R") -> GroupRingElem:
    return x.to_elem(ring) if isinstance(x, DeformedGenerator) else x


def sigma_hat(x, n: int) -> GroupRingElem:
    """E(r, r') -> E(nr, nr'): both the q-exponent and the torsion scale."""
    if n < 1:
        raise ValueError("n must be >= 1")
    x = _as_elem(x)
    return x.transform(lambda k: [(k[0] * n, k[1].scale(n))])


def rho_hat(x, n: int) -> GroupRingElem:
    """E(r, r') -> sum over the n solutions s of ns = r' of E(r/n, s);
    the integral partial inverse (sigma_hat o rho_hat = n * id)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    x = _as_elem(x)
    return x.transform(lambda k: [(k[0] / n, s) for s in k[1].preimages(n)])


def rho_hat_rational(x, n: int) -> GroupRingElem:
    """(1/n) * rho_hat, the idempotent-style partial inverse available
    over rational coefficients."""
    x = _as_elem(x)
    if x.ring not in Q_RINGS:
        raise ValueError("the 1/n-normalized partial inverse needs rational "
                         f"coefficients, not ring {x.ring!r}")
    return rho_hat(x, n) / n


def sigma_points(x, n: int) -> GroupRingElem:
    """Points-kind endomorphism: torsion scales, the q-exponent is fixed
    (the coefficient polynomial ring is untouched)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    x = _as_elem(x)
    return x.transform(lambda k: [(k[0], k[1].scale(n))])


def rho_points(x, n: int) -> GroupRingElem:
    """Points-kind partial inverse: torsion preimages, q-exponent fixed."""
    if n < 1:
        raise ValueError("n must be >= 1")
    x = _as_elem(x)
    return x.transform(lambda k: [(k[0], s) for s in k[1].preimages(n)])
