"""Torsion points of Q/Z, rational-exponent polynomials in q, and group
rings over Q/Z whose basis elements may carry a q-power.

``GroupRingElem`` is the workhorse: a finite sum of terms
``coeff * q^qexp * e(torsion)`` keyed by the pair (qexp, torsion).  The
plain integral group ring Z[Q/Z] is the special case where every key
has qexp = 0; allowing nonzero q-exponents gives the ring with
coefficients Z[q^r : r rational >= 0].  Coefficients are duck-typed
(int, Fraction, or Habiro-ring classes), with a ring tag used only to
refuse accidental cross-ring arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

Q_RINGS = ("Q", "RQ")          # rings whose coefficients are Fractions
QEXP_RINGS = ("R", "RQ")       # rings whose keys may carry q-powers
KNOWN_RINGS = ("Z", "Q", "R", "RQ", "habiro")


def frac_str(x: Fraction) -> str:
    """Render with an explicit denominator (``0/1``, ``2/3``)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class QmodZ:
    """A torsion point a/b of Q/Z, reduced with 0 <= a < b.

    ``prime`` optionally restricts the point to the prime-to-p part of
    Q/Z (denominator coprime to p); it rides along through arithmetic
    but does not participate in equality or hashing.
    """

    num: int
    den: int
    prime: int | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.den < 1 or not (0 <= self.num < self.den) or gcd(self.num, self.den) != 1:
            raise ValueError(f"not a reduced residue mod 1: {self.num}/{self.den}")
        if self.prime is not None and self.den % self.prime == 0:
            raise ValueError(
                f"denominator {self.den} not prime to {self.prime}")

    @classmethod
    def from_value(cls, value, prime: int | None = None) -> "QmodZ":
        v = Fraction(value) % 1
        return cls(v.numerator, v.denominator, prime)

    @property
    def value(self) -> Fraction:
        return Fraction(self.num, self.den)

    def _merged_prime(self, other: "QmodZ") -> int | None:
        if self.prime is not None and other.prime is not None and self.prime != other.prime:
            raise ValueError("incompatible prime restrictions")
        return self.prime if self.prime is not None else other.prime

    def __add__(self, other: "QmodZ") -> "QmodZ":
        return QmodZ.from_value(self.value + other.value, self._merged_prime(other))

    def __neg__(self) -> "QmodZ":
        return QmodZ.from_value(-self.value, self.prime)

    def __sub__(self, other: "QmodZ") -> "QmodZ":
        return self + (-other)

    def scale(self, n: int) -> "QmodZ":
        """n-fold sum, i.e. e(r) -> e(nr)."""
        return QmodZ.from_value(n * self.value, self.prime)

    def preimages(self, n: int) -> tuple["QmodZ", ...]:
        """The n solutions s of n*s = self in Q/Z."""
        if n < 1:
            raise ValueError("n must be >= 1")
        if self.prime is not None and n % self.prime == 0:
            raise ValueError(
                f"no division by {n} in the prime-to-{self.prime} part of Q/Z")
        return tuple(QmodZ.from_value(Fraction(self.num + j * self.den, n * self.den),
                                      self.prime)
                     for j in range(n))

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


def qmz(value, prime: int | None = None) -> QmodZ:
    return QmodZ.from_value(value, prime)


class QExpPoly:
    """Element of the polynomial ring in fractional powers of q:
    a finite sum of c * q^r with exponents r rational >= 0.

    Coefficients are kept as Fractions internally; ``is_integral``
    reports whether they are all integers.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[Fraction, Fraction] = {}
        if terms:
            for e, c in (terms.items() if isinstance(terms, dict) else terms):
                e, c = Fraction(e), Fraction(c)
                if e < 0:
                    raise ValueError(f"negative q-exponent {e}")
                if c:
                    clean[e] = clean.get(e, Fraction(0)) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def zero(cls) -> "QExpPoly":
        return cls()

    @classmethod
    def one(cls) -> "QExpPoly":
        return cls({Fraction(0): Fraction(1)})

    @classmethod
    def q(cls, exponent=1, coeff=1) -> "QExpPoly":
        return cls({Fraction(exponent): Fraction(coeff)})

    def one_like(self) -> "QExpPoly":
        return QExpPoly.one()

    def zero_like(self) -> "QExpPoly":
        return QExpPoly.zero()

    @staticmethod
    def _coerce(other):
        if isinstance(other, QExpPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return QExpPoly({Fraction(0): Fraction(other)})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return QExpPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return QExpPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QExpPoly({e: c * other for e, c in self.terms.items()})
        if isinstance(other, QExpPoly):
            out: dict[Fraction, Fraction] = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = e1 + e2
                    out[e] = out.get(e, Fraction(0)) + c1 * c2
            return QExpPoly(out)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers leave the ring")
        acc, base = QExpPoly.one(), self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base if n > 1 else base
            n >>= 1
        return acc

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    def sigma(self, n: int) -> "QExpPoly":
        """q^r -> q^{nr}."""
        return QExpPoly({e * n: c for e, c in self.terms.items()})

    def rho(self, n: int) -> "QExpPoly":
        """q^r -> q^{r/n}; inverse of sigma on exponents."""
        return QExpPoly({e / n: c for e, c in self.terms.items()})

    def eval_at(self, q: float) -> float:
        return float(sum(float(c) * q ** float(e) for e, c in self.terms.items()))

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            if e == 0:
                parts.append(str(c))
            else:
                exp = str(e) if e.denominator == 1 else f"({e})"
                mono = "q" if e == 1 else f"q^{exp}"
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"QExpPoly({self})"

    def to_json(self):
        return [[str(e), str(c)] for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data) -> "QExpPoly":
        return cls({Fraction(e): Fraction(c) for e, c in data})


def _coeff_is_zero(c) -> bool:
    return c == 0


def _coerce_coeff(ring: str, c):
    if ring in Q_RINGS and isinstance(c, int):
        return Fraction(c)
    return c


class GroupRingElem:
    """Finite sum of coeff * q^qexp * e(torsion), keyed by (qexp, torsion)."""

    __slots__ = ("ring", "terms")

    def __init__(self, terms=None, ring: str = "Z"):
        if ring not in KNOWN_RINGS:
            raise ValueError(f"unknown coefficient ring {ring!r}")
        self.ring = ring
        clean: dict[tuple[Fraction, QmodZ], object] = {}
        if terms:
            for key, c in (terms.items() if isinstance(terms, dict) else terms):
                qexp, tors = key
                qexp = Fraction(qexp)
                if qexp < 0:
                    raise ValueError(f"negative q-exponent {qexp}")
                if qexp != 0 and ring not in QEXP_RINGS:
                    raise ValueError(
                        f"ring {ring!r} does not carry q-powers (got exponent {qexp})")
                if not isinstance(tors, QmodZ):
                    tors = QmodZ.from_value(tors)
                c = _coerce_coeff(ring, c)
                k = (qexp, tors)
                clean[k] = clean[k] + c if k in clean else c
        self.terms = {k: c for k, c in clean.items() if not _coeff_is_zero(c)}

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, ring: str = "Z") -> "GroupRingElem":
        return cls({}, ring)

    @classmethod
    def one(cls, ring: str = "Z") -> "GroupRingElem":
        return cls.e(0, ring)

    @classmethod
    def e(cls, torsion, ring: str = "Z", coeff=1) -> "GroupRingElem":
        return cls({(Fraction(0), QmodZ.from_value(torsion)
                     if not isinstance(torsion, QmodZ) else torsion): coeff}, ring)

    @classmethod
    def E(cls, qexp, torsion, ring: str = "R", coeff=1) -> "GroupRingElem":
        """Generator q^qexp * e(torsion)."""
        tors = torsion if isinstance(torsion, QmodZ) else QmodZ.from_value(torsion)
        return cls({(Fraction(qexp), tors): coeff}, ring)

    def one_like(self) -> "GroupRingElem":
        return GroupRingElem.one(self.ring)

    def zero_like(self) -> "GroupRingElem":
        return GroupRingElem.zero(self.ring)

    # -- arithmetic --------------------------------------------------

    def _check(self, other: "GroupRingElem"):
        if self.ring != other.ring:
            raise ValueError(
                f"mismatched coefficient rings: {self.ring!r} vs {other.ring!r}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GroupRingElem.e(0, self.ring, coeff=other)
        if not isinstance(other, GroupRingElem):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return GroupRingElem(out, self.ring)

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElem({k: -c for k, c in self.terms.items()}, self.ring)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GroupRingElem.e(0, self.ring, coeff=other)
        if not isinstance(other, GroupRingElem):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GroupRingElem):
            self._check(other)
            out: dict[tuple[Fraction, QmodZ], object] = {}
            for (e1, t1), c1 in self.terms.items():
                for (e2, t2), c2 in other.terms.items():
                    k = (e1 + e2, t1 + t2)
                    c = c1 * c2
                    out[k] = out[k] + c if k in out else c
            return GroupRingElem(out, self.ring)
        # scalar (int, Fraction, or a coefficient-ring element)
        return GroupRingElem({k: c * other for k, c in self.terms.items()}, self.ring)

    def __rmul__(self, other):
        return GroupRingElem({k: other * c for k, c in self.terms.items()}, self.ring)

    def __truediv__(self, n):
        if self.ring not in Q_RINGS:
            raise ValueError(f"exact division needs a rational ring, not {self.ring!r}")
        scale = Fraction(1) / Fraction(n)
        return GroupRingElem({k: c * scale for k, c in self.terms.items()}, self.ring)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            other = GroupRingElem.e(0, self.ring, coeff=other)
        if not isinstance(other, GroupRingElem):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, tuple(self.sorted_terms())))

    # -- structure ---------------------------------------------------

    def transform(self, keyfn) -> "GroupRingElem":
        """Linear extension of a map sending one key to a list of keys."""
        out: dict[tuple[Fraction, QmodZ], object] = {}
        for key, c in self.terms.items():
            for nk in keyfn(key):
                out[nk] = out[nk] + c if nk in out else c
        return GroupRingElem(out, self.ring)

    def transform_terms(self, fn) -> "GroupRingElem":
        """Linear extension of a map (key, coeff) -> [(key', coeff'), ...]."""
        out: dict[tuple[Fraction, QmodZ], object] = {}
        for key, c in self.terms.items():
            for nk, nc in fn(key, c):
                out[nk] = out[nk] + nc if nk in out else nc
        return GroupRingElem(out, self.ring)

    def coeff_poly(self, torsion) -> QExpPoly:
        """The coefficient of e(torsion) as a polynomial in q-powers."""
        tors = torsion if isinstance(torsion, QmodZ) else QmodZ.from_value(torsion)
        return QExpPoly({e: Fraction(c) for (e, t), c in self.terms.items()
                         if t == tors})

    def sorted_terms(self):
        """Canonical order: torsion by (denominator, numerator), then qexp."""
        return sorted(self.terms.items(),
                      key=lambda kv: (kv[0][1].den, kv[0][1].num, kv[0][0]))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (e, t), c in self.sorted_terms():
            qpart = "" if e == 0 else (f"q^({e})*" if e.denominator > 1 else f"q^{e}*")
            parts.append(f"{c}*{qpart}e({t})")
        return " + ".join(parts)

    def to_json(self):
        out = []
        for (e, t), c in self.sorted_terms():
            term = {"coeff": c.to_json() if hasattr(c, "to_json") else str(c),
                    "torsion": str(t)}
            if e != 0:
                term["qexp"] = frac_str(e)
            out.append(term)
        return out

    @classmethod
    def from_json(cls, data, ring: str = "Z", coeff_decoder=None) -> "GroupRingElem":
        terms = {}
        for term in data:
            raw = term["coeff"]
            if isinstance(raw, str):
                c = Fraction(raw)
                if ring not in Q_RINGS and c.denominator == 1:
                    c = int(c)
            elif coeff_decoder is not None:
                c = coeff_decoder(raw)
            else:
                raise ValueError("structured coefficient without a decoder")
            key = (Fraction(term.get("qexp", 0)), QmodZ.from_value(Fraction(term["torsion"])))
            terms[key] = terms.get(key, 0) + c if key in terms else c
        return cls(terms, ring)


def group_ring_mul(x: GroupRingElem, y: GroupRingElem) -> GroupRingElem:
    """Convolution product; raises on mismatched coefficient rings."""
    return x * y


def qexp_sigma(x: QExpPoly, n: int) -> QExpPoly:
    """Exponent scaling q^r -> q^{nr}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return x.sigma(n)


def qexp_rho(x: QExpPoly, n: int) -> QExpPoly:
    """Exponent division q^r -> q^{r/n}; inverse of qexp_sigma."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return x.rho(n)
