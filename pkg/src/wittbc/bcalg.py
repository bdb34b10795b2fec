"""Bost-Connes algebras with exact normal-form arithmetic, over the
integral group ring, its q-deformation, or Habiro-ring coefficients.

Elements are sums of monomials mu~_a * x * mu*_b with gcd(a, b) = 1 and
x a group-ring element; this is the standard linear basis cut out by
the defining relations

    mu~_n x mu*_n = rho~_n(x)      mu*_n x = sigma_n(x) mu*_n
    x mu~_n = mu~_n sigma_n(x)     mu*_n mu~_n = n
    mu~_{nm} = mu~_n mu~_m         mu*_{nm} = mu*_n mu*_m
    mu~_n mu*_m = mu*_m mu~_n      for coprime n, m.

Multiplication rewrites a product of two monomials back into the basis:
(i) the inner mu*_{b1} mu~_{a2} core resolves through the gcd, leaving
coprime parts that commute; (ii) group-ring factors push outward
through sigma; (iii) a final gcd contraction applies rho~.  Which
sigma/rho pair acts depends on the coefficient ring: the integral one
fixes any q-powers, the deformed one scales q-exponents, and
Habiro-ring coefficients transform through the coefficient maps.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .geodef import rho_hat, rho_points, sigma_hat, sigma_points
from .groupring import GroupRingElem, QEXP_RINGS


# ---------------------------------------------------------------------------
# Habiro ring: integer polynomials in u = q^{1/depth} reduced modulo the
# Pochhammer product (u)_N = (1-u)(1-u^2)...(1-u^N).
# ---------------------------------------------------------------------------


def _poly_trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _poly_trim(out)


def _poly_add(p: list[int], q: list[int]) -> list[int]:
    out = [0] * max(len(p), len(q))
    for i, a in enumerate(p):
        out[i] += a
    for i, b in enumerate(q):
        out[i] += b
    return _poly_trim(out)


def _poly_mod(p: list[int], d: list[int]) -> list[int]:
    """Remainder of p modulo d, where d has leading coefficient +-1 so
    the division stays over the integers."""
    p = list(p)
    lead = d[-1]
    assert lead in (1, -1), "divisor must have unit leading coefficient"
    while len(p) >= len(d) and _poly_trim(p):
        shift = len(p) - len(d)
        factor = p[-1] * lead
        for i, c in enumerate(d):
            p[shift + i] -= factor * c
        _poly_trim(p)
    return _poly_trim(p)


def _poly_subs_power(p: list[int], n: int) -> list[int]:
    out = [0] * ((len(p) - 1) * n + 1) if p else []
    for i, c in enumerate(p):
        if c:
            out[i * n] = c
    return out


def pochhammer_poly(n: int) -> list[int]:
    """(u)_n = (1-u)(1-u^2)...(1-u^n) as an integer coefficient list."""
    out = [1]
    for k in range(1, n + 1):
        factor = [0] * (k + 1)
        factor[0], factor[k] = 1, -1
        out = _poly_mul(out, factor)
    return out


class HabiroElem:
    """Residue class in Z[u] / ((u)_level) on the lattice u = q^{1/depth}.

    Reduction always uses the principal Pochhammer ideal, so equality of
    two elements certifies equality in the Habiro limit ring, while an
    inequality verdict is only "not congruent at this level".
    """

    __slots__ = ("depth", "level", "coeffs")

    def __init__(self, coeffs, level: int, depth: int = 1):
        if level < 1 or depth < 1:
            raise ValueError("level and depth must be >= 1")
        self.level = level
        self.depth = depth
        self.coeffs = tuple(_poly_mod([int(c) for c in coeffs],
                                      pochhammer_poly(level)))

    @classmethod
    def from_int(cls, k: int, level: int, depth: int = 1) -> "HabiroElem":
        return cls([k], level, depth)

    @classmethod
    def q_power(cls, exponent, level: int, depth: int = 1) -> "HabiroElem":
        """q^exponent; the exponent must lie on the 1/depth lattice."""
        e = Fraction(exponent) * depth
        if e.denominator != 1 or e < 0:
            raise ValueError(
                f"exponent {exponent} not on the 1/{depth} lattice")
        return cls([0] * int(e) + [1], level, depth)

    # -- lattice and level management ---------------------------------

    def raise_depth(self, k: int) -> "HabiroElem":
        """Rewrite on the finer lattice q^{1/(k*depth)}: same value,
        exponents scale by k, level scales by k."""
        if k < 1:
            raise ValueError("k must be >= 1")
        if k == 1:
            return self
        return HabiroElem(_poly_subs_power(list(self.coeffs), k),
                          self.level * k, self.depth * k)

    def lower_level(self, level: int) -> "HabiroElem":
        if level > self.level:
            raise ValueError(f"cannot raise level {self.level} to {level}")
        return HabiroElem(self.coeffs, level, self.depth)

    @staticmethod
    def _harmonize(a: "HabiroElem", b: "HabiroElem"):
        d = a.depth * b.depth // gcd(a.depth, b.depth)
        a2 = a.raise_depth(d // a.depth)
        b2 = b.raise_depth(d // b.depth)
        level = min(a2.level, b2.level)
        return a2.lower_level(level), b2.lower_level(level)

    @staticmethod
    def _coerce(other, like: "HabiroElem"):
        if isinstance(other, int):
            return HabiroElem.from_int(other, like.level, like.depth)
        return other if isinstance(other, HabiroElem) else None

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other, self)
        if other is None:
            return NotImplemented
        a, b = self._harmonize(self, other)
        return HabiroElem(_poly_add(list(a.coeffs), list(b.coeffs)),
                          a.level, a.depth)

    __radd__ = __add__

    def __neg__(self):
        return HabiroElem([-c for c in self.coeffs], self.level, self.depth)

    def __sub__(self, other):
        other = self._coerce(other, self)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other, self)
        if other is None:
            return NotImplemented
        a, b = self._harmonize(self, other)
        return HabiroElem(_poly_mul(list(a.coeffs), list(b.coeffs)),
                          a.level, a.depth)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other, self)
        if other is None:
            return NotImplemented
        a, b = self._harmonize(self, other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        return hash((self.depth, self.level, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        var = "q" if self.depth == 1 else f"q^(1/{self.depth})"
        if not self.coeffs:
            return f"HabiroElem(0; level={self.level}, {var})"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c:
                parts.append(str(c) if i == 0 else
                             f"{c}*{var}" if i == 1 else f"{c}*{var}^{i}")
        return f"HabiroElem({' + '.join(parts)}; level={self.level})"

    def to_json(self):
        return {"depth": self.depth, "level": self.level,
                "poly": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data) -> "HabiroElem":
        return cls([int(c) for c in data["poly"]], data["level"], data["depth"])


def habiro_reduce(coeffs, level: int, depth: int = 1) -> HabiroElem:
    """Reduce an integer polynomial modulo (u)_level."""
    return HabiroElem(coeffs, level, depth)


def habiro_add(a: HabiroElem, b: HabiroElem) -> HabiroElem:
    return a + b


def habiro_mul(a: HabiroElem, b: HabiroElem) -> HabiroElem:
    return a * b


def habiro_sigma(x: HabiroElem, n: int) -> HabiroElem:
    """The coefficient endomorphism q -> q^n.  Exponents scale by n on
    the same lattice; the level drops from n*N to N, which is what makes
    the substituted ideal land inside the target ideal."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if x.level % n:
        raise ValueError(
            f"sigma_{n} needs a level divisible by {n}, got {x.level}")
    return HabiroElem(_poly_subs_power(list(x.coeffs), n),
                      x.level // n, x.depth)


def habiro_rho(x: HabiroElem, n: int) -> HabiroElem:
    """The partial inverse q -> q^{1/n}: the same polynomial reread on
    the n-times-finer lattice."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return HabiroElem(x.coeffs, x.level, x.depth * n)


# ---------------------------------------------------------------------------
# sigma / rho dispatch per coefficient ring
# ---------------------------------------------------------------------------


def _habiro_sigma_elem(x: GroupRingElem, n: int) -> GroupRingElem:
    def fn(key, c):
        nc = habiro_sigma(c, n) if isinstance(c, HabiroElem) else c
        return [((key[0], key[1].scale(n)), nc)]
    return x.transform_terms(fn)


def _habiro_rho_elem(x: GroupRingElem, n: int) -> GroupRingElem:
    def fn(key, c):
        nc = habiro_rho(c, n) if isinstance(c, HabiroElem) else c
        return [((key[0], s), nc) for s in key[1].preimages(n)]
    return x.transform_terms(fn)


def sigma_n(x: GroupRingElem, n: int) -> GroupRingElem:
    """e(r) -> e(nr), extended by the coefficient ring's own sigma when
    there is one (q-exponents scale in the deformed ring; Habiro
    coefficients substitute q -> q^n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if x.ring in QEXP_RINGS:
        return sigma_hat(x, n)
    if x.ring == "habiro":
        return _habiro_sigma_elem(x, n)
    return sigma_points(x, n)


def rho_tilde_n(x: GroupRingElem, n: int) -> GroupRingElem:
    """e(r) -> sum of e(s) over ns = r, the integral partial inverse;
    sigma_n(rho_tilde_n(x)) = n * x."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if x.ring in QEXP_RINGS:
        return rho_hat(x, n)
    if x.ring == "habiro":
        return _habiro_rho_elem(x, n)
    return rho_points(x, n)


# ---------------------------------------------------------------------------
# normal forms
# ---------------------------------------------------------------------------


class BCMonomial:
    """mu~_a * x * mu*_b with gcd(a, b) = 1 and x a group-ring element."""

    __slots__ = ("a", "x", "b")

    def __init__(self, a: int, x: GroupRingElem, b: int):
        if a < 1 or b < 1:
            raise ValueError("isometry indices must be >= 1")
        if gcd(a, b) != 1:
            raise ValueError(f"normal form requires gcd(a, b) = 1, got ({a}, {b})")
        if not x:
            raise ValueError("zero coefficient has no monomial")
        self.a, self.x, self.b = a, x, b

    def __repr__(self):
        left = f"mu~_{self.a} " if self.a > 1 else ""
        right = f" mu*_{self.b}" if self.b > 1 else ""
        return f"{left}({self.x!r}){right}"


class BCElem:
    """Finite sum of normal-form monomials, keyed by (a, b)."""

    __slots__ = ("ring", "terms")

    def __init__(self, terms=None, ring: str = "Z"):
        self.ring = ring
        clean: dict[tuple[int, int], GroupRingElem] = {}
        if terms:
            for key, x in (terms.items() if isinstance(terms, dict) else terms):
                a, b = key
                if gcd(a, b) != 1:
                    raise ValueError(f"normal form requires gcd(a, b) = 1, got {key}")
                if x.ring != ring:
                    raise ValueError(
                        f"coefficient ring mismatch: {x.ring!r} in a {ring!r} element")
                if key in clean:
                    x = clean[key] + x
                if x:
                    clean[key] = x
                elif key in clean:
                    del clean[key]
        self.terms = {k: x for k, x in clean.items() if x}

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, ring: str = "Z") -> "BCElem":
        return cls({}, ring)

    @classmethod
    def one(cls, ring: str = "Z") -> "BCElem":
        return cls({(1, 1): GroupRingElem.one(ring)}, ring)

    @classmethod
    def mu_tilde(cls, n: int, ring: str = "Z") -> "BCElem":
        return cls({(n, 1): GroupRingElem.one(ring)}, ring)

    @classmethod
    def mu_star(cls, n: int, ring: str = "Z") -> "BCElem":
        return cls({(1, n): GroupRingElem.one(ring)}, ring)

    @classmethod
    def of(cls, x: GroupRingElem) -> "BCElem":
        return cls({(1, 1): x}, x.ring)

    def monomials(self) -> list[BCMonomial]:
        return [BCMonomial(a, x, b) for (a, b), x in sorted(self.terms.items())]

    # -- ring operations -------------------------------------------------

    def __add__(self, other: "BCElem") -> "BCElem":
        self._check(other)
        out = dict(self.terms)
        for k, x in other.terms.items():
            out[k] = out[k] + x if k in out else x
        return BCElem(out, self.ring)

    def __neg__(self) -> "BCElem":
        return BCElem({k: -x for k, x in self.terms.items()}, self.ring)

    def __sub__(self, other: "BCElem") -> "BCElem":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, BCElem):
            return bc_mul(self, other)
        return BCElem({k: x * other for k, x in self.terms.items()}, self.ring)

    def __rmul__(self, other):
        return BCElem({k: other * x for k, x in self.terms.items()}, self.ring)

    def _check(self, other: "BCElem"):
        if self.ring != other.ring:
            raise ValueError(
                f"mismatched coefficient rings: {self.ring!r} vs {other.ring!r}")

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BCElem.one(self.ring) * other if other != 0 else BCElem.zero(self.ring)
        if not isinstance(other, BCElem):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "BCElem(0)"
        return " + ".join(repr(m) for m in self.monomials())

    def to_json(self):
        return {"terms": [{"a": a, "b": b, "x": x.to_json()}
                          for (a, b), x in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, data, ring: str = "Z", coeff_decoder=None) -> "BCElem":
        terms = {}
        for t in data["terms"]:
            terms[(t["a"], t["b"])] = GroupRingElem.from_json(
                t["x"], ring, coeff_decoder)
        return cls(terms, ring)


def _monomial_mul(a1: int, x1: GroupRingElem, b1: int,
                  a2: int, x2: GroupRingElem, b2: int):
    """Rewrite (mu~_{a1} x1 mu*_{b1}) (mu~_{a2} x2 mu*_{b2}) into normal
    form, returning (a, x, b)."""
    g = gcd(b1, a2)
    bp, ap = b1 // g, a2 // g
    # mu*_{b1} mu~_{a2} = g * mu~_{ap} mu*_{bp}, the coprime parts commuting
    w = sigma_n(x1, ap) * sigma_n(x2, bp)
    if g != 1:
        w = g * w
    big_a, big_b = a1 * ap, bp * b2
    m = gcd(big_a, big_b)
    if m != 1:
        w = rho_tilde_n(w, m)
    return big_a // m, w, big_b // m


def bc_mul(x: BCElem, y: BCElem) -> BCElem:
    """Bilinear extension of the monomial rewriting product."""
    x._check(y)
    out: dict[tuple[int, int], GroupRingElem] = {}
    for (a1, b1), x1 in x.terms.items():
        for (a2, b2), x2 in y.terms.items():
            a, w, b = _monomial_mul(a1, x1, b1, a2, x2, b2)
            key = (a, b)
            out[key] = out[key] + w if key in out else w
    return BCElem(out, x.ring)


def _atom(token, ring: str, habiro_level: int | None = None,
          habiro_depth: int = 1) -> BCElem:
    if "mu" in token:
        return BCElem.mu_tilde(int(token["mu"]), ring)
    if "mustar" in token:
        return BCElem.mu_star(int(token["mustar"]), ring)
    if "e" in token:
        return BCElem.of(GroupRingElem.e(Fraction(token["e"]), ring))
    if "E" in token:
        qexp, tors = token["E"]
        qexp = Fraction(qexp)
        if ring == "habiro":
            if habiro_level is None:
                raise ValueError("Habiro generators need an explicit level")
            coeff = HabiroElem.q_power(qexp, habiro_level, habiro_depth)
            return BCElem.of(GroupRingElem.e(Fraction(tors), ring, coeff=coeff))
        return BCElem.of(GroupRingElem.E(qexp, Fraction(tors), ring))
    raise ValueError(f"unknown word token {token!r}")


def bc_normalize(word, ring: str = "Z", habiro_level: int | None = None,
                 habiro_depth: int = 1) -> BCElem:
    """Normalize a word (list of generator tokens, left to right) into
    the monomial basis.  Tokens: {"mu": n}, {"mustar": n}, {"e": "a/b"},
    {"E": [qexp, "a/b"]}."""
    if not word:
        raise ValueError("empty word")
    out = None
    for token in word:
        atom = _atom(token, ring, habiro_level, habiro_depth)
        out = atom if out is None else bc_mul(out, atom)
    return out


# The q-deformed algebra is the same machinery over a q-power-carrying
# coefficient ring; these aliases make call sites say what they mean.
bc_q_mul = bc_mul


def bc_q_normalize(word, ring: str = "R", **kw) -> BCElem:
    return bc_normalize(word, ring, **kw)
