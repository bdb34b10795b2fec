"""Numeric layer: q-brackets, q-analog zeta functions with rigorous
tails, partition functions, and representation / time-evolution checks
for the (deformed) Bost-Connes algebras.

Floating-point policy: double precision throughout, with root-of-unity
phases computed from exactly reduced fractions so no trigonometric
drift accumulates.  Summation order is fixed (ascending n, ascending
primes) so results are bit-stable run to run.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .arith import factorize, nth_primes, primes_upto, spf_sieve
from .bcalg import BCElem
from .groupring import GroupRingElem, QmodZ


class DomainError(ValueError):
    """Arguments outside the listed domain of validity."""


class DivergenceError(DomainError):
    """A series was requested outside its convergence region."""

    def __init__(self, message: str, threshold: float):
        super().__init__(message)
        self.threshold = threshold


# ---------------------------------------------------------------------------
# q-brackets and the multiplicative q-analog of n
# ---------------------------------------------------------------------------


def q_bracket(n: int, q):
    """[n]_q = 1 + q + ... + q^{n-1}; exact for integer q."""
    if n < 1:
        raise DomainError(f"[n]_q needs n >= 1, got {n}")
    if isinstance(q, int):
        return n if q == 1 else (q ** n - 1) // (q - 1)
    if q == 1.0:
        return float(n)
    return (q ** n - 1) / (q - 1)


def v_weight(n: int) -> int:
    """Completely additive weight: sum of a_i (p_i - 1) over the prime
    factorization of n."""
    return sum(a * (p - 1) for p, a in factorize(n))


def curly_bracket(n: int, q):
    """{n}_q: multiplicative over the factorization, [p]_q at primes.
    Exact (big integer) for integer q."""
    if n < 1:
        raise DomainError(f"{{n}}_q needs n >= 1, got {n}")
    out = 1 if isinstance(q, int) else 1.0
    for p, a in factorize(n):
        out = out * q_bracket(p, q) ** a
    return out


def log_bracket(p: int, q: float) -> float:
    """log [p]_q, stable for large p and for q near 1."""
    if q <= 0:
        raise DomainError(f"q must be positive, got {q}")
    if q == 1:
        return math.log(p)
    lq = math.log(q)
    if q > 1:
        return p * lq + math.log1p(-math.exp(-p * lq)) - math.log(q - 1)
    return math.log1p(-q ** p) - math.log1p(-q)


# ---------------------------------------------------------------------------
# q-analog zeta functions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SeriesValue:
    value: float
    error_bound: float
    iterations: int
    converged: bool
    detail: dict = field(default_factory=dict, compare=False)

    def to_json(self):
        return {"value": self.value, "errorBound": self.error_bound,
                "iterations": self.iterations, "converged": self.converged}


def _tail_exponent(q: float) -> float:
    """An exponent theta with {n}_q >= n^theta for all n, used to bound
    Dirichlet tails.  Candidate theta = log_2(1+q) (equality at p = 2);
    it is accepted only after checking [p]_q >= p^theta numerically for
    p <= 1000 together with a growth guard covering all larger primes,
    else we fall back to the always-valid theta = 1.
    """
    if q <= 1:
        raise DomainError("tail exponent is for q > 1")
    theta = math.log(1 + q) / math.log(2)
    for p in primes_upto(1000):
        if log_bracket(p, q) < theta * math.log(p) - 1e-12:
            return 1.0
    # for p > 1000: [p]_q > q^{p-1}, and (p-1) log q - theta log p is
    # increasing once log q > theta/p, so one check at the boundary works
    if math.log(q) <= theta / 1000 or 1000 * math.log(q) < theta * math.log(1009):
        return 1.0
    return theta


def _dirichlet_terms_needed(s_eff: float, target: float, max_terms: int) -> int:
    # tail bound: sum_{n>N} n^{-s_eff} <= N^{1-s_eff}/(s_eff-1)
    n = (target * (s_eff - 1)) ** (-1.0 / (s_eff - 1))
    return max(64, min(max_terms, int(n) + 1))


def _zeta_q_dirichlet(s: float, q: float, small: bool, target: float,
                      max_terms: int):
    qq = 1.0 / q if small else q
    theta = _tail_exponent(qq)
    s_eff = s * theta
    n_max = _dirichlet_terms_needed(s_eff, target, max_terms)
    tail = n_max ** (1.0 - s_eff) / (s_eff - 1.0)

    spf = spf_sieve(n_max)
    logbr: dict[int, float] = {}
    lq = math.log(q)
    total = 1.0
    for n in range(2, n_max + 1):
        m, log_term, vn = n, 0.0, 0
        while m > 1:
            p = spf[m]
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            if p not in logbr:
                logbr[p] = log_bracket(p, q)
            log_term += a * logbr[p]
            vn += a * (p - 1)
        if small:
            total += math.exp(s * (vn * lq - log_term))
        else:
            total += math.exp(-s * log_term)
    return total, tail, n_max


def _zeta_q_euler(s: float, q: float, small: bool, target: float):
    # [k]_q >= q^{k-1} (q > 1) gives a geometric bound on the prime tail;
    # in the small-q form the factor magnitudes are [p]_{1/q}^{-s}.
    base = 1.0 / q if small else q
    p_max = 16
    while base ** (-s * p_max) / (1 - base ** (-s)) > target / 2:
        p_max *= 2
        if p_max > 10 ** 7:
            break
    primes = primes_upto(p_max)
    product = 1.0
    lq = math.log(q)
    for p in primes:
        if small:
            x = math.exp(s * ((p - 1) * lq - log_bracket(p, q)))
        else:
            x = math.exp(-s * log_bracket(p, q))
        product /= (1.0 - x)
    geo = base ** (-s * p_max) / (1 - base ** (-s))
    tail = product * 2.0 * geo        # |log| tail < 2*geo once factors < 1/2
    return product, tail, len(primes)


def zeta_q(s: float, q: float, mode: str | None = None, tol: float = 1e-8,
           max_terms: int = 2_000_000) -> SeriesValue:
    """q-analog zeta function, evaluated two independent ways.

    mode="bigq" (q > 1): sum over n of {n}_q^{-s}, equal to the Euler
    product over primes of (1 - [p]_q^{-s})^{-1}.
    mode="smallq" (0 < q < 1): sum of q^{s v(n)} / {n}_q^s with Euler
    factors (1 - q^{s(p-1)} [p]_q^{-s})^{-1}.

    Returns the Euler-product value; the error bound covers both tails
    and the observed Dirichlet-vs-Euler disagreement.
    """
    if s <= 1:
        raise DivergenceError(
            f"zeta_q diverges for s <= 1 (got s={s})", threshold=1.0)
    if q <= 0 or q == 1:
        raise DomainError(f"q must be positive and != 1, got q={q}")
    inferred = "smallq" if q < 1 else "bigq"
    if mode is None:
        mode = inferred
    if mode != inferred:
        raise DomainError(
            f"mode {mode!r} does not match q={q} (expected {inferred!r})")
    small = mode == "smallq"

    target = tol / 4
    dirichlet, d_tail, n_terms = _zeta_q_dirichlet(s, q, small, target, max_terms)
    euler, e_tail, n_primes = _zeta_q_euler(s, q, small, target)
    disagreement = abs(dirichlet - euler)
    bound = d_tail + e_tail + disagreement
    return SeriesValue(
        value=euler,
        error_bound=bound,
        iterations=n_terms + n_primes,
        converged=d_tail <= tol and disagreement <= tol,
        detail={"dirichlet": dirichlet, "euler": euler,
                "dirichletTail": d_tail, "eulerTail": e_tail})


def riemann_zeta(s: float) -> float:
    return float(mpmath.zeta(s))


def partition_Z(beta: float, q: float = 1.0, tol: float = 1e-8) -> SeriesValue:
    """Partition function of the q-weighted number operator: the sum of
    {n}_q^{-beta}, which is the Riemann zeta function at q = 1."""
    if beta <= 1:
        raise DivergenceError(
            f"partition function diverges for beta <= 1 (got beta={beta})",
            threshold=1.0)
    if q == 1 or q == 1.0:
        return SeriesValue(riemann_zeta(beta), 1e-14, 0, True)
    return zeta_q(beta, q, tol=tol)


def partition_Zq_system(beta: float, q: float, tol: float = 1e-8,
                        terms: int | None = None) -> SeriesValue:
    """Partition function of the weighted tensor system: the sum over n
    of zeta_q(n beta) n^{-beta}, convergent for beta > 3/2.

    Computed as zeta(beta) plus the corrections (zeta_q(n beta) - 1) *
    n^{-beta}, which decay geometrically, so moderate truncations agree
    far below tol; `terms` pins the number of correction terms.
    """
    if beta <= 1.5:
        raise DivergenceError(
            f"the system partition function converges only for beta > 3/2 "
            f"(got beta={beta})", threshold=1.5)
    if q <= 1:
        raise DomainError(f"q must exceed 1, got q={q}")

    theta = _tail_exponent(q)

    def correction_bound(s: float) -> float:
        # zeta_q(s) - 1 <= sum_{n>=2} n^{-s*theta}
        st = s * theta
        return 2.0 ** (-st) + 2.0 ** (1 - st) / (st - 1)

    total = riemann_zeta(beta)
    bound = 1e-14
    n = 0
    while True:
        n += 1
        z = zeta_q(n * beta, q, tol=tol * 0.1)
        total += (z.value - 1.0) * n ** (-beta)
        bound += z.error_bound * n ** (-beta)
        if terms is not None:
            if n >= terms:
                break
        else:
            ratio = 2.0 ** (-theta * beta)
            tail = correction_bound((n + 1) * beta) / (1 - ratio)
            if tail < tol / 2:
                bound += tail
                break
        if n > 10_000:
            break
    return SeriesValue(total, bound, n, True)


def trace_weighted_partition(beta: float, q: float, m_max: int, k_max: int,
                             l_max: int) -> float:
    """Direct spectral trace over the truncated tensor basis (m <= m_max,
    first k_max prime factors, per-factor exponents <= l_max); increases
    monotonically in every cutoff toward partition_Zq_system."""
    primes = nth_primes(k_max)
    total = 0.0
    for m in range(1, m_max + 1):
        prod = 1.0
        for p in primes:
            ratio = math.exp(-beta * m * log_bracket(p, q))
            prod *= (1 - ratio ** (l_max + 1)) / (1 - ratio)
        total += m ** (-beta) * prod
    return total


# ---------------------------------------------------------------------------
# representations on finitely supported vectors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Embedding:
    """Choice of embedding of the abstract roots of unity into C: e(a/b)
    goes to exp(2 pi i unit a / b).  A single integer unit is coherent
    across all torsion orders; it must stay coprime to every order used.
    """

    unit: int = 1

    def root(self, r, power: int = 1) -> complex:
        if isinstance(r, QmodZ):
            num, den = r.num, r.den
        else:
            r = Fraction(r) % 1
            num, den = r.numerator, r.denominator
        if math.gcd(self.unit, den) != 1:
            raise DomainError(
                f"embedding unit {self.unit} is not coprime to the torsion "
                f"order {den}")
        k = (self.unit * num * power) % den
        return cmath.exp(2j * cmath.pi * k / den)


@dataclass(frozen=True)
class WeightSpec:
    """Weights h on the lambda part of the basis.

    kind="hom": a genuine group homomorphism h(q^e) = base^e, the form
    under which the weighted time evolution is implemented exactly.
    kind="brackets": h(lambda_k) = [p_k]_q on the generators
    lambda_k = q^{1/k} of the tensor decomposition; used for spectral
    data and partition traces (it is not multiplicative on exponents,
    since lambda_1 = lambda_2^2 would force [p_1]_q = [p_2]_q^2).
    """

    kind: str = "hom"
    base: float = 2.0
    q: float = 2.0

    @classmethod
    def homomorphic(cls, base: float) -> "WeightSpec":
        if base <= 0:
            raise DomainError("weight base must be positive")
        return cls("hom", base=base)

    @classmethod
    def prime_brackets(cls, q: float) -> "WeightSpec":
        return cls("brackets", q=q)

    def h_exp(self, e) -> float:
        """h(q^e) for an exponent e; homomorphic weights only."""
        if self.kind != "hom":
            raise DomainError(
                "bracket weights are defined on tensor generators, not on "
                "bare exponents")
        return self.base ** float(e)

    def h_generator(self, k: int, l: int = 1) -> float:
        """h(lambda_k^l) with lambda_k = q^{1/k}."""
        if self.kind == "hom":
            return self.base ** (l / k)
        return q_bracket(nth_primes(k)[-1], self.q) ** l


class StateVector:
    """Finitely supported vector over the basis N (keys int) or
    N x q-exponents (keys (int, Fraction))."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for k, c in (terms.items() if isinstance(terms, dict) else terms):
                c = complex(c)
                if c != 0:
                    clean[k] = clean.get(k, 0j) + c
        self.terms = {k: c for k, c in clean.items() if c != 0}

    @classmethod
    def basis(cls, key) -> "StateVector":
        return cls({key: 1.0 + 0j})

    def __add__(self, other: "StateVector") -> "StateVector":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0j) + c
        return StateVector(out)

    def __sub__(self, other: "StateVector") -> "StateVector":
        return self + other.scale(-1)

    def scale(self, c) -> "StateVector":
        return StateVector({k: v * c for k, v in self.terms.items()})

    def map_keys(self, fn) -> "StateVector":
        """fn(key, coeff) -> (new_key or None, new_coeff)."""
        out = {}
        for k, c in self.terms.items():
            nk, nc = fn(k, c)
            if nk is not None and nc != 0:
                out[nk] = out.get(nk, 0j) + nc
        return StateVector(out)

    def inf_distance(self, other: "StateVector") -> float:
        keys = set(self.terms) | set(other.terms)
        return max((abs(self.terms.get(k, 0j) - other.terms.get(k, 0j))
                    for k in keys), default=0.0)

    def __repr__(self):
        return f"StateVector({self.terms!r})"


def _is_pair_key(key) -> bool:
    return isinstance(key, tuple)


def apply_mu(n: int, v: StateVector) -> StateVector:
    """Isometry: eps_m -> eps_{nm}, and on pairs the exponent divides."""
    def fn(key, c):
        if _is_pair_key(key):
            m, e = key
            return (n * m, Fraction(e) / n), c
        return n * key, c
    return v.map_keys(fn)


def apply_mustar(n: int, v: StateVector) -> StateVector:
    """Adjoint: defined when n | m, else the component is annihilated."""
    def fn(key, c):
        if _is_pair_key(key):
            m, e = key
            return ((m // n, Fraction(e) * n), c) if m % n == 0 else (None, 0)
        return (key // n, c) if key % n == 0 else (None, 0)
    return v.map_keys(fn)


def apply_group_elem(x: GroupRingElem, v: StateVector,
                     emb: Embedding) -> StateVector:
    """e(r) acts diagonally by the m-th power of its root of unity;
    a q-power shifts the exponent part of the basis."""
    out = StateVector()
    for (qexp, tors), coeff in x.terms.items():
        if isinstance(coeff, (int, Fraction)):
            scalar = complex(coeff)
        else:
            raise DomainError(
                "numeric representations need numeric coefficients, got "
                f"{type(coeff).__name__}")

        def fn(key, c, qexp=qexp, tors=tors, scalar=scalar):
            if _is_pair_key(key):
                m, e = key
                return (m, Fraction(e) + qexp), c * scalar * emb.root(tors, m)
            if qexp != 0:
                raise DomainError(
                    "kind mismatch: q-power generators need the paired basis")
            return key, c * scalar * emb.root(tors, key)
        out = out + v.map_keys(fn)
    return out


def apply_weight(lambda_exp, z: complex, v: StateVector,
                 weights: WeightSpec) -> StateVector:
    """Weight operator: diagonal h(lambda)^{m z}."""
    h = weights.h_exp(lambda_exp)

    def fn(key, c):
        m = key[0] if _is_pair_key(key) else key
        return key, c * cmath.exp(m * z * math.log(h))
    return v.map_keys(fn)


def rep_apply(a: BCElem, v: StateVector, emb: Embedding | None = None,
              weights: WeightSpec | None = None) -> StateVector:
    """Apply a normal-form algebra element.  mu~_n is realized as
    n * mu_n, the standard integral-to-rational normalization."""
    emb = emb or Embedding()
    out = StateVector()
    for (A, B), x in a.terms.items():
        w = apply_mustar(B, v) if B != 1 else v
        w = apply_group_elem(x, w, emb)
        if A != 1:
            w = apply_mu(A, w).scale(A)
        out = out + w
    return out


# ---------------------------------------------------------------------------
# Hamiltonians and time-evolution covariance
# ---------------------------------------------------------------------------


def hamiltonian_eig(kind: str, m: int, lam=None, q: float = 2.0,
                    weights: WeightSpec | None = None) -> float:
    """Energy of a basis point.

    classic: log m.  qclassic: log {m}_q.  weighted: log m - m log h(lambda)
    with lambda given either as a generator power (k, l) against bracket
    weights, or as a bare exponent against homomorphic weights.
    """
    if kind == "classic":
        return math.log(m)
    if kind == "qclassic":
        return sum(a * log_bracket(p, q) for p, a in factorize(m))
    if kind == "weighted":
        if isinstance(lam, tuple):
            k, l = lam
            w = weights or WeightSpec.prime_brackets(q)
            return math.log(m) - m * l * math.log(w.h_generator(k))
        w = weights or WeightSpec.homomorphic(q)
        return math.log(m) - m * float(lam) * math.log(w.base)
    raise DomainError(f"unknown system kind {kind!r}")


def _energy(system: str, key, q: float, weights: WeightSpec) -> float:
    if system == "weighted":
        m, e = key
        return math.log(m) - m * float(e) * math.log(weights.base)
    if system == "qclassic":
        return sum(a * log_bracket(p, q) for p, a in factorize(key))
    return math.log(key)


def _apply_generator(gen, v: StateVector, emb: Embedding,
                     weights: WeightSpec) -> StateVector:
    kind, data = gen
    if kind == "mu":
        return apply_mu(data, v)
    if kind == "mustar":
        return apply_mustar(data, v)
    if kind == "elem":
        return apply_group_elem(data, v, emb)
    if kind == "omega":
        lambda_exp, z = data
        return apply_weight(lambda_exp, z, v, weights)
    raise DomainError(f"unknown generator {gen!r}")


def _time_evolved(gen, t: float, system: str, q: float, v: StateVector,
                  emb: Embedding, weights: WeightSpec) -> StateVector:
    """sigma_t(generator) applied to v."""
    kind, data = gen
    out = _apply_generator(gen, v, emb, weights)
    if kind == "mu":
        if system == "qclassic":
            phase = cmath.exp(1j * t * sum(a * log_bracket(p, q)
                                           for p, a in factorize(data)))
        else:
            phase = data ** (1j * t)
        return out.scale(phase)
    if kind == "mustar":
        if system == "qclassic":
            phase = cmath.exp(-1j * t * sum(a * log_bracket(p, q)
                                            for p, a in factorize(data)))
        else:
            phase = data ** (-1j * t)
        return out.scale(phase)
    if kind == "elem":
        if system == "weighted":
            # sigma_t(E(r, r')) = omega_{-it}(q^r) E(r, r'): each component
            # at (m, .) picks up h(q^r)^{-i m t} for its term's q-shift r
            result = StateVector()
            for (qexp, tors), coeff in data.terms.items():
                single = GroupRingElem({(qexp, tors): coeff}, data.ring)
                part = apply_group_elem(single, v, emb)
                lh = math.log(weights.h_exp(qexp))

                def fn(key, c, lh=lh):
                    m = key[0]
                    return key, c * cmath.exp(-1j * m * t * lh)
                result = result + part.map_keys(fn)
            return result
        return out
    if kind == "omega":
        return out
    raise DomainError(f"unknown generator {gen!r}")


@dataclass(frozen=True)
class CovarianceReport:
    generator: str
    t: float
    samples: int
    max_deviation: float
    passed: bool

    def to_json(self):
        return {"generator": self.generator, "t": self.t,
                "samples": self.samples, "maxDeviation": self.max_deviation,
                "pass": self.passed}


def default_basis(system: str, count: int) -> list:
    if system == "weighted":
        exps = [Fraction(0), Fraction(1), Fraction(1, 2), Fraction(1, 3),
                Fraction(2, 3), Fraction(3, 2), Fraction(5, 6), Fraction(2)]
        return [(m, exps[(m - 1) % len(exps)]) for m in range(1, count + 1)]
    return list(range(1, count + 1))


def covariance_check(gen, t: float, system: str = "classic", q: float = 2.0,
                     emb: Embedding | None = None,
                     weights: WeightSpec | None = None,
                     samples: int = 64, tol: float = 1e-9) -> CovarianceReport:
    """Compare conjugation by the diagonal time evolution against the
    algebraic time evolution of a generator on sampled basis vectors."""
    emb = emb or Embedding()
    weights = weights or WeightSpec.homomorphic(q)
    basis = default_basis(system, samples)
    worst = 0.0
    for key in basis:
        v = StateVector.basis(key)
        phase_in = cmath.exp(-1j * t * _energy(system, key, q, weights))
        moved = _apply_generator(gen, v.scale(phase_in), emb, weights)

        def fn(k, c):
            return k, c * cmath.exp(1j * t * _energy(system, k, q, weights))
        lhs = moved.map_keys(fn)
        rhs = _time_evolved(gen, t, system, q, v, emb, weights)
        worst = max(worst, lhs.inf_distance(rhs))
    name = f"{gen[0]}_{gen[1]}" if gen[0] in ("mu", "mustar") else gen[0]
    return CovarianceReport(name, t, len(basis), worst, worst < tol)
