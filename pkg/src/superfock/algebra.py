"""Supercommutative polynomial algebra over C^{m|2n} with an orthosymplectic metric.

Variables are indexed 0 .. m+2n-1; the first m are commuting ("even"), the
last 2n anticommuting ("odd").  A monomial is a pair (even exponent tuple,
strictly increasing tuple of odd indices); every sign is produced by counting
transpositions needed to reach that canonical order.  Coefficients are exact
Gaussian rationals.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import lru_cache
from math import comb

from . import linalg
from .scalars import I, QQi

MonKey = tuple[tuple[int, ...], tuple[int, ...]]


def standard_metric(m: int, n: int) -> tuple[tuple[QQi, ...], ...]:
    """diag(-1, I_{m-1}) on the even block, [[0, -I_n], [I_n, 0]] on the odd block."""
    size = m + 2 * n
    rows = [[QQi(0)] * size for _ in range(size)]
    rows[0][0] = QQi(-1)
    for i in range(1, m):
        rows[i][i] = QQi(1)
    for i in range(n):
        rows[m + i][m + n + i] = QQi(-1)
        rows[m + n + i][m + i] = QQi(1)
    return tuple(tuple(r) for r in rows)


class Signature:
    """Variable layout (m even, 2n odd) plus the metric and its exact inverse."""

    __slots__ = ("m", "n", "varset", "beta", "beta_inv", "nvars",
                 "beta_rows", "beta_inv_pairs", "_hash")

    def __init__(self, m: int, n: int, varset: str = "x", beta=None):
        if m < 2:
            raise ValueError("need at least two even variables")
        if n < 0:
            raise ValueError("n must be nonnegative")
        if varset not in ("x", "z", "w", "y"):
            raise ValueError(f"unknown variable set {varset!r}")
        self.m = m
        self.n = n
        self.varset = varset
        self.nvars = m + 2 * n
        if beta is None:
            beta = standard_metric(m, n)
        else:
            beta = tuple(tuple(QQi.coerce(v) for v in row) for row in beta)
            if len(beta) != self.nvars or any(len(r) != self.nvars for r in beta):
                raise ValueError("metric has wrong shape")
        for i in range(self.nvars):
            for j in range(self.nvars):
                pi, pj = self.parity(i), self.parity(j)
                if pi != pj and beta[i][j]:
                    raise ValueError("metric must be even")
                sym = beta[j][i] if pi * pj == 0 else -beta[j][i]
                if beta[i][j] != sym:
                    raise ValueError("metric must be supersymmetric")
        self.beta = beta
        self.beta_inv = tuple(tuple(r) for r in linalg.inv_dense([list(r) for r in beta]))
        self.beta_rows = tuple(
            tuple((i, row[i]) for i in range(self.nvars) if row[i]) for row in self.beta
        )
        self.beta_inv_pairs = tuple(
            (i, j, self.beta_inv[i][j])
            for i in range(self.nvars)
            for j in range(self.nvars)
            if self.beta_inv[i][j]
        )
        self._hash = hash((m, n, varset, beta))

    @property
    def M(self) -> int:
        """Superdimension m - 2n."""
        return self.m - 2 * self.n

    def parity(self, i: int) -> int:
        return 0 if i < self.m else 1

    def var_name(self, i: int) -> str:
        return f"{self.varset}{i}" if i < self.m else f"t{i - self.m + 1}"

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return (isinstance(other, Signature) and self.m == other.m and self.n == other.n
                and self.varset == other.varset and self.beta == other.beta)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Signature(m={self.m}, n={self.n}, varset={self.varset!r})"


def merge_odd(a: tuple[int, ...], b: tuple[int, ...]):
    """Merge two increasing odd-index tuples; returns (sign, merged) or None on collision."""
    if not a:
        return 1, b
    if not b:
        return 1, a
    out = []
    i = j = 0
    inversions = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            return None
        if a[i] < b[j]:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
            inversions += len(a) - i
    out.extend(a[i:])
    out.extend(b[j:])
    return (-1 if inversions & 1 else 1), tuple(out)


def _acc(terms: dict, key, val: QQi):
    cur = terms.get(key)
    if cur is None:
        if not val.is_zero():
            terms[key] = val
    else:
        s = cur + val
        if s.is_zero():
            del terms[key]
        else:
            terms[key] = s


class SuperPolynomial:
    """Finitely supported map (even exponents, odd subset) -> QQi."""

    __slots__ = ("sig", "terms")

    def __init__(self, sig: Signature, terms: dict[MonKey, QQi] | None = None):
        self.sig = sig
        self.terms = {}
        if terms:
            for k, c in terms.items():
                c = QQi.coerce(c)
                if not c.is_zero():
                    self.terms[k] = c

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, sig: Signature) -> "SuperPolynomial":
        return cls(sig)

    @classmethod
    def constant(cls, sig: Signature, c) -> "SuperPolynomial":
        return cls(sig, {((0,) * sig.m, ()): QQi.coerce(c)})

    @classmethod
    def one(cls, sig: Signature) -> "SuperPolynomial":
        return cls.constant(sig, 1)

    @classmethod
    def variable(cls, sig: Signature, i: int, coeff=1) -> "SuperPolynomial":
        if not 0 <= i < sig.nvars:
            raise IndexError(f"variable index {i} out of range")
        if i < sig.m:
            ev = tuple(1 if j == i else 0 for j in range(sig.m))
            return cls(sig, {(ev, ()): QQi.coerce(coeff)})
        return cls(sig, {((0,) * sig.m, (i,)): QQi.coerce(coeff)})

    @classmethod
    def monomial(cls, sig: Signature, key: MonKey, coeff=1) -> "SuperPolynomial":
        return cls(sig, {key: QQi.coerce(coeff)})

    # -- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> QQi:
        return self.terms.get(((0,) * self.sig.m, ()), QQi(0))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(ev) + len(odd) for ev, odd in self.terms)

    def degree_part(self, k: int) -> "SuperPolynomial":
        return SuperPolynomial(self.sig, {key: c for key, c in self.terms.items()
                                          if sum(key[0]) + len(key[1]) == k})

    def homogeneous_components(self) -> dict[int, "SuperPolynomial"]:
        out: dict[int, dict] = {}
        for key, c in self.terms.items():
            out.setdefault(sum(key[0]) + len(key[1]), {})[key] = c
        return {k: SuperPolynomial(self.sig, t) for k, t in sorted(out.items())}

    def parity(self) -> int:
        """Z2-parity; raises on inhomogeneous input."""
        ps = {len(odd) & 1 for _, odd in self.terms}
        if len(ps) > 1:
            raise ValueError("polynomial has mixed parity")
        return ps.pop() if ps else 0

    # -- ring operations -------------------------------------------------

    def _check(self, other: "SuperPolynomial"):
        if self.sig != other.sig:
            raise ValueError("signature mismatch")

    def __add__(self, other: "SuperPolynomial") -> "SuperPolynomial":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        p = SuperPolynomial.__new__(SuperPolynomial)
        p.sig, p.terms = self.sig, out
        return p

    def __neg__(self) -> "SuperPolynomial":
        p = SuperPolynomial.__new__(SuperPolynomial)
        p.sig = self.sig
        p.terms = {k: -c for k, c in self.terms.items()}
        return p

    def __sub__(self, other: "SuperPolynomial") -> "SuperPolynomial":
        return self + (-other)

    def scale(self, c) -> "SuperPolynomial":
        c = QQi.coerce(c)
        if c.is_zero():
            return SuperPolynomial(self.sig)
        p = SuperPolynomial.__new__(SuperPolynomial)
        p.sig = self.sig
        p.terms = {k: v * c for k, v in self.terms.items()}
        return p

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QQi)):
            return self.scale(other)
        self._check(other)
        out: dict[MonKey, QQi] = {}
        for (ev1, od1), c1 in self.terms.items():
            for (ev2, od2), c2 in other.terms.items():
                merged = merge_odd(od1, od2)
                if merged is None:
                    continue
                sign, odd = merged
                ev = tuple(a + b for a, b in zip(ev1, ev2))
                c = c1 * c2
                _acc(out, (ev, odd), -c if sign < 0 else c)
        p = SuperPolynomial.__new__(SuperPolynomial)
        p.sig, p.terms = self.sig, out
        return p

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, QQi)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "SuperPolynomial":
        if k < 0:
            raise ValueError("negative power")
        out = SuperPolynomial.one(self.sig)
        for _ in range(k):
            out = out * self
        return out

    def conjugate(self) -> "SuperPolynomial":
        p = SuperPolynomial.__new__(SuperPolynomial)
        p.sig = self.sig
        p.terms = {k: c.conjugate() for k, c in self.terms.items()}
        return p

    def mul_var(self, i: int) -> "SuperPolynomial":
        """Left multiplication by variable i."""
        sig = self.sig
        out: dict[MonKey, QQi] = {}
        if i < sig.m:
            for (ev, odd), c in self.terms.items():
                ev2 = ev[:i] + (ev[i] + 1,) + ev[i + 1:]
                out[(ev2, odd)] = c
        else:
            for (ev, odd), c in self.terms.items():
                if i in odd:
                    continue
                pos = sum(1 for o in odd if o < i)
                odd2 = tuple(sorted(odd + (i,)))
                out[(ev, odd2)] = -c if pos & 1 else c
        p = SuperPolynomial.__new__(SuperPolynomial)
        p.sig, p.terms = sig, out
        return p

    # -- derivations -----------------------------------------------------

    def d_upper(self, i: int) -> "SuperPolynomial":
        """The derivation with d_upper(x_j) = delta_ij, acting from the left."""
        sig = self.sig
        out: dict[MonKey, QQi] = {}
        if i < sig.m:
            for (ev, odd), c in self.terms.items():
                e = ev[i]
                if e:
                    ev2 = ev[:i] + (e - 1,) + ev[i + 1:]
                    _acc(out, (ev2, odd), c * e)
        else:
            for (ev, odd), c in self.terms.items():
                if i not in odd:
                    continue
                pos = odd.index(i)
                odd2 = odd[:pos] + odd[pos + 1:]
                _acc(out, (ev, odd2), -c if pos & 1 else c)
        p = SuperPolynomial.__new__(SuperPolynomial)
        p.sig, p.terms = sig, out
        return p

    def d_lower(self, j: int) -> "SuperPolynomial":
        """Metric-lowered derivation: sum_i d_upper(i) * beta[j][i]."""
        out = SuperPolynomial.zero(self.sig)
        for i, b in self.sig.beta_rows[j]:
            out = out + self.d_upper(i).scale(b)
        return out

    # -- comparison / rendering ------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        return self.sig == other.sig and self.terms == other.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        sig = self.sig
        parts = []
        for (ev, odd) in sorted(self.terms, key=lambda k: (sum(k[0]) + len(k[1]), k[0], k[1])):
            c = self.terms[(ev, odd)]
            factors = [str(c)]
            for i, e in enumerate(ev):
                if e == 1:
                    factors.append(sig.var_name(i))
                elif e > 1:
                    factors.append(f"{sig.var_name(i)}^{e}")
            for o in odd:
                factors.append(sig.var_name(o))
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"SuperPolynomial({self})"


# -- distinguished elements ------------------------------------------------


@lru_cache(maxsize=None)
def R2(sig: Signature) -> SuperPolynomial:
    """Square of the radial coordinate, sum beta^{ij} x_i x_j."""
    out: dict[MonKey, QQi] = {}
    zero_ev = (0,) * sig.m
    for i, j, b in sig.beta_inv_pairs:
        if i < sig.m and j < sig.m:
            ev = list(zero_ev)
            ev[i] += 1
            ev[j] += 1
            _acc(out, (tuple(ev), ()), b)
        elif i >= sig.m and j >= sig.m:
            if i == j:
                continue
            sign = 1 if i < j else -1
            odd = (min(i, j), max(i, j))
            _acc(out, (zero_ev, odd), b * sign)
        else:
            raise AssertionError("metric mixes parities")
    return SuperPolynomial(sig, out)


@lru_cache(maxsize=None)
def r2_small(sig: Signature) -> SuperPolynomial:
    """r^2 = sum_{i>=1} x^i x_i, so that R^2 = -x_0^2 + r^2."""
    x0sq = SuperPolynomial.monomial(sig, ((2,) + (0,) * (sig.m - 1), ()))
    return R2(sig) + x0sq


@lru_cache(maxsize=None)
def theta2(sig: Signature) -> SuperPolynomial:
    """Odd part of r^2: sum over odd indices of beta^{ij} x_i x_j."""
    out: dict[MonKey, QQi] = {}
    zero_ev = (0,) * sig.m
    for i, j, b in sig.beta_inv_pairs:
        if i < sig.m or j < sig.m or i == j:
            continue
        sign = 1 if i < j else -1
        _acc(out, (zero_ev, (min(i, j), max(i, j))), b * sign)
    return SuperPolynomial(sig, out)


# -- operators ---------------------------------------------------------------


def euler(p: SuperPolynomial) -> SuperPolynomial:
    """Euler operator; multiplies each homogeneous term by its degree."""
    out = {}
    for key, c in p.terms.items():
        k = sum(key[0]) + len(key[1])
        if k:
            out[key] = c * k
    return SuperPolynomial(p.sig, out)


def laplacian(p: SuperPolynomial) -> SuperPolynomial:
    """Metric Laplacian sum_i d_lower(i) d_upper(i)."""
    out = SuperPolynomial.zero(p.sig)
    for i in range(p.sig.nvars):
        out = out + p.d_upper(i).d_lower(i)
    return out


def sl2_ops(p: SuperPolynomial):
    """(R^2 * p, E p, Delta p)."""
    return R2(p.sig) * p, euler(p), laplacian(p)


def angular_L(i: int, j: int, p: SuperPolynomial) -> SuperPolynomial:
    """L_ij = x_i d_lower(j) - (-1)^{|i||j|} x_j d_lower(i)."""
    sig = p.sig
    if i == j and sig.parity(i) == 0:
        raise ValueError("L_ii is only defined for odd indices")
    left = p.d_lower(j).mul_var(i)
    right = p.d_lower(i).mul_var(j)
    if sig.parity(i) and sig.parity(j):
        return left + right
    return left - right


def bessel(lam, k: int, p: SuperPolynomial) -> SuperPolynomial:
    """Bessel operator ((-lambda + 2E) d_lower(k) - x_k Delta) p."""
    lam = QQi.coerce(lam)
    t = p.d_lower(k)
    return t.scale(-lam) + euler(t).scale(2) - laplacian(p).mul_var(k)


def bessel_modified(k: int, p: SuperPolynomial) -> SuperPolynomial:
    """Tangential-parameter Bessel operator with the sign flipped at index 0."""
    res = bessel(QQi(2 - p.sig.M), k, p)
    return -res if k == 0 else res


# -- enumeration and dimensions ----------------------------------------------


def dim_P(m: int, n: int, k: int) -> int:
    """Dimension of the degree-k slice of the polynomial algebra on C^{m|2n}."""
    if k < 0:
        return 0
    return sum(comb(2 * n, i) * comb(k - i + m - 1, m - 1) for i in range(min(k, 2 * n) + 1))


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def monomial_keys(sig: Signature, k: int) -> tuple[MonKey, ...]:
    """All degree-k monomial keys, in a fixed deterministic order."""
    out = []
    for j in range(min(2 * sig.n, k) + 1):
        for odd in itertools.combinations(range(sig.m, sig.nvars), j):
            for ev in _compositions(k - j, sig.m):
                out.append((ev, odd))
    out.sort()
    return tuple(out)


def monomials_up_to(sig: Signature, k: int) -> list[MonKey]:
    keys: list[MonKey] = []
    for d in range(k + 1):
        keys.extend(monomial_keys(sig, d))
    return keys


def random_polynomial(sig: Signature, degree: int, rng: random.Random,
                      nterms: int = 4) -> SuperPolynomial:
    """Seeded sample with coefficients from {1, -1, 1/2, -1/2, i, -i}."""
    coeffs = [QQi(1), QQi(-1), QQi(1, 0, 2), QQi(-1, 0, 2), I, -I]
    terms: dict[MonKey, QQi] = {}
    for _ in range(nterms):
        d = rng.randrange(degree + 1)
        keys = monomial_keys(sig, d)
        _acc(terms, keys[rng.randrange(len(keys))], rng.choice(coeffs))
    return SuperPolynomial(sig, terms)
