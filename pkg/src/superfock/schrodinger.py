"""The module W: polynomials times exp(-c x_0), modulo the ideal of R^2.

A ``WElement`` stores the exponential rate c > 0 and a reduced polynomial q,
and stands for q(x) exp(-c|X|) restricted to x_0 > 0, where the radial
superfunction |X| coincides with x_0 modulo <R^2>.  All operators act through
the representative q exp(-c x_0): the variable-0 derivation picks up the
extra -c term, everything else is the plain polynomial calculus, and results
are reduced at the end.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .algebra import (Signature, SuperPolynomial, merge_odd, theta2)
from .liealg import TKKElement
from .quotient import reduce_poly
from .scalars import HALF, I, QQi


class WElement:
    """q(x) * exp(-c x_0) with q in normal form."""

    __slots__ = ("rate", "poly")

    def __init__(self, rate: Fraction, poly: SuperPolynomial):
        self.rate = Fraction(rate)
        self.poly = poly

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __add__(self, other: "WElement") -> "WElement":
        if self.rate != other.rate:
            raise ValueError("cannot add different exponential rates")
        return WElement(self.rate, self.poly + other.poly)

    def __sub__(self, other: "WElement") -> "WElement":
        return self + other.scale(-1)

    def scale(self, c) -> "WElement":
        return WElement(self.rate, self.poly.scale(c))

    def conjugate(self) -> "WElement":
        return WElement(self.rate, self.poly.conjugate())

    def __eq__(self, other) -> bool:
        return (isinstance(other, WElement) and self.rate == other.rate
                and self.poly == other.poly)

    def __str__(self) -> str:
        return f"({self.poly})*exp(-{self.rate}*x0)"

    __repr__ = __str__


def make_w(q: SuperPolynomial, rate) -> WElement:
    rate = Fraction(rate)
    if rate <= 0:
        raise ValueError("exponential rate must be positive")
    return WElement(rate, reduce_poly(q))


def lowest_vector(sig: Signature) -> WElement:
    return make_w(SuperPolynomial.one(sig), 2)


# -- operators on q exp(-c x_0), acting on the plain polynomial part ---------


def dx_upper(p: SuperPolynomial, i: int, c: Fraction) -> SuperPolynomial:
    out = p.d_upper(i)
    if i == 0:
        out = out - p.scale(QQi.coerce(c))
    return out


def dx_lower(p: SuperPolynomial, j: int, c: Fraction) -> SuperPolynomial:
    out = SuperPolynomial.zero(p.sig)
    for i, b in p.sig.beta_rows[j]:
        out = out + dx_upper(p, i, c).scale(b)
    return out


def euler_w(p: SuperPolynomial, c: Fraction) -> SuperPolynomial:
    out = SuperPolynomial.zero(p.sig)
    for i in range(p.sig.nvars):
        out = out + dx_upper(p, i, c).mul_var(i)
    return out


def laplacian_w(p: SuperPolynomial, c: Fraction) -> SuperPolynomial:
    out = SuperPolynomial.zero(p.sig)
    for i in range(p.sig.nvars):
        out = out + dx_lower(dx_upper(p, i, c), i, c)
    return out


def angular_w(i: int, j: int, p: SuperPolynomial, c: Fraction) -> SuperPolynomial:
    sig = p.sig
    if i == j and sig.parity(i) == 0:
        raise ValueError("L_ii is only defined for odd indices")
    left = dx_lower(p, j, c).mul_var(i)
    right = dx_lower(p, i, c).mul_var(j)
    if sig.parity(i) and sig.parity(j):
        return left + right
    return left - right


def bessel_w(lam, k: int, p: SuperPolynomial, c: Fraction) -> SuperPolynomial:
    lam = QQi.coerce(lam)
    t = dx_lower(p, k, c)
    return t.scale(-lam) + euler_w(t, c).scale(2) - laplacian_w(p, c).mul_var(k)


def bessel_mod_w(k: int, p: SuperPolynomial, c: Fraction) -> SuperPolynomial:
    res = bessel_w(QQi(2 - p.sig.M), k, p, c)
    return -res if k == 0 else res


_OPS = {
    "d_upper": lambda p, c, i: dx_upper(p, i, c),
    "d_lower": lambda p, c, i: dx_lower(p, i, c),
    "E": lambda p, c: euler_w(p, c),
    "Delta": lambda p, c: laplacian_w(p, c),
    "L": lambda p, c, i, j: angular_w(i, j, p, c),
    "bessel": lambda p, c, lam, k: bessel_w(lam, k, p, c),
    "bessel_mod": lambda p, c, k: bessel_mod_w(k, p, c),
    "mul": lambda p, c, i: p.mul_var(i),
}


def diffop_on_w(descriptor: tuple, f: WElement) -> WElement:
    """Apply a first-order operator descriptor, e.g. ("L", 0, 1) or ("bessel_mod", 2)."""
    name, *args = descriptor
    try:
        fn = _OPS[name]
    except KeyError:
        raise ValueError(f"unknown operator {name!r}") from None
    return WElement(f.rate, reduce_poly(fn(f.poly, f.rate, *args)))


def pi_apply(X: TKKElement, f: WElement) -> WElement:
    """Schrodinger action of a TKK element on W (defined at rate 2)."""
    if f.rate != 2:
        raise ValueError("the Schrodinger action is defined at rate 2")
    tkk = X.tkk
    sig = f.poly.sig
    if (tkk.sig.m, tkk.sig.n) != (sig.m, sig.n):
        raise ValueError("TKK element and W element have different shapes")
    q = f.poly
    c = f.rate
    out = SuperPolynomial.zero(sig)
    M = sig.M
    for idx, coeff in X.coeffs.items():
        kind, *rest = tkk.basis[idx]
        if kind == "minus":
            term = q.mul_var(rest[0]).scale(-2 * I)
        elif kind == "L":
            l = rest[0]
            if l == 0:
                term = q.scale(QQi(2 - M, 0, 2)) - euler_w(q, c)
            else:
                term = dx_lower(q, 0, c).mul_var(l) - dx_lower(q, l, c).mul_var(0)
        elif kind == "inn":
            term = angular_w(rest[0], rest[1], q, c)
        else:  # plus
            term = bessel_mod_w(rest[0], q, c).scale(-I * HALF)
        out = out + term.scale(coeff)
    return WElement(c, reduce_poly(out))


# -- radial superfunctions ---------------------------------------------------


def radial_expand(f: SuperPolynomial, derivatives) -> SuperPolynomial:
    """Compose a scalar function with a superfunction via its Taylor expansion.

    ``derivatives[j]`` must be the j-th derivative of the base function
    evaluated at the body of f (the part free of odd variables), given as a
    SuperPolynomial or scalar.  The nilpotent remainder of f drives the finite
    Taylor sum; the table must cover every nonvanishing power.
    """
    sig = f.sig
    body = SuperPolynomial(sig, {k: c for k, c in f.terms.items() if not k[1]})
    nil = f - body
    out = SuperPolynomial.zero(sig)
    power = SuperPolynomial.one(sig)
    fact = 1
    j = 0
    while True:
        if j >= len(derivatives):
            if power.is_zero():
                break
            raise ValueError(f"derivative table too short: need order {j}")
        d = derivatives[j]
        if not isinstance(d, SuperPolynomial):
            d = SuperPolynomial.constant(sig, d)
        out = out + (power * d).scale(Fraction(1, fact))
        power = power * nil
        if power.is_zero():
            break
        j += 1
        fact *= j
    return out


class RadialPower:
    """Finite sums of u^(e/2) times odd monomials, u a positive even body.

    Used to realize |X| = sqrt((x_0^2 + r^2)/2) exactly: with u the body
    (x_0^2 + s^2)/2 the square root has a terminating Taylor expansion in the
    nilpotent odd part, and squaring back is an identity this ring can verify.
    """

    __slots__ = ("sig", "terms")

    def __init__(self, sig: Signature, terms: dict | None = None):
        self.sig = sig
        self.terms = {}
        if terms:
            for k, c in terms.items():
                c = QQi.coerce(c)
                if not c.is_zero():
                    self.terms[k] = c

    @classmethod
    def u_power(cls, sig: Signature, half_exp: int, coeff=1) -> "RadialPower":
        return cls(sig, {(half_exp, ()): coeff})

    @classmethod
    def from_odd_poly(cls, p: SuperPolynomial) -> "RadialPower":
        terms = {}
        for (ev, odd), c in p.terms.items():
            if any(ev):
                raise ValueError("expected a purely odd polynomial")
            terms[(0, odd)] = c
        return cls(p.sig, terms)

    def __add__(self, other: "RadialPower") -> "RadialPower":
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, QQi(0)) + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return RadialPower(self.sig, out)

    def __sub__(self, other: "RadialPower") -> "RadialPower":
        return self + other.scale(-1)

    def scale(self, c) -> "RadialPower":
        c = QQi.coerce(c)
        return RadialPower(self.sig, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other: "RadialPower") -> "RadialPower":
        out: dict = {}
        for (e1, o1), c1 in self.terms.items():
            for (e2, o2), c2 in other.terms.items():
                merged = merge_odd(o1, o2)
                if merged is None:
                    continue
                sign, odd = merged
                key = (e1 + e2, odd)
                cur = out.get(key, QQi(0)) + c1 * c2 * sign
                if cur.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = cur
        return RadialPower(self.sig, out)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (isinstance(other, RadialPower) and self.sig == other.sig
                and self.terms == other.terms)


@lru_cache(maxsize=None)
def abs_X(sig: Signature) -> RadialPower:
    """|X| as a radial superfunction: sqrt at the body u, Taylor in theta^2/2."""
    nil = RadialPower.from_odd_poly(theta2(sig).scale(Fraction(1, 2)))
    out = RadialPower(sig)
    power = RadialPower.u_power(sig, 0)
    coeff = Fraction(1)
    fact = 1
    j = 0
    while True:
        # coeff = j-th derivative prefactor of sqrt: (1/2)(1/2-1)...(1/2-j+1)
        out = out + power.scale(QQi.coerce(coeff / fact)) * RadialPower.u_power(sig, 1 - 2 * j)
        power = power * nil
        if power.is_zero():
            return out
        coeff *= Fraction(1, 2) - j
        j += 1
        fact *= j
