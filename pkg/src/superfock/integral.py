"""Exact evaluation of the W-integral and the sesquilinear form on W.

The integrand q(x) exp(-c x_0) is rewritten in ray coordinates x_i = omega_i s
(i = 1..m-1), pushed through the twisting morphism phi#, multiplied by the
finite odd expansions of the two square-root weight factors, and restricted to
s = x_0 = rho.  What remains factors into a Berezin integral (coefficient of
the top odd monomial), closed-form monomial moments over the unit sphere, and
Gamma-type radial integrals; everything is exact in the pi-graded ring.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .algebra import Signature, SuperPolynomial, merge_odd, theta2
from .scalars import PiScalar, QQi, factorial_fraction, gamma_half, poch
from .schrodinger import WElement


class DivergenceError(ArithmeticError):
    """A radial term rho^N exp(-c rho) with N < 0 survived cancellation."""


def sphere_moment(alpha: tuple[int, ...], m: int) -> PiScalar:
    """Moment of omega^alpha over the unit sphere in R^{m-1} (surface measure)."""
    if m < 2:
        raise ValueError("need m >= 2")
    if len(alpha) != m - 1:
        raise ValueError("alpha must have length m-1")
    if any(a % 2 for a in alpha):
        return PiScalar()
    num = PiScalar.of(2)
    for a in alpha:
        num = num * gamma_half(a + 1)
    return num / gamma_half(sum(alpha) + m - 1)


def radial_integral(N: int, c: Fraction) -> Fraction:
    """Integral of rho^N exp(-c rho) over (0, inf): N! / c^(N+1)."""
    c = Fraction(c)
    if c <= 0:
        raise ValueError("rate must be positive")
    if N < 0:
        raise DivergenceError(f"divergent radial term rho^{N} exp(-{c} rho)")
    return factorial_fraction(N) / c ** (N + 1)


def berezin(p: SuperPolynomial) -> SuperPolynomial:
    """Iterated odd derivative d^{m+2n-1} ... d^{m}, applied right to left."""
    out = p
    for i in range(p.sig.m, p.sig.nvars):
        out = out.d_upper(i)
    return out


@lru_cache(maxsize=None)
def _theta_powers(sig: Signature):
    """theta^{2j} for j = 0..n as odd polynomials (term dicts on odd keys)."""
    out = [SuperPolynomial.one(sig)]
    t2 = theta2(sig)
    for _ in range(sig.n):
        out.append(out[-1] * t2)
    return [{odd: c for (_, odd), c in p.terms.items()} for p in out]


class RadialSuperfunction:
    """Sums of coeff * x_0^a s^b omega^alpha theta_J exp(-c x_0), a and b Laurent."""

    __slots__ = ("sig", "rate", "terms")

    def __init__(self, sig: Signature, rate: Fraction, terms=None):
        self.sig = sig
        self.rate = Fraction(rate)
        self.terms: dict = {}
        if terms:
            for k, c in terms.items():
                if not c.is_zero():
                    self.terms[k] = c

    @classmethod
    def from_poly(cls, p: SuperPolynomial, rate) -> "RadialSuperfunction":
        terms = {}
        for (ev, odd), c in p.terms.items():
            alpha = ev[1:]
            key = (ev[0], sum(alpha), alpha, odd)
            cur = terms.get(key, QQi(0)) + c
            if cur.is_zero():
                terms.pop(key, None)
            else:
                terms[key] = cur
        return cls(p.sig, rate, terms)

    def _acc(self, out, key, val):
        cur = out.get(key, QQi(0)) + val
        if cur.is_zero():
            out.pop(key, None)
        else:
            out[key] = cur

    def _mixing_step(self) -> "RadialSuperfunction":
        """One application of (1/(4 x_0)) d_{x_0} - (1/(4 s)) d_s."""
        c = QQi.coerce(self.rate)
        quarter = QQi(1, 0, 4)
        out: dict = {}
        for (a, b, alpha, odd), v in self.terms.items():
            if a:
                self._acc(out, (a - 2, b, alpha, odd), v * a * quarter)
            self._acc(out, (a - 1, b, alpha, odd), -v * c * quarter)
            if b:
                self._acc(out, (a, b - 2, alpha, odd), -v * b * quarter)
        return RadialSuperfunction(self.sig, self.rate, out)

    def _mul_theta_power(self, j: int, scalar: QQi) -> dict:
        """Terms of self multiplied by scalar * theta^{2j}."""
        theta = _theta_powers(self.sig)[j]
        out: dict = {}
        for (a, b, alpha, odd), v in self.terms.items():
            for todd, tc in theta.items():
                merged = merge_odd(todd, odd)
                if merged is None:
                    continue
                sign, modd = merged
                self._acc(out, (a, b, alpha, modd), v * tc * scalar * sign)
        return out

    def phi_sharp(self) -> "RadialSuperfunction":
        """sum_j (theta^{2j}/j!) D^j, D the mixing derivation above."""
        sig = self.sig
        out: dict = {}
        cur = self
        fact = 1
        for j in range(sig.n + 1):
            if j:
                fact *= j
                cur = cur._mixing_step()
            part = cur._mul_theta_power(j, QQi(1, 0, fact))
            for k, v in part.items():
                self._acc(out, k, v)
        return RadialSuperfunction(sig, self.rate, out)

    def mul_weights(self) -> "RadialSuperfunction":
        """Multiply by (1+eta)^{m-3} (1+xi)^{-1}, expanded in theta powers."""
        sig = self.sig
        n, m = sig.n, sig.m
        eta = [QQi.coerce(poch(Fraction(3 - m, 2), j) / (factorial_fraction(j) * 2 ** j))
               for j in range(n + 1)]
        xi = [QQi.coerce((-1) ** j * poch(Fraction(1, 2), j)
                         / (factorial_fraction(j) * 2 ** j)) for j in range(n + 1)]
        out: dict = {}
        for j2 in range(n + 1):
            for j3 in range(n + 1):
                if j2 + j3 > n:
                    continue
                scal = eta[j2] * xi[j3]
                if scal.is_zero():
                    continue
                shifted = RadialSuperfunction(
                    sig, self.rate,
                    {(a - 2 * j3, b - 2 * j2, alpha, odd): v
                     for (a, b, alpha, odd), v in self.terms.items()})
                for k, v in shifted._mul_theta_power(j2 + j3, scal).items():
                    self._acc(out, k, v)
        return RadialSuperfunction(sig, self.rate, out)

    def __mul__(self, other: "RadialSuperfunction") -> "RadialSuperfunction":
        out: dict = {}
        for (a1, b1, al1, o1), c1 in self.terms.items():
            for (a2, b2, al2, o2), c2 in other.terms.items():
                merged = merge_odd(o1, o2)
                if merged is None:
                    continue
                sign, odd = merged
                alpha = tuple(x + y for x, y in zip(al1, al2))
                self._acc(out, (a1 + a2, b1 + b2, alpha, odd), c1 * c2 * sign)
        return RadialSuperfunction(self.sig, self.rate + other.rate, out)

    def restrict_to_ray(self) -> dict:
        """Set s = x_0 = rho and include rho^{m-3}: keys (N, alpha, odd)."""
        out: dict = {}
        shift = self.sig.m - 3
        for (a, b, alpha, odd), v in self.terms.items():
            self._acc(out, (a + b + shift, alpha, odd), v)
        return out

    def __eq__(self, other) -> bool:
        return (isinstance(other, RadialSuperfunction) and self.sig == other.sig
                and self.rate == other.rate and self.terms == other.terms)


def _full_odd(sig: Signature) -> tuple[int, ...]:
    return tuple(range(sig.m, sig.nvars))


@lru_cache(maxsize=None)
def _monomial_integral(sig: Signature, key, rate: Fraction) -> PiScalar:
    mono = SuperPolynomial.monomial(sig, key)
    return _integral_direct(mono, rate)


def unnormalized_integral(p: SuperPolynomial, rate, trace: list | None = None) -> PiScalar:
    """The raw integral of p exp(-rate x_0), before gamma normalization."""
    if trace is not None:
        return _integral_direct(p, rate, trace)
    rate = Fraction(rate)
    total = PiScalar()
    for key, c in p.terms.items():
        total = total + PiScalar.of(c) * _monomial_integral(p.sig, key, rate)
    return total


def _integral_direct(p: SuperPolynomial, rate, trace: list | None = None) -> PiScalar:
    sig = p.sig
    rs = RadialSuperfunction.from_poly(p, rate).phi_sharp().mul_weights()
    ray = rs.restrict_to_ray()
    full = _full_odd(sig)
    total = PiScalar()
    c = Fraction(rate)
    for (N, alpha, odd), v in sorted(ray.items()):
        if odd != full:
            continue
        moment = sphere_moment(alpha, sig.m)
        if moment.is_zero():
            continue
        try:
            rad = radial_integral(N, c)
        except DivergenceError as exc:
            raise DivergenceError(
                f"{exc} from term omega^{alpha} (coefficient {v})") from None
        contrib = moment * PiScalar.of(v * QQi.coerce(rad))
        total = total + contrib
        if trace is not None:
            trace.append({
                "rho_power": N,
                "rate": str(c),
                "omega_exponents": list(alpha),
                "coefficient": str(v),
                "sphere_moment": str(moment),
                "radial_integral": str(rad),
                "berezin_sign": 1,
            })
    return total


@lru_cache(maxsize=None)
def gamma_engine(sig: Signature) -> PiScalar:
    """Normalization constant: the raw integral of exp(-4 x_0)."""
    return unnormalized_integral(SuperPolynomial.one(sig), 4)


def gamma_closed_form(m: int, n: int) -> PiScalar:
    """Closed form 2^{5-2M}/n! ((3-m)/2)_n pi^{(m-1)/2}/Gamma((m-1)/2) Gamma(M-2)."""
    M = m - 2 * n
    if M < 4:
        raise ValueError("closed form requires M >= 4")
    pref = Fraction(2) ** (5 - 2 * M) / factorial_fraction(n) * poch(Fraction(3 - m, 2), n)
    out = PiScalar.of(QQi.coerce(pref), m - 1) / gamma_half(m - 1)
    return out * gamma_half(2 * (M - 2))


def _as_poly_rate(f) -> tuple[SuperPolynomial, Fraction]:
    if isinstance(f, WElement):
        return f.poly, f.rate
    poly, rate = f
    return poly, Fraction(rate)


def integrate_w(f, trace: list | None = None) -> QQi:
    """Normalized integral over W; exact, with all pi powers cancelling."""
    poly, rate = _as_poly_rate(f)
    sig = poly.sig
    if sig.M < 4:
        raise ValueError("the integral is only defined for superdimension >= 4")
    raw = unnormalized_integral(poly, rate, trace)
    return (raw / gamma_engine(sig)).as_qqi()


def w_form(f: WElement, g: WElement) -> QQi:
    """Sesquilinear form on W: integral of f times the conjugate of g."""
    if f.poly.sig != g.poly.sig:
        raise ValueError("signature mismatch")
    rate = f.rate + g.rate
    if rate <= 0:
        raise ValueError("rates must sum to a positive rational")
    return integrate_w((f.poly * g.poly.conjugate(), rate))
