"""Segal-Bargmann transform between the W-side and Fock-side models.

The forward transform pairs the integrand against the entire Bessel-type
series B_0 evaluated on the mixed pairing x|z; because the source elements
are polynomial times exponential, only finitely many series terms
contribute, and each z-degree is a finite exact integral.  The inverse is a
closed Bessel-Fischer pairing and needs no integration at all.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .algebra import MonKey, Signature, SuperPolynomial
from .bipoly import BiSuperPolynomial, pairing_power
from .fock import bf_mono_pair, rho_apply
from .integral import gamma_engine, unnormalized_integral
from .liealg import TKKElement
from .quotient import reduce_poly
from .scalars import PiScalar, QQi, factorial_fraction, poch
from .schrodinger import WElement, bessel_mod_w, make_w, pi_apply


def b_series_coeff(M: int, alpha: int, l: int) -> Fraction:
    """Taylor coefficient of the renormalized Bessel series with shift alpha:
    Gamma(M/2-1) / (l! Gamma(l + M/2 - 1 + alpha)) = 1/(l! (M/2-1)_{l+alpha})."""
    den = factorial_fraction(l) * poch(Fraction(M, 2) - 1, l + alpha)
    if den == 0:
        raise ValueError("series coefficient undefined: M - 2 lies in -2N")
    return 1 / den


def b_series_truncation(sig_x: Signature, sig_z: Signature, alpha: int,
                        max_degree: int) -> BiSuperPolynomial:
    """Degree-truncated B_alpha(x|z) as a bi-polynomial."""
    out = BiSuperPolynomial.zero(sig_x, sig_z)
    for l in range(max_degree + 1):
        c = QQi.coerce(b_series_coeff(sig_x.M, alpha, l))
        out = out + pairing_power(sig_x, sig_z, l).scale(c)
    return out


def exp_z0_truncation(sig: Signature, max_degree: int, scale=-1) -> SuperPolynomial:
    """Degree-truncated exp(scale * z_0)."""
    z0 = SuperPolynomial.variable(sig, 0)
    out = SuperPolynomial.zero(sig)
    term = SuperPolynomial.one(sig)
    for e in range(max_degree + 1):
        out = out + term
        term = (term * z0).scale(Fraction(scale, e + 1))
    return out


class SBTransform:
    """Forward/inverse transform for one variable shape, with cached tables."""

    def __init__(self, sig_x: Signature, sig_z: Signature | None = None):
        self.sig_x = sig_x
        self.sig_z = sig_z or Signature(sig_x.m, sig_x.n, varset="z", beta=sig_x.beta)
        self.M = sig_x.M
        self._mono_cache: dict[MonKey, SuperPolynomial] = {}
        self._inv_cache: dict[MonKey, SuperPolynomial] = {}

    # -- forward -----------------------------------------------------------

    def _graded_piece(self, mono: MonKey, l: int) -> SuperPolynomial:
        """Coefficient of the z-degree-l slice before the exp(-z_0) factor."""
        weight = QQi.coerce(b_series_coeff(self.M, 0, l))
        carrier = pairing_power(self.sig_x, self.sig_z, l) \
            * BiSuperPolynomial.from_left(SuperPolynomial.monomial(self.sig_x, mono),
                                          self.sig_z)
        gamma = gamma_engine(self.sig_x)
        acc: dict = {}
        for (xkey, zkey), c in carrier.terms.items():
            val = unnormalized_integral(SuperPolynomial.monomial(self.sig_x, xkey),
                                        4)
            if val.is_zero():
                continue
            coeff = (val * PiScalar.of(c * weight) / gamma).as_qqi()
            if coeff.is_zero():
                continue
            cur = acc.get(zkey, QQi(0)) + coeff
            if cur.is_zero():
                acc.pop(zkey, None)
            else:
                acc[zkey] = cur
        return SuperPolynomial(self.sig_z, acc)

    def sb_monomial(self, mono: MonKey) -> SuperPolynomial:
        """Transform of a single normal-form monomial times exp(-2 x_0)."""
        cached = self._mono_cache.get(mono)
        if cached is not None:
            return cached
        cap = sum(mono[0]) + len(mono[1])
        pieces = [self._graded_piece(mono, l) for l in range(cap + 3)]
        z0 = SuperPolynomial.variable(self.sig_z, 0)
        z0pow = [SuperPolynomial.one(self.sig_z)]
        for _ in range(cap + 2):
            z0pow.append(z0pow[-1] * z0)
        total = SuperPolynomial.zero(self.sig_z)
        for d in range(cap + 3):
            part = SuperPolynomial.zero(self.sig_z)
            for l in range(d + 1):
                e = d - l
                c = QQi.coerce(Fraction((-1) ** e, factorial_fraction(e)))
                part = part + (z0pow[e] * pieces[l]).scale(c)
            part = reduce_poly(part)
            if d <= cap:
                total = total + part
            elif not part.is_zero():
                raise AssertionError(
                    f"transform tail does not vanish at degree {d} for {mono}")
        result = reduce_poly(total)
        self._mono_cache[mono] = result
        return result

    def sb(self, f: WElement) -> SuperPolynomial:
        """Forward transform of f in W; exact reduced polynomial in z."""
        if self.M < 4:
            raise ValueError("forward transform requires superdimension >= 4")
        if f.rate != 2:
            raise ValueError("forward transform expects rate 2")
        q = reduce_poly(f.poly)
        out = SuperPolynomial.zero(self.sig_z)
        for key, c in q.terms.items():
            out = out + self.sb_monomial(key).scale(c)
        return reduce_poly(out)

    # -- inverse -----------------------------------------------------------

    def _inverse_monomial(self, key: MonKey) -> SuperPolynomial:
        cached = self._inv_cache.get(key)
        if cached is not None:
            return cached
        k = sum(key[0]) + len(key[1])
        out: dict = {}
        z0_poly = SuperPolynomial.variable(self.sig_z, 0)
        for j in range(k + 1):
            try:
                gfac = 1 / poch(Fraction(self.M, 2) - 1, k - j)
            except ZeroDivisionError:
                raise ValueError(
                    f"inverse transform undefined at degree {k}: "
                    "M - 2 lies in -2N") from None
            scal = QQi.coerce(
                Fraction((-1) ** j,
                         factorial_fraction(j) * factorial_fraction(k - j)) * gfac)
            carrier = pairing_power(self.sig_x, self.sig_z, k - j) \
                * BiSuperPolynomial.from_right(self.sig_x, z0_poly ** j)
            for (xkey, zkey), c in carrier.terms.items():
                val = bf_mono_pair(self.sig_z, zkey, key)
                if val.is_zero():
                    continue
                cur = out.get(xkey, QQi(0)) + c * val * scal
                if cur.is_zero():
                    out.pop(xkey, None)
                else:
                    out[xkey] = cur
        result = SuperPolynomial(self.sig_x, out)
        self._inv_cache[key] = result
        return result

    def sb_inverse(self, p: SuperPolynomial) -> WElement:
        """Inverse transform via the closed Bessel-Fischer pairing formula."""
        if p.sig != self.sig_z:
            p = SuperPolynomial(self.sig_z, dict(p.terms))
        out = SuperPolynomial.zero(self.sig_x)
        for key, c in p.terms.items():
            out = out + self._inverse_monomial(key).scale(c)
        return make_w(out, 2)

    # -- Hermite functions -------------------------------------------------

    def hermite(self, alpha: MonKey) -> tuple[SuperPolynomial, WElement]:
        """Generalized Hermite polynomial and function for a multi-exponent.

        Computed two independent ways (halved Bessel word on the rate-4
        vector, and the inverse transform of (2z)^alpha); they must agree.
        """
        ev, odd = alpha
        q = SuperPolynomial.one(self.sig_x)
        indices = []
        for i, e in enumerate(ev):
            indices.extend([i] * e)
        indices.extend(odd)
        for i in reversed(indices):
            q = bessel_mod_w(i, q, Fraction(4)).scale(QQi(1, 0, 2))
        direct = reduce_poly(q)
        degree = sum(ev) + len(odd)
        two_z = SuperPolynomial.monomial(self.sig_z, alpha, QQi(2 ** degree))
        via_inverse = self.sb_inverse(two_z).poly
        if direct != via_inverse:
            raise AssertionError(
                f"Hermite routes disagree for {alpha}: {direct} vs {via_inverse}")
        return direct, WElement(Fraction(2), direct)

    # -- identity drivers ----------------------------------------------------

    def check_intertwine(self, X: TKKElement, f: WElement):
        """Difference SB(pi(X) f) - rho(X) SB(f); zero iff the identity holds."""
        lhs = self.sb(pi_apply(X, f))
        rhs = rho_apply(X, self.sb(f))
        return lhs - rhs

    def check_intertwine_inverse(self, X: TKKElement, p: SuperPolynomial):
        """Difference pi(X) SBinv(p) - SBinv(rho(X) p) on the Fock side."""
        lhs = pi_apply(X, self.sb_inverse(p))
        rhs = self.sb_inverse(rho_apply(X, p))
        return lhs.poly - rhs.poly

    def check_unitary(self, f: WElement, g: WElement):
        """Pair (Fock-side product of transforms, W-side form)."""
        from .fock import bf_product
        from .integral import w_form
        return bf_product(self.sb(f), self.sb(g)), w_form(f, g)


@lru_cache(maxsize=None)
def sb_for(sig_x: Signature) -> SBTransform:
    return SBTransform(sig_x)
