"""The Fock side: Bessel-Fischer product, reproducing kernels, and the actions.

The Bessel-Fischer product substitutes the tangential Bessel operators for
the variables of its first argument, applies the word to the coefficient
conjugate of the second, and evaluates at zero.  A second, slower route via
the degree-shift identity is kept as an independent oracle for the sign
conventions.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import linalg
from .algebra import (MonKey, Signature, SuperPolynomial, bessel_modified,
                      euler)
from .bipoly import BiSuperPolynomial, pairing_power
from .liealg import TKKElement
from .quotient import normal_form_keys, reduce_poly
from .scalars import HALF, I, QQi, poch


def _word_indices(key: MonKey) -> list[int]:
    """Variable indices of a monomial in written order (evens by index, then odds)."""
    ev, odd = key
    out: list[int] = []
    for i, e in enumerate(ev):
        out.extend([i] * e)
    out.extend(odd)
    return out


def bf_word_apply(key: MonKey, q: SuperPolynomial) -> SuperPolynomial:
    """Apply the Bessel word of a monomial to q, rightmost factor first."""
    for i in reversed(_word_indices(key)):
        if q.is_zero():
            break
        q = bessel_modified(i, q)
    return q


def bf_product(p: SuperPolynomial, q: SuperPolynomial) -> QQi:
    """Bessel-Fischer product: p(Bessel) applied to the coefficient conjugate of q, at 0."""
    if p.sig != q.sig:
        raise ValueError("signature mismatch")
    qbar = q.conjugate()
    total = QQi(0)
    for key, a in p.terms.items():
        total = total + a * bf_word_apply(key, qbar).constant_term()
    return total


@lru_cache(maxsize=None)
def bf_mono_pair(sig: Signature, akey: MonKey, bkey: MonKey) -> QQi:
    """Pairing of two plain monomials, memoized (their coefficients are real)."""
    return bf_word_apply(akey, SuperPolynomial.monomial(sig, bkey)).constant_term()


def bf_product_shift_oracle(p: SuperPolynomial, q: SuperPolynomial) -> QQi:
    """Independent evaluation through the shift identity
    <z_i p, q> = (-1)^{|i||p|} <p, Bessel(z_i) q>, peeling left factors."""
    if p.sig != q.sig:
        raise ValueError("signature mismatch")

    def pair_mono(key: MonKey, qb: SuperPolynomial) -> QQi:
        idxs = _word_indices(key)
        if not idxs:
            return qb.constant_term()
        i = idxs[0]
        ev, odd = key
        if i < p.sig.m:
            rest = (ev[:i] + (ev[i] - 1,) + ev[i + 1:], odd)
        else:
            rest = (ev, odd[1:])
        rest_parity = (len(rest[1]) & 1) and p.sig.parity(i)
        val = pair_mono(rest, bessel_modified(i, qb))
        return -val if rest_parity else val

    qbar = q.conjugate()
    total = QQi(0)
    for key, a in p.terms.items():
        total = total + a * pair_mono(key, qbar)
    return total


# -- reproducing kernel -------------------------------------------------------


def kernel_coefficient(M: int, k: int) -> Fraction:
    """1 / (4^k k! (M/2 - 1)_k); raises when the Pochhammer factor vanishes."""
    den = poch(Fraction(M, 2) - 1, k)
    if den == 0:
        raise ValueError("kernel undefined: M - 2 lies in -2N")
    out = Fraction(1)
    for j in range(1, k + 1):
        out /= 4 * j
    return out / den


def kernel(k: int, sig: Signature, sig_w: Signature | None = None) -> BiSuperPolynomial:
    """Degree-k reproducing kernel as a (z, w)-polynomial."""
    if sig_w is None:
        sig_w = Signature(sig.m, sig.n, varset="w", beta=sig.beta)
    c = kernel_coefficient(sig.M, k)
    return pairing_power(sig, sig_w, k).scale(QQi.coerce(c))


def kernel_sum(cap: int, sig: Signature, sig_w: Signature | None = None) -> BiSuperPolynomial:
    """Reproducing kernel summed over degrees 0..cap (the full kernel, truncated)."""
    if sig_w is None:
        sig_w = Signature(sig.m, sig.n, varset="w", beta=sig.beta)
    out = BiSuperPolynomial.zero(sig, sig_w)
    for k in range(cap + 1):
        out = out + kernel(k, sig, sig_w)
    return out


def kernel_pair(p: SuperPolynomial, kern: BiSuperPolynomial) -> SuperPolynomial:
    """<p, K(., w)> in the first slot; returns a polynomial in w."""
    total = SuperPolynomial.zero(kern.sig_right)
    for key, a in p.terms.items():
        cur = kern
        for i in reversed(_word_indices(key)):
            cur = cur.bessel_mod_left(i)
            if cur.is_zero():
                break
        total = total + cur.extract_left_constant().scale(a)
    return total


# -- Gram matrices ------------------------------------------------------------


def gram(k: int, sig: Signature):
    """Gram matrix of the Bessel-Fischer product on the normal-form basis of F_k."""
    keys = normal_form_keys(sig, k)
    polys = [SuperPolynomial.monomial(sig, key) for key in keys]
    mat = [[bf_product(pr, pc) for pc in polys] for pr in polys]
    return keys, mat


def gram_rank(k: int, sig: Signature) -> int:
    keys, mat = gram(k, sig)
    rows = [{c: v for c, v in enumerate(row) if v} for row in mat]
    return linalg.rank(rows, len(keys))


def gram_nullspace(k: int, sig: Signature) -> list[SuperPolynomial]:
    keys, mat = gram(k, sig)
    rows = [{c: v for c, v in enumerate(row) if v} for row in mat]
    vecs = linalg.nullspace(rows, len(keys))
    return [SuperPolynomial(sig, {keys[c]: v for c, v in vec.items()}) for vec in vecs]


def gram_json(k: int, sig: Signature) -> str:
    import json
    keys, mat = gram(k, sig)
    names = [str(SuperPolynomial.monomial(sig, key)) for key in keys]
    return json.dumps({
        "degree": k,
        "basis": names,
        "entries": [[str(v) for v in row] for row in mat],
    }, indent=1)


# -- complexified Schrodinger action and the Fock action ----------------------


def _plain_L(i: int, j: int, p: SuperPolynomial) -> SuperPolynomial:
    left = p.d_lower(j).mul_var(i)
    right = p.d_lower(i).mul_var(j)
    if p.sig.parity(i) and p.sig.parity(j):
        return left + right
    return left - right


def pi_complex_apply(X: TKKElement, p: SuperPolynomial) -> SuperPolynomial:
    """Complexified Schrodinger action on the polynomial Fock space (reduced)."""
    tkk = X.tkk
    sig = p.sig
    M = sig.M
    out = SuperPolynomial.zero(sig)
    for idx, coeff in X.coeffs.items():
        kind, *rest = tkk.basis[idx]
        if kind == "minus":
            term = p.mul_var(rest[0]).scale(-2 * I)
        elif kind == "L":
            l = rest[0]
            if l == 0:
                term = p.scale(QQi(2 - M, 0, 2)) - euler(p)
            else:
                term = p.d_lower(0).mul_var(l) - p.d_lower(l).mul_var(0)
        elif kind == "inn":
            term = _plain_L(rest[0], rest[1], p)
        else:
            term = bessel_modified(rest[0], p).scale(-I * HALF)
        out = out + term.scale(coeff)
    return reduce_poly(out)


def rho_apply(X: TKKElement, p: SuperPolynomial) -> SuperPolynomial:
    """Fock action: the Cayley twist of the complexified Schrodinger action."""
    tkk = X.tkk
    sig = p.sig
    M = sig.M
    out = SuperPolynomial.zero(sig)
    for idx, coeff in X.coeffs.items():
        kind, *rest = tkk.basis[idx]
        l = rest[0] if rest else None
        if kind == "inn":
            term = _plain_L(rest[0], rest[1], p)
        elif kind == "L":
            term = (p.mul_var(l) - bessel_modified(l, p)).scale(HALF)
        elif kind == "minus":
            core = p.mul_var(l) + bessel_modified(l, p)
            if l == 0:
                core = core + p.scale(M - 2) + euler(p).scale(2)
            else:
                core = core + (p.d_lower(l).mul_var(0) - p.d_lower(0).mul_var(l)).scale(2)
            term = core.scale(-I * HALF)
        else:  # plus
            core = p.mul_var(l) + bessel_modified(l, p)
            if l == 0:
                core = core + p.scale(2 - M) - euler(p).scale(2)
            else:
                core = core + (p.d_lower(l).mul_var(0) - p.d_lower(0).mul_var(l)).scale(-2)
            term = core.scale(-I * HALF)
        out = out + term.scale(coeff)
    return reduce_poly(out)


@lru_cache(maxsize=None)
def rho_lowering(tkk) -> TKKElement:
    """Preimage under the Cayley map of (0,0,-2 e_0); acts as i Bessel(z_0)."""
    return tkk.cayley_inverse(tkk.plus(0, -2))


@lru_cache(maxsize=None)
def rho_raising(tkk) -> TKKElement:
    """Preimage under the Cayley map of (-e_0/2, 0, 0); acts as i z_0."""
    return tkk.cayley_inverse(tkk.minus(0, QQi(-1, 0, 2)))
