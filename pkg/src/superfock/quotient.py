"""Normal forms modulo the ideal generated by R^2 = -x_0^2 + r^2.

The normal form keeps the exponent of variable 0 at most 1 in every term,
rewriting x_0^2 -> r^2.  Each rewrite strictly lowers the variable-0 degree,
so the reduction terminates and is idempotent; p - reduce(p) always lies in
the ideal.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .algebra import Signature, SuperPolynomial, dim_P, monomial_keys, r2_small


@lru_cache(maxsize=None)
def _r2_power(sig: Signature, k: int) -> SuperPolynomial:
    if k == 0:
        return SuperPolynomial.one(sig)
    return _r2_power(sig, k - 1) * r2_small(sig)


def reduce_poly(p: SuperPolynomial) -> SuperPolynomial:
    """Unique representative of p mod <R^2> with variable-0 degree <= 1."""
    sig = p.sig
    out = SuperPolynomial(sig, {key: c for key, c in p.terms.items() if key[0][0] <= 1})
    for (ev, odd), c in p.terms.items():
        a = ev[0]
        if a >= 2:
            # r^2 has no variable 0, so substituting x_0^{2j} -> r^{2j} lands
            # in normal form in one pass
            mono = SuperPolynomial(sig, {((a % 2,) + ev[1:], odd): c})
            out = out + _r2_power(sig, a // 2) * mono
    return out


def reduce_with_quotient(p: SuperPolynomial):
    """(nf, q) with p = nf + R^2 * q and nf in normal form."""
    sig = p.sig
    nf = p
    q = SuperPolynomial.zero(sig)
    while True:
        high = {key: c for key, c in nf.terms.items() if key[0][0] >= 2}
        if not high:
            return nf, q
        # x_0^a = x_0^{a-2} r^2 - R^2 x_0^{a-2}
        shifted = SuperPolynomial(
            sig, {((ev[0] - 2,) + ev[1:], odd): c for (ev, odd), c in high.items()})
        low = SuperPolynomial(sig, {key: c for key, c in nf.terms.items() if key[0][0] < 2})
        nf = low + r2_small(sig) * shifted
        q = q - shifted


def ideal_member(p: SuperPolynomial) -> bool:
    """Exact membership test for the ideal generated by R^2."""
    return reduce_poly(p).is_zero()


def is_normal_form(p: SuperPolynomial) -> bool:
    return all(ev[0] <= 1 for ev, _ in p.terms)


class FockDim(NamedTuple):
    count: int
    harmonic_identification_proved: bool


def normal_form_keys(sig: Signature, k: int):
    """Degree-k monomials with variable-0 exponent at most 1."""
    return [key for key in monomial_keys(sig, k) if key[0][0] <= 1]


def graded_dim_F(k: int, sig: Signature) -> FockDim:
    """Dimension of the degree-k slice of P/<R^2> by normal-form count.

    The count always equals dim P_k(m-1|2n) + dim P_{k-1}(m-1|2n).  The flag
    records whether M-1 is outside -2N, the range where that number is also
    known to equal dim H_k(m|2n).
    """
    count = len(normal_form_keys(sig, k))
    closed = dim_P(sig.m - 1, sig.n, k) + dim_P(sig.m - 1, sig.n, k - 1)
    if count != closed:
        raise AssertionError(f"normal-form count {count} != closed form {closed}")
    ok = not (sig.M - 1 <= 0 and (sig.M - 1) % 2 == 0)
    return FockDim(count, ok)
