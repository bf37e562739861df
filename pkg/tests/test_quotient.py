import random

from superfock.algebra import (R2, Signature, SuperPolynomial, r2_small,
                               random_polynomial)
from superfock.quotient import (graded_dim_F, ideal_member, is_normal_form,
                                normal_form_keys, reduce_poly,
                                reduce_with_quotient)

SIG = Signature(4, 1, varset="z")


def test_reduce_examples():
    z0 = SuperPolynomial.variable(SIG, 0)
    assert reduce_poly(z0 * z0) == r2_small(SIG)
    assert reduce_poly(R2(SIG)).is_zero()
    assert reduce_poly(z0 * z0 * z0) == z0 * r2_small(SIG)


def test_membership():
    assert ideal_member(R2(SIG) * SuperPolynomial.variable(SIG, 1)
                        * SuperPolynomial.variable(SIG, 4))
    assert not ideal_member(SuperPolynomial.variable(SIG, 1))
    assert ideal_member(reduce_poly(SuperPolynomial.zero(SIG)))


def test_division_identity():
    rng = random.Random(9)
    for _ in range(50):
        p = random_polynomial(SIG, 5, rng, nterms=6)
        nf, q = reduce_with_quotient(p)
        assert is_normal_form(nf)
        assert nf + R2(SIG) * q == p
        assert reduce_poly(p) == nf
        assert reduce_poly(nf) == nf


def test_reduction_is_multiplicative():
    rng = random.Random(10)
    for _ in range(30):
        p = random_polynomial(SIG, 4, rng)
        q = random_polynomial(SIG, 4, rng)
        assert reduce_poly(p * q) == reduce_poly(reduce_poly(p) * reduce_poly(q))


def test_dimensions():
    assert graded_dim_F(2, Signature(4, 1, varset="z")).count == 18
    assert graded_dim_F(0, Signature(2, 0, varset="z")).count == 1
    assert graded_dim_F(1, Signature(4, 0, varset="z")).count == 4
    fd = graded_dim_F(3, Signature(2, 2, varset="z"))  # M - 1 = -5, not in -2N
    assert fd.harmonic_identification_proved
    for k in range(5):
        keys = normal_form_keys(SIG, k)
        assert all(key[0][0] <= 1 for key in keys)
        assert len(keys) == graded_dim_F(k, SIG).count
