import random
from fractions import Fraction

import pytest

from superfock.algebra import Signature, SuperPolynomial, monomial_keys
from superfock.bipoly import BiSuperPolynomial, pairing, pairing_power
from superfock.fock import bf_product
from superfock.integral import w_form
from superfock.liealg import tkk_for
from superfock.quotient import normal_form_keys, reduce_poly
from superfock.sbtransform import (SBTransform, b_series_coeff,
                                   b_series_truncation, exp_z0_truncation)
from superfock.scalars import I, QQi
from superfock.schrodinger import lowest_vector, make_w, pi_apply

SIG = Signature(4, 0)
SB = SBTransform(SIG)
SIGZ = SB.sig_z
TKK = tkk_for(SIG)


def test_pairing_polynomial():
    p = pairing(SIG, SIGZ)
    # 2 x0 z0 + 2 sum x_i z_i for the diagonal block
    x0key = ((1, 0, 0, 0), ())
    assert p.terms[(x0key, x0key)] == QQi(2)
    x1key = ((0, 1, 0, 0), ())
    assert p.terms[(x1key, x1key)] == QQi(2)
    assert pairing_power(SIG, SIGZ, 0) == BiSuperPolynomial.one(SIG, SIGZ)


def test_pairing_odd_block():
    sigx = Signature(4, 1)
    sigz = Signature(4, 1, varset="z")
    p = pairing(sigx, sigz)
    key_t1 = ((0, 0, 0, 0), (4,))
    key_t2 = ((0, 0, 0, 0), (5,))
    assert p.terms[(key_t1, key_t2)] == QQi(2)   # beta^{45} = 1
    assert p.terms[(key_t2, key_t1)] == QQi(-2)  # beta^{54} = -1


def test_series_coefficients():
    M = SIG.M
    assert b_series_coeff(M, 0, 0) == 1
    assert b_series_coeff(M, 0, 1) == Fraction(2, M - 2)  # 1/(1!*(M/2-1))
    for alpha in range(3):
        for l in range(1, 7):
            assert l * b_series_coeff(M, alpha, l) == b_series_coeff(M, alpha + 1, l - 1)
    with pytest.raises(ValueError):
        b_series_coeff(2, 0, 1)


def test_sb_of_lowest_vector_and_pi_image():
    v0 = lowest_vector(SIG)
    assert SB.sb(v0) == SuperPolynomial.one(SIGZ)
    got = SB.sb(pi_apply(TKK.minus(0), v0))
    want = (SuperPolynomial.variable(SIGZ, 0)
            + SuperPolynomial.constant(SIGZ, SIG.M - 2)).scale(-I * QQi(1, 0, 2))
    assert got == want


def test_sb_requires_rate_two():
    with pytest.raises(ValueError):
        SB.sb(make_w(SuperPolynomial.one(SIG), 4))


def test_inverse_examples():
    assert SB.sb_inverse(SuperPolynomial.one(SIGZ)).poly == SuperPolynomial.one(SIG)
    got = SB.sb_inverse(SuperPolynomial.variable(SIGZ, 0))
    want = SuperPolynomial.variable(SIG, 0).scale(4) \
        - SuperPolynomial.constant(SIG, SIG.M - 2)
    assert got.poly == want and got.rate == 2
    for k in range(1, SIG.nvars):
        got = SB.sb_inverse(SuperPolynomial.variable(SIGZ, k, 2))
        assert got.poly == SuperPolynomial.variable(SIG, k).scale(8)


def test_round_trips():
    for d in range(4):
        for key in normal_form_keys(SIG, d):
            f = make_w(SuperPolynomial.monomial(SIG, key), 2)
            assert SB.sb_inverse(SB.sb(f)).poly == f.poly
            p = SuperPolynomial.monomial(SIGZ, key)
            assert SB.sb(SB.sb_inverse(p)) == reduce_poly(p)


def test_hermite():
    H0, h0 = SB.hermite(((0, 0, 0, 0), ()))
    assert H0 == SuperPolynomial.one(SIG) and h0.rate == 2
    He0, _ = SB.hermite(((1, 0, 0, 0), ()))
    assert He0 == SuperPolynomial.variable(SIG, 0).scale(8) \
        + SuperPolynomial.constant(SIG, 4 - 2 * SIG.M)
    He1, _ = SB.hermite(((0, 1, 0, 0), ()))
    assert He1 == SuperPolynomial.variable(SIG, 1).scale(8)
    for d in range(3):
        for key in monomial_keys(SIG, d):
            H, h = SB.hermite(key)
            assert SB.sb(h) == reduce_poly(SuperPolynomial.monomial(SIGZ, key, QQi(2 ** d)))


def test_hermite_odd_support():
    sig = Signature(6, 1)
    sb = SBTransform(sig)
    key = ((0,) * 6, (6,))
    H, h = sb.hermite(key)
    assert H == SuperPolynomial.variable(sig, 6).scale(8)
    assert sb.sb(h) == SuperPolynomial.variable(sb.sig_z, 6).scale(2)
    key2 = ((0,) * 6, (6, 7))
    H2, h2 = sb.hermite(key2)
    assert sb.sb(h2) == reduce_poly(SuperPolynomial.monomial(sb.sig_z, key2, QQi(4)))


def test_unitarity_and_intertwining_samples():
    fs = [make_w(SuperPolynomial.monomial(SIG, key), 2)
          for d in range(3) for key in normal_form_keys(SIG, d)]
    for f in fs:
        for g in fs:
            assert bf_product(SB.sb(f), SB.sb(g)) == w_form(f, g)
    rng = random.Random(6)
    for _ in range(30):
        X = TKK.basis_element(rng.randrange(TKK.dim))
        f = rng.choice(fs)
        assert SB.check_intertwine(X, f).is_zero()
        p = SuperPolynomial.monomial(SIGZ, rng.choice(
            [k for d in range(4) for k in normal_form_keys(SIGZ, d)]))
        assert SB.check_intertwine_inverse(X, p).is_zero()


def test_inverse_defined_at_m3():
    # forward transform needs M >= 4, but the inverse-side identity is purely
    # algebraic and holds at M = 3 as well
    sig = Signature(5, 1)
    sb = SBTransform(sig)
    tkk = tkk_for(sig)
    rng = random.Random(8)
    fps = [SuperPolynomial.monomial(sb.sig_z, key)
           for d in range(4) for key in normal_form_keys(sb.sig_z, d)]
    for _ in range(25):
        X = tkk.basis_element(rng.randrange(tkk.dim))
        p = rng.choice(fps)
        assert sb.check_intertwine_inverse(X, p).is_zero()


def test_inverse_refused_where_undefined():
    sig = Signature(4, 1)  # M = 2
    sb = SBTransform(sig)
    with pytest.raises(ValueError):
        sb.sb_inverse(SuperPolynomial.variable(sb.sig_z, 0))


def test_exp_truncation():
    e = exp_z0_truncation(SIGZ, 3)
    z0 = SuperPolynomial.variable(SIGZ, 0)
    want = SuperPolynomial.one(SIGZ) - z0 + (z0 * z0).scale(Fraction(1, 2)) \
        - (z0 * z0 * z0).scale(Fraction(1, 6))
    assert e == want


def test_b0_truncation_eigenfunction_mod_ideal():
    b0 = b_series_truncation(SIG, SIGZ, 0, 4)
    lhs = b0.bessel_mod_right(0).reduce_left()
    rhs = b0.mul_var_left(0).scale(4).reduce_left()
    for d in range(4):
        assert lhs.right_degree_part(d) == rhs.right_degree_part(d)
