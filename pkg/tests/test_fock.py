import random

import pytest

from superfock.algebra import (R2, Signature, SuperPolynomial, bessel_modified,
                               monomial_keys, random_polynomial)
from superfock.fock import (bf_mono_pair, bf_product, bf_product_shift_oracle,
                            gram_json, gram_nullspace, gram_rank, kernel,
                            kernel_coefficient, kernel_pair, pi_complex_apply,
                            rho_apply, rho_lowering, rho_raising)
from superfock.harmonics import harmonic_basis
from superfock.liealg import tkk_for
from superfock.quotient import graded_dim_F, normal_form_keys, reduce_poly
from superfock.scalars import I, QQi

SIG = Signature(4, 1, varset="z")
SIGX = Signature(4, 1)
TKK = tkk_for(SIGX)


def zvar(i, sig=SIG):
    return SuperPolynomial.variable(sig, i)


def test_bf_values():
    one = SuperPolynomial.one(SIG)
    M = SIG.M
    assert bf_product(one, one) == QQi(1)
    assert bf_product(zvar(0), zvar(0)) == QQi(M - 2)
    assert bf_product(zvar(4), zvar(5)) == QQi(2 - M)
    assert bf_product(zvar(5), zvar(4)) == QQi(M - 2)
    assert bf_product(zvar(1), zvar(2)) == QQi(0)
    assert bf_product(zvar(1), one) == QQi(0)


def test_bf_superhermitian_and_oracle():
    rng = random.Random(0)
    monos = [SuperPolynomial.monomial(SIG, key)
             for d in range(4) for key in monomial_keys(SIG, d)]
    sample = rng.sample(monos, 40)
    for p in sample:
        for q in sample:
            v = bf_product(p, q)
            assert v == bf_product_shift_oracle(p, q)
            s = QQi(-1 if (p.parity() and q.parity()) else 1)
            assert v == s * bf_product(q, p).conjugate()
            if p.degree() != q.degree():
                assert v == QQi(0)


def test_bf_shift_identity():
    rng = random.Random(1)
    for _ in range(60):
        d = rng.randrange(3)
        keys = monomial_keys(SIG, d)
        p = SuperPolynomial.monomial(SIG, keys[rng.randrange(len(keys))])
        keys2 = monomial_keys(SIG, d + 1)
        q = SuperPolynomial.monomial(SIG, keys2[rng.randrange(len(keys2))])
        i = rng.randrange(SIG.nvars)
        zp = p.mul_var(i)
        if zp.is_zero():
            continue
        s = QQi(-1 if (SIG.parity(i) and p.parity()) else 1)
        assert bf_product(zp, q) == s * bf_product(p, bessel_modified(i, q))


def test_bf_ideal_annihilation():
    rng = random.Random(2)
    for _ in range(20):
        p = random_polynomial(SIG, 2, rng)
        q = random_polynomial(SIG, 4, rng)
        assert bf_product(R2(SIG) * p, q) == QQi(0)
        assert bf_product(q, R2(SIG) * p) == QQi(0)


def test_kernel_values():
    sig = Signature(4, 0, varset="z")
    sigw = Signature(4, 0, varset="w")
    assert kernel_coefficient(sig.M, 0) == 1
    k0 = kernel(0, sig, sigw)
    assert k0.extract_left_constant() == SuperPolynomial.one(sigw)
    k1 = kernel(1, sig, sigw)
    got = kernel_pair(SuperPolynomial.variable(sig, 0), k1)
    assert got == SuperPolynomial.variable(sigw, 0)
    for k in range(4):
        kern = kernel(k, sig, sigw)
        for key in normal_form_keys(sig, k):
            p = SuperPolynomial.monomial(sig, key)
            assert reduce_poly(kernel_pair(p, kern)) == \
                reduce_poly(SuperPolynomial(sigw, dict(p.terms)))


def test_kernel_refusal():
    with pytest.raises(ValueError):
        kernel(1, SIG)  # M = 2, so M - 2 = 0 lies in -2N
    with pytest.raises(ValueError):
        kernel_coefficient(-2, 3)


def test_gram_ranks():
    sig = Signature(4, 0, varset="z")
    for k in range(3):
        assert gram_rank(k, sig) == graded_dim_F(k, sig).count
    blob = gram_json(1, sig)
    assert '"degree": 1' in blob


def test_gram_degenerate_with_witness():
    sig = Signature(2, 2, varset="z")
    k = 3  # 2 - M/2 with M = -2
    d = graded_dim_F(k, sig).count
    r = gram_rank(k, sig)
    assert r < d
    nulls = gram_nullspace(k, sig)
    assert nulls
    v = nulls[0]
    for key in normal_form_keys(sig, k):
        assert bf_product(SuperPolynomial.monomial(sig, key), v) == QQi(0)
    # reductions of honest harmonics lie in the radical
    h = harmonic_basis(k, sig)[0]
    hr = reduce_poly(h)
    for key in normal_form_keys(sig, k):
        assert bf_product(SuperPolynomial.monomial(sig, key), hr) == QQi(0)


def test_pi_complex_values():
    one = SuperPolynomial.one(SIG)
    M = SIG.M
    assert pi_complex_apply(TKK.L(0), one) == \
        SuperPolynomial.constant(SIG, QQi(2 - M, 0, 2))
    assert pi_complex_apply(TKK.minus(1), one) == zvar(1).scale(-2 * I)
    assert pi_complex_apply(TKK.plus(1), zvar(1)) == \
        SuperPolynomial.constant(SIG, -I * QQi(M - 2, 0, 2))


def test_rho_table_values():
    z0 = zvar(0)
    M = SIG.M
    got = rho_apply(TKK.L(0), z0)
    want = reduce_poly((z0 * z0 - SuperPolynomial.constant(SIG, M - 2)).scale(QQi(1, 0, 2)))
    assert got == want


def test_rho_cayley_composition():
    fs = [SuperPolynomial.monomial(SIG, key)
          for d in range(4) for key in normal_form_keys(SIG, d)]
    rng = random.Random(3)
    for _ in range(40):
        a = rng.randrange(TKK.dim)
        X = TKK.basis_element(a)
        cX = TKK.cayley(X)
        p = rng.choice(fs)
        assert rho_apply(X, p) == pi_complex_apply(cX, p)


def test_rho_ladders():
    z0 = zvar(0)
    M = SIG.M
    lower, raiser = rho_lowering(TKK), rho_raising(TKK)
    for k in range(6):
        zk = reduce_poly(z0 ** k)
        want = reduce_poly((z0 ** (k - 1)).scale(I * QQi(k * (M + k - 3)))
                           if k else SuperPolynomial.zero(SIG))
        assert rho_apply(lower, zk) == want
        assert rho_apply(raiser, zk) == reduce_poly((z0 ** (k + 1)).scale(I))


def test_rho_representation_sample():
    fs = [SuperPolynomial.monomial(SIG, key)
          for d in range(3) for key in normal_form_keys(SIG, d)]
    rng = random.Random(4)
    for _ in range(50):
        a, b = rng.randrange(TKK.dim), rng.randrange(TKK.dim)
        X, Y = TKK.basis_element(a), TKK.basis_element(b)
        Z = TKK.bracket(X, Y)
        s = QQi(-1 if (TKK.parity(a) and TKK.parity(b)) else 1)
        for p in fs[:8]:
            lhs = rho_apply(X, rho_apply(Y, p)) - rho_apply(Y, rho_apply(X, p)).scale(s)
            assert reduce_poly(lhs) == rho_apply(Z, p)


def test_rho_skew_sample():
    fs = [SuperPolynomial.monomial(SIG, key)
          for d in range(3) for key in normal_form_keys(SIG, d)]
    rng = random.Random(5)
    for _ in range(40):
        a = rng.randrange(TKK.dim)
        X = TKK.basis_element(a)
        p, q = rng.choice(fs), rng.choice(fs)
        s = QQi(-1 if (TKK.parity(a) and p.parity()) else 1)
        assert bf_product(rho_apply(X, p), q) + s * bf_product(p, rho_apply(X, q)) == QQi(0)


def test_bf_mono_pair_cache_agrees():
    keys = monomial_keys(SIG, 2)
    for ka in keys[:6]:
        for kb in keys[:6]:
            assert bf_mono_pair(SIG, ka, kb) == bf_product(
                SuperPolynomial.monomial(SIG, ka), SuperPolynomial.monomial(SIG, kb))
