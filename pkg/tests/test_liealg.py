import itertools
import json
import random

from superfock.algebra import Signature, SuperPolynomial, monomials_up_to
from superfock.liealg import TKK, k_basis, k_center_dimension, k_closes, tkk_for
from superfock.scalars import I, ONE, QQi

TKK41 = tkk_for(Signature(4, 1))


def test_jordan_products():
    J = TKK41.jordan
    m, n = 4, 1
    e0e0 = J.basis_product(0, 0)
    assert e0e0[0] == ONE and all(v.is_zero() for v in e0e0[1:])
    assert J.basis_product(1, 1)[0] == ONE
    assert J.basis_product(m, m + n)[0] == QQi(-1)   # odd block, top-right
    assert J.basis_product(m + n, m)[0] == QQi(1)
    assert all(v.is_zero() for v in J.basis_product(1, 2))


def test_bracket_anchors():
    tkk = TKK41
    assert tkk.bracket(tkk.plus(0), tkk.minus(0)) == tkk.L(0, 2)
    assert tkk.bracket(tkk.L(0), tkk.plus(1)) == tkk.plus(1)
    assert tkk.bracket(tkk.L(0), tkk.minus(1)) == tkk.minus(1, -1)
    assert tkk.bracket(tkk.plus(1), tkk.plus(2)).is_zero()
    # defining property of the grading: Jacobi on a plus/minus/L triple
    X, Y, Z = tkk.plus(1), tkk.minus(1), tkk.L(0)
    lhs = tkk.bracket(X, tkk.bracket(Y, Z))
    rhs = tkk.bracket(tkk.bracket(X, Y), Z) + tkk.bracket(Y, tkk.bracket(X, Z))
    assert lhs == rhs


def test_graded_antisymmetry_and_jacobi_small():
    tkk = tkk_for(Signature(2, 1))
    for a in range(tkk.dim):
        for b in range(tkk.dim):
            X, Y = tkk.basis_element(a), tkk.basis_element(b)
            s = -1 if (tkk.parity(a) and tkk.parity(b)) else 1
            assert tkk.bracket(X, Y) == tkk.bracket(Y, X).scale(-s)
    for (a, b, c) in itertools.product(range(tkk.dim), repeat=3):
        X, Y, Z = (tkk.basis_element(t) for t in (a, b, c))
        s = -1 if (tkk.parity(a) and tkk.parity(b)) else 1
        assert tkk.bracket(X, tkk.bracket(Y, Z)) == \
            tkk.bracket(tkk.bracket(X, Y), Z) + \
            tkk.bracket(Y, tkk.bracket(X, Z)).scale(s)


def test_dimension_counts():
    assert tkk_for(Signature(4, 0)).dim == 15   # so(4,2)
    assert tkk_for(Signature(6, 1)).dim == 47
    assert TKK41.dim == 30


def test_cayley_closed_forms():
    tkk = TKK41
    for l in range(tkk.sig.nvars):
        assert tkk.cayley(tkk.minus(l)) == \
            tkk.minus(l, QQi(1, 0, 4)) + tkk.L(l, I) + tkk.plus(l)
        assert tkk.cayley(tkk.L(l)) == tkk.minus(l, I * QQi(1, 0, 4)) + tkk.plus(l, -I)
        assert tkk.cayley(tkk.plus(l)) == \
            tkk.minus(l, QQi(1, 0, 4)) + tkk.L(l, -I) + tkk.plus(l)
    for (i, j) in tkk.inn_pairs:
        assert tkk.cayley(tkk.inn(i, j)) == tkk.inn(i, j)
    # (a, I, -a) goes to I + 2i L_a
    a = tkk.minus(1) + tkk.inn(*tkk.inn_pairs[0]) - tkk.plus(1)
    assert tkk.cayley(a) == tkk.inn(*tkk.inn_pairs[0]) + tkk.L(1, 2 * I)


def test_cayley_is_invertible_bracket_morphism():
    tkk = TKK41
    rng = random.Random(4)
    for _ in range(60):
        a, b = rng.randrange(tkk.dim), rng.randrange(tkk.dim)
        X, Y = tkk.basis_element(a), tkk.basis_element(b)
        assert tkk.cayley_inverse(tkk.cayley(X)) == X
        assert tkk.cayley(tkk.bracket(X, Y)) == \
            tkk.bracket(tkk.cayley(X), tkk.cayley(Y))


def test_realization_anchor():
    tkk = TKK41
    bsig = tkk.big_signature
    # the unit multiplication goes to a single angular operator:
    # L_{0,(m+1)} y0 = -y_{m+1} with the block metric
    op = tkk.realize(tkk.L(0))
    y0 = SuperPolynomial.variable(bsig, 0)
    assert op(y0) == SuperPolynomial.variable(bsig, 5).scale(-1)
    # homomorphism on a generating pair
    X, Y = tkk.minus(1), tkk.plus(1)
    opx, opy = tkk.realize(X), tkk.realize(Y)
    br = tkk.realize(tkk.bracket(X, Y))
    for key in monomials_up_to(bsig, 2):
        p = SuperPolynomial.monomial(bsig, key)
        assert opx(opy(p)) - opy(opx(p)) == br(p)


def test_osp_matrix_preserves_metric():
    tkk = TKK41
    bsig = tkk.big_signature
    bb = bsig.beta
    nv = bsig.nvars
    for a in (0, 3, tkk.dim - 1, tkk.index[("L", 0)], tkk.index[("inn",) + tkk.inn_pairs[0]]):
        mat = tkk.osp_matrix(tkk.basis_element(a))
        pX = tkk.parity(a)
        for u in range(nv):
            su = QQi(-1 if (bsig.parity(u) and pX) else 1)
            for v in range(nv):
                lhs = sum((mat[r][u] * bb[r][v] for r in range(nv) if mat[r][u]), QQi(0))
                rhs = sum((bb[u][r] * mat[r][v] for r in range(nv) if mat[r][v]), QQi(0))
                assert (lhs + su * rhs).is_zero()


def test_k_subalgebra():
    tkk = TKK41
    assert k_closes(tkk)
    assert k_center_dimension(tkk) == 1
    assert len(k_basis(tkk)) == tkk.sig.nvars + len(tkk.inn_pairs)


def test_structure_constant_export():
    tkk = tkk_for(Signature(2, 1))
    blob = tkk.structure_constants_json()
    table = json.loads(blob)
    assert table["e0+ , e0-"] == {"L0": "2"}
    assert blob == tkk.structure_constants_json()
