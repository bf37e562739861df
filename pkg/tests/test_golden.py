"""Golden files pin the serialized interchange formats byte-for-byte."""

import pathlib

from superfock.algebra import R2, Signature, SuperPolynomial
from superfock.fock import gram_json
from superfock.liealg import tkk_for
from superfock.scalars import QQi

GOLDEN = pathlib.Path(__file__).parent / "golden"


def test_structure_constants_golden():
    blob = tkk_for(Signature(2, 1)).structure_constants_json() + "\n"
    assert blob == (GOLDEN / "tkk_structure_2_1.json").read_text()


def test_gram_golden():
    blob = gram_json(1, Signature(4, 0, varset="z")) + "\n"
    assert blob == (GOLDEN / "gram_4_0_k1.json").read_text()


def test_polynomial_rendering_pinned():
    sig = Signature(4, 1)
    assert str(R2(sig)) == "2*t1*t2 + 1*x3^2 + 1*x2^2 + 1*x1^2 + -1*x0^2"
    p = SuperPolynomial.monomial(sig, ((1, 0, 2, 0), (4,)), QQi(-1, 2, 3))
    assert str(p) == "-1/3+2/3*i*x0*x2^2*t1"
