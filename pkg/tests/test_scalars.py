from fractions import Fraction

import pytest

from acm5.errors import ExtensionOverflowError, ModeMismatchError
from acm5.scalars import (
    COS_F,
    COS_G,
    SIN_F,
    SIN_G,
    TrigScalar,
    fmt_scalar,
    rat,
    sadd,
    sdiv,
    sis_zero,
    smul,
)


def test_pythagoras_collapses_to_rational():
    x = sadd(smul(SIN_F, SIN_F), smul(COS_F, COS_F))
    assert isinstance(x, Fraction) and x == 1


def test_product_to_sum_identities():
    # sin f cos f = sin(2f)/2
    assert smul(SIN_F, COS_F) == TrigScalar.atom("s", 2, 0, Fraction(1, 2))
    # cos f cos g = (cos(f-g) + cos(f+g))/2
    prod = smul(COS_F, COS_G)
    expected = TrigScalar({("c", 1, -1): Fraction(1, 2), ("c", 1, 1): Fraction(1, 2)})
    assert prod == expected
    # sin(f)sin(g) recombined with cos(f)cos(g) gives cos(f-g)
    assert sadd(smul(SIN_F, SIN_G), smul(COS_F, COS_G)) == TrigScalar.atom("c", 1, -1)


def test_negative_frequency_normalization():
    assert TrigScalar.atom("s", -1, 0) == -SIN_F
    assert TrigScalar.atom("c", -1, 0) == COS_F
    assert TrigScalar.atom("c", 0, -2) == TrigScalar.atom("c", 0, 2)


def test_rational_embedding_and_collapse():
    two = smul(Fraction(2), COS_F)
    assert isinstance(two, TrigScalar)
    back = sadd(two, smul(Fraction(-2), COS_F))
    assert back == 0 and isinstance(back, Fraction)
    assert smul(TrigScalar.const(3), TrigScalar.const(Fraction(1, 3))) == 1


def test_derivative_terms():
    d = SIN_F.deriv_terms()
    assert d == [(COS_F, 1, 0)] or d == [(smul(1, COS_F), 1, 0)]
    (factor, m, n), = COS_G.deriv_terms()
    assert factor == -SIN_G and (m, n) == (0, 1)
    assert TrigScalar.const(7).deriv_terms() == []


def test_float_never_mixes_with_trig():
    with pytest.raises(ModeMismatchError):
        smul(SIN_F, 0.5)


def test_division_by_trig_rejected():
    with pytest.raises(ExtensionOverflowError):
        sdiv(Fraction(1), SIN_F)
    assert sdiv(SIN_F, Fraction(2)) == TrigScalar.atom("s", 1, 0, Fraction(1, 2))


def test_float_zero_uses_relative_tolerance():
    assert sis_zero(1e-12)
    assert not sis_zero(1e-6)
    assert sis_zero(1e-6, tol_scale=1e4)


def test_rat_parsing_and_formatting():
    assert rat("3/4") == Fraction(3, 4)
    assert fmt_scalar(Fraction(-7, 2)) == "-7/2"
    assert fmt_scalar(Fraction(5)) == "5"
    assert fmt_scalar(sadd(COS_F, Fraction(2))) == "2 + cos(f)"
