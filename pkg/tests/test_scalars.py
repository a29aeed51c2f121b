from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings

from altq.scalars import ONE, PoleAtPoint, Q, S, RatFuncQ, eval_at, parse_scalar, qbracket, qpow
from strategies import ratfunc

settings.register_profile("altq", deadline=None, max_examples=60)
settings.load_profile("altq")


@given(ratfunc(), ratfunc(), ratfunc())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == RatFuncQ(0)


@given(ratfunc())
def test_inverse(a):
    if a.is_zero():
        with pytest.raises(ZeroDivisionError):
            a.inverse()
    else:
        assert a * a.inverse() == ONE


@given(ratfunc())
def test_invert_s_is_involution(a):
    assert a.invert_s().invert_s() == a


@given(ratfunc(), ratfunc())
def test_equal_values_hash_alike(a, b):
    if a == b:
        assert hash(a) == hash(b)
    assert hash((a * b) / b if not b.is_zero() else a) == hash(a)


def test_q_is_s_squared():
    assert S * S == Q
    assert qpow(Fraction(1, 2)) == S
    assert qpow(-3) * qpow(3) == ONE


def test_qbracket():
    assert qbracket(1) == ONE
    assert qbracket(3) == Q * Q + ONE + qpow(-2)


@pytest.mark.parametrize(
    "text, value",
    [("q^2", Q * Q), ("-q^-1", -Q.inverse()), ("3/2", RatFuncQ(Fraction(3, 2))), ("s*s", Q), ("(q+1)^2", (Q + 1) * (Q + 1))],
)
def test_parse_scalar(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("text", ["q^", "2 +", "x", "(q", "q^q"])
def test_parse_scalar_rejects(text):
    with pytest.raises(ValueError):
        parse_scalar(text)


def test_eval_at_and_pole():
    assert eval_at(Q * Q - 1, 2) == 15
    assert eval_at(Q + Q.inverse(), 1) == 2
    with pytest.raises(PoleAtPoint):
        eval_at((Q - 1).inverse(), 1)
