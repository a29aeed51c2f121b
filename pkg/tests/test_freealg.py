from __future__ import annotations

import pytest
from hypothesis import given

from altq.freealg import (
    E0,
    E1,
    G,
    Gt,
    NCPoly,
    RelationSet,
    W,
    apply_S,
    apply_sigma,
    comm,
    delta,
    parse_symbol,
    qcomm,
)
from altq.scalars import ONE, Q
from strategies import ncpoly


@given(ncpoly(), ncpoly(), ncpoly())
def test_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@given(ncpoly(), ncpoly())
def test_commutator_antisymmetry(a, b):
    assert comm(a, b) == -comm(b, a)


@given(ncpoly())
def test_sigma_and_S_are_involutions(a):
    assert apply_sigma(apply_sigma(a)) == a
    assert apply_S(apply_S(a)) == a


@given(ncpoly(), ncpoly())
def test_sigma_is_multiplicative(a, b):
    assert apply_sigma(a * b) == apply_sigma(a) * apply_sigma(b)


@given(ncpoly())
def test_split_by_degree_recombines(a):
    parts = a.split_by_degree()
    total = NCPoly()
    for deg, p in parts.items():
        assert p.degree() == deg
        total = total + p
    assert total == a


@given(ncpoly())
def test_text_form_is_canonical(a):
    b = NCPoly(dict(reversed(list(a.terms.items()))))
    assert a.to_text() == b.to_text()


def test_grading():
    assert W(0).deg == (1, 0)
    assert W(1).deg == (0, 1)
    assert W(-2).deg == (3, 2)
    assert W(3).deg == (2, 3)
    assert G(2).deg == (2, 2) and Gt(2).deg == (2, 2)
    assert E1.deg == (1, 0) and E0.deg == (0, 1)


def test_sigma_on_letters():
    x = NCPoly.letter
    assert apply_sigma(x(W(-1))) == x(W(2))
    assert apply_sigma(x(G(1))) == x(Gt(1))


def test_central_letters_commute():
    d = delta(1)
    w = NCPoly.letter(W(0))
    assert d * w == w * d
    assert d.central_indices() == {1}


def test_qcomm():
    a, b = NCPoly.letter(W(0)), NCPoly.letter(W(1))
    assert qcomm(a, b) == (a * b).scale(Q) - (b * a).scale(Q.inverse())


@pytest.mark.parametrize("text, sym", [("W[-1]", W(-1)), ("W2", W(2)), ("G[1]", G(1)), ("Gt[2]", Gt(2)), ("E0", E0)])
def test_parse_symbol(text, sym):
    assert parse_symbol(text) == sym
    assert parse_symbol(sym.label()) == sym


def test_parse_symbol_rejects():
    with pytest.raises(ValueError):
        parse_symbol("X[3]")


def test_substitute_and_evaluate():
    p = NCPoly.word(W(0), W(1)) + NCPoly.const(ONE)
    sub = p.substitute({W(0): NCPoly.letter(W(1))})
    assert sub == NCPoly.word(W(1), W(1)) + NCPoly.const(ONE)
    assert p.evaluate({W(0): 2, W(1): 3}, 1) == 7


def test_relation_set_filter_and_lookup():
    rs = RelationSet([("a", NCPoly.letter(W(0))), ("b", NCPoly.letter(G(1)))])
    assert rs.labels() == ["a", "b"]
    assert rs.get("b") == NCPoly.letter(G(1))
    assert len(rs.filter(lambda l, p: G(1) in p.letters())) == 1
