from __future__ import annotations

from hypothesis import given
from hypothesis import strategies as st

from altq.scalars import RatFuncQ
from altq.series import Series

coeffs = st.lists(st.integers(-3, 3), min_size=1, max_size=5)


def _series(cs, cut=None):
    terms = {(-i,): RatFuncQ(c) for i, c in enumerate(cs) if cut is None or i < cut}
    trust = (None,) if cut is None else (-cut + 1,)
    return Series(1, terms, trust=trust)


@given(coeffs, coeffs, st.integers(1, 4))
def test_truncated_product_is_correct_where_trusted(a, b, cut):
    exact = _series(a) * _series(b)
    trunc = _series(a, cut) * _series(b, cut)
    for e, c in trunc.trusted_terms().items():
        assert exact.coeff(e, RatFuncQ(0)) == c
    for e, c in exact.terms.items():
        if trunc.trusted(e):
            assert trunc.coeff(e, RatFuncQ(0)) == c


def test_exact_series_are_fully_trusted():
    s = _series([1, 2, 3])
    assert s.is_exact()
    assert s.trusted((-10,))


def test_truncation_cuts_trust():
    s = _series([1, 1, 1], cut=2)
    assert s.trusted((-1,)) and not s.trusted((-2,))
