from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from altq.freealg import G, Gt, NCPoly, W
from altq.scalars import RatFuncQ

small_fracs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def laurent(draw, max_terms: int = 3) -> RatFuncQ:
    n = draw(st.integers(0, max_terms))
    out = RatFuncQ(0)
    for _ in range(n):
        e = draw(st.integers(-3, 3))
        c = draw(small_fracs)
        out = out + RatFuncQ(c) * RatFuncQ.from_laurent({e: Fraction(1)})
    return out


@st.composite
def ratfunc(draw) -> RatFuncQ:
    num = draw(laurent())
    den = draw(laurent().filter(lambda d: not d.is_zero()))
    return num / den


LETTERS = [W(0), W(1), W(-1), W(2), G(1), Gt(1)]


@st.composite
def ncpoly(draw, max_terms: int = 3, max_len: int = 3) -> NCPoly:
    out = NCPoly()
    for _ in range(draw(st.integers(0, max_terms))):
        word = draw(st.lists(st.sampled_from(LETTERS), max_size=max_len))
        c = draw(small_fracs.filter(lambda x: x != 0))
        out = out + NCPoly.word(*word, coeff=RatFuncQ(c))
    return out
