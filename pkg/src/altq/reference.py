"""Closed forms of the first generators and central elements, typed in by hand.

These are independent of the recursion code and serve as oracles for it.
"""

from __future__ import annotations

from .freealg import G, Gt, NCPoly, W, delta
from .relations import rho_of
from .scalars import ONE, Q, qpow

__all__ = ["ref_G1", "ref_Wm1", "ref_G2", "ref_delta"]

_q = Q
_qi = Q.inverse()


def _w(n: int) -> NCPoly:
    return NCPoly.letter(W(n))


def _word(*ns: int) -> NCPoly:
    out = NCPoly.const(ONE)
    for n in ns:
        out = out * _w(n)
    return out


def ref_G1() -> NCPoly:
    return _word(1, 0).scale(_q) - _word(0, 1).scale(_qi) + delta(1).scale(ONE / 2)


def ref_Wm1(params=None) -> NCPoly:
    rho = rho_of(params)
    core = _word(0, 1, 0).scale(qpow(2) + qpow(-2)) - _word(0, 0, 1) - _word(1, 0, 0)
    return core.scale(rho.inverse()) + (delta(1) * _w(0)).scale((_q - _qi) / (rho * 2))


def ref_G2(params=None) -> NCPoly:
    rho = rho_of(params)
    q2 = qpow(2) + qpow(-2)
    core = (
        _word(0, 0, 1, 1).scale(qpow(-3) + _qi)
        - _word(1, 1, 0, 0).scale(qpow(3) + _q)
        + (_word(0, 1, 1, 0) + _word(1, 0, 0, 1)).scale(qpow(-3) - qpow(3))
        - _word(0, 1, 0, 1).scale(qpow(-5) + qpow(-3) + _qi * 2)
        + _word(1, 0, 1, 0).scale(qpow(5) + qpow(3) + _q * 2)
    )
    out = core.scale((rho * q2).inverse())
    out = out + (delta(1) * (_word(1, 0).scale(_q) - _word(0, 1).scale(_qi))).scale((_q - _qi) / (rho * 2))
    out = out - (delta(1) * delta(1)).scale((_q - _qi) / (rho * q2 * 4))
    return out + delta(2).scale(ONE / 2)


def _g(n: int) -> NCPoly:
    return NCPoly.letter(G(n))


def _gt(n: int) -> NCPoly:
    return NCPoly.letter(Gt(n))


def ref_delta(n: int, params=None) -> NCPoly:
    """Displayed forms of Delta_1, Delta_2, Delta_3 (n = 0, 1, 2)."""
    rho = rho_of(params)
    qm = _q - _qi
    if n == 0:
        return _g(1) + _gt(1) - (_word(0, 1) + _word(1, 0)).scale(qm)
    if n == 1:
        q2 = qpow(2) + qpow(-2)
        ww = _word(0, 2).scale(_qi) + _word(2, 0).scale(_q) + _word(1, -1).scale(_qi) + _word(-1, 1).scale(_q)
        gg = _gt(1) * _g(1) + _g(1) * _gt(1)
        return _g(2) + _gt(2) - ww.scale((qpow(2) - qpow(-2)) / q2) + gg.scale(qm / (q2 * rho))
    if n == 2:
        d = qpow(2) + qpow(-2) - 1
        ww = (
            _word(0, 3).scale(qpow(-2)) + _word(3, 0).scale(qpow(2))
            + _word(1, -2).scale(qpow(-2)) + _word(-2, 1).scale(qpow(2))
        )
        gg = _gt(2) * _g(1) + _g(2) * _gt(1)
        return (
            _g(3) + _gt(3) - ww.scale(qm / d) - (_word(2, -1) + _word(-1, 2)).scale(qm / d)
            + gg.scale(qm / (d * rho))
        )
    raise ValueError("only Delta_1, Delta_2, Delta_3 are tabulated")
