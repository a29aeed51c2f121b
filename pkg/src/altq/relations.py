"""Relation families of the alternating algebra, emitted as ``lhs - rhs``."""

from __future__ import annotations

from .freealg import (
    G,
    Gt,
    NCPoly,
    RelationCollector,
    RelationSet,
    W,
    comm,
    qcomm,
)
from .params import DEFAULT_PARAMS, FMParams
from .scalars import Q, RatFuncQ

__all__ = ["defining_relations", "derived_relations", "rho_of"]


def rho_of(params: FMParams | RatFuncQ | None) -> RatFuncQ:
    if params is None:
        return DEFAULT_PARAMS.rho_bar
    if isinstance(params, FMParams):
        return params.rho_bar
    return params


def _L(sym) -> NCPoly:
    return NCPoly.letter(sym)


def defining_relations(k_max: int, params: FMParams | RatFuncQ | None = None) -> RelationSet:
    """Instances of the eleven defining families with k, l in [0, k_max].

    Zero instances are dropped and instances equal up to a scalar are kept once.
    Labels look like ``def5[k=0,l=1]``; families with two identities carry a
    suffix ``a``/``b``.
    """
    rho = rho_of(params)
    b = Q + Q.inverse()
    out = RelationCollector()
    ks = range(k_max + 1)
    for k in ks:
        dg = (_L(Gt(k + 1)) - _L(G(k + 1))).scale(b.inverse())
        out.add(f"def1a[k={k}]", comm(W(0), W(k + 1)) - dg)
        out.add(f"def1b[k={k}]", comm(W(-k), W(1)) - dg)
        out.add(f"def2a[k={k}]", qcomm(W(0), G(k + 1)) - _L(W(-k - 1)).scale(rho))
        out.add(f"def2b[k={k}]", qcomm(Gt(k + 1), W(0)) - _L(W(-k - 1)).scale(rho))
        out.add(f"def3a[k={k}]", qcomm(G(k + 1), W(1)) - _L(W(k + 2)).scale(rho))
        out.add(f"def3b[k={k}]", qcomm(W(1), Gt(k + 1)) - _L(W(k + 2)).scale(rho))
    for k in ks:
        for l in ks:
            tag = f"[k={k},l={l}]"
            out.add("def4a" + tag, comm(W(-k), W(-l)))
            out.add("def4b" + tag, comm(W(k + 1), W(l + 1)))
            out.add("def5" + tag, comm(W(-k), W(l + 1)) + comm(W(k + 1), W(-l)))
            out.add("def6" + tag, comm(W(-k), G(l + 1)) + comm(G(k + 1), W(-l)))
            out.add("def7" + tag, comm(W(-k), Gt(l + 1)) + comm(Gt(k + 1), W(-l)))
            out.add("def8" + tag, comm(W(k + 1), G(l + 1)) + comm(G(k + 1), W(l + 1)))
            out.add("def9" + tag, comm(W(k + 1), Gt(l + 1)) + comm(Gt(k + 1), W(l + 1)))
            out.add("def10a" + tag, comm(G(k + 1), G(l + 1)))
            out.add("def10b" + tag, comm(Gt(k + 1), Gt(l + 1)))
            out.add("def11" + tag, comm(Gt(k + 1), G(l + 1)) + comm(G(k + 1), Gt(l + 1)))
    return out.result()


def _g0(rho: RatFuncQ) -> NCPoly:
    # G_0 = Gt_0 = rho/(q - q^-1), a central scalar
    return NCPoly.const(rho / (Q - Q.inverse()))


def _G(n: int, rho: RatFuncQ) -> NCPoly:
    return _g0(rho) if n == 0 else _L(G(n))


def _Gt(n: int, rho: RatFuncQ) -> NCPoly:
    return _g0(rho) if n == 0 else _L(Gt(n))


def derived_relations(k_max: int, params: FMParams | RatFuncQ | None = None) -> RelationSet:
    """Instances of the six derived families with k, l in [0, k_max].

    A bare index G_0 (or Gt_0) is read as the central scalar rho/(q - q^-1);
    with that reading the k = 0 instances of the first two families reproduce
    the defining q-commutator relations.
    """
    rho = rho_of(params)
    c = rho * (Q + Q.inverse())
    out = RelationCollector()
    ks = range(k_max + 1)
    for k in ks:
        for l in ks:
            tag = f"[k={k},l={l}]"
            Gk, Gl, Gtk, Gtl = _G(k, rho), _G(l, rho), _Gt(k, rho), _Gt(l, rho)
            out.add("wg1a" + tag, qcomm(W(-k), Gl) - qcomm(W(-l), Gk))
            out.add("wg1b" + tag, qcomm(Gk, W(l + 1)) - qcomm(Gl, W(k + 1)))
            out.add("wg2a" + tag, qcomm(Gtk, W(-l)) - qcomm(Gtl, W(-k)))
            out.add("wg2b" + tag, qcomm(W(l + 1), Gtk) - qcomm(W(k + 1), Gtl))
            out.add(
                "gg1" + tag,
                comm(Gk, Gt(l + 1)) - comm(Gl, Gt(k + 1))
                - (qcomm(W(-l), W(k + 1)) - qcomm(W(-k), W(l + 1))).scale(c),
            )
            out.add(
                "gg2" + tag,
                comm(Gtk, G(l + 1)) - comm(Gtl, G(k + 1))
                - (qcomm(W(l + 1), W(-k)) - qcomm(W(k + 1), W(-l))).scale(c),
            )
            out.add(
                "gg3" + tag,
                qcomm(G(k + 1), Gt(l + 1)) - qcomm(G(l + 1), Gt(k + 1))
                - (comm(W(-l), W(k + 2)) - comm(W(-k), W(l + 2))).scale(c),
            )
            out.add(
                "gg4" + tag,
                qcomm(Gt(k + 1), G(l + 1)) - qcomm(Gt(l + 1), G(k + 1))
                - (comm(W(l + 1), W(-k - 1)) - comm(W(k + 1), W(-l - 1))).scale(c),
            )
    return out.result()
