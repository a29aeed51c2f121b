"""Root vectors of the positive part of U_q(affine sl2) and the alternating dictionary."""

from __future__ import annotations

from dataclasses import dataclass, field

from .freealg import E0, E1, F0, F1, G, GenSymbol, Gt, Kind, NCPoly, W, comm
from .generators import build_generators, gamma_quotient
from .params import FMParams
from .report import CheckReport
from .scalars import ONE, Q, RatFuncQ, qpow

__all__ = [
    "RootVectorTable",
    "build_root_vectors",
    "iota",
    "iota_images",
    "verify_dictionary",
    "omega_map",
    "DICTIONARY_PARAMS",
]

_B = Q + Q.inverse()
_QM = Q - Q.inverse()

# parameters under which the dictionary takes its standard form
DICTIONARY_PARAMS = FMParams(k_plus=qpow(2), k_minus=-Q.inverse())


def _L(sym: GenSymbol) -> NCPoly:
    return NCPoly.letter(sym)


@dataclass
class RootVectorTable:
    """Keys: ``("a1", k)`` for k*delta + alpha_1, ``("a0", k)``, ``("d", k)`` for k*delta."""

    n_max: int
    entries: dict = field(default_factory=dict)

    def real1(self, k: int) -> NCPoly:
        return self.entries[("a1", k)]

    def real0(self, k: int) -> NCPoly:
        return self.entries[("a0", k)]

    def imag(self, k: int) -> NCPoly:
        return self.entries[("d", k)]

    @property
    def E_delta(self) -> NCPoly:
        return self.imag(1)


def _series_log(ys: list[NCPoly], n: int) -> list[NCPoly]:
    """Coefficients 1..n of log(1 + Y), Y = sum_{k>=1} ys[k] z^k (ys[0] unused)."""
    out = [NCPoly() for _ in range(n + 1)]
    power = [NCPoly.const(ONE)] + [NCPoly() for _ in range(n)]  # Y^0
    for m in range(1, n + 1):
        nxt = [NCPoly() for _ in range(n + 1)]
        for i in range(n + 1):
            if power[i].is_zero():
                continue
            for j in range(1, n + 1 - i):
                nxt[i + j] = nxt[i + j] + power[i] * ys[j]
        power = nxt
        c = RatFuncQ(1) / m if m % 2 else RatFuncQ(-1) / m
        for k in range(n + 1):
            out[k] = out[k] + power[k].scale(c)
    return out


def build_root_vectors(n_max: int = 2) -> RootVectorTable:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    e: dict = {("a1", 0): _L(E1), ("a0", 0): _L(E0)}
    psi = [NCPoly()]
    for k in range(1, n_max + 1):
        # psi_k needs E_{(k-1) delta + alpha_0}; E_delta comes first
        a0 = e[("a0", k - 1)]
        psi.append(a0 * _L(E1) - (_L(E1) * a0).scale(qpow(-2)))
        if k == 1:
            e[("d", 1)] = psi[1]
        ed = e[("d", 1)]
        e[("a1", k)] = comm(ed, e[("a1", k - 1)]).scale(_B.inverse())
        e[("a0", k)] = comm(e[("a0", k - 1)], ed).scale(_B.inverse())
    logs = _series_log([p.scale(_QM) for p in psi], n_max)
    for k in range(1, n_max + 1):
        e[("d", k)] = logs[k].scale(_QM.inverse())
    return RootVectorTable(n_max=n_max, entries=e)


def iota(p: NCPoly) -> NCPoly:
    """W0 -> E1, W1 -> E0 on a polynomial in W0, W1 (Deltas must be gone)."""
    if p.central_indices():
        raise ValueError("apply the quotient by the central elements first")
    return p.substitute({W(0): _L(E1), W(1): _L(E0)})


def iota_images(n_max: int = 1, params: FMParams | None = None) -> dict:
    """Image of every alternating generator with index <= n_max + 1 in {E0, E1}."""
    table = build_generators(n_max, params or DICTIONARY_PARAMS)
    return {sym: iota(gamma_quotient(poly)) for sym, poly in table.entries.items()}


def omega_map(p: NCPoly) -> NCPoly:
    """Antiautomorphism: reverse words, E_i <-> F_i, q -> q^-1."""
    swap = {Kind.E0: F0, Kind.E1: F1, Kind.F0: E0, Kind.F1: E1}

    def f(s: GenSymbol) -> GenSymbol:
        if s.kind not in swap:
            raise ValueError(f"{s.label()} is outside the E/F alphabet")
        return swap[s.kind]

    return p.map_letters(f, reverse=True).map_coeffs(lambda c: c.invert_s())


def _alt(p: NCPoly, images: dict) -> NCPoly:
    return p.substitute(lambda s: images.get(s))


def verify_dictionary() -> CheckReport:
    """Forward images of the alternating generators and of the inverse formulas."""
    rv = build_root_vectors(2)
    img = iota_images(1)
    ed, e1, e0 = rv.E_delta, _L(E1), _L(E0)
    a1, a0 = rv.real1(1), rv.real0(1)
    c = _B * _B
    forward = {
        "W0": (img[W(0)], e1),
        "W1": (img[W(1)], e0),
        "G1": (img[G(1)], ed.scale(Q)),
        "Gt1": (img[Gt(1)], ed.scale(-qpow(3)) + (e0 * e1).scale(qpow(3) - Q.inverse())),
        "W-1": (img[W(-1)], ((ed * e1).scale(-_QM) + a1.scale(qpow(2) + 1)).scale(c.inverse())),
        "W2": (img[W(2)], ((e0 * ed).scale(-_QM) + a0.scale(qpow(2) + 1)).scale(c.inverse())),
    }
    results: dict = {}
    residuals: dict = {}
    for name, (got, want) in forward.items():
        d = got - want
        results["iota." + name] = d.is_zero()
        if not d.is_zero():
            residuals["iota." + name] = d.to_text()

    # inverse formulas, pushed forward through iota
    g1, w0, w1 = _L(G(1)), _L(W(0)), _L(W(1))
    k = _QM / _B * qpow(-2)
    inverse = {
        "E1": (w0, e1),
        "E0": (w1, e0),
        "Edelta.as_G1": (g1.scale(Q.inverse()), ed),
        "Edelta.as_G1W0": ((g1 * w0).scale(Q.inverse()), ed),
        "Edelta+a1": ((g1 * w0).scale(k) + _L(W(-1)).scale(1 + qpow(-2)), a1),
        "Edelta+a0": ((w1 * g1).scale(k) + _L(W(2)).scale(1 + qpow(-2)), a0),
    }
    for name, (alt, want) in inverse.items():
        d = _alt(alt, img) - want
        results["inverse." + name] = d.is_zero()
        if not d.is_zero():
            residuals["inverse." + name] = d.to_text()

    gt_vs_g = img[Gt(1)] - img[G(1)] == comm(E1, E0).scale(_B)
    results["iota.Gt1_minus_G1"] = gt_vs_g
    required = [key for key in results if key != "inverse.Edelta.as_G1W0"]
    ok = all(results[key] for key in required) and not results["inverse.Edelta.as_G1W0"]
    reading = "E_delta -> q^-1 G1" if results["inverse.Edelta.as_G1"] else "unresolved"
    return CheckReport.of(
        "dictionary",
        ok,
        "alternating generators versus root vectors",
        results=results,
        residuals=residuals,
        edelta_reading=reading,
    )
