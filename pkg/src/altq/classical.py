"""The q -> 1 limit: classical r-matrices, the Lie-type relations and the loop realization."""

from __future__ import annotations

from fractions import Fraction

from .fm import _extract, embed, permutation_matrix
from .freealg import G, GenSymbol, Gt, Kind, NCPoly, RelationCollector, RelationSet, W, comm
from .generators import build_generators
from .report import CheckReport
from .scalars import ONE, PoleAtPoint, RatFuncQ, as_ratfunc, eval_at
from .series import Series, SeriesMatrix, TruncationTooSmall
from .spans import compare_relation_spans

__all__ = [
    "RHO_CLASSICAL",
    "check_ns_cybe",
    "check_cybe",
    "classical_relations",
    "classical_derived_relations",
    "build_B",
    "extract_classical_fm",
    "check_classical_fm",
    "LoopElement",
    "loop_image",
    "loop_realization_check",
    "specialize_generators_q1",
    "check_specialization",
]

RHO_CLASSICAL = 16


def _c(x) -> RatFuncQ:
    return as_ratfunc(Fraction(x))


def _m(nvars: int, exps: dict, coeff) -> Series:
    e = [0] * nvars
    for i, p in exps.items():
        e[i] += p
    return Series.monomial(nvars, tuple(e), _c(coeff) if not isinstance(coeff, RatFuncQ) else coeff)


def _z(n: int) -> Series:
    return Series.zero(n)


def _comm(a: SeriesMatrix, b: SeriesMatrix) -> SeriesMatrix:
    return a * b - b * a


def _smul(s: Series, m: SeriesMatrix) -> SeriesMatrix:
    return SeriesMatrix([[s * e for e in row] for row in m.rows])


def _first_bad(m: SeriesMatrix):
    for i, j, e in m.entries():
        if not e.is_zero():
            return [i, j]
    return None


# -- r-matrices, numerators only --------------------------------------------------------------

def _rbar_num(a: int, b: int, n: int = 3) -> SeriesMatrix:
    """N with rbar(u_a, u_b) = u_b N / (u_a^2 - u_b^2)."""
    vb = _m(n, {b: 1}, 1)
    z = _z(n)
    two_ua = _m(n, {a: 1}, 2)
    return SeriesMatrix([[vb, z, z, z], [z, -vb, two_ua, z], [z, two_ua, -vb, z], [z, z, z, vb]])


def check_ns_cybe() -> CheckReport:
    """Non-standard classical Yang-Baxter equation with all denominators cleared."""
    n = 3
    N13 = embed(_rbar_num(0, 2), (0, 2))
    N23 = embed(_rbar_num(1, 2), (1, 2))
    N21 = embed(_rbar_num(1, 0), (1, 0))  # rbar_21(u2, u1)
    N12 = embed(_rbar_num(0, 1), (0, 1))
    u = [lambda p, i=i: _m(n, {i: p}, 1) for i in range(n)]
    d12 = u[0](2) - u[1](2)
    d13 = u[0](2) - u[2](2)
    d23 = u[1](2) - u[2](2)
    lhs = _smul(d12 * u[2](2), _comm(N13, N23))
    rhs = _smul(-(d23 * u[0](1) * u[2](1)), _comm(N21, N13)) + _smul(d13 * u[2](1) * u[1](1), _comm(N23, N12))
    diff = lhs - rhs
    P = permutation_matrix(2)
    sym = (P * _rbar_num(0, 1, 2) * P - _rbar_num(0, 1, 2)).is_zero()
    bad = _first_bad(diff)
    return CheckReport.of(
        "classical.nscybe",
        bad is None and sym,
        "non-standard classical Yang-Baxter equation",
        residual_zero=bad is None,
        first_nonzero=bad,
        r21_equals_r12=sym,
    )


def _r_num(a: int, b: int, n: int = 3) -> SeriesMatrix:
    """N with r(z_a/z_b) = N / (z_a - z_b)."""
    za, zb = _m(n, {a: 1}, 1), _m(n, {b: 1}, 1)
    half = (za + zb).scale(_c(Fraction(1, 2)))
    z = _z(n)
    return SeriesMatrix([
        [-half, z, z, z],
        [z, half, zb.scale(_c(-2)), z],
        [z, za.scale(_c(-2)), half, z],
        [z, z, z, -half],
    ])


def check_cybe() -> CheckReport:
    """Classical Yang-Baxter equation for the traceless trigonometric r-matrix."""
    n = 3
    N13 = embed(_r_num(0, 2), (0, 2))
    N23 = embed(_r_num(1, 2), (1, 2))
    N12 = embed(_r_num(0, 1), (0, 1))
    z = [_m(n, {i: 1}, 1) for i in range(n)]
    lhs = _smul(z[0] - z[1], _comm(N13, N23))
    rhs = _smul(z[1] - z[2], _comm(N13, N12)) + _smul(z[0] - z[2], _comm(N23, N12))
    bad = _first_bad(lhs - rhs)
    # r12(z) = -r21(1/z): compare numerators after clearing (z - 1)
    P = permutation_matrix(3)
    r_z = _r_num(0, 1)
    r_inv = _r_num(1, 0)  # numerator of r(z_b/z_a) over (z_b - z_a)
    anti = (r_z - P * r_inv * P).is_zero()
    return CheckReport.of(
        "classical.cybe",
        bad is None and anti,
        "classical Yang-Baxter equation for r(z)",
        residual_zero=bad is None,
        first_nonzero=bad,
        antisymmetry=anti,
    )


# -- the classical algebra ----------------------------------------------------------------------

def _L(sym) -> NCPoly:
    return NCPoly.letter(sym)


def classical_relations(k_max: int, rho_c=RHO_CLASSICAL) -> RelationSet:
    """Instances of the four classical families with k, l in [0, k_max]."""
    rc = _c(rho_c)
    half = _c(Fraction(1, 2))
    out = RelationCollector()
    ks = range(k_max + 1)
    for k in ks:
        for l in ks:
            tag = f"[k={k},l={l}]"
            out.add("po1" + tag, comm(W(-l), W(k + 1)) - (_L(Gt(k + l + 1)) - _L(G(k + l + 1))).scale(half))
            out.add("po2a" + tag, comm(Gt(k + 1), W(-l)) - _L(W(-k - l - 1)).scale(rc))
            out.add("po2b" + tag, comm(W(-l), G(k + 1)) - _L(W(-k - l - 1)).scale(rc))
            out.add("po3a" + tag, comm(W(l + 1), Gt(k + 1)) - _L(W(l + k + 2)).scale(rc))
            out.add("po3b" + tag, comm(G(k + 1), W(l + 1)) - _L(W(l + k + 2)).scale(rc))
            out.add("po4a" + tag, comm(W(-k), W(-l)))
            out.add("po4b" + tag, comm(W(k + 1), W(l + 1)))
            out.add("po4c" + tag, comm(G(k + 1), G(l + 1)))
            out.add("po4d" + tag, comm(Gt(k + 1), Gt(l + 1)))
    return out.result()


def classical_derived_relations(k_max: int, rho_c=RHO_CLASSICAL) -> RelationSet:
    """The quantum defining and derived families at rho = rho_c, evaluated at q = 1.

    The scalar G_0 has a pole at q = 1, but it only enters through
    q-commutators where (q - 1/q) G_0 = rho stays finite.
    """
    from .relations import defining_relations, derived_relations

    quantum = defining_relations(k_max, _c(rho_c)) + derived_relations(k_max, _c(rho_c))
    out = RelationCollector()
    for lab, p in quantum:
        out.add("c" + lab, p.map_coeffs(lambda c: _c(eval_at(c, 1))))
    return out.result()


def build_B(order: int, var: int = 0, nvars: int = 1) -> SeriesMatrix:
    """B(u) with generating functions truncated after U^{-order}, U = u^2/2."""
    trust = [None] * nvars
    trust[var] = -2 * order
    trust = tuple(trust)

    def gen(sym_of_k, pref: int, scale) -> Series:
        s = Series(nvars, trust=trust)
        for k in range(order):
            # U^{-k-1} = 2^{k+1} u^{-2k-2}
            s = s + Series(nvars, {_exp(nvars, var, -2 * k - 2 + pref): NCPoly.letter(sym_of_k(k)).scale(_c(Fraction(2) ** (k + 1) * scale))})
        return s

    q = Fraction(1, 8)
    h = Fraction(1, 2)
    return SeriesMatrix([
        [gen(lambda k: Gt(k + 1), 0, q), gen(lambda k: W(k + 1), 1, h)],
        [gen(lambda k: W(-k), 1, h), gen(lambda k: G(k + 1), 0, q)],
    ])


def _exp(nvars: int, var: int, p: int) -> tuple:
    e = [0] * nvars
    e[var] = p
    return tuple(e)


def _rbar_num2(a: int, b: int) -> SeriesMatrix:
    return _rbar_num(a, b, 2)


def extract_classical_fm(order: int) -> RelationSet:
    """Coefficients of the non-standard classical Yang-Baxter algebra for truncated B(u)."""
    if order < 2:
        raise TruncationTooSmall("extraction needs order >= 2")
    n = 2
    one = SeriesMatrix([[Series.const(n, NCPoly.const(ONE)) if i == j else _z(n) for j in range(2)] for i in range(2)])
    B1 = build_B(order, 0, n).kron(one)
    B2 = one.kron(build_B(order, 1, n))
    u2, v2 = _m(n, {0: 2}, 1), _m(n, {1: 2}, 1)
    # (u^2 - v^2)[B1, B2] = u (u^2 - v^2) rbar21(v,u)-part ... with rbar(v,u) = u N(v,u)/(v^2 - u^2)
    Nvu = _rbar_num2(1, 0)
    Nuv = _rbar_num2(0, 1)
    lhs = _smul(u2 - v2, _comm(B1, B2))
    rhs = _smul(-_m(n, {0: 1}, 1), _comm(Nvu, B1)) + _smul(_m(n, {1: 1}, 1), _comm(B2, Nuv))
    rels, bad = _extract(lhs - rhs, "nsYB")
    if bad:
        raise AssertionError(f"scalar coefficients in the classical extraction: {bad}")
    return rels


def check_classical_fm(order: int = 3) -> CheckReport:
    extracted = extract_classical_fm(order)
    degs = extracted.degrees()
    allowed = set()
    for k in range(order):
        allowed |= {W(-k), W(k + 1), G(k + 1), Gt(k + 1)}
    edge = {((G(order),), ()), ((Gt(order),), ())}
    claimed = (classical_relations(order - 1) + classical_derived_relations(order - 1)).filter(
        lambda l, p: p.letters() <= allowed and not (edge & p.terms.keys()) and p.degrees() <= degs
    )
    rep = compare_relation_spans(
        extracted, claimed, f"classical.fm.order{order}",
        "classical Yang-Baxter algebra presents the classical relations",
    )
    rep.details["extracted_degrees"] = sorted(degs)
    return rep


# -- loop algebra -------------------------------------------------------------------------------

class LoopElement:
    """Finite sum of 2x2 rational matrices times powers of t; product is matrix product."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        # (i, j, power) -> Fraction
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def unit(cls, i: int, j: int, power: int, c=1) -> "LoopElement":
        return cls({(i, j, power): Fraction(c)})

    @classmethod
    def identity(cls) -> "LoopElement":
        return cls({(0, 0, 0): Fraction(1), (1, 1, 0): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, LoopElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "LoopElement") -> "LoopElement":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return LoopElement(out)

    def __neg__(self):
        return LoopElement({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def _scalar(self, c) -> "LoopElement":
        if isinstance(c, RatFuncQ):
            c = c.constant_value()
        c = Fraction(c)
        return LoopElement({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, LoopElement):
            return self._scalar(other)
        out: dict = {}
        for (i, k, p), a in self.terms.items():
            for (k2, j, p2), b in other.terms.items():
                if k == k2:
                    key = (i, j, p + p2)
                    out[key] = out.get(key, 0) + a * b
        return LoopElement(out)

    def __rmul__(self, other):
        return self._scalar(other)

    def __repr__(self):
        return f"LoopElement({sorted(self.terms.items())})"


def loop_image(sym: GenSymbol, side: str = "right") -> LoopElement:
    """Image of a classical alternating generator in gl2 (x) C[t, 1/t]."""
    k = sym.index
    two = Fraction(2)
    right = side == "right"
    if sym.kind == Kind.WM:  # w_{-k}
        return LoopElement.unit(1, 0, k + 1 if right else -k, two ** (1 - k))
    if sym.kind == Kind.WP:  # w_{k+1}
        return LoopElement.unit(0, 1, k if right else -k - 1, two ** (1 - k))
    m = k  # G(k + 1) = g_{k+1}
    p = m + 1 if right else -m - 1
    if sym.kind == Kind.G:
        return LoopElement.unit(0, 0, p, two ** (3 - m))
    if sym.kind == Kind.GT:
        return LoopElement.unit(1, 1, p, two ** (3 - m))
    raise ValueError(f"{sym.label()} has no loop image")


def _delta_image(n: int, side: str) -> LoopElement:
    """delta_n = g_n + gt_n."""
    return loop_image(G(n), side) + loop_image(Gt(n), side)


def _eval_loop(p: NCPoly, side: str) -> LoopElement:
    return p.evaluate(lambda s: loop_image(s, side), LoopElement.identity(), lambda n: _delta_image(n, side))


def loop_realization_check(k_max: int = 4) -> CheckReport:
    rels = classical_relations(k_max)
    failing = {}
    for side in ("right", "left"):
        bad = [lab for lab, p in rels if not _eval_loop(p, side).is_zero()]
        failing[side] = bad
    return CheckReport.of(
        f"classical.loop.k{k_max}",
        not failing["right"] and not failing["left"],
        "loop realization of the classical algebra (central charge zero)",
        relations=len(rels),
        failing=failing,
    )


# -- q -> 1 ---------------------------------------------------------------------------------------

def specialize_generators_q1(n_max: int = 2) -> dict:
    """Generator polynomials evaluated at q = 1 with rho = 16; raises PoleAtPoint on a pole."""
    table = build_generators(n_max, _c(RHO_CLASSICAL))
    return {sym: p.map_coeffs(lambda c: _c(eval_at(c, 1))) for sym, p in table.entries.items()}


def check_specialization(n_max: int = 2) -> CheckReport:
    try:
        spec = specialize_generators_q1(n_max)
    except PoleAtPoint as exc:  # pragma: no cover - reported, not expected
        return CheckReport.of("classical.specialization", False, "q = 1 specialization", pole=str(exc))
    side = "right"
    images = {sym: _eval_loop(p, side) for sym, p in spec.items()}
    mismatched = sorted(s.label() for s, img in images.items() if img != loop_image(s, side))
    k_rel = max(0, (n_max + 1) // 2 - 1)
    rels = classical_relations(k_rel)
    usable = [(lab, p) for lab, p in rels if p.letters() <= set(images)]
    rel_bad = [lab for lab, p in usable if not p.evaluate(images.__getitem__, LoopElement.identity()).is_zero()]
    return CheckReport.of(
        "classical.specialization",
        not mismatched and not rel_bad,
        "q = 1 specialization of the generator polynomials",
        generators=len(spec),
        mismatched=mismatched,
        relations_checked=len(usable),
        relations_failing=rel_bad,
        w_minus_1=spec[W(-1)].to_text(),
        g_1=spec[G(1)].to_text(),
    )
