"""Freidel-Maillet type presentation: R-matrix, K-matrices, relation extraction, quantum determinant."""

from __future__ import annotations

from .freealg import G, Gt, NCPoly, RelationCollector, RelationSet, W
from .generators import central_delta
from .params import DEFAULT_PARAMS, FMParams
from .relations import defining_relations, derived_relations
from .report import CheckReport
from .scalars import ONE, ZERO, Q, RatFuncQ, qpow
from .series import Series, SeriesMatrix, TruncationTooSmall
from .spans import SpanBasis, compare_relation_spans

__all__ = [
    "r_matrix",
    "r0_matrix",
    "permutation_matrix",
    "embed",
    "check_ybe",
    "build_K",
    "build_K_prime",
    "fm_residual",
    "extract_fm_relations",
    "claimed_relations",
    "check_fm_equivalence",
    "sklyanin_delta",
    "check_determinant",
    "TruncationTooSmall",
]

_B = Q + Q.inverse()
_QM = Q - Q.inverse()


# -- scalar matrices ----------------------------------------------------------------

def _const(nvars: int, c) -> Series:
    return Series.const(nvars, c)


def _mono(nvars: int, exps, c) -> Series:
    return Series.monomial(nvars, tuple(exps), c)


def r_matrix(ratio: tuple, nvars: int | None = None) -> SeriesMatrix:
    """R(x) for the monomial x = prod var_i^ratio[i]; entries are exact Laurent polynomials."""
    ratio = tuple(ratio)
    n = len(ratio) if nvars is None else nvars
    ratio = ratio + (0,) * (n - len(ratio))
    neg = tuple(-e for e in ratio)
    a = _mono(n, ratio, Q) + _mono(n, neg, -Q.inverse())
    b = _mono(n, ratio, ONE) + _mono(n, neg, -ONE)
    c = _const(n, _QM)
    z = Series.zero(n)
    return SeriesMatrix([
        [a, z, z, z],
        [z, b, c, z],
        [z, c, b, z],
        [z, z, z, a],
    ])


def r0_matrix(nvars: int, inverse: bool = False) -> SeriesMatrix:
    d = Q if inverse else Q.inverse()
    z = Series.zero(nvars)
    one = _const(nvars, ONE)
    dd = _const(nvars, d)
    return SeriesMatrix([[one, z, z, z], [z, dd, z, z], [z, z, dd, z], [z, z, z, one]])


def permutation_matrix(nvars: int) -> SeriesMatrix:
    z = Series.zero(nvars)
    one = _const(nvars, ONE)
    return SeriesMatrix([[one, z, z, z], [z, z, one, z], [z, one, z, z], [z, z, z, one]])


def identity_matrix(dim: int, nvars: int, one=ONE) -> SeriesMatrix:
    z = Series.zero(nvars)
    return SeriesMatrix([[_const(nvars, one) if i == j else z for j in range(dim)] for i in range(dim)])


def embed(m: SeriesMatrix, legs: tuple[int, int], nlegs: int = 3) -> SeriesMatrix:
    """Place a two-leg operator on legs ``legs`` of ``nlegs`` copies of C^2."""
    dim = 2 ** nlegs
    nv = m.nvars
    rows = [[Series.zero(nv) for _ in range(dim)] for _ in range(dim)]
    a, b = legs
    for i in range(dim):
        bits_i = [(i >> (nlegs - 1 - t)) & 1 for t in range(nlegs)]
        for j in range(dim):
            bits_j = [(j >> (nlegs - 1 - t)) & 1 for t in range(nlegs)]
            if any(bits_i[t] != bits_j[t] for t in range(nlegs) if t not in (a, b)):
                continue
            rows[i][j] = m.rows[2 * bits_i[a] + bits_i[b]][2 * bits_j[a] + bits_j[b]]
    return SeriesMatrix(rows)


def _first_nonzero(m: SeriesMatrix):
    for i, j, e in m.entries():
        if not e.is_zero():
            return (i, j), {str(k): str(v) for k, v in sorted(e.terms.items())}
    return None, None


def check_ybe(r_factory=r_matrix) -> CheckReport:
    """R12(u/v) R13(u) R23(v) == R23(v) R13(u) R12(u/v) as exact matrices."""
    r12 = embed(r_factory((1, -1)), (0, 1))
    r13 = embed(r_factory((1, 0)), (0, 2))
    r23 = embed(r_factory((0, 1)), (1, 2))
    diff = r12 * r13 * r23 - r23 * r13 * r12
    pos, val = _first_nonzero(diff)
    p = permutation_matrix(1)
    r1 = r_factory((0,), 1)
    p_ok = (p * p - identity_matrix(4, 1)).is_zero()
    r1_ok = (r1 - p.scale(_QM)).is_zero()
    conj_ok = (p * r_factory((1,), 1) * p - r_factory((1,), 1)).is_zero()
    return CheckReport.of(
        "ybe",
        pos is None and p_ok and r1_ok and conj_ok,
        "Yang-Baxter equation for the trigonometric R-matrix",
        ybe_zero=pos is None,
        first_nonzero=pos,
        residual=val,
        R1_is_scaled_P=r1_ok,
        P_involution=p_ok,
        P_conjugation_symmetric=conj_ok,
    )


# -- K-matrices ----------------------------------------------------------------------

def _k_generic(order: int, params: FMParams, var: int, nvars: int, prime: bool) -> SeriesMatrix:
    """K(u) (or K'(u) in the variable x = 1/u) truncated at U^{-order}.

    Both are expanded in negative powers of their variable: K has prefactor
    u q and U^{-1} = (q+q^-1)/q * u^-2; K' has prefactor x/q and
    U(1/(u q))^{-1} = q (q+q^-1) x^-2.
    """
    if order < 1:
        raise TruncationTooSmall("order must be >= 1")
    if prime:
        pref, step = Q.inverse(), Q * _B
        diag = (lambda k: W(k + 1), lambda k: W(-k))
    else:
        pref, step = Q, _B / Q
        diag = (lambda k: W(-k), lambda k: W(k + 1))

    def e(k: int):
        ex = [0] * nvars
        ex[var] = -2 * (k + 1)
        return ex

    def series(f, coeff_of_k, odd: bool) -> Series:
        s = Series.zero(nvars)
        for k in range(order):
            ex = e(k)
            if odd:
                ex[var] += 1
            s = s + _mono(nvars, ex, NCPoly.letter(f(k)).scale(coeff_of_k(k)))
        return s

    trust = [None] * nvars
    trust[var] = -2 * order
    kp, km = params.k_plus, params.k_minus
    d1 = series(diag[0], lambda k: pref * step ** (k + 1), True)
    d2 = series(diag[1], lambda k: pref * step ** (k + 1), True)
    o12 = series(lambda k: G(k + 1), lambda k: step ** (k + 1) / (km * _B), False)
    o21 = series(lambda k: Gt(k + 1), lambda k: step ** (k + 1) / (kp * _B), False)
    o12 = o12 + _const(nvars, NCPoly.const(kp * _B / _QM))
    o21 = o21 + _const(nvars, NCPoly.const(km * _B / _QM))
    for s in (d1, d2, o12, o21):
        s.trust = tuple(trust)
    return SeriesMatrix([[d1, o12], [o21, d2]])


def build_K(order: int, params: FMParams | None = None, var: int = 0, nvars: int = 1) -> SeriesMatrix:
    """K(u) with generating functions truncated at U^{-order}, expanded in u^{-1}."""
    return _k_generic(order, params or DEFAULT_PARAMS, var, nvars, prime=False)


def build_K_prime(order: int, params: FMParams | None = None, var: int = 0, nvars: int = 1) -> SeriesMatrix:
    """K'(u) expanded in x = u^{-1} (so again in negative powers)."""
    return _k_generic(order, params or DEFAULT_PARAMS, var, nvars, prime=True)


def _ncpoly_identity(nvars: int, dim: int) -> SeriesMatrix:
    return identity_matrix(dim, nvars, NCPoly.const(ONE))


def fm_residual(K1: SeriesMatrix, K2: SeriesMatrix, R: SeriesMatrix, R0: SeriesMatrix, one_elem=None) -> SeriesMatrix:
    """R (K1 (x) I) R0 (I (x) K2) - (I (x) K2) R0 (K1 (x) I) R.

    ``one_elem`` is the unit of the coefficient ring (default: the free algebra).
    """
    if one_elem is None:
        one = _ncpoly_identity(K1.nvars, 2)
    else:
        one = identity_matrix(2, K1.nvars, one_elem)
    A = K1.kron(one)
    B = one.kron(K2)
    return R * A * R0 * B - B * R0 * A * R


def _extract(diff: SeriesMatrix, prefix: str) -> tuple[RelationSet, list]:
    coll = RelationCollector()
    scalar_violations = []
    for i, j, ser in diff.entries():
        for ex, coeff in sorted(ser.trusted_terms().items()):
            if not isinstance(coeff, NCPoly):
                coeff = NCPoly.const(coeff)
            for deg, piece in sorted(coeff.split_by_degree().items()):
                if deg == (0, 0):
                    scalar_violations.append(((i, j), ex))
                    continue
                coll.add(f"{prefix}[{i},{j}]{ex}{deg}", piece)
    return coll.result(), scalar_violations


def extract_fm_relations(
    order: int, params: FMParams | None = None, variant: str = "RE", *, with_report: bool = False
):
    """Every trusted coefficient of the FM equation, split by grading.

    ``variant`` is ``"RE"`` (K(u), R0) or ``"REp"`` (K'(u), R0^{-1}).  For REp
    both spectral variables are inverted, which turns R(u/v) into R(y/x).
    """
    if order < 2:
        raise TruncationTooSmall("extraction needs order >= 2")
    params = params or DEFAULT_PARAMS
    v = variant.lower()
    if v == "re":
        K1 = build_K(order, params, 0, 2)
        K2 = build_K(order, params, 1, 2)
        R = r_matrix((1, -1))
        R0 = r0_matrix(2)
    elif v == "rep":
        K1 = build_K_prime(order, params, 0, 2)
        K2 = build_K_prime(order, params, 1, 2)
        R = r_matrix((-1, 1))
        R0 = r0_matrix(2, inverse=True)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    rels, bad = _extract(fm_residual(K1, K2, R, R0), variant)
    if with_report:
        return rels, bad
    return rels


def claimed_relations(order: int, params: FMParams | None = None, degrees: set | None = None) -> RelationSet:
    """Defining plus derived relations with indices below ``order``.

    Restricted to relations whose letters lie in the truncated K-matrix and,
    when given, whose grading lies in ``degrees``.  Relations with a linear
    term G_order or Gt_order are dropped: in the matrix equation that term
    shares its coefficient with the first diagonal coefficient cut off by the
    truncation, so no finite window at this order can isolate it.
    """
    k_max = order - 1
    allowed = set()
    for k in range(order):
        allowed |= {W(-k), W(k + 1), G(k + 1), Gt(k + 1)}
    edge = {((G(order),), ()), ((Gt(order),), ())}
    rels = defining_relations(k_max, params) + derived_relations(k_max, params)
    return rels.filter(
        lambda l, p: p.letters() <= allowed
        and not (edge & p.terms.keys())
        and (degrees is None or p.degrees() <= degrees)
    )


def check_fm_equivalence(order: int = 3, params: FMParams | None = None, variant: str = "RE") -> CheckReport:
    extracted, bad = extract_fm_relations(order, params, variant, with_report=True)
    degs = extracted.degrees()
    claimed = claimed_relations(order, params, degs)
    rep = compare_relation_spans(
        extracted, claimed, f"fm.{variant.lower()}.order{order}",
        "Freidel-Maillet presentation equals the defining relations",
    )
    rep.details["extracted_degrees"] = sorted(degs)
    rep.details["scalar_violations"] = [str(b) for b in bad]
    if bad:
        rep.status = "fail"
    return rep


# -- quantum determinant -------------------------------------------------------------

def _shift_var(m: SeriesMatrix, factor: RatFuncQ) -> SeriesMatrix:
    """u -> u * factor^{1/...}: multiply the coefficient of u^a by factor**a."""
    rows = []
    for r in m.rows:
        row = []
        for s in r:
            t = Series(s.nvars, trust=s.trust)
            t.terms = {e: c.scale(factor ** e[0]) if isinstance(c, NCPoly) else c * factor ** e[0]
                       for e, c in s.terms.items()}
            row.append(t)
        rows.append(row)
    return SeriesMatrix(rows)


def _u_to_U(s: Series) -> dict:
    """Trusted coefficients of u^{-2m} rewritten as coefficients of U^{-m}."""
    out = {}
    step = Q / _B
    for (a,), c in s.trusted_terms().items():
        if a % 2:
            raise ValueError("odd power of u in a determinant series")
        m = -a // 2
        out[m] = c.scale(step ** m)
    return out


def sklyanin_delta(order: int, params: FMParams | None = None) -> dict:
    """Delta(u) and Gamma(u) as maps m -> coefficient of U^{-m}.

    Returns ``{"gamma": ..., "delta_trace": ..., "delta_formula": ...}``; the two
    Delta expansions come from the projected trace and from the closed formula
    in the generating functions.
    """
    if order < 2:
        raise TruncationTooSmall("determinant needs order >= 2")
    params = params or DEFAULT_PARAMS
    rho = params.rho_bar
    K = build_K(order, params)
    Kq = _shift_var(K, Q)
    one = _ncpoly_identity(1, 2)
    P = permutation_matrix(1).map(NCPoly.const)
    Pm = (_ncpoly_identity(1, 4) - P).map(lambda c: c.scale(ONE / 2))
    prod = Pm * K.kron(one) * r0_matrix(1).map(NCPoly.const) * one.kron(Kq)
    tr = Series.zero(1)
    for i in range(4):
        tr = tr + prod[i, i]
    gamma = _u_to_U(tr)
    delta_trace = {m: c.scale(_QM * 2) for m, c in gamma.items()}
    delta_trace[0] = delta_trace.get(0, NCPoly()) + NCPoly.const(rho * 2 / _QM)
    delta_trace = {m: c for m, c in delta_trace.items() if not c.is_zero()}

    # closed formula in U: W(uq) has U -> q^2 U
    def gen(f, shift: bool):
        return {k + 1: NCPoly.letter(f(k)).scale(qpow(-2 * (k + 1)) if shift else ONE) for k in range(order)}

    Wp_ = gen(lambda k: W(-k), False)
    Wm_ = gen(lambda k: W(k + 1), False)
    Gp_ = gen(lambda k: G(k + 1), False)
    Gm_ = gen(lambda k: Gt(k + 1), False)
    Wpq = gen(lambda k: W(-k), True)
    Wmq = gen(lambda k: W(k + 1), True)
    Gpq = gen(lambda k: G(k + 1), True)
    Gmq = gen(lambda k: Gt(k + 1), True)

    def prod_series(a: dict, b: dict) -> dict:
        out: dict = {}
        for i, x in a.items():
            for j, y in b.items():
                out[i + j] = out.get(i + j, NCPoly()) + x * y
        return out

    def add(acc: dict, d: dict, c: RatFuncQ):
        for m, p in d.items():
            acc[m] = acc.get(m, NCPoly()) + p.scale(c)

    formula: dict = {}
    # u^2 q^2 = q (q+q^-1) U : shifts the U-power by one
    ww = prod_series(Wp_, Wmq)
    add(ww, prod_series(Wm_, Wpq), ONE)
    add(formula, {m - 1: p for m, p in ww.items()}, _QM * Q * _B)
    gg = prod_series(Gp_, Gmq)
    add(gg, prod_series(Gm_, Gpq), ONE)
    add(formula, gg, -_QM / rho)
    for d in (Gp_, Gpq, Gm_, Gmq):
        add(formula, d, -ONE)
    formula = {m: p for m, p in formula.items() if m <= order and not p.is_zero()}
    return {"gamma": gamma, "delta_trace": delta_trace, "delta_formula": formula}


def expected_delta_coefficient(n: int, params: FMParams | None = None) -> NCPoly:
    """-q^{-n-1}(q^{n+1}+q^{-n-1}) Delta_{n+1}, written in the alternating generators."""
    c = -(qpow(-n - 1) * (qpow(n + 1) + qpow(-n - 1)))
    return central_delta(n, params).scale(c)


def _holds_in_reps(diff: NCPoly, params: FMParams) -> bool:
    """Fallback: does ``diff`` vanish in the default dressed representations?"""
    from .reps import alt_ops, default_configs, evaluate_in_rep

    top = max((s.index for s in diff.letters()), default=0)
    for cfg in default_configs(params):
        ops = alt_ops(cfg, top + 1)
        if not evaluate_in_rep(diff, ops, cfg.dim).is_zero():
            return False
    return True


def check_determinant(order: int = 3, params: FMParams | None = None, n_max: int = 1) -> CheckReport:
    """Compare the U^{-n-1} coefficients of Delta(u) with the central Deltas."""
    params = params or DEFAULT_PARAMS
    d = sklyanin_delta(max(order, n_max + 1), params)
    details: dict = {}
    ok = True
    trace_vs_formula = all(
        d["delta_trace"].get(m, NCPoly()) == d["delta_formula"].get(m, NCPoly())
        for m in range(1, max(order, n_max + 1) + 1)
    )
    details["trace_equals_formula"] = trace_vs_formula
    ok &= trace_vs_formula
    const = d["delta_trace"].get(0, NCPoly())
    details["constant_term"] = const.to_text()
    for n in range(n_max + 1):
        got = d["delta_trace"].get(n + 1, NCPoly())
        want = expected_delta_coefficient(n, params)
        literal = got == want
        details[f"U^-{n + 1}_literal"] = literal
        level = "literal"
        if not literal:
            details[f"U^-{n + 1}_residual"] = (got - want).to_text()
            level = "representation" if _holds_in_reps(got - want, params) else "none"
        details[f"U^-{n + 1}_level"] = level
        ok &= level != "none"
    return CheckReport.of("determinant.expansion", ok, "quantum determinant generates the central elements", **details)
