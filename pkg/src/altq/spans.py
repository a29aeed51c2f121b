"""Linear spans of relation sets: exact row reduction over Q(s) with certificates."""

from __future__ import annotations

from .freealg import NCPoly, RelationSet, _word_key
from .report import CheckReport
from .scalars import RatFuncQ

__all__ = ["SpanBasis", "compare_relation_spans", "span_contains"]


class SpanBasis:
    """Echelon basis keyed by deglex-leading term.

    Each stored row remembers how it was combined from the input relations,
    so membership tests return explicit certificates.
    """

    def __init__(self, relations: RelationSet | None = None):
        self.rows: dict = {}  # pivot key -> (terms dict, combo dict label -> coeff)
        self.labels: list[str] = []
        if relations is not None:
            for label, poly in relations:
                self.add(label, poly)

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, terms: dict, combo: dict) -> tuple[dict, dict]:
        terms = dict(terms)
        combo = dict(combo)
        while terms:
            lead = max(terms, key=_word_key)
            row = self.rows.get(lead)
            if row is None:
                break
            rterms, rcombo = row
            f = terms[lead]
            for k, v in rterms.items():
                nv = terms.get(k)
                nv = -(v * f) if nv is None else nv - v * f
                if nv.is_zero():
                    terms.pop(k, None)
                else:
                    terms[k] = nv
            for k, v in rcombo.items():
                nv = combo.get(k)
                nv = -(v * f) if nv is None else nv - v * f
                if nv.is_zero():
                    combo.pop(k, None)
                else:
                    combo[k] = nv
        return terms, combo

    def add(self, label: str, poly: NCPoly) -> bool:
        """Insert; returns False when the relation was already in the span."""
        self.labels.append(label)
        terms, combo = self._reduce(poly.terms, {label: RatFuncQ(1)})
        if not terms:
            return False
        lead = max(terms, key=_word_key)
        inv = terms[lead].inverse()
        terms = {k: v * inv for k, v in terms.items()}
        combo = {k: v * inv for k, v in combo.items()}
        self.rows[lead] = (terms, combo)
        return True

    def certificate(self, poly: NCPoly) -> dict | None:
        """Coefficients c with poly == sum c[label] * relation[label], or None."""
        terms, combo = self._reduce(poly.terms, {})
        if terms:
            return None
        return {k: -v for k, v in combo.items()}

    def residual(self, poly: NCPoly) -> NCPoly:
        terms, _ = self._reduce(poly.terms, {})
        return NCPoly(terms)

    def contains(self, poly: NCPoly) -> bool:
        return self.certificate(poly) is not None


def span_contains(big: RelationSet, small: RelationSet) -> tuple[bool, dict, str | None]:
    basis = SpanBasis(big)
    certs: dict = {}
    for label, poly in small:
        c = basis.certificate(poly)
        if c is None:
            return False, certs, label
        certs[label] = c
    return True, certs, None


def _fmt_cert(cert: dict) -> dict:
    return {k: str(v) for k, v in sorted(cert.items())}


def compare_relation_spans(
    A: RelationSet, B: RelationSet, check_id: str = "spans", anchor: str = ""
) -> CheckReport:
    """Mutual containment of two relation spans, with combination certificates."""
    a_in_b, cert_ab, bad_ab = span_contains(B, A)
    b_in_a, cert_ba, bad_ba = span_contains(A, B)
    details = {
        "size_A": len(A),
        "size_B": len(B),
        "rank_A": SpanBasis(A).rank,
        "rank_B": SpanBasis(B).rank,
        "A_in_B": a_in_b,
        "B_in_A": b_in_a,
        "certificates_A_in_B": {k: _fmt_cert(v) for k, v in cert_ab.items()},
        "certificates_B_in_A": {k: _fmt_cert(v) for k, v in cert_ba.items()},
    }
    if bad_ab is not None:
        details["counterexample_A_not_in_B"] = bad_ab
        details["residual"] = SpanBasis(B).residual(A.get(bad_ab)).to_text()
    if bad_ba is not None:
        details["counterexample_B_not_in_A"] = bad_ba
        details["residual_B"] = SpanBasis(A).residual(B.get(bad_ba)).to_text()
    return CheckReport.of(check_id, a_in_b and b_in_a, anchor, **details)
