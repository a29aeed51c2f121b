from __future__ import annotations

import pytest

from altq.fm import (
    TruncationTooSmall,
    check_determinant,
    check_fm_equivalence,
    check_ybe,
    claimed_relations,
    extract_fm_relations,
    sklyanin_delta,
)
from altq.freealg import G, Gt
from altq.params import FMParams


def test_ybe_and_permutation():
    rep = check_ybe()
    assert rep.passed
    assert rep.details["P_involution"]
    assert rep.details["R1_is_scaled_P"]


@pytest.mark.parametrize("variant", ["RE", "REp"])
@pytest.mark.parametrize("order", [2, 3])
def test_fm_equivalence(order, variant):
    rep = check_fm_equivalence(order, variant=variant)
    assert rep.passed, rep.details.get("counterexample_A_not_in_B") or rep.details.get("counterexample_B_not_in_A")
    assert rep.details["certificates_A_in_B"] and rep.details["certificates_B_in_A"]
    assert rep.details["scalar_violations"] == []


def test_fm_equivalence_generic_params():
    rep = check_fm_equivalence(2, FMParams("q^3", "2/3"), "RE")
    assert rep.passed


def test_extracted_relations_are_homogeneous():
    for label, p in extract_fm_relations(3):
        assert p.is_homogeneous(), label


def test_extraction_stable_under_truncation_growth():
    from altq.spans import span_contains

    low, high = extract_fm_relations(2), extract_fm_relations(3)
    ok, _, bad = span_contains(high, low)
    assert ok, bad


def test_claim_excludes_edge_linear_terms():
    for _, p in claimed_relations(3):
        keys = p.terms.keys()
        assert ((G(3),), ()) not in keys and ((Gt(3),), ()) not in keys


def test_order_below_two_rejected():
    with pytest.raises(TruncationTooSmall):
        extract_fm_relations(1)


def test_determinant_literal():
    rep = check_determinant(3, n_max=1)
    assert rep.passed
    assert rep.details["U^-1_literal"] and rep.details["U^-2_literal"]


def test_gamma_series_present():
    d = sklyanin_delta(3)
    assert "gamma" in d and d["gamma"]


def test_representation_fallback():
    from altq.fm import _holds_in_reps
    from altq.freealg import NCPoly, W, delta
    from altq.params import DEFAULT_PARAMS

    # Delta_1 acts as zero in the dressed representations, W0 does not
    assert _holds_in_reps(delta(1), DEFAULT_PARAMS)
    assert not _holds_in_reps(NCPoly.letter(W(0)), DEFAULT_PARAMS)


def test_determinant_records_level():
    rep = check_determinant(3, n_max=1)
    assert rep.details["U^-1_level"] == rep.details["U^-2_level"] == "literal"
