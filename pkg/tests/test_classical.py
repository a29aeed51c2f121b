from __future__ import annotations

import pytest

from altq.classical import (
    LoopElement,
    check_classical_fm,
    check_cybe,
    check_ns_cybe,
    check_specialization,
    classical_relations,
    extract_classical_fm,
    loop_image,
    loop_realization_check,
    specialize_generators_q1,
)
from altq.freealg import G, W
from altq.series import TruncationTooSmall


def test_ns_cybe():
    rep = check_ns_cybe()
    assert rep.passed, rep.details


def test_cybe():
    rep = check_cybe()
    assert rep.passed, rep.details


@pytest.mark.parametrize("order", [2, 3, 4])
def test_classical_fm(order):
    rep = check_classical_fm(order)
    assert rep.passed, rep.details.get("counterexample_A_not_in_B") or rep.details.get("counterexample_B_not_in_A")


def test_classical_extraction_needs_order_two():
    with pytest.raises(TruncationTooSmall):
        extract_classical_fm(1)


def test_classical_relations_homogeneous():
    for label, p in classical_relations(3):
        assert p.is_homogeneous(), label


def test_loop_realization():
    rep = loop_realization_check(4)
    assert rep.passed, rep.details["failing"]


def test_loop_product():
    a = LoopElement.unit(0, 1, 1, 1)
    b = LoopElement.unit(1, 0, 2, 1)
    assert a * b == LoopElement.unit(0, 0, 3, 1)
    assert (b * a) == LoopElement.unit(1, 1, 3, 1)


def test_loop_images_right_side():
    assert loop_image(W(0)) == LoopElement.unit(1, 0, 1, 2)
    assert loop_image(W(1)) == LoopElement.unit(0, 1, 0, 2)
    assert loop_image(G(1)) == LoopElement.unit(0, 0, 1, 8)


def test_specialization_has_no_poles():
    spec = specialize_generators_q1(2)
    assert len(spec) == 14
    rep = check_specialization(2)
    assert rep.passed, rep.details
