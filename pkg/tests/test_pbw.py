from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from altq.pbw import census, check_pbw, hilbert_phi, pbw_generators, pbw_monomials


@given(st.integers(0, 9))
def test_phi_symmetric(n):
    assert hilbert_phi(n).is_symmetric()


@given(st.integers(0, 8))
def test_census_matches_phi(n):
    assert census(n) == hilbert_phi(n)


@given(st.integers(1, 7))
def test_truncations_agree(n):
    big, small = hilbert_phi(n + 1), hilbert_phi(n)
    for ij, v in small.grid().items():
        assert big[ij] == v


def test_low_degree_values():
    phi = hilbert_phi(8)
    assert phi[0, 0] == 1
    assert phi[1, 0] == phi[0, 1] == 1
    assert phi[1, 1] == 3
    assert phi[2, 2] == 10


def test_barA_orders_agree_and_drop_gt():
    a, b = census(8, "barA_q"), census(8, "barA_q_alt")
    assert a == b
    assert a[1, 1] == 2


def test_monomials_are_ordered():
    gens = pbw_generators(4)
    rank = {g: i for i, g in enumerate(gens)}
    for word, _ in pbw_monomials(4):
        idx = [rank[g] for g in word]
        assert idx == sorted(idx)


def test_unknown_basis():
    with pytest.raises(ValueError):
        census(3, "nope")
    with pytest.raises(ValueError):
        hilbert_phi(-1)


def test_check():
    rep = check_pbw(8)
    assert rep.passed and rep.details["d11"] == 3
