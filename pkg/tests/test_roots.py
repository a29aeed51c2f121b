from __future__ import annotations

import pytest

from altq.freealg import E0, E1, G, Gt, NCPoly, W, comm, delta
from altq.roots import build_root_vectors, iota, iota_images, omega_map, verify_dictionary
from altq.scalars import Q


@pytest.fixture(scope="module")
def report():
    return verify_dictionary()


@pytest.mark.parametrize("key", ["iota.G1", "iota.Gt1", "iota.W-1", "iota.W2"])
def test_forward_images(report, key):
    assert report.details["results"][key], report.details["residuals"].get(key)


@pytest.mark.parametrize("key", ["inverse.Edelta+a1", "inverse.Edelta+a0", "inverse.E1", "inverse.E0"])
def test_inverse_formulas(report, key):
    assert report.details["results"][key]


def test_edelta_reading(report):
    # the reading with a trailing W0 is reported as wrong, with its residual
    assert report.details["results"]["inverse.Edelta.as_G1"]
    assert not report.details["results"]["inverse.Edelta.as_G1W0"]
    assert "inverse.Edelta.as_G1W0" in report.details["residuals"]
    assert report.details["edelta_reading"] == "E_delta -> q^-1 G1"
    assert report.passed


def test_gt_minus_g_is_a_commutator():
    img = iota_images(1)
    assert img[Gt(1)] - img[G(1)] == comm(E1, E0).scale(Q + Q.inverse())


def test_root_vectors_are_homogeneous():
    rv = build_root_vectors(2)
    for k in range(3):
        assert rv.real1(k).degree() == (k + 1, k)
        assert rv.real0(k).degree() == (k, k + 1)
    for k in (1, 2):
        assert rv.imag(k).degree() == (k, k)


def test_iota_requires_quotient():
    with pytest.raises(ValueError):
        iota(delta(1))
    assert iota(NCPoly.letter(W(0))) == NCPoly.letter(E1)


def test_omega_is_an_involution():
    rv = build_root_vectors(2)
    p = rv.imag(2)
    assert omega_map(omega_map(p)) == p
