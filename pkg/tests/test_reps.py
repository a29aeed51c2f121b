from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from altq.params import ConfigInvalid, FMParams
from altq.reps import (
    DressConfig,
    RepMatrix,
    SpinRep,
    alt_ops,
    casimir,
    closed_form_K,
    default_configs,
    dress,
    dress_check,
    gamma_commutes,
    linear_relations_check,
    omega_j,
    re_residual,
    relations_in_rep,
    rep_basics_check,
    spin_rep_check,
    yba_check,
)
from altq.scalars import Q, RatFuncQ

small = st.integers(-2, 2)


def _mat(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n).map(RepMatrix.from_dense)


@given(_mat(2), _mat(2), _mat(3), _mat(3))
def test_kron_mixed_product(a, b, c, d):
    assert a.kron(c) * b.kron(d) == (a * b).kron(c * d)


@given(_mat(2), _mat(2), _mat(2))
def test_matrix_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a.commutator(b) == -b.commutator(a)


def test_dense_roundtrip():
    m = RepMatrix.from_dense([[1, 0], [Q, 2]])
    assert RepMatrix.from_dense(m.to_dense()) == m
    assert m.entry(1, 0) == Q


@pytest.mark.parametrize("j", ["1/2", "1", "3/2"])
def test_spin_reps(j):
    assert all(spin_rep_check(j).values())
    assert all(yba_check(j).values())


def test_casimir_spin_half():
    rep = SpinRep("1/2")
    assert casimir(rep) == rep.identity().scale(omega_j(rep.j))


def test_rep_basics_check():
    assert rep_basics_check().passed


@pytest.fixture(scope="module", params=[0, 1, 2], ids=["N1", "N2-half-half", "N2-half-one"])
def config(request):
    return default_configs()[request.param]


def test_dress_equals_closed_form(config):
    assert (dress(config) - closed_form_K(config)).is_zero()


def test_reflection_residual_vanishes(config):
    assert re_residual(config).is_zero()


def test_relations_annihilated(config):
    rep = relations_in_rep(config, 3)
    assert rep.passed, rep.details["failing"]
    assert all(rep.details["qserre_zero"])


def test_linear_relations(config):
    assert linear_relations_check(config, 3).passed


def test_gamma_commutes(config):
    assert gamma_commutes(config, 3).passed


def test_extra_kminus_breaks_closed_form(config):
    ops = alt_ops(config, max(config.N - 1, 0), extra_kminus=True)
    assert not (dress(config) - closed_form_K(config, ops)).is_zero()


def test_three_sites_generic_params():
    cfg = DressConfig(["1/2", "1/2", "1"], ["1", "q", "2/3"], FMParams("q^3", "2"))
    assert dress_check(cfg).passed


def test_config_validation():
    with pytest.raises(ConfigInvalid):
        DressConfig(["1/2"], ["1", "2"])
    with pytest.raises(ConfigInvalid):
        DressConfig(["1/2"], ["0"])
    cfg = DressConfig(["1/2", "1"], [RatFuncQ(1), "q^2"])
    assert cfg.dim == 6 and cfg.N == 2
    assert cfg.describe() == "N=2;j=(1/2,1);v=(1,q^2)"


@pytest.mark.parametrize("n", [1, 2, 3])
def test_deltas_act_as_scalars(config, n):
    from altq.freealg import delta
    from altq.reps import evaluate_in_rep

    m = evaluate_in_rep(delta(n), alt_ops(config, 3), config.dim)
    assert m == RepMatrix.identity(config.dim, m.entry(0, 0))
    assert m.is_zero() == (n == 1)


def test_bare_seed_reports_linear_inconsistency():
    cfg = DressConfig([], [])
    assert dress_check(cfg).passed
    rep = linear_relations_check(cfg, 2)
    assert rep.details["seed_inconsistent"] is True
    assert "G[p=0]" in rep.details["failing"]
