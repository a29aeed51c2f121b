"""One test per acceptance criterion; each records a pass/fail line for the summary."""

from __future__ import annotations

import shutil
import subprocess
import sys
import time

from conftest import ACCEPTANCE

from altq.checks import check_generators
from altq.classical import check_classical_fm, check_cybe, check_ns_cybe, check_specialization, loop_realization_check
from altq.fm import check_determinant, check_fm_equivalence, check_ybe
from altq.generators import qserre_consequence
from altq.pbw import check_pbw
from altq.reps import (
    DressConfig,
    closed_form_K,
    dress,
    gamma_commutes,
    linear_relations_check,
    re_residual,
    relations_in_rep,
)
from altq.roots import verify_dictionary


def _record(n: int, text: str, ok: bool, elapsed: float, limit: float) -> None:
    within = elapsed < limit
    ACCEPTANCE[n] = (f"{text} ({elapsed:.2f}s, limit {limit:g}s)", ok and within)
    assert ok, text
    assert within, f"{text}: took {elapsed:.2f}s"


def _timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def test_criterion_01_ybe():
    rep, t = _timed(check_ybe)
    ok = rep.passed and rep.details["ybe_zero"] and rep.details["P_involution"]
    _record(1, "Yang-Baxter equation and P involution", ok, t, 1)


def test_criterion_02_fm_equivalence():
    def go():
        return [check_fm_equivalence(3, variant=v) for v in ("RE", "REp")]

    reps, t = _timed(go)
    ok = all(
        r.passed and r.details["certificates_A_in_B"] and r.details["certificates_B_in_A"] for r in reps
    )
    _record(2, "FM equivalence at order 3 for RE and REp with certificates", ok, t, 60)


def test_criterion_03_generators():
    rep, t = _timed(check_generators)
    lit = rep.details["literal"]
    ok = all(lit[k] for k in ("G1", "W-1", "G2", "Delta1", "Delta2")) and rep.details["substitution_self_consistent"]["Delta1"]
    _record(3, "G1, W-1, G2, Delta1, Delta2 reference forms and Delta1 substitution", ok, t, 1)


def test_criterion_04_qserre():
    rep, t = _timed(qserre_consequence)
    ok = rep.passed and rep.details["mirror_consistent"]
    _record(4, "q-Serre relations with the sigma mirror", ok, t, 1)


def test_criterion_05_representations():
    configs = [DressConfig(["1/2"], ["1"]), DressConfig(["1/2", "1/2"], ["1", "2"])]

    def go():
        results = {}
        for c in configs:
            key = c.describe()
            rel = relations_in_rep(c, 3)
            results[key] = {
                "a_closed_form": (dress(c) - closed_form_K(c)).is_zero(),
                "b_reflection": re_residual(c).is_zero(),
                "c_relations": not rel.details["failing"],
                "d_linear": linear_relations_check(c, 3).passed,
                "e_deltas_central": not rel.details["delta_not_central"],
            }
        return results

    results, t = _timed(go)
    failed = [f"{cfg}:{k}" for cfg, r in results.items() for k, v in r.items() if not v]
    text = "representations (a)-(e) for N=1 and N=2" + (f", failing {failed}" if failed else "")
    _record(5, text, not failed, t, 300)


def test_criterion_06_determinant():
    def go():
        det = check_determinant(3, n_max=1)
        gam = [gamma_commutes(c, 3) for c in (DressConfig(["1/2"], ["1"]), DressConfig(["1/2", "1/2"], ["1", "2"]))]
        return det, gam

    (det, gam), t = _timed(go)
    ok = det.details["U^-1_literal"] and det.details["U^-2_literal"] and all(g.passed for g in gam)
    _record(6, "determinant coefficients literal and Gamma central in N<=2", ok, t, 60)


def test_criterion_07_dictionary():
    rep, t = _timed(verify_dictionary)
    res = rep.details["results"]
    ok = (
        all(res[k] for k in ("iota.G1", "iota.Gt1", "iota.W-1", "iota.W2"))
        and res["inverse.Edelta+a1"]
        and res["inverse.Edelta+a0"]
        and rep.details["edelta_reading"] != "unresolved"
        and "inverse.Edelta.as_G1W0" in rep.details["residuals"]
    )
    _record(7, "root dictionary with the E_delta ambiguity reported", ok, t, 1)


def test_criterion_08_classical():
    def go():
        return [check_ns_cybe(), check_cybe(), check_classical_fm(3), loop_realization_check(4), check_specialization()]

    reps, t = _timed(go)
    _record(8, "classical limit: CYBEs, FM order 3, loop k<=4, q=1 specialization", all(r.passed for r in reps), t, 60)


def test_criterion_09_pbw():
    rep, t = _timed(lambda: check_pbw(8))
    ok = rep.passed and not rep.details["mismatches"] and rep.details["d11"] == 3
    _record(9, "PBW census equals Phi for i+j<=8", ok, t, 10)


def _cli() -> list[str]:
    exe = shutil.which("altq")
    return [exe] if exe else [sys.executable, "-m", "altq.cli"]


def test_criterion_10_determinism(tmp_path):
    def go():
        outs = []
        for i in range(2):
            target = tmp_path / f"run{i}.json"
            proc = subprocess.run(_cli() + ["verify", "all", "--json", str(target)], capture_output=True, text=True)
            outs.append((proc.returncode, target.read_bytes() if target.exists() else b""))
        return outs

    outs, t = _timed(go)
    ok = outs[0][1] != b"" and outs[0][1] == outs[1][1] and outs[0][0] == outs[1][0] == 0
    _record(10, "two runs of 'altq verify all' are byte-identical", ok, t, 600)
