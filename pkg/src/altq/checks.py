"""Check registry and batch runner."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from .freealg import G, W, apply_S, delta
from .params import DEFAULT_PARAMS, ConfigInvalid, FMParams
from .report import FAIL, CheckReport
from .scalars import PoleAtPoint

__all__ = ["GROUPS", "RunConfig", "load_config", "run", "check_generators", "check_s_invariance"]

GROUPS = ("ybe", "fm", "determinant", "generators", "serre", "reps", "classical", "dictionary", "pbw")


def _default_reps() -> list[dict]:
    return [
        {"spins": ["1/2"], "v": ["1"]},
        {"spins": ["1/2", "1/2"], "v": ["1", "2"]},
        {"spins": ["1/2", "1"], "v": ["1", "3"]},
    ]


@dataclass
class RunConfig:
    order: int = 3
    k_max: int = 3
    p_max: int = 3
    loop_k_max: int = 4
    max_degree: int = 8
    variants: tuple = ("RE", "REp")
    reps: list = field(default_factory=_default_reps)
    params: FMParams = field(default_factory=lambda: DEFAULT_PARAMS)
    groups: tuple = GROUPS

    def validate(self) -> "RunConfig":
        for name in ("order", "k_max", "p_max", "loop_k_max", "max_degree"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise ConfigInvalid(f"{name} must be a nonnegative integer, got {v!r}")
        if self.order < 2:
            raise ConfigInvalid("order must be >= 2")
        unknown = set(self.groups) - set(GROUPS)
        if unknown:
            raise ConfigInvalid(f"unknown check groups: {sorted(unknown)}")
        for v in self.variants:
            if v.lower() not in ("re", "rep"):
                raise ConfigInvalid(f"unknown variant {v!r}")
        # builds every representation config once so bad spins or v's fail early
        self.dress_configs()
        if not isinstance(self.params, FMParams):
            raise ConfigInvalid("params must be FMParams")
        return self

    def dress_configs(self) -> list:
        from .reps import DressConfig

        out = []
        for entry in self.reps:
            try:
                out.append(DressConfig(list(entry["spins"]), list(entry["v"]), self.params))
            except (KeyError, TypeError, ValueError) as exc:
                if isinstance(exc, ConfigInvalid):
                    raise
                raise ConfigInvalid(f"bad representation entry {entry!r}: {exc}") from exc
        return out


def load_config(path: str | Path, **overrides) -> RunConfig:
    """Read a JSON config; exact scalars are strings like ``"q^2"``."""
    try:
        raw = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigInvalid(f"cannot read config {path}: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigInvalid("config must be a JSON object")
    kwargs: dict = {}
    p = raw.get("params")
    if p is not None:
        try:
            kwargs["params"] = FMParams(**p)
        except TypeError as exc:
            raise ConfigInvalid(f"bad params: {exc}") from exc
    for key in ("order", "k_max", "p_max", "loop_k_max", "max_degree"):
        if key in raw:
            kwargs[key] = raw[key]
    if "reps" in raw:
        kwargs["reps"] = raw["reps"]
    if "groups" in raw:
        kwargs["groups"] = tuple(raw["groups"])
    if "variants" in raw:
        kwargs["variants"] = tuple(raw["variants"])
    kwargs.update({k: v for k, v in overrides.items() if v is not None})
    return RunConfig(**kwargs).validate()


# -- the generator recursion check ------------------------------------------------------------

def check_generators(params: FMParams | None = None) -> CheckReport:
    from .generators import build_generators, central_delta, substitute_table
    from .reference import ref_delta, ref_G1, ref_G2, ref_Wm1
    from .relations import defining_relations
    from .spans import SpanBasis

    params = params or DEFAULT_PARAMS
    table = build_generators(2, params)
    literal = {
        "G1": table[G(1)] == ref_G1(),
        "W-1": table[W(-1)] == ref_Wm1(params),
        "G2": table[G(2)] == ref_G2(params),
        "Delta1": central_delta(0, params) == ref_delta(0, params),
        "Delta2": central_delta(1, params) == ref_delta(1, params),
    }
    self_consistent = {
        f"Delta{n + 1}": substitute_table(central_delta(n, params), table) == delta(n + 1) for n in range(3)
    }
    # the reference third central element against the symmetrised one
    diff3 = central_delta(2, params) - ref_delta(2, params)
    basis = SpanBasis()
    for lab, p in defining_relations(2, params):
        basis.add(lab, p)
    cert = basis.certificate(diff3)
    required = all(literal.values()) and self_consistent["Delta1"]
    return CheckReport.of(
        "generators.recursion",
        required,
        "generator recursion and central elements",
        literal=literal,
        substitution_self_consistent=self_consistent,
        delta3_reference_equal=diff3.is_zero(),
        delta3_reference=ref_delta(2, params).to_text(),
        delta3_recomputed=central_delta(2, params).to_text(),
        delta3_difference_certificate=None if cert is None else {k: str(v) for k, v in sorted(cert.items())},
    )


def check_s_invariance(params: FMParams | None = None) -> CheckReport:
    """At which level S fixes Delta_1..Delta_3: literally, after rewriting in W0, W1, or not at all."""
    from .generators import build_generators, central_delta, substitute_table

    params = params or DEFAULT_PARAMS
    table3 = build_generators(3, params)
    levels = {}
    for n in range(3):
        d = central_delta(n, params)
        if apply_S(d) == d:
            levels[f"Delta{n + 1}"] = "literal"
        elif substitute_table(apply_S(d), table3) == substitute_table(d, table3):
            levels[f"Delta{n + 1}"] = "after substitution"
        else:
            levels[f"Delta{n + 1}"] = "fails"
    return CheckReport.of(
        "generators.s_invariance",
        levels["Delta1"] == "literal",
        "S-invariance of the central elements",
        levels=levels,
    )


# -- registry -----------------------------------------------------------------------------------

def _group_checks(group: str, cfg: RunConfig) -> list[Callable[[], CheckReport]]:
    p = cfg.params
    if group == "ybe":
        from .fm import check_ybe

        return [check_ybe]
    if group == "fm":
        from .fm import check_fm_equivalence

        return [lambda v=v: check_fm_equivalence(cfg.order, p, v) for v in cfg.variants]
    if group == "determinant":
        from .fm import check_determinant
        from .reps import gamma_commutes

        out = [lambda: check_determinant(cfg.order, p)]
        out += [lambda c=c: gamma_commutes(c, cfg.order) for c in cfg.dress_configs() if c.N <= 2]
        return out
    if group == "generators":
        return [lambda: check_generators(p), lambda: check_s_invariance(p)]
    if group == "serre":
        from .generators import qserre_consequence

        return [lambda: qserre_consequence(p)]
    if group == "reps":
        from .reps import dress_check, linear_relations_check, relations_in_rep, rep_basics_check

        out = [rep_basics_check]
        for c in cfg.dress_configs():
            out += [
                lambda c=c: dress_check(c),
                lambda c=c: linear_relations_check(c, cfg.p_max),
                lambda c=c: relations_in_rep(c, cfg.k_max),
            ]
        return out
    if group == "classical":
        from .classical import (
            check_classical_fm,
            check_cybe,
            check_ns_cybe,
            check_specialization,
            loop_realization_check,
        )

        return [
            check_ns_cybe,
            check_cybe,
            lambda: check_classical_fm(cfg.order),
            lambda: loop_realization_check(cfg.loop_k_max),
            check_specialization,
        ]
    if group == "dictionary":
        from .roots import verify_dictionary

        return [verify_dictionary]
    if group == "pbw":
        from .pbw import check_pbw

        return [lambda: check_pbw(cfg.max_degree)]
    raise ConfigInvalid(f"unknown group {group!r}")


def _guarded(fn: Callable[[], CheckReport], group: str, slot: int, cfg: RunConfig) -> CheckReport:
    start = time.perf_counter()
    try:
        rep = fn()
    except (PoleAtPoint, ZeroDivisionError) as exc:
        details = {"error": str(exc), "params": cfg.params.to_json(), "reps": cfg.reps}
        rep = CheckReport(f"{group}.error.{slot:02d}", FAIL, "evaluation hit a pole", details)
    rep.duration = time.perf_counter() - start
    return rep


def run(config: RunConfig | None = None) -> list[CheckReport]:
    """Run the selected groups; reports come back sorted by check id."""
    cfg = (config or RunConfig()).validate()
    reports = []
    for group in GROUPS:
        if group not in cfg.groups:
            continue
        for slot, fn in enumerate(_group_checks(group, cfg)):
            reports.append(_guarded(fn, group, slot, cfg))
    return sorted(reports, key=lambda r: r.check_id)
