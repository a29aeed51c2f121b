"""Command line entry point: ``altq verify ...`` and ``altq dump ...``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .checks import GROUPS, RunConfig, load_config, run
from .freealg import Kind, parse_symbol
from .params import ConfigInvalid
from .report import reports_to_json


def _split(text: str | None) -> list[str] | None:
    return None if text is None else [t.strip() for t in text.split(",") if t.strip()]


def _build_config(args: argparse.Namespace) -> RunConfig:
    overrides = {"order": args.order, "k_max": args.kmax, "p_max": args.pmax, "max_degree": args.max_degree}
    spins, vs = _split(args.spins), _split(args.v)
    if spins is not None or vs is not None or args.n is not None:
        n = args.n if args.n is not None else len(spins or vs or [])
        spins = spins or ["1/2"] * n
        vs = vs or [str(i + 1) for i in range(n)]
        if not (len(spins) == len(vs) == n) or n < 1:
            raise ConfigInvalid(f"--n {n} does not match --spins {spins} and --v {vs}")
        overrides["reps"] = [{"spins": spins, "v": vs}]
    if args.variant is not None:
        overrides["variants"] = ("RE" if args.variant.lower() == "re" else "REp",)
    group = args.group_opt or args.group
    if group not in ("all",) + GROUPS:
        raise ConfigInvalid(f"unknown check group {group!r}")
    if group != "all":
        overrides["groups"] = (group,)
    if args.config is not None:
        return load_config(args.config, **overrides)
    return RunConfig(**{k: v for k, v in overrides.items() if v is not None}).validate()


def _cmd_verify(args: argparse.Namespace) -> int:
    cfg = _build_config(args)
    reports = run(cfg)
    text = reports_to_json(reports)
    if args.json:
        Path(args.json).write_text(text)
        for r in reports:
            print(f"{r.status.upper():5} {r.check_id}")
    else:
        sys.stdout.write(text)
    return 0 if all(r.passed for r in reports) else 1


def _needed_nmax(sym) -> int:
    if sym.kind in (Kind.WM, Kind.WP, Kind.G, Kind.GT):
        return max(sym.index - 1, 0)
    raise ConfigInvalid(f"{sym.label()} is not an alternating generator")


def _cmd_dump(args: argparse.Namespace) -> int:
    from .generators import build_generators, central_delta, substitute_table

    params = load_config(args.config).params if args.config else RunConfig().params
    if args.what == "generator":
        try:
            sym = parse_symbol(args.target)
        except ValueError as exc:
            raise ConfigInvalid(str(exc)) from exc
        n_max = args.nmax if args.nmax is not None else _needed_nmax(sym)
        table = build_generators(n_max, params)
        if sym not in table:
            raise ConfigInvalid(f"{sym.label()} needs --nmax >= {_needed_nmax(sym)}")
        print(table[sym].to_text())
        return 0
    try:
        n = int(args.target)
    except ValueError as exc:
        raise ConfigInvalid(f"delta index must be an integer, got {args.target!r}") from exc
    if n < 1:
        raise ConfigInvalid("delta index must be >= 1")
    poly = central_delta(n - 1, params)
    if args.expand:
        poly = substitute_table(poly, build_generators(n - 1, params))
    print(poly.to_text())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="altq", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification checks and print a JSON report")
    v.add_argument("group", nargs="?", default="all", help="all or one of: " + ", ".join(GROUPS))
    v.add_argument("--group", dest="group_opt", help="same as the positional group")
    v.add_argument("--order", type=int, help="truncation order for the K-matrix expansions")
    v.add_argument("--kmax", type=int, help="largest generator index checked in representations")
    v.add_argument("--pmax", type=int, help="largest index for the linear relations")
    v.add_argument("--max-degree", type=int, dest="max_degree", help="total degree bound for the PBW census")
    v.add_argument("--variant", type=str.lower, choices=("re", "rep"), help="restrict the fm group to one equation")
    v.add_argument("--n", type=int, help="number of dressing sites")
    v.add_argument("--spins", help="comma separated spins, e.g. 1/2,1")
    v.add_argument("--v", help="comma separated inhomogeneities, e.g. 1,q^2")
    v.add_argument("--config", help="JSON configuration file")
    v.add_argument("--json", help="write the JSON report here and print a summary")
    v.set_defaults(func=_cmd_verify)

    d = sub.add_parser("dump", help="print a generator or central element")
    d.add_argument("what", choices=("generator", "delta"))
    d.add_argument("target", help="symbol such as W[-1] or G[2], or the index n of Delta_n")
    d.add_argument("--nmax", type=int, help="recursion depth for generators")
    d.add_argument("--expand", action="store_true", help="rewrite Delta_n in W0, W1")
    d.add_argument("--config", help="JSON configuration file (only params are used)")
    d.set_defaults(func=_cmd_dump)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigInvalid as exc:
        print(f"altq: invalid configuration: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
