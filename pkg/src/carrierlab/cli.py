"""Command-line front end: run scenarios, list them, verify past runs."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .scenarios import (
    SCENARIO_DESCRIPTIONS,
    SCENARIOS,
    ScenarioConfig,
    parse_config_text,
    run_scenario,
    verify_run,
)
from .scenarios import _FLOAT_FIELDS, _INT_FIELDS  # flag typing mirrors the config

_OVERRIDE_KEYS = (
    "sample_rate_hz",
    "n_samples",
    "f_c_hz",
    "symbol_rate_hz",
    "constellation",
    "seed",
    "guard_hz",
    "rolloff",
    "cutoff_hz",
    "transition_hz",
    "stopband_atten_db",
    "noise_sigma",
    "crosstalk",
    "channel_seed",
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="carrierlab",
        description="Real-carrier vs complex-carrier modulation experiments "
        "with CSV artifacts and machine-checkable verdicts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run a scenario and write its artifacts")
    run_p.add_argument("--scenario", choices=SCENARIOS, help="scenario to run")
    run_p.add_argument("--config", type=Path, help="flat key = value config file")
    run_p.add_argument("--out", type=Path, help="output directory (default runs/<scenario>)")
    for key in _OVERRIDE_KEYS:
        flag = "--" + key.replace("_", "-")
        if key in _INT_FIELDS:
            run_p.add_argument(flag, dest=key, type=int)
        elif key in _FLOAT_FIELDS:
            run_p.add_argument(flag, dest=key, type=float)
        else:
            run_p.add_argument(flag, dest=key)

    sub.add_parser("list", help="list available scenarios")

    verify_p = sub.add_parser("verify", help="re-check an existing run from its artifacts")
    verify_p.add_argument("--out", type=Path, required=True, help="directory of a previous run")
    return parser


def _cmd_run(args: argparse.Namespace) -> int:
    mapping: dict[str, str] = {}
    if args.config is not None:
        try:
            mapping.update(parse_config_text(Path(args.config).read_text()))
        except (OSError, ValueError) as exc:
            print(f"config error: {exc}", file=sys.stderr)
            return 2
    if args.scenario is not None:
        mapping["scenario"] = args.scenario
    for key in _OVERRIDE_KEYS:
        value = getattr(args, key)
        if value is not None:
            mapping[key] = str(value)
    try:
        cfg = ScenarioConfig.from_mapping(mapping)
        cfg.validate()
    except ValueError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    out_dir = args.out if args.out is not None else Path("runs") / cfg.scenario
    report = run_scenario(cfg, out_dir)
    sys.stdout.write(report.to_text())
    print(f"artifacts written to {out_dir}")
    return 0 if report.passed else 1


def _cmd_list() -> int:
    for scenario in SCENARIOS:
        print(f"{scenario:12s} {SCENARIO_DESCRIPTIONS[scenario]}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    out = Path(args.out)
    if not out.exists():
        print(f"verify error: no such directory {out}", file=sys.stderr)
        return 2
    ok, messages = verify_run(out)
    for message in messages:
        print(message)
    print(f"verify: {'pass' if ok else 'fail'}")
    return 0 if ok else 1


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "run":
        return _cmd_run(args)
    if args.command == "list":
        return _cmd_list()
    return _cmd_verify(args)


if __name__ == "__main__":
    raise SystemExit(main())
