"""Command-line interface.

Subcommands:
  run <preset|config.json> --out DIR [--workers N] [--dim D]
  list
  verify [--tol PROFILE]
  export-preset <name>

Exit codes: 0 success, 1 verification failure, 2 config error,
3 excessive solver failures (> 10% of sweep rows).
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import presets, sweep, verify
from .errors import ConfigError, QvdpError

DEFAULT_OUT_ENV = "QVDP_OUT_DIR"


def _load_config(source: str) -> sweep.ScenarioConfig:
    if os.path.exists(source):
        with open(source, encoding="utf-8") as fh:
            return sweep.ScenarioConfig.from_dict(json.load(fh))
    return presets.get_preset(source)


def cmd_run(args) -> int:
    config = _load_config(args.scenario)
    if args.dim is not None:
        d = config.to_dict()
        d["dim_override"] = args.dim
        config = sweep.ScenarioConfig.from_dict(d)
    out_dir = args.out or os.environ.get(DEFAULT_OUT_ENV, ".")
    path, failed = sweep.run_scenario(config, out_dir, workers=args.workers)
    total = len(config.grid())
    print(f"wrote {path} ({total} rows, {failed} failed)")
    if failed > 0.1 * total:
        return 3
    return 0


def cmd_list(_args) -> int:
    for name in presets.list_presets():
        cfg = presets.get_preset(name)
        axes = " x ".join(f"{ax.name}[{ax.n}]" for ax in cfg.axes)
        print(f"{name:28s} {axes:40s} -> {', '.join(cfg.outputs)}")
    return 0


def cmd_verify(args) -> int:
    results = verify.run_all(args.tol)
    width = max(len(r.name) for r in results)
    failed = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status}  {r.name:<{width}}  {r.measured}  [expect: {r.expected}]")
        if not r.passed:
            failed += 1
            if r.detail:
                print(f"      {r.detail}")
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 1 if failed else 0


def cmd_export(args) -> int:
    cfg = presets.get_preset(args.name)
    print(json.dumps(cfg.to_dict(), indent=2, sort_keys=True))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qvdp",
        description="Quantum van der Pol oscillator sweeps and verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run a sweep scenario")
    p_run.add_argument("scenario", help="preset name or path to a JSON config")
    p_run.add_argument("--out", default=None,
                       help=f"output directory (default: ${DEFAULT_OUT_ENV} or .)")
    p_run.add_argument("--workers", type=int, default=1)
    p_run.add_argument("--dim", type=int, default=None,
                       help="override the adaptive Fock truncation")
    p_run.set_defaults(func=cmd_run)

    p_list = sub.add_parser("list", help="list built-in presets")
    p_list.set_defaults(func=cmd_list)

    p_verify = sub.add_parser("verify", help="run the verification suite")
    p_verify.add_argument("--tol", default="default",
                          choices=sorted(verify.PROFILES))
    p_verify.set_defaults(func=cmd_verify)

    p_export = sub.add_parser("export-preset",
                              help="print a preset as editable JSON")
    p_export.add_argument("name")
    p_export.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except QvdpError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
