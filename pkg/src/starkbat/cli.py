"""Command line front end: ``starkbat simulate|sweep|oracle|preset``."""
from __future__ import annotations

import argparse
import json
import os
import sys

from .fock import InfeasibleSectorError
from .open_system import IntegrationError
from .scenario import (EXIT_CONFIG, EXIT_NUMERIC, EXIT_OK, EXIT_ORACLE, PRESETS, ConfigError,
                       NumericalFailure, RunConfig, SweepConfig, figure_preset, load_config,
                       oracle, run, sweep)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="starkbat", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("simulate", help="time series for one JSON run config")
    s.add_argument("config")
    s.add_argument("-o", "--out", help="CSV path (default: stdout)")

    s = sub.add_parser("sweep", help="parameter sweep from a JSON sweep config")
    s.add_argument("config")
    s.add_argument("-o", "--out", help="CSV path (default: stdout)")

    s = sub.add_parser("oracle", help="numeric vs closed-form work check")
    s.add_argument("case", choices=["prop1", "prop2_boson", "prop2_fermion",
                                    "prop2_stark_battery", "prop3", "eq8"])
    s.add_argument("--rc", type=float, default=1.0)
    s.add_argument("--Uc", type=float, default=1.0)
    s.add_argument("--Jc", type=float, default=1.0)
    s.add_argument("--N", type=int, default=2)
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--J", type=float, default=1.0)

    s = sub.add_parser("preset", help="figure presets")
    s.add_argument("name", help=", ".join(PRESETS))
    s.add_argument("--emit-config", action="store_true",
                   help="print the JSON configurations instead of running them")
    s.add_argument("--out-dir", default=".", help="directory for one CSV per curve")
    return p


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.command == "simulate":
            _emit(run(RunConfig.from_dict(load_config(args.config))), args.out)
        elif args.command == "sweep":
            _emit(sweep(SweepConfig.from_dict(load_config(args.config))), args.out)
        elif args.command == "oracle":
            report = oracle(args.case, rc=args.rc, Uc=args.Uc, Jc=args.Jc, N=args.N, n=args.n,
                            J=args.J)
            print("\n".join(report.lines()))
            return EXIT_OK if report.passed else EXIT_ORACLE
        elif args.command == "preset":
            preset = figure_preset(args.name)
            if args.emit_config:
                doc = {"preset": preset.name,
                       "provenance": preset.provenance(),
                       "entries": {label: entry.to_dict() for label, entry in preset.entries}}
                print(json.dumps(doc, indent=2, sort_keys=True))
            else:
                os.makedirs(args.out_dir, exist_ok=True)
                for label, entry in preset.entries:
                    path = os.path.join(args.out_dir, f"{preset.name}_{label}.csv")
                    _emit(preset.render(label, entry), path)
                    print(path)
    except (ConfigError, InfeasibleSectorError, OSError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ValueError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (IntegrationError, NumericalFailure) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
