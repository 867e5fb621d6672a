"""Command line frontend.

One job per invocation: pick a group (a builtin family like ``dihedral:6``
or a Cayley-table JSON file), a conjugacy class by representative label, a
rational metric modulus, and a command; the result is a deterministic JSON
report on stdout or in a file.  Identical inputs give byte-identical bytes.

Exit codes: 0 success, 2 usage errors, 3 validation failures (bad Cayley
table, unknown label, non-cyclic or otherwise unsupported class or group),
4 mathematical precondition failures (singular metric values).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .calculus import differential_calculus
from .errors import (
    CayleyValidationError,
    GroupGeoError,
    NonCyclicClassError,
    SingularMetricError,
    UnsupportedGroupError,
)
from .groups import FiniteGroup, conjugacy_class, dihedral
from . import reporting

USAGE_EXIT = 2
VALIDATION_EXIT = 3
PRECONDITION_EXIT = 4

COMMANDS = ("calculus", "connection", "curvature", "ricci", "dirac", "wave",
            "spectral-action", "report-all")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupgeo",
        description="Exact noncommutative Riemannian geometry of a finite "
                    "group from a chosen conjugacy class.")
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--group", metavar="NAME:PARAM",
                        help="builtin group family, e.g. dihedral:6")
    source.add_argument("--cayley", metavar="PATH",
                        help="JSON Cayley table file with names and table")
    parser.add_argument("--class", dest="class_label", metavar="LABEL",
                        required=True,
                        help="representative element of the conjugacy class")
    parser.add_argument("--mu", default="0", metavar="P/Q",
                        help="rational metric modulus (default 0)")
    parser.add_argument("--cmd", required=True, choices=COMMANDS,
                        help="which computation to run")
    parser.add_argument("--out", metavar="PATH",
                        help="write the report here instead of stdout")
    parser.add_argument("--pretty", action="store_true",
                        help="indent the JSON output")
    return parser


def parse_group_spec(spec: str) -> FiniteGroup:
    """Resolve a builtin group spec of the form name:param."""
    name, sep, param = spec.partition(":")
    if not sep or not param:
        raise ValueError(f"group spec {spec!r} must look like name:param")
    if name == "dihedral":
        try:
            n = int(param)
        except ValueError:
            raise ValueError(f"dihedral parameter {param!r} is not an integer")
        if n < 1:
            raise ValueError(f"dihedral parameter must be positive, got {n}")
        return dihedral(n)
    raise UnsupportedGroupError(f"no builtin group family named {name!r}")


def load_cayley(path: str) -> FiniteGroup:
    """Load and fully validate a Cayley-table JSON file."""
    return FiniteGroup.from_json_file(path)


def _build_report(args, group: FiniteGroup) -> dict:
    cls = conjugacy_class(group, args.class_label)
    cls.require_calculus_admissible()
    mu = Fraction(args.mu)
    if args.cmd == "report-all":
        return reporting.full_report(group, cls, mu)
    if args.cmd == "wave":
        return reporting.wave_report(cls, mu)
    cal = differential_calculus(cls)
    if args.cmd == "calculus":
        return reporting.calculus_report(cal)
    if args.cmd == "connection":
        return reporting.connection_report(cal, mu)
    if args.cmd == "curvature":
        return reporting.curvature_report(cal)
    if args.cmd == "ricci":
        return reporting.ricci_report(cal)
    if args.cmd == "dirac":
        return reporting.dirac_report(cal, mu)
    if args.cmd == "spectral-action":
        return reporting.spectral_action_report(cal, mu)
    raise AssertionError(f"unhandled command {args.cmd}")


def render(report: dict, pretty: bool) -> str:
    if pretty:
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    return json.dumps(report, sort_keys=True, separators=(",", ":")) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; pass both through
        return int(exc.code or 0)
    try:
        if args.group is not None:
            try:
                group = parse_group_spec(args.group)
            except ValueError as exc:
                print(f"error(usage): {exc}", file=sys.stderr)
                return USAGE_EXIT
        else:
            group = load_cayley(args.cayley)
        try:
            group.index(args.class_label)
        except KeyError:
            print(f"error(validation): no element named {args.class_label!r} "
                  f"in group {group.name}", file=sys.stderr)
            return VALIDATION_EXIT
        try:
            Fraction(args.mu)
        except (ValueError, ZeroDivisionError):
            print(f"error(usage): --mu must be a rational like 1/3, got "
                  f"{args.mu!r}", file=sys.stderr)
            return USAGE_EXIT
        report = _build_report(args, group)
    except SingularMetricError as exc:
        print(f"error(precondition): {exc}", file=sys.stderr)
        return PRECONDITION_EXIT
    except (CayleyValidationError, NonCyclicClassError, UnsupportedGroupError) as exc:
        print(f"error(validation): {exc}", file=sys.stderr)
        return VALIDATION_EXIT
    except OSError as exc:
        print(f"error(validation): {exc}", file=sys.stderr)
        return VALIDATION_EXIT
    except GroupGeoError as exc:
        print(f"error(validation): {exc}", file=sys.stderr)
        return VALIDATION_EXIT
    text = render(report, args.pretty)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
