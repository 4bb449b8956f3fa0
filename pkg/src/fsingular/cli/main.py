"""
Command-line front-end.

    fsingular fedder --p 7 --vars x,y,z "x^3+y^3+z^3"
    fsingular fpt --p 5 --vars x,y --e-max 4 "y^2-x^3"
    fsingular sweep fedder --primes 2..50 --vars x,y,z "x^3+y^3+z^3" --format csv

Exit codes: 0 success, 1 computation error, 2 usage error.
"""

import argparse
import json
import logging
import re
import sys
from collections import Counter
from fractions import Fraction
from functools import partial
from typing import Dict, List, Optional

import pandas as pd

from ..base import FSingularBase
from ..exceptions import ComputationError, ImproperlyConfigured, ValidationError
from ..fppoly.parser import parse_variables
from ..fppoly.polynomial import format_monomial
from ..kltsurf.graphs import boundary_coefficients, parse_star_graph
from ..p1pairs.pairs import VARIABLES as PAIR_VARIABLES
from ..p1pairs.pairs import format_pair, parse_pair
from ..s0dim.stable_sections import s0_table
from ..types import SweepSpec
from ..utils import format_rational, load_config, parse_primes, parse_rational

logger = logging.getLogger(__name__)

SCHEMA_VERSION = "v1"
SWEEPABLE = ("fedder", "ordinary", "fpt", "p1pair", "kltsurf", "s0dim")


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, help="the characteristic")
    common.add_argument("--primes", help="prime list '2,3,5' or inclusive range '2..199' (sweep)")
    common.add_argument("--residue", help="keep primes with the given residue, e.g. '1mod3' (sweep)")
    common.add_argument("--vars", help="comma-separated variable names, in order")
    common.add_argument("--e-max", dest="e_max", type=int, help="largest Frobenius level")
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--config", help="JSON config file")
    common.add_argument("--workers", type=int, help="worker processes for sweeps")
    common.add_argument("-v", "--verbose", action="store_true")
    return common


def _add_commands(subparsers, common, names=None):
    def add(name, help_text):
        if names is not None and name not in names:
            return None
        return subparsers.add_parser(name, parents=[common], help=help_text)

    parser = add("fedder", "Fedder's criterion for a hypersurface at the origin")
    if parser:
        parser.add_argument("poly")
        parser.add_argument("--level", type=int, default=1, help="Frobenius level e")

    parser = add("ordinary", "ordinarity of a smooth plane cubic (smoothness is not checked)")
    if parser:
        parser.add_argument("poly")

    parser = add("fpt", "F-pure threshold interval and candidate")
    if parser:
        parser.add_argument("poly")

    parser = add("nu", "the chain nu_e(f)")
    if parser:
        parser.add_argument("poly")
        parser.add_argument("--full-scan", action="store_true", help="scan every r instead of the window")

    parser = add("tau", "test ideal tau(f^t)")
    if parser:
        parser.add_argument("poly")
        parser.add_argument("--t", required=True, help="threshold 'num/den'")

    parser = add("jumps", "F-jumping numbers on the grid k/N")
    if parser:
        parser.add_argument("poly")
        parser.add_argument("--n", type=int, default=12, help="grid denominator N")

    parser = add("p1pair", "global F-splitting / F-regularity of a pair on P^1")
    if parser:
        parser.add_argument("--pair", required=True, help="'1/2@0,1/2@inf,1/2@1'")

    parser = add("kltsurf", "strong F-regularity of a star-shaped surface singularity")
    if parser:
        parser.add_argument("--graph", help="'center=-2; arm=-2; arm=-2; arm=-2,-2'")
        parser.add_argument("--graph-file", help="file holding a graph spec")

    parser = add("s0dim", "Frobenius-stable sections of a projective hypersurface")
    if parser:
        parser.add_argument("poly")
        parser.add_argument("--m", default="1", help="comma-separated powers m of the canonical bundle")
        parser.add_argument("--dehom", help="variable set to 1 (default: the first)")

    parser = add("psplit", "splitting type of the Frobenius pushforward of O(a) on P^1")
    if parser:
        parser.add_argument("--degree", type=int, required=True, help="the degree a")
        parser.add_argument("--level", type=int, default=1, help="Frobenius level e")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fsingular", description="Frobenius singularity invariants over F_p")
    common = _common_options()
    subparsers = parser.add_subparsers(dest="command", required=True)
    _add_commands(subparsers, common)

    sweep = subparsers.add_parser("sweep", help="run a command for every prime of --primes")
    sweep_commands = sweep.add_subparsers(dest="sweep_command", required=True)
    _add_commands(sweep_commands, common, SWEEPABLE)
    return parser


# -- records ------------------------------------------------------------------


def _variables(args) -> List[str]:
    if args.vars:
        variables = parse_variables(args.vars)
    else:
        variables = list(dict.fromkeys(re.findall(r"[A-Za-z_][A-Za-z0-9_]*", args.poly)))
    if not variables:
        raise ValidationError("--vars: no variables declared or found in the polynomial")
    return variables


def _polynomial(base: FSingularBase, args, p: int):
    return base.polynomial(args.poly, p, _variables(args))


def _graph(args):
    if args.graph_file:
        try:
            with open(args.graph_file, encoding="utf-8") as fh:
                return parse_star_graph(fh.read())
        except OSError as e:
            raise ValidationError(f"--graph-file: {e}")
    if not args.graph:
        raise ValidationError("--graph: a graph spec or --graph-file is required")
    return parse_star_graph(args.graph)


def _monomial_text(monomial, variables) -> str:
    return "" if monomial is None else format_monomial(monomial, variables)


def compute_records(command: str, args, p: int, base: FSingularBase, e_max: Optional[int] = None) -> List[Dict]:
    if command == "fedder":
        f = _polynomial(base, args, p)
        verdict = base.fedder(f, args.level)
        return [{
            "p": p,
            "e": verdict.e,
            "f_split": verdict.f_split,
            "witness": _monomial_text(verdict.witness, f.variables),
        }]

    if command == "ordinary":
        return [{"p": p, "ordinary": base.is_ordinary(_polynomial(base, args, p))}]

    if command == "nu":
        chain = base.nu(_polynomial(base, args, p), e_max, args.full_scan)
        return [
            {"p": p, "e": e, "nu": nu, "ratio": format_rational(Fraction(nu, p ** e))}
            for e, nu in chain.entries
        ]

    if command == "fpt":
        report = base.fpt(_polynomial(base, args, p), e_max)
        return [{
            "p": p,
            "e_max": report.chain.e_max,
            "nu": report.chain.entries[-1][1],
            "lower": format_rational(report.lower),
            "upper": format_rational(report.upper),
            "candidate": format_rational(report.candidate),
            "stable": report.candidate_stable,
        }]

    if command == "tau":
        result = base.tau(_polynomial(base, args, p), parse_rational(args.t), e_max)
        return [{
            "p": p,
            "t": format_rational(result.t),
            "e": result.e,
            "basis": str(result.basis),
            "unit": result.basis.is_unit_ideal,
            "stabilized": result.stabilized,
        }]

    if command == "jumps":
        scan = base.jumps(_polynomial(base, args, p), args.n, e_max)
        return [{
            "p": p,
            "n": scan.n,
            "e_max": scan.e_max,
            "jumps": " ".join(format_rational(j) for j in scan.jumps),
            "certified": False,
        }]

    if command == "p1pair":
        pair = parse_pair(args.pair)
        split, regular = base.p1_pair(pair, p, e_max)
        return [{
            "p": p,
            "pair": format_pair(pair),
            "split_status": split.status,
            "split_e": split.e,
            "split_witness": _monomial_text(split.witness, PAIR_VARIABLES),
            "gfr_status": regular.status,
            "gfr_e": regular.e,
            "gfr_witness": _monomial_text(regular.witness, PAIR_VARIABLES),
        }]

    if command == "kltsurf":
        graph = _graph(args)
        data = boundary_coefficients(graph)
        verdict = base.klt_surface(graph, p, e_max)
        return [{
            "p": p,
            "type": ",".join(str(d) for d in verdict.graph_type),
            "in_klt_list": verdict.in_klt_list,
            "coefficients": " | ".join(",".join(format_rational(c) for c in arm) for arm in data.arm_coefficients),
            "center_excess": format_rational(data.center_excess),
            "status": verdict.status,
            "e": verdict.e,
        }]

    if command == "s0dim":
        try:
            m_values = [int(m) for m in args.m.split(",") if m.strip()]
        except ValueError:
            raise ValidationError(f"--m: expected a comma-separated list of integers, got {args.m!r}")
        if not m_values or min(m_values) < 1:
            raise ValidationError("--m: values must be positive")
        report = base.s0_dimension(_polynomial(base, args, p), m_values, e_max, args.dehom)
        return [{"p": p, **record} for record in s0_table(report)]

    if command == "psplit":
        splitting = base.splitting_type(args.degree, args.level, p)
        return [{
            "p": p,
            "a": splitting.a,
            "e": splitting.e,
            "summands": " ".join(str(b) for b in splitting.summands),
        }]

    raise ValidationError(f"Unknown command {command!r}")


def _sweep_records(command: str, args, spec: SweepSpec, config: dict, p: int) -> List[Dict]:
    return compute_records(command, args, p, FSingularBase(config), spec.e_max)


# -- rendering ----------------------------------------------------------------


def _flag(value) -> str:
    return "true" if value else "false"


def _verdict(status: str, e, witness: str) -> str:
    text = f"{status}(e={e}"
    if witness:
        text += f", witness {witness}"
    return text + ")"


def _summand_text(summands: str) -> str:
    counts = Counter(int(b) for b in summands.split())
    parts = []
    for b in sorted(counts, reverse=True):
        parts.append(f"O({b})" + (f"^{counts[b]}" if counts[b] > 1 else ""))
    return " + ".join(parts)


def _record_text(command: str, r: Dict) -> str:
    if command == "fedder":
        if r["f_split"]:
            return f"F-split: true (witness {r['witness']})"
        return "F-split: false"
    if command == "ordinary":
        return f"Ordinary: {_flag(r['ordinary'])}"
    if command == "nu":
        return f"nu_{r['e']} = {r['nu']} ({r['ratio']})"
    if command == "fpt":
        stability = "stable" if r["stable"] else "unstable"
        return f"fpt in [{r['lower']}, {r['upper']}]\ncandidate: {r['candidate']} ({stability})"
    if command == "tau":
        return (
            f"tau(f^{r['t']}) = {r['basis']}\n"
            f"level {r['e']}, stabilized: {_flag(r['stabilized'])}"
        )
    if command == "jumps":
        jumps = r["jumps"] or "none"
        return f"Jumps on the 1/{r['n']} grid: {jumps} (uncertified)"
    if command == "p1pair":
        return (
            f"Pair: {r['pair']}\n"
            f"Globally F-split: {_verdict(r['split_status'], r['split_e'], r['split_witness'])}\n"
            f"Globally F-regular: {_verdict(r['gfr_status'], r['gfr_e'], r['gfr_witness'])}"
        )
    if command == "kltsurf":
        listed = "" if r["in_klt_list"] else " (not a klt type)"
        return (
            f"Type: ({r['type']}){listed}\n"
            f"Boundary coefficients: {r['coefficients']}\n"
            f"(K+D).E0 = {r['center_excess']}\n"
            f"Verdict: {r['status']}(e={r['e']})"
        )
    if command == "psplit":
        return f"F^{r['e']}_* O({r['a']}) = {_summand_text(r['summands'])}"
    raise ValidationError(f"Unknown command {command!r}")


def render_text(command: str, records: List[Dict], sweep: bool = False) -> str:
    if sweep or command == "s0dim":
        return pd.DataFrame.from_records(records).to_markdown(index=False)
    return "\n".join(_record_text(command, r) for r in records)


def schema_name(command: str, sweep: bool = False) -> str:
    return ".".join(["fsingular"] + (["sweep"] if sweep else []) + [command, SCHEMA_VERSION])


def render(command: str, records: List[Dict], output_format: str, sweep: bool = False) -> str:
    if output_format == "json":
        return json.dumps({"schema": schema_name(command, sweep), "records": records}, sort_keys=True, indent=2)
    if output_format == "csv":
        return pd.DataFrame.from_records(records).to_csv(index=False).rstrip("\n")
    return render_text(command, records, sweep)


def render_payload_text(payload: Dict) -> str:
    """The text rendering of a JSON payload emitted by `render`."""
    parts = payload["schema"].split(".")[1:-1]
    sweep = parts[0] == "sweep"
    return render_text(parts[-1], payload["records"], sweep)


# -- entry point ----------------------------------------------------------------


def _configure(args) -> dict:
    config = load_config(args.config) if args.config else {}
    if args.workers is not None:
        if args.workers < 1:
            raise ValidationError("--workers: must be at least 1")
        config["workers"] = args.workers
    if args.e_max is not None and args.e_max < 1:
        raise ValidationError("--e-max: must be at least 1")
    if getattr(args, "level", 1) < 1:
        raise ValidationError("--level: must be at least 1")

    level = "DEBUG" if args.verbose else str(config.get("log_level", "WARNING")).upper()
    if not isinstance(logging.getLevelName(level), int):
        raise ImproperlyConfigured(f"Unknown log_level {level!r}")
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    return config


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    try:
        config = _configure(args)
        base = FSingularBase(config)

        if args.command == "sweep":
            command = args.sweep_command
            if not args.primes:
                raise ValidationError("--primes: required for sweep")
            spec = SweepSpec(parse_primes(args.primes, args.residue), args.e_max, args.format)
            batches = base.map_primes(partial(_sweep_records, command, args, spec, config), spec.primes)
            records = [record for batch in batches for record in batch]
            print(render(command, records, spec.output_format, sweep=True))
        else:
            command = args.command
            if args.p is None:
                raise ValidationError("--p: required")
            records = compute_records(command, args, args.p, base, args.e_max)
            print(render(command, records, args.format))
    except (ValidationError, ImproperlyConfigured) as e:
        print(f"fsingular: error: {e}", file=sys.stderr)
        return 2
    except ComputationError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 1

    return 0


def main():
    sys.exit(run())
