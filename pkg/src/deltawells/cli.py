"""Command-line front end.

    deltawells solve --config sys.json
    deltawells flow --config sys.json --kappa-min 0.01 --kappa-max 3 --samples 400
    deltawells wavefunction --config sys.json --state 1 --out psi.csv
    deltawells verify --config sys.json --suite all
    deltawells twin --a 2 --lambda 2
    deltawells circulant --n 3 --a 3 --lambda 1

Exit codes: 0 success, 1 a verification check failed, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import io
from .circulant import circulant_bound_states, dense_deviation, pairing_map
from .eigen import scan_flow
from .errors import DeltaWellsError
from .model import PhysicalConstants, equidistant_system, load_system, validate_system
from .spectrum import bracket_kappa_max, find_bound_states, twin_levels
from .verify import SUITES, any_failed, run_suite
from .wavefunction import build_wavefunction, evaluate


class InputError(Exception):
    """Bad user input; reported on one line with exit code 2."""


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        io.atomic_write(out, text)


def _system(args):
    if not args.config:
        raise InputError("--config: a system file is required")
    try:
        return load_system(args.config)
    except OSError as exc:
        raise InputError(f"--config: cannot read {args.config}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"--config: {args.config} is not valid JSON ({exc.msg})") from None
    except (DeltaWellsError, TypeError, ValueError) as exc:
        raise InputError(f"--config: {exc}") from None


def _positive(name: str, value, integer: bool = False, minimum: float = 0.0):
    if value is None:
        raise InputError(f"--{name}: required")
    if not math.isfinite(value) or value <= minimum:
        raise InputError(f"--{name}: must be > {minimum:g}, got {value}")
    return int(value) if integer else float(value)


def cmd_solve(args) -> int:
    system = _system(args)
    _emit(io.json_text(find_bound_states(system).to_dict()), args.out)
    return 0


def cmd_flow(args) -> int:
    system = _system(args)
    kstar = bracket_kappa_max(system)
    kmin = args.kappa_min if args.kappa_min is not None else 1e-3 * kstar
    kmax = args.kappa_max if args.kappa_max is not None else 2.0 * kstar
    _positive("kappa-min", kmin)
    _positive("kappa-max", kmax, minimum=kmin)
    samples = args.samples if args.samples is not None else 400
    _positive("samples", samples, integer=True, minimum=1)
    flow = scan_flow(system, kmin, kmax, samples)
    crossings = flow.crossings()
    _emit(io.flow_csv(flow), args.out)
    if args.out is not None:
        roots = {
            "kappa_star": kstar,
            "crossings": [{"branch": b, "kappa": k} for b, k in crossings],
        }
        io.atomic_write(f"{args.out}.roots.json", io.json_text(roots))
    return 0


def cmd_wavefunction(args) -> int:
    system = _system(args)
    spectrum = find_bound_states(system)
    index = args.state if args.state is not None else 0
    if not 0 <= index < len(spectrum):
        raise InputError(f"--state: index {index} out of range, system has {len(spectrum)} level(s)")
    state = spectrum[index]
    wfs = [build_wavefunction(system, state, i) for i in range(state.multiplicity)]
    reach = 10.0 / state.kappa
    xmin = args.xmin if args.xmin is not None else system.centers[0] - reach
    xmax = args.xmax if args.xmax is not None else system.centers[-1] + reach
    if not xmax > xmin:
        raise InputError(f"--xmax: must exceed --xmin ({xmin})")
    samples = args.samples if args.samples is not None else 1001
    _positive("samples", samples, integer=True, minimum=1)
    x = np.linspace(xmin, xmax, samples)
    if len(wfs) == 1:
        _emit(io.csv_text(["x", "psi"], [x, evaluate(wfs[0], x)]), args.out)
    elif args.out is None:
        names = [f"psi_{chr(ord('a') + i)}" for i in range(len(wfs))]
        _emit(io.csv_text(["x", *names], [x, *(evaluate(wf, x) for wf in wfs)]), None)
    else:
        out = Path(args.out)
        for i, wf in enumerate(wfs):
            path = out.with_name(f"{out.stem}_{chr(ord('a') + i)}{out.suffix}")
            io.atomic_write(path, io.csv_text(["x", "psi"], [x, evaluate(wf, x)]))
    return 0


def cmd_verify(args) -> int:
    system = _system(args)
    suite = args.suite or "all"
    records = run_suite(system, suite)
    _emit(io.json_text({"suite": suite, "checks": records}), args.out)
    return 1 if any_failed(records) else 0


def _constants(args) -> PhysicalConstants:
    return _system(args).constants if args.config else PhysicalConstants()


def cmd_twin(args) -> int:
    a = _positive("a", args.a)
    lam = _positive("lambda", args.lam)
    constants = _constants(args)
    closed = twin_levels(a, lam, constants)
    numeric = find_bound_states(validate_system([0.0, a], [lam, lam], constants))
    closed_e = [closed.energy_plus] + ([closed.energy_minus] if closed.energy_minus is not None else [])
    numeric_e = list(numeric.level_energies())
    deltas = [n - c for n, c in zip(numeric_e, closed_e)] if len(numeric_e) == len(closed_e) else None
    report = {
        "a": a,
        "lambda": lam,
        "critical_separation": constants.hbar**2 / (constants.mass * lam),
        "closed_form": {
            "kappa_plus": closed.kappa_plus,
            "kappa_minus": closed.kappa_minus,
            "raw_kappa_minus": closed.raw_kappa_minus,
            "energies": closed_e,
        },
        "numeric": {"kappas": [s.kappa for s in numeric for _ in range(s.multiplicity)], "energies": numeric_e},
        "state_counts_agree": len(closed_e) == len(numeric_e),
        "deltas": deltas,
    }
    _emit(io.json_text(report), args.out)
    return 0


def cmd_circulant(args) -> int:
    n = _positive("n", args.n, integer=True)
    a = _positive("a", args.a)
    lam = _positive("lambda", args.lam)
    system = equidistant_system(n, a, lam, _constants(args))
    circ = circulant_bound_states(system)
    dense = find_bound_states(system)
    report = {
        "n": n,
        "a": a,
        "lambda": lam,
        "pairing": {str(j): k for j, k in pairing_map(n).items()},
        "circulant_levels": [
            {"energy": s.energy, "kappa": s.kappa, "multiplicity": s.multiplicity, "fourier_indices": list(s.branch_indices)}
            for s in circ
        ],
        "dense_levels": [
            {"energy": s.energy, "kappa": s.kappa, "multiplicity": s.multiplicity, "branches": list(s.branch_indices)}
            for s in dense
        ],
        "max_deviation": max((dense_deviation(system, s.kappa) for s in circ), default=0.0),
    }
    _emit(io.json_text(report), args.out)
    return 0


COMMANDS = {
    "solve": cmd_solve,
    "flow": cmd_flow,
    "wavefunction": cmd_wavefunction,
    "verify": cmd_verify,
    "twin": cmd_twin,
    "circulant": cmd_circulant,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="system JSON file")
    common.add_argument("--out", metavar="PATH", help="output file (default: standard output)")

    parser = argparse.ArgumentParser(prog="deltawells", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("solve", parents=[common], help="all bound states as JSON")

    p = sub.add_parser("flow", parents=[common], help="eigenvalue branches on a kappa grid as CSV")
    p.add_argument("--kappa-min", type=float)
    p.add_argument("--kappa-max", type=float)
    p.add_argument("--samples", type=int)

    p = sub.add_parser("wavefunction", parents=[common], help="sampled wave function as CSV")
    p.add_argument("--state", type=int, help="level index, 0 = ground state")
    p.add_argument("--xmin", type=float)
    p.add_argument("--xmax", type=float)
    p.add_argument("--samples", type=int)

    p = sub.add_parser("verify", parents=[common], help="theorem checks as JSON")
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")

    p = sub.add_parser("twin", parents=[common], help="twin wells: closed form vs numeric")
    p.add_argument("--a", type=float)
    p.add_argument("--lambda", dest="lam", type=float)

    p = sub.add_parser("circulant", parents=[common], help="equidistant wells: circulant model vs dense")
    p.add_argument("--n", type=int)
    p.add_argument("--a", type=float)
    p.add_argument("--lambda", dest="lam", type=float)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except InputError as exc:
        print(f"deltawells {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except DeltaWellsError as exc:
        print(f"deltawells {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"deltawells {args.command}: error: {exc}", file=sys.stderr)
        return 2
