"""Command-line entry point.

One executable, one subcommand per engine, JSON as the single interchange
format (CSV only for plot-ready numeric tables).  Exit codes: 0 success,
1 negative verdict from a predicate subcommand, 2 input or precondition
errors (reported as machine-readable JSON on stderr).  Output is compact by
default for diffability; pass --pretty for humans.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

import numpy as np

from . import acceptance, frames, unitary_lab
from .analysis import gram_window, phase_modulate, time_samples
from .congruence import dilation_congruent, is_wavelet_set, translation_congruent
from .families import d_dilation_set, journe_path, shannon, shannon_path, subset_extension
from .interpolation import (
    CoefficientFamily,
    InterpolationMap,
    build_sigma,
    check_measure_preserving,
    coefficient_criterion_report,
    compose,
    torsion_order,
)
from .jsonio import matrix_from_json, matrix_to_json, vector_from_json
from .pisets import PiRational, PiSet
from .symbols import FrequencySymbol, msf_symbol

PREDICATE_FAIL = 1
INPUT_ERROR = 2


class CliError(Exception):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise CliError("missing-file", f"{path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CliError("malformed-json", f"{path}: {exc}") from exc


def _emit(args, payload: dict) -> None:
    text = json.dumps(payload, indent=2 if args.pretty else None,
                      separators=None if args.pretty else (",", ":"))
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _load_set(path: str) -> PiSet:
    return PiSet.from_json(_load_json(path))


def _load_symbol(path: str) -> FrequencySymbol:
    """Accept a FrequencySymbol JSON, or promote a bare PiSet to its
    s-elementary symbol."""
    obj = _load_json(path)
    if "intervals" in obj:
        return msf_symbol(PiSet.from_json(obj))
    return FrequencySymbol.from_json(obj)


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError("bad-rational", f"{text!r} is not a rational p/q") from exc


def _cmd_verify(args) -> int:
    verdict = is_wavelet_set(_load_set(args.set))
    _emit(args, verdict.to_json())
    return 0 if verdict.is_wavelet_set else PREDICATE_FAIL


def _cmd_family(args) -> int:
    name = args.name
    if name == "shannon":
        result = shannon()
    elif name == "shannon-path":
        result = shannon_path(PiRational(_parse_rational(_require(args, "param"))))
    elif name == "journe-path":
        result = journe_path(PiRational(_parse_rational(_require(args, "param"))))
    elif name == "subset-ext":
        result = subset_extension(_load_set(_require(args, "set")))
    elif name == "d-dilation":
        result = d_dilation_set(_parse_rational(_require(args, "param")))
    else:  # pragma: no cover - argparse restricts choices
        raise CliError("unknown-family", name)
    _emit(args, result.to_json())
    return 0


def _require(args, attr: str):
    value = getattr(args, attr, None)
    if value is None:
        raise CliError("missing-flag", f"family {args.name} requires --{attr}")
    return value


def _cmd_interp(args) -> int:
    if args.criterion:
        fam = CoefficientFamily.from_json(_load_json(args.criterion))
        report = coefficient_criterion_report(fam)
        passes = all(dev <= args.tol for _, dev in report)
        _emit(
            args,
            {
                "order": fam.order,
                "pieces": [
                    {"piece": piece.to_json(), "deviation": dev} for piece, dev in report
                ],
                "passes": passes,
                "tolerance": args.tol,
            },
        )
        return 0 if passes else PREDICATE_FAIL
    if not (args.e and args.f):
        raise CliError("missing-flag", "interp needs -e and -f (or --criterion)")
    sigma = build_sigma(_load_set(args.e), _load_set(args.f))
    order = torsion_order(sigma, args.kmax)
    payload = {
        "map": sigma.to_json(),
        "torsion_order": order,
        "is_involution": order is not None and order <= 2 and compose(sigma, sigma).is_identity(),
        "measure_preserving": check_measure_preserving(sigma),
    }
    _emit(args, payload)
    return 0


def _cmd_gram(args) -> int:
    sym = _load_symbol(args.symbol)
    window = gram_window(sym, args.n, args.l)
    payload = {
        "n": args.n,
        "l": args.l,
        "size": int(window.entries.shape[0]),
        "max_deviation_from_identity": window.deviation_from_identity(),
        "matrix": matrix_to_json(window.entries),
    }
    _emit(args, payload)
    return 0


def _cmd_sample(args) -> int:
    sym = _load_symbol(args.symbol)
    grid: list[float] = []
    with open(args.grid) as fh:
        for row in csv.reader(fh):
            grid.extend(float(cell) for cell in row if cell.strip())
    values = time_samples(sym, grid)
    target = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.writer(target)
        writer.writerow(["t", "re", "im"])
        for t, v in zip(grid, values):
            writer.writerow([repr(float(t)), repr(float(v.real)), repr(float(v.imag))])
    finally:
        if args.out:
            target.close()
    return 0


def _load_system(path: str) -> unitary_lab.UnitarySystem:
    obj = _load_json(path)
    return unitary_lab.UnitarySystem([matrix_from_json(m) for m in obj["elements"]])


def _cmd_lab(args) -> int:
    op = args.op
    if op == "regular-rep":
        table = _load_json(args.table)["table"]
        system = unitary_lab.regular_representation(table)
        _emit(args, {"dim": system.dim, "elements": [matrix_to_json(u) for u in system.elements]})
        return 0
    system = _load_system(args.system)
    if op == "wandering":
        x = vector_from_json(_load_json(args.vector))
        ok = (
            unitary_lab.is_complete_wandering_vector(system, x)
            if args.complete
            else unitary_lab.is_wandering_vector(system, x)
        )
        _emit(args, {"wandering": bool(ok), "complete": bool(args.complete)})
        return 0 if ok else PREDICATE_FAIL
    if op == "local-commutant":
        x = vector_from_json(_load_json(args.vector))
        basis = unitary_lab.local_commutant(system, x)
        _emit(args, {"dimension": len(basis), "basis": [matrix_to_json(b) for b in basis.basis]})
        return 0
    if op == "commutant":
        basis = unitary_lab.commutant(system)
        _emit(args, {"dimension": len(basis), "basis": [matrix_to_json(b) for b in basis.basis]})
        return 0
    if op == "interp-unitary":
        psi = vector_from_json(_load_json(args.psi))
        eta = vector_from_json(_load_json(args.eta))
        v = unitary_lab.interpolation_unitary(system, psi, eta)
        _emit(args, {"unitary": matrix_to_json(v)})
        return 0
    if op == "riesz":
        psi = vector_from_json(_load_json(args.psi))
        eta = vector_from_json(_load_json(args.eta))
        re, im = (float(p) for p in args.lam.split(","))
        ok = unitary_lab.riesz_combination_check(system, psi, eta, complex(re, im))
        _emit(args, {"riesz": bool(ok)})
        return 0 if ok else PREDICATE_FAIL
    if op == "pair-test":
        psi = vector_from_json(_load_json(args.psi))
        eta = vector_from_json(_load_json(args.eta))
        rho_w, v2 = unitary_lab.interpolation_pair_test(system, psi, eta, args.alpha)
        _emit(args, {"rho_is_wandering": bool(rho_w), "v_squared_is_identity": bool(v2)})
        return 0 if (rho_w and v2) else PREDICATE_FAIL
    if op == "frame-vector":
        x = vector_from_json(_load_json(args.vector))
        psi = vector_from_json(_load_json(args.psi))
        cls, a = unitary_lab.parseval_frame_vector_check(system, x, psi)
        _emit(args, {"classification": cls, "factor": matrix_to_json(a)})
        return 0 if cls != "neither" else PREDICATE_FAIL
    raise CliError("unknown-op", op)  # pragma: no cover


def _write_frame_csv(path: str, frame: np.ndarray) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        n = frame.shape[0]
        writer.writerow([f"{part}_{i}" for i in range(n) for part in ("re", "im")])
        for j in range(frame.shape[1]):
            row = []
            for i in range(n):
                row.extend([repr(float(frame[i, j].real)), repr(float(frame[i, j].imag))])
            writer.writerow(row)


def _cmd_frames(args) -> int:
    op = args.op
    f = matrix_from_json(_load_json(args.frame)) if args.frame else None
    if op == "bounds":
        a, b = frames.frame_bounds(f)
        _emit(args, {"lower": a, "upper": b, "is_frame": bool(a > args.tol)})
        return 0
    if op == "parseval":
        ok = frames.is_parseval(f, args.tol)
        _emit(args, {"parseval": bool(ok), "tolerance": args.tol})
        return 0 if ok else PREDICATE_FAIL
    if op == "naimark":
        g = frames.naimark_complement(f, args.tol)
        if args.csv:
            _write_frame_csv(args.csv, g)
        _emit(args, {"complement": matrix_to_json(g), "dim": int(g.shape[0])})
        return 0
    if op == "disjoint":
        g = matrix_from_json(_load_json(args.g))
        ok = frames.strongly_disjoint(f, g, args.tol)
        _emit(args, {"strongly_disjoint": bool(ok)})
        return 0 if ok else PREDICATE_FAIL
    if op == "multiplex":
        g = matrix_from_json(_load_json(args.g))
        x = vector_from_json(_load_json(args.x))
        y = vector_from_json(_load_json(args.y))
        xr, yr = frames.multiplex_roundtrip(f, g, x, y, tol=args.tol)
        err = max(float(np.max(np.abs(xr - x))), float(np.max(np.abs(yr - y))))
        _emit(
            args,
            {"x": matrix_to_json(xr), "y": matrix_to_json(yr), "max_error": err},
        )
        return 0
    raise CliError("unknown-op", op)  # pragma: no cover


def _cmd_decompose(args) -> int:
    b = matrix_from_json(_load_json(args.matrix))
    chosen = [v is not None for v in (args.weights, args.projections, args.etf)]
    if sum(chosen) != 1:
        raise CliError("missing-flag", "pick exactly one of --weights/--projections/--etf")
    if args.weights is not None:
        weights = [float(w) for w in args.weights.split(",") if w.strip()]
        dec = frames.weighted_decomposition(b, weights, args.tol)
        payload = dec.to_json()
        frame = np.column_stack(dec.units)
    elif args.projections is not None:
        dec = frames.projection_decomposition(b, args.projections, args.tol)
        payload = dec.to_json()
        frame = np.column_stack(dec.units)
    else:
        frame, bound = frames.etf_construct(b, args.etf, args.tol)
        payload = {"frame": matrix_to_json(frame), "frame_bound": bound}
    if args.csv:
        _write_frame_csv(args.csv, frame)
    _emit(args, payload)
    return 0


def _cmd_suite(args) -> int:
    report = acceptance.run_battery(args.seed)
    _emit(args, report)
    return 0 if report["all_passed"] else PREDICATE_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wavesets",
        description="Exact wavelet-set calculus, interpolation maps, and frame decompositions",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indent JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="decide whether a set is a dyadic wavelet set")
    p.add_argument("--set", required=True)
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("family", parents=[common], help="construct a wavelet-set family member")
    p.add_argument(
        "--name",
        required=True,
        choices=["shannon", "shannon-path", "journe-path", "subset-ext", "d-dilation"],
    )
    p.add_argument("--param", help="rational p/q (units of pi for paths; plain for d)")
    p.add_argument("--set", help="subset A for subset-ext")
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_family)

    p = sub.add_parser("interp", parents=[common], help="interpolation map, torsion, coefficient criterion")
    p.add_argument("-e", "--e", dest="e")
    p.add_argument("-f", "--f", dest="f")
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--criterion", help="coefficient family JSON")
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_interp)

    p = sub.add_parser("gram", parents=[common], help="Gram window of a symbol, with deviation statistic")
    p.add_argument("--symbol", required=True, help="FrequencySymbol JSON (or PiSet to promote)")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--l", type=int, default=6)
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_gram)

    p = sub.add_parser("sample", parents=[common], help="time-domain samples as CSV (t, re, im)")
    p.add_argument("--symbol", required=True)
    p.add_argument("--grid", required=True, help="CSV of sample points t")
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_sample)

    p = sub.add_parser("lab", parents=[common], help="finite-dimensional unitary-system operations")
    p.add_argument(
        "op",
        choices=[
            "regular-rep",
            "wandering",
            "local-commutant",
            "commutant",
            "interp-unitary",
            "riesz",
            "pair-test",
            "frame-vector",
        ],
    )
    p.add_argument("--table", help="group Cayley table JSON for regular-rep")
    p.add_argument("--system", help="unitary system JSON")
    p.add_argument("--vector")
    p.add_argument("--psi")
    p.add_argument("--eta")
    p.add_argument("--lam", default="1,0", help="complex scalar re,im")
    p.add_argument("--alpha", type=float, default=0.785398)
    p.add_argument("--complete", action="store_true")
    p.add_argument("--seed", type=int, default=acceptance.DEFAULT_SEED)
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_lab)

    p = sub.add_parser("frames", parents=[common], help="frame bounds, Naimark complements, multiplexing")
    p.add_argument("op", choices=["bounds", "parseval", "naimark", "disjoint", "multiplex"])
    p.add_argument("--frame", required=True, help="synthesis matrix JSON")
    p.add_argument("--g", help="second frame JSON")
    p.add_argument("--x")
    p.add_argument("--y")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--csv", help="CSV export of frame vectors")
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_frames)

    p = sub.add_parser("decompose", parents=[common], help="targeted rank-one decompositions and ETFs")
    p.add_argument("--matrix", required=True, help="positive Hermitian matrix JSON")
    p.add_argument("--weights", help="comma-separated positive weights")
    p.add_argument("--projections", type=int, help="number of rank-one projections")
    p.add_argument("--etf", type=int, help="ellipsoidal tight frame length (matrix is T)")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--csv")
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser("suite", parents=[common], help="run the acceptance battery and emit a JSON report")
    p.add_argument("--seed", type=int, default=acceptance.DEFAULT_SEED)
    p.add_argument("--out")
    p.set_defaults(handler=_cmd_suite)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except CliError as exc:
        _fail(exc.code, str(exc))
    except frames.InfeasibleWeightsError as exc:
        _fail("infeasible-weights", str(exc))
    except (ValueError, RuntimeError) as exc:
        _fail("invalid-input", str(exc))
    except OSError as exc:
        _fail("io-error", str(exc))
    return INPUT_ERROR


def _fail(code: str, message: str) -> None:
    print(json.dumps({"error": {"code": code, "message": message}}), file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
