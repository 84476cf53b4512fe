"""Command-line front end: every operation on JSON files, scripting-friendly.

Exit codes: 0 success (stdout carries exactly one JSON document), 1 usage
error or malformed input document, 2 numeric/validation failure.  Output is
deterministic: identical inputs give byte-identical documents.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import ConvergenceError, SchemaError, ValidationError
from .fock import PureState
from .lift import ModeUnitary, apply_mode_unitary
from .scissors import EprResource, ScissorsInput, fidelity, run_scissors, solve_balanced
from .selfcheck import run_selfcheck
from .su2 import multiplet_label, su2_adjoint
from .su3 import enumerate_multiplet, su3_adjoint, su3_euler, t3_y_label


def _load_json(path: str) -> object:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SchemaError(f"cannot read '{path}': {exc.strerror or exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"'{path}' is not valid JSON: {exc}") from exc


def _load_state(path: str) -> PureState:
    return PureState.from_json_dict(_load_json(path))


def _load_matrix(path: str) -> ModeUnitary:
    return ModeUnitary.from_json_dict(_load_json(path))


def _complex_triple(text: str) -> tuple[complex, complex, complex]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected 3 comma-separated amplitudes, got {len(parts)}")
    try:
        return tuple(complex(p.strip()) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad complex amplitude in '{text}': {exc}") from exc


def _angle_tuple(text: str) -> tuple[float, ...]:
    parts = text.split(",")
    if len(parts) != 8:
        raise argparse.ArgumentTypeError(f"expected 8 comma-separated angles, got {len(parts)}")
    try:
        return tuple(float(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad angle in '{text}': {exc}") from exc


def _complex_json(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def _cmd_apply(args) -> dict:
    state = _load_state(args.state)
    matrix = _load_matrix(args.matrix)
    return apply_mode_unitary(matrix, state, args.offset).to_json_dict()


def _cmd_su2_label(args) -> dict:
    label = multiplet_label((args.n, args.m))
    return {"l": float(label.l), "l3": float(label.l3)}


def _cmd_su2_adjoint(args) -> dict:
    o = su2_adjoint(_load_matrix(args.matrix))
    return {"rows": [[float(x) for x in row] for row in o]}


def _cmd_su3_label(args) -> dict:
    label = t3_y_label((args.n, args.l, args.m))
    return {"t3": float(label.t3), "y": float(label.y), "multiplet": list(label.multiplet)}


def _cmd_su3_multiplet(args) -> dict:
    rows = enumerate_multiplet(args.n)
    return {
        "n": args.n,
        "multiplet": [args.n, 0],
        "dimension": len(rows),
        "states": [
            {"occ": list(occ), "t3": float(lab.t3), "y": float(lab.y)} for occ, lab in rows
        ],
    }


def _cmd_su3_euler(args) -> dict:
    return su3_euler(*args.angles).to_json_dict()


def _cmd_su3_adjoint(args) -> dict:
    r = su3_adjoint(_load_matrix(args.matrix))
    return {"rows": [[float(x) for x in row] for row in r]}


def _cmd_scissors_run(args) -> dict:
    inp = ScissorsInput.from_amplitudes(*args.input)
    epr = EprResource.from_coefficients(*args.epr)
    bs = _load_matrix(args.bs)
    outcomes = []
    for rec in run_scissors(inp, epr, bs):
        outcomes.append(
            {
                "detectors": list(rec.detector_counts),
                "probability": rec.probability,
                "multiplet": {"l": float(rec.multiplet.l), "l3": float(rec.multiplet.l3)},
                "conditional_state": rec.conditional_state.to_json_dict(),
            }
        )
    return {"input_renormalized": inp.renormalized, "outcomes": outcomes}


def _cmd_scissors_solve(args) -> dict:
    sol = solve_balanced(args.target)
    p11s, fids = [], []
    for amps in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        inp = ScissorsInput.from_amplitudes(*amps)
        rec = next(
            r for r in run_scissors(inp, sol.epr, sol.beam_splitter)
            if r.detector_counts == (1, 1)
        )
        p11s.append(rec.probability)
        fids.append(fidelity(rec.conditional_state, inp.state()))
    c = sol.epr.coefficients()
    return {
        "target": args.target,
        "residual": sol.residual,
        "achieved": list(sol.achieved),
        "beam_splitter": sol.beam_splitter.to_json_dict(),
        "epr": {
            "c_minus1": _complex_json(c[0]),
            "c_0": _complex_json(c[1]),
            "c_1": _complex_json(c[2]),
        },
        "verification": {"p11": sum(p11s) / 3.0, "min_fidelity": min(fids)},
    }


def _cmd_selfcheck(args) -> dict:
    results = run_selfcheck()
    return {
        "checks": [{"name": name, "passed": passed} for name, passed in results],
        "passed": all(passed for _, passed in results),
    }


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fewphoton",
        description="Exact few-photon linear optics on two and three modes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(p, handler):
        p.add_argument("--output", help="write the JSON document here instead of stdout")
        p.set_defaults(handler=handler)

    p = sub.add_parser("apply", help="act with a mode unitary on a state file")
    p.add_argument("--state", required=True, help="input state JSON file")
    p.add_argument("--matrix", required=True, help="mode unitary JSON file")
    p.add_argument("--offset", type=int, default=0, help="first mode the unitary addresses")
    add(p, _cmd_apply)

    su2 = sub.add_parser("su2", help="two-mode multiplet tools").add_subparsers(
        dest="subcommand", required=True
    )
    p = su2.add_parser("label", help="multiplet label (l, l3) of a two-mode number state")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    add(p, _cmd_su2_label)
    p = su2.add_parser("adjoint", help="3x3 generator-space rotation of a 2x2 unitary")
    p.add_argument("--matrix", required=True)
    add(p, _cmd_su2_adjoint)

    su3 = sub.add_parser("su3", help="three-mode multiplet tools").add_subparsers(
        dest="subcommand", required=True
    )
    p = su3.add_parser("label", help="(t3, y) label of a three-mode number state")
    p.add_argument("n", type=int)
    p.add_argument("l", type=int)
    p.add_argument("m", type=int)
    add(p, _cmd_su3_label)
    p = su3.add_parser("multiplet", help="table of the n-photon multiplet on the t3-y plane")
    p.add_argument("--n", type=int, required=True)
    add(p, _cmd_su3_multiplet)
    p = su3.add_parser("euler", help="build a tritter from eight Euler-style angles")
    p.add_argument("--angles", type=_angle_tuple, required=True,
                   help="8 comma-separated angles")
    add(p, _cmd_su3_euler)
    p = su3.add_parser("adjoint", help="8x8 generator-space rotation of a 3x3 unitary")
    p.add_argument("--matrix", required=True)
    add(p, _cmd_su3_adjoint)

    scis = sub.add_parser("scissors", help="post-selected teleportation protocol").add_subparsers(
        dest="subcommand", required=True
    )
    p = scis.add_parser("run", help="enumerate detector outcomes for one configuration")
    p.add_argument("--input", type=_complex_triple, required=True,
                   help="a0,a1,a2 amplitudes (re+imj form)")
    p.add_argument("--epr", type=_complex_triple, required=True,
                   help="c-1,c0,c1 resource coefficients (re+imj form)")
    p.add_argument("--bs", required=True, help="beam splitter JSON matrix file")
    add(p, _cmd_scissors_run)
    p = scis.add_parser("solve", help="find the balanced configuration")
    p.add_argument("--target", type=float, default=1.0 / 3.0,
                   help="common coefficient value to aim for (default 1/3)")
    add(p, _cmd_scissors_solve)

    p = sub.add_parser("selfcheck", help="run the built-in invariant suite")
    add(p, _cmd_selfcheck)

    return parser


def dispatch(argv: list[str]) -> int:
    """Route one command line; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        doc = args.handler(args)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValidationError, ConvergenceError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    text = json.dumps(doc) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    if args.handler is _cmd_selfcheck and not doc["passed"]:
        return 2
    return 0


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
