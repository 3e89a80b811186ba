"""Batch command-line front end.

Problem files are JSON::

    {"structure": "herm" | {"kind": ..., "field": ..., "scalar_product": ...},
     "X": <matrix>, "B": <matrix>, "norm": "fro" | "spec",
     "Z": <matrix> (optional), "rtol": 0.0 (optional)}

Exit codes: 0 success, 2 parse/validation error, 3 degenerate or infeasible
input.
"""

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import oracle, solver
from .dkw import InfeasibleBoundError
from .io import (dumps, matrix_from_json, matrix_to_json, structure_from_json,
                 structure_to_json)
from .reduction import prototype_of
from .structures import is_member, membership_defect

EXIT_USAGE = 2
EXIT_DEGENERATE = 3


class CliError(Exception):
    def __init__(self, message, code=EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read {path}: {exc}")


def load_problem(path, args):
    obj = _read_json(path)
    if not isinstance(obj, dict):
        raise CliError(f"{path}: problem file must be a JSON object")
    structure = args.structure if getattr(args, "structure", None) else obj.get("structure")
    if structure is None:
        raise CliError(f"{path}: no structure given")
    try:
        S = structure_from_json(structure)
        X = matrix_from_json(obj["X"])
        B = matrix_from_json(obj["B"])
    except KeyError as exc:
        raise CliError(f"{path}: missing field {exc}")
    if X.shape != B.shape:
        raise CliError(f"{path}: X is {X.shape} but B is {B.shape}")
    norm = getattr(args, "norm", None) or obj.get("norm", "fro")
    Z = None
    if getattr(args, "z", None):
        Z = matrix_from_json(_read_json(args.z))
    elif obj.get("Z") is not None:
        Z = matrix_from_json(obj["Z"])
    rtol = args.rtol if getattr(args, "rtol", None) is not None else float(obj.get("rtol", 0.0))
    return S, X, B, norm, Z, rtol


def _vector_result(S, X, B, norm, Z):
    if X.shape[1] != 1:
        raise CliError("--vector needs a single right-hand side (p = 1)")
    if norm in ("fro", "frobenius"):
        return solver.vector_min_frobenius(S, X[:, 0], B[:, 0])
    return solver.vector_min_spectral_family(S, X[:, 0], B[:, 0], Z)


def solve_problem(S, X, B, norm, Z=None, rtol=0.0, sanitize=False, vector=False):
    """The JSON-ready result for one problem; also used by the batch runner."""
    if vector:
        sol = _vector_result(S, X, B, norm, Z)
    else:
        sol = solver.solve(S, X, B, norm=norm, Z=Z, rtol=rtol, sanitize=sanitize)
    out = {
        "rho": sol.rho,
        "sigma": sol.sigma,
        "A": matrix_to_json(sol.A),
        "unique": sol.unique,
        "class_resolved": sol.class_resolved,
        "residual_check": oracle.residual(sol.A, X, B),
        "member": bool(is_member(sol.A, S)),
    }
    if sol.norm_kind == "spectral":
        out["mu"] = sol.mu
    return out


def _emit(obj, out):
    text = dumps(obj)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def cmd_solve(args):
    path = Path(args.problem)
    if path.is_dir():
        files = sorted(path.glob("*.json"))
        results = {}
        for f in files:
            S, X, B, norm, Z, rtol = load_problem(f, args)
            results[f.name] = solve_problem(S, X, B, norm, Z, rtol, args.sanitize, args.vector)
        if args.out and Path(args.out).is_dir():
            for name, res in results.items():
                (Path(args.out) / name.replace(".json", ".result.json")).write_text(dumps(res) + "\n")
        else:
            _emit(results, args.out)
        return
    S, X, B, norm, Z, rtol = load_problem(path, args)
    _emit(solve_problem(S, X, B, norm, Z, rtol, args.sanitize, args.vector), args.out)


def cmd_rho(args):
    S, X, B, _, _, rtol = load_problem(args.problem, args)
    if args.vector:
        if X.shape[1] != 1:
            raise CliError("--vector needs a single right-hand side (p = 1)")
        value = solver.vector_rho(S, X[:, 0], B[:, 0])
    else:
        value = solver.rho(S, X, B, rtol)
    _emit({"rho": value, "class_resolved": prototype_of(S).name}, args.out)


def cmd_check(args):
    obj = _read_json(args.matrix)
    if "A" in obj:
        A = matrix_from_json(obj["A"])
        structure = args.structure or obj.get("structure")
    else:
        A = matrix_from_json(obj)
        structure = args.structure
    if structure is None:
        raise CliError("no structure given")
    S = structure_from_json(structure)
    if A.shape[0] != A.shape[1]:
        raise CliError(f"A must be square, got {A.shape}")
    _emit({"defect": membership_defect(A, S), "member": bool(is_member(A, S))}, args.out)


def cmd_oracle(args):
    S, X, B, _, _, rtol = load_problem(args.problem, args)
    res = oracle.oracle_solve(S, X, B)
    closed = solver.rho(S, X, B, rtol)
    _emit({
        "rho_oracle": res.rho,
        "rho_closed": closed,
        "match": bool(abs(res.rho - closed) <= 1e-8 * (1.0 + float(np.linalg.norm(B)))),
        "A": matrix_to_json(res.A_min_fro),
        "coeff_dim": res.coeff_dim,
    }, args.out)


def cmd_sample(args):
    """Write seeded random problem files for batch runs."""
    rng = np.random.default_rng(args.seed)
    S = structure_from_json(args.structure)
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    complex_data = S.field == "complex"
    for i in range(args.count):
        X = rng.standard_normal((args.n, args.p))
        B = rng.standard_normal((args.n, args.p))
        if complex_data:
            X = X + 1j * rng.standard_normal((args.n, args.p))
            B = B + 1j * rng.standard_normal((args.n, args.p))
        problem = {"structure": structure_to_json(S), "X": matrix_to_json(X),
                   "B": matrix_to_json(B), "norm": args.norm or "fro"}
        (outdir / f"problem_{i:04d}.json").write_text(dumps(problem) + "\n")


def build_parser():
    parser = argparse.ArgumentParser(prog="structlsq",
                                     description="Structured inverse least squares in closed form.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, norm=True):
        p.add_argument("problem", help="problem JSON file (solve: or a directory of them)")
        p.add_argument("--structure", type=json_or_str, help="override the structure class")
        p.add_argument("--rtol", type=float, default=None, help="rank tolerance for the SVD of X")
        p.add_argument("--out", help="write results here instead of standard output")
        if norm:
            p.add_argument("--norm", choices=["fro", "spec"])

    p = sub.add_parser("solve", help="minimal-norm structured solution")
    common(p)
    p.add_argument("--z", help="matrix JSON file with the family parameter Z")
    p.add_argument("--sanitize", action="store_true", help="project and rescale Z instead of rejecting it")
    p.add_argument("--vector", action="store_true", help="use the single-column closed forms")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("rho", help="optimal residual only")
    common(p, norm=False)
    p.add_argument("--vector", action="store_true")
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("check", help="membership defect of a matrix")
    p.add_argument("matrix", help="matrix JSON file, or {'A': <matrix>, 'structure': ...}")
    p.add_argument("--structure", type=json_or_str)
    p.add_argument("--out")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", help="brute-force reference solution for debugging")
    common(p, norm=False)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("sample", help="write seeded random problem files")
    p.add_argument("outdir")
    p.add_argument("--structure", type=json_or_str, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("-n", type=int, default=4)
    p.add_argument("-p", type=int, default=2)
    p.add_argument("--norm", choices=["fro", "spec"])
    p.set_defaults(func=cmd_sample)
    return parser


def json_or_str(text):
    text = text.strip()
    if text.startswith("{"):
        return json.loads(text)
    return text


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except CliError as exc:
        print(f"structlsq: {exc}", file=sys.stderr)
        return exc.code
    except (solver.DegenerateInputError, InfeasibleBoundError) as exc:
        print(f"structlsq: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (ValueError, KeyError, TypeError) as exc:
        print(f"structlsq: invalid input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return 0


if __name__ == "__main__":
    sys.exit(main())
