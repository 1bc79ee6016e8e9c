"""``hup``: run experiments on Fourier extensions from the parabola.

Subcommands write their outputs under ``--out`` and exit with

    0  every check passed
    1  a numeric check failed
    2  malformed input
    3  a precondition was violated

A ``--config`` JSON document may supply any option; flags given on the
command line take precedence.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Optional, Sequence

import numpy as np

from . import __version__
from .counterexample import (build_counterexample, counterexample_lambda, g_mass,
                             h_identity_sides, line_points)
from .density import density_from_dict, gaussian_form
from .errors import DegenerateEta, DomainError, HupError, NonConvergence, PoleError, SpecError
from .extension import (GRID_COLUMNS, EvalPoint, ParabolaMeasure, evaluate_points,
                        extension_closed_form, extension_quadrature, extension_via_fy,
                        schrodinger_residual)
from .svg import region_svg
from .symmetry import (MoebiusParams, galilean_shift, map_lambda, pseudo_conformal_point,
                       quadratic_modulation)
from .uniqueness import (LambdaSpec, bootstrap, c_lemma, lambda_points, region_a_supremum,
                         region_scan, vanishing_check)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_PRECONDITION = 0, 1, 2, 3


class InputError(HupError):
    """Configuration or document that cannot be used as given."""


def _stamp(command: str) -> str:
    now = datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
    return f"hup {__version__} {command} generated {now}"


def _fmt(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    return str(v)


def write_csv(path: Path, columns: Sequence[str], rows, comment: str,
              trailer: Optional[str] = None) -> None:
    """RFC 4180 CSV; the only nondeterministic byte is in the ``#`` header."""
    with open(path, "w", newline="") as fh:
        fh.write(f"# {comment}\n")
        w = csv.writer(fh, lineterminator="\r\n")
        w.writerow(columns)
        for row in rows:
            w.writerow([_fmt(v) for v in row])
        if trailer:
            fh.write(f"# {trailer}\r\n")


def write_json(path: Path, doc: dict) -> None:
    path.write_text(json.dumps(doc, indent=2, sort_keys=True, default=_json_default) + "\n")


def _json_default(o):
    if isinstance(o, complex):
        return [o.real, o.imag]
    if isinstance(o, np.generic):
        return o.item()
    raise TypeError(f"cannot serialise {type(o).__name__}")


def _load_json(path: str) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from exc
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc


def _settings(args: argparse.Namespace, defaults: dict) -> dict:
    """Merge defaults, the config document and explicit flags, in that order."""
    cfg = {}
    if getattr(args, "config", None):
        cfg = _load_json(args.config)
        if not isinstance(cfg, dict):
            raise InputError("config document must be a JSON object")
    out = dict(defaults)
    for key in defaults:
        if key in cfg:
            out[key] = cfg[key]
        flag = getattr(args, key, None)
        if flag is not None:
            out[key] = flag
    for key, v in out.items():
        if key in ("tol", "epsilon", "h") and v is not None and not float(v) > 0:
            raise InputError(f"{key} must be positive")
        if key in ("N", "grid_n", "points") and v is not None and int(v) < 1:
            raise InputError(f"{key} must be at least 1")
    return out


def _measure(doc_or_path) -> ParabolaMeasure:
    doc = _load_json(doc_or_path) if isinstance(doc_or_path, str) else doc_or_path
    if isinstance(doc, dict) and "density" in doc:
        doc = doc["density"]
    try:
        return ParabolaMeasure(density_from_dict(doc))
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed density document: {exc}") from exc


def _outdir(args) -> Path:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


# ---------------------------------------------------------------------------
# commands


def cmd_region(args) -> int:
    s = _settings(args, {"grid_n": 200})
    n = int(s["grid_n"])
    if n < 50:
        raise SpecError("grid_n must be at least 50")
    out = _outdir(args)
    rows = region_scan(n)
    write_csv(out / "region.csv", ("alpha", "beta", "in_A", "c_lemma"), rows, _stamp("region"))
    sup, arg = region_a_supremum(1000, return_argmax=True)
    (out / "region.svg").write_text(region_svg(arg))
    frac = sum(r[2] for r in rows) / len(rows)
    cap = max(r[3] for r in rows if r[2] and r[3] is not None)
    report = {"grid_n": n, "rows": len(rows), "fraction_in_A": frac,
              "supremum": sup, "argmax": list(arg), "max_c_lemma_in_A": cap,
              "passed": abs(sup - 1 / math.sqrt(2)) < 1e-4 and cap == 2}
    write_json(out / "region.json", report)
    print(f"supremum {sup:.8f} at ({arg[0]:.6f}, {arg[1]:.6f}); {frac:.4f} of grid in A")
    return EXIT_OK if report["passed"] else EXIT_FAIL


def _random_points(rng, n, eta_lo=0.1, eta_hi=2.0, xi=2.0) -> list[EvalPoint]:
    eta = rng.uniform(eta_lo, eta_hi, n) * rng.choice([-1.0, 1.0], n)
    return [EvalPoint(float(a), float(b)) for a, b in zip(rng.uniform(-xi, xi, n), eta)]


def _verify_identity(m, s, rng):
    checks = []
    for p in _random_points(rng, int(s["points"])):
        a = extension_quadrature(m, p, full_output=True)
        b = extension_via_fy(m, p, full_output=True)
        d = abs(a.value - b.value)
        checks.append({"xi": p.xi, "eta": p.eta, "discrepancy": d,
                       "error_estimate": a.error + b.error, "passed": d <= float(s["tol"])})
    return checks


def _verify_residual(m, s, rng):
    h = float(s["h"])
    field = m
    if gaussian_form(m.density) is not None:
        def field(x, y):
            return extension_closed_form(m, (x, y))
    checks = []
    for p in _random_points(rng, int(s["points"]), 0.1, 1.5, 1.5):
        r1 = schrodinger_residual(field, p, h)
        r2 = schrodinger_residual(field, p, 2 * h)
        # the stencil is second order, so this combination cancels the h² term
        extrap = abs(4 * r1 - r2) / 3
        checks.append({"xi": p.xi, "eta": p.eta, "residual_h": abs(r1), "residual_2h": abs(r2),
                       "ratio": abs(r2) / abs(r1) if abs(r1) > 0 else None,
                       "extrapolated": extrap, "passed": extrap <= float(s["tol"])})
    return checks


def _verify_h_identity(m, s, rng):
    checks = []
    for x in s["xs"]:
        rep = h_identity_sides(m, float(s["a"]), float(x))
        checks.append({"a": float(s["a"]), "x": float(x), "discrepancy": rep.discrepancy,
                       "error_estimate": rep.error_budget,
                       "passed": rep.discrepancy <= float(s["tol"])})
    return checks


def _verify_symmetry(m, s, rng):
    checks = []
    n = int(s["points"])
    for v in (-1.0, 0.5, 2.0):
        m2 = galilean_shift(m, v)
        for p in _random_points(rng, n):
            lhs = extension_quadrature(m2, p, full_output=True)
            rhs = extension_quadrature(m, (p.xi + 2 * v * p.eta, p.eta), full_output=True)
            val = np.exp(-2j * np.pi * (v * p.xi + v * v * p.eta)) * rhs.value
            d = abs(lhs.value - val)
            budget = 2 * (lhs.error + rhs.error)
            checks.append({"relation": "galilean", "v": v, "xi": p.xi, "eta": p.eta,
                           "discrepancy": d, "bound": budget, "passed": d <= budget})
    for h in (0.4, -0.3):
        m2 = quadratic_modulation(m, h)
        for p in _random_points(rng, n):
            lhs = extension_quadrature(m2, p, full_output=True)
            rhs = extension_quadrature(m, (p.xi, p.eta + h), full_output=True)
            d = abs(lhs.value - rhs.value)
            budget = 2 * (lhs.error + rhs.error)
            checks.append({"relation": "quadratic_modulation", "h": h, "xi": p.xi, "eta": p.eta,
                           "discrepancy": d, "bound": budget, "passed": d <= budget})
    M = MoebiusParams(*s["moebius"])
    for p in _random_points(rng, n):
        try:
            q = pseudo_conformal_point(pseudo_conformal_point(p, M), M.inverse())
        except PoleError:
            continue
        d = math.hypot(q.xi - p.xi, q.eta - p.eta)
        checks.append({"relation": "pseudo_conformal_inverse", "xi": p.xi, "eta": p.eta,
                       "discrepancy": d, "bound": 1e-12, "passed": d <= 1e-12})
    return checks


VERIFY_MODES = {"identity": _verify_identity, "residual": _verify_residual,
                "h-identity": _verify_h_identity, "symmetry": _verify_symmetry}


def cmd_verify(args) -> int:
    s = _settings(args, {"measure": None, "mode": "identity", "points": 32, "seed": 0,
                         "tol": None, "h": 1e-3, "a": 1.0, "xs": [0.5, 1.0, 2.0],
                         "moebius": [0.0, 1.0, -1.0, 0.0]})
    if s["measure"] is None:
        raise InputError("a measure document is required (--measure)")
    if s["mode"] not in VERIFY_MODES:
        raise InputError(f"unknown mode {s['mode']!r}")
    if s["tol"] is None:
        s["tol"] = 1e-6
    m = _measure(s["measure"])
    rng = np.random.default_rng(int(s["seed"]))
    checks = VERIFY_MODES[s["mode"]](m, s, rng)
    passed = all(c["passed"] for c in checks)
    report = {"mode": s["mode"], "density": m.density.to_dict(), "tol": s["tol"],
              "checks": checks, "passed": passed,
              "failed": sum(not c["passed"] for c in checks)}
    write_json(_outdir(args) / f"verify_{s['mode']}.json", report)
    print(f"{s['mode']}: {len(checks) - report['failed']}/{len(checks)} checks passed")
    return EXIT_OK if passed else EXIT_FAIL


def cmd_counterexample(args) -> int:
    s = _settings(args, {"r": 0.5, "a": 1.0, "c2": 1.0, "N": 50, "alpha": 0.25, "beta": 0.25,
                         "d": -1.0, "threshold": 1e-9})
    r, a, c2, N = float(s["r"]), float(s["a"]), float(s["c2"]), int(s["N"])
    if float(s["d"]) == a:
        raise SpecError("the second line must differ from y = ax")
    m = build_counterexample(r, a, c2)
    spec = counterexample_lambda(a, c2, float(s["alpha"]), float(s["beta"]))
    pts = lambda_points(spec, N)
    res = evaluate_points(m, pts)
    mags = [abs(q.value) for q in res]
    worst = int(np.argmax(mags))
    mass = g_mass(m)
    second = line_points(float(s["d"]), [n ** -float(s["alpha"]) for n in range(1, 9)]
                         + [-n ** -float(s["alpha"]) for n in range(1, 9)])
    second_max = max(abs(extension_quadrature(m, p)) for p in second)
    out = _outdir(args)
    write_csv(out / "counterexample_lambda.csv", ("xi", "eta", "abs", "est_error"),
              [(p.xi, p.eta, v, q.error) for p, v, q in zip(pts, mags, res)],
              _stamp("counterexample"))
    report = {"r": r, "a": a, "c2": c2, "N": N, "lambda": spec.to_dict(),
              "points_checked": len(pts), "max_abs": mags[worst],
              "worst_point": list(pts[worst]), "threshold": float(s["threshold"]),
              "mass_I0": mass, "second_line_slope": float(s["d"]),
              "second_line_max_abs": second_max}
    report["passed"] = (report["max_abs"] < report["threshold"] and mass > 0
                        and second_max >= 1e-3)
    write_json(out / "counterexample.json", report)
    print(f"max |mu^| on Lambda_1 = {mags[worst]:.3e}, I_0(g) = {mass:.6f}, "
          f"second line max = {second_max:.3e}")
    return EXIT_OK if report["passed"] else EXIT_FAIL


def cmd_bootstrap(args) -> int:
    s = _settings(args, {"alpha": None, "beta": None, "epsilon": 1e-3, "C": 2.0,
                         "max_iter": 200})
    if s["alpha"] is None or s["beta"] is None:
        raise InputError("alpha and beta are required")
    p = (float(s["alpha"]), float(s["beta"]))
    c_ab = c_lemma(p)  # raises DomainError off the admissible range
    traj = bootstrap(p, float(s["epsilon"]), float(s["C"]), int(s["max_iter"]))
    verdict = "diverged" if traj.diverged else f"stalled ({traj.stall_reason})"
    write_csv(_outdir(args) / "bootstrap.csv", ("step", "j", "k"),
              [(i, st.j, st.k) for i, st in enumerate(traj.steps)], _stamp("bootstrap"),
              trailer=f"verdict: {verdict}; C(alpha,beta) = {c_ab}")
    print(f"verdict: {verdict}; C(alpha,beta) = {c_ab}")
    # the threshold property: enough starting decay must force divergence
    consistent = traj.diverged or float(s["C"]) < c_ab + 1
    return EXIT_OK if consistent else EXIT_FAIL


def cmd_lambda(args) -> int:
    s = _settings(args, {"spec": None, "N": 10, "moebius": None})
    if s["spec"] is None:
        raise InputError("a LambdaSpec document is required (--spec)")
    doc = _load_json(s["spec"]) if isinstance(s["spec"], str) else s["spec"]
    try:
        spec = LambdaSpec.from_dict(doc)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, SpecError):
            raise
        raise InputError(f"malformed LambdaSpec: {exc}") from exc
    N = int(s["N"])
    out = _outdir(args)
    pts = lambda_points(spec, N)
    write_csv(out / "lambda.csv", ("xi", "eta"), pts, _stamp("lambda"))
    if s["moebius"] is not None:
        M = MoebiusParams(*map(float, s["moebius"]))
        image = map_lambda(spec, M, N)
        if isinstance(image, LambdaSpec):
            write_json(out / "lambda_image.json", image.to_dict())
            image_pts = lambda_points(image, N)
        else:
            image_pts = image
        write_csv(out / "lambda_image.csv", ("xi", "eta"), image_pts, _stamp("lambda"))
        print(f"{len(pts)} points; image is "
              f"{'structured' if isinstance(image, LambdaSpec) else 'a raw point list'}")
    else:
        print(f"{len(pts)} points")
    return EXIT_OK


def cmd_eval(args) -> int:
    s = _settings(args, {"measure": None, "xi": [-3.0, 3.0, 21], "eta": [-3.0, 3.0, 21],
                         "route": "direct", "tol": None})
    if s["measure"] is None:
        raise InputError("a measure document is required (--measure)")
    m = _measure(s["measure"])
    xs = np.linspace(float(s["xi"][0]), float(s["xi"][1]), int(s["xi"][2]))
    ys = np.linspace(float(s["eta"][0]), float(s["eta"][1]), int(s["eta"][2]))
    pts = [EvalPoint(float(a), float(b)) for b in ys for a in xs]
    tol = None if s["tol"] is None else float(s["tol"])
    route = s["route"]
    rows = []
    if route == "direct":
        for p, q in zip(pts, evaluate_points(m, pts, tol)):
            rows.append((p.xi, p.eta, q.value.real, q.value.imag, abs(q.value), q.error))
    elif route in ("fy", "closed"):
        for p in pts:
            if route == "closed":
                v, err = extension_closed_form(m, p), 0.0
            else:
                q = extension_via_fy(m, p, tol, full_output=True)
                v, err = q.value, q.error
            rows.append((p.xi, p.eta, v.real, v.imag, abs(v), err))
    else:
        raise InputError(f"unknown route {route!r}")
    write_csv(_outdir(args) / "eval.csv", GRID_COLUMNS, rows, _stamp("eval"))
    print(f"{len(rows)} points evaluated ({route})")
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hup", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="JSON document with option values")
        p.add_argument("--out", default=".", help="output directory (default: .)")
        return p

    p = common(sub.add_parser("region", help="scan region A, write CSV and SVG"))
    p.add_argument("--grid-n", dest="grid_n", type=int)
    p.set_defaults(func=cmd_region)

    p = common(sub.add_parser("verify", help="run an invariant suite on a measure"))
    p.add_argument("--measure", help="density JSON document")
    p.add_argument("--mode", choices=sorted(VERIFY_MODES))
    p.add_argument("--points", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--tol", type=float)
    p.add_argument("--h", type=float)
    p.add_argument("--a", type=float)
    p.add_argument("--xs", type=float, nargs="+")
    p.add_argument("--moebius", type=float, nargs=4, metavar=("A", "B", "C", "D"))
    p.set_defaults(func=cmd_verify)

    p = common(sub.add_parser("counterexample", help="build and check the two-line example"))
    p.add_argument("--r", type=float)
    p.add_argument("--a", type=float)
    p.add_argument("--c2", type=float)
    p.add_argument("--N", type=int)
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--d", type=float, help="slope of the second line")
    p.add_argument("--threshold", type=float)
    p.set_defaults(func=cmd_counterexample)

    p = common(sub.add_parser("bootstrap", help="iterate the decay-exponent recursion"))
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--epsilon", type=float)
    p.add_argument("--C", type=float)
    p.add_argument("--max-iter", dest="max_iter", type=int)
    p.set_defaults(func=cmd_bootstrap)

    p = common(sub.add_parser("lambda", help="list node points, optionally mapped"))
    p.add_argument("--spec", help="LambdaSpec JSON document")
    p.add_argument("--N", type=int)
    p.add_argument("--moebius", type=float, nargs=4, metavar=("A", "B", "C", "D"))
    p.set_defaults(func=cmd_lambda)

    p = common(sub.add_parser("eval", help="tabulate the extension on a grid"))
    p.add_argument("--measure", help="density JSON document")
    p.add_argument("--xi", type=float, nargs=3, metavar=("LO", "HI", "N"))
    p.add_argument("--eta", type=float, nargs=3, metavar=("LO", "HI", "N"))
    p.add_argument("--route", choices=("direct", "fy", "closed"))
    p.add_argument("--tol", type=float)
    p.set_defaults(func=cmd_eval)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, SpecError, PoleError, DegenerateEta) as exc:
        print(f"hup: precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InputError as exc:
        print(f"hup: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NonConvergence as exc:
        print(f"hup: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"hup: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
