"""Command-line front-end.

Subcommands: solve, certify, disks, thresholds.  Polynomials come either
from --coeffs (comma-separated reals, leading-first) or from a JSON file
with schema {"coeffs": [{"re": .., "im": ..}, ...], "guess": [...]}.
Exit status: 0 on success, 2 on an unissued certificate in
require-certificate mode, 1 on input errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from .certify import certify_initial, corollary_threshold, gauge_bundle, inclusion_disks
from .errors import NotCertified, RootCertError, UnsupportedCombination
from .iterations import MethodKind
from .measures import norm_context
from .polynomials import Polynomial
from .solve import SolveConfig, default_init, solve


class InputError(Exception):
    pass


def _complex_to_json(z: complex) -> dict:
    return {"re": float(z.real), "im": float(z.imag)}


def _complex_from_json(obj) -> complex:
    try:
        return complex(float(obj["re"]), float(obj["im"]))
    except (TypeError, KeyError, ValueError) as exc:
        raise InputError(f"bad complex entry {obj!r}: {exc}") from None


def _parse_inline(text: str, what: str) -> np.ndarray:
    try:
        values = [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise InputError(f"cannot parse {what} {text!r}: {exc}") from None
    return np.asarray(values, dtype=np.complex128)


def _parse_p(text: str) -> float:
    if text.strip().lower() == "inf":
        return math.inf
    try:
        p = float(text)
    except ValueError:
        raise InputError(f"bad p value {text!r}") from None
    return p


def _load_request(args) -> tuple:
    coeffs = guess = None
    if getattr(args, "input", None):
        try:
            data = json.loads(Path(args.input).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read {args.input}: {exc}") from None
        if "coeffs" not in data:
            raise InputError(f"{args.input}: missing field 'coeffs'")
        coeffs = np.array([_complex_from_json(c) for c in data["coeffs"]])
        if data.get("guess") is not None:
            guess = np.array([_complex_from_json(c) for c in data["guess"]])
    if getattr(args, "coeffs", None):
        coeffs = _parse_inline(args.coeffs, "--coeffs")
    if getattr(args, "guess", None):
        guess = _parse_inline(args.guess, "--guess")
    if coeffs is None:
        raise InputError("no polynomial given: use --coeffs or --input")
    try:
        f = Polynomial(coeffs)
    except (RootCertError, ValueError) as exc:
        raise InputError(f"bad coefficients: {exc}") from None
    return f, guess


_METHODS = {m.value: m for m in MethodKind}


def _result_to_json(result) -> dict:
    return {
        "certificate": None if result.certificate is None
        else result.certificate.to_dict(),
        "converged": result.converged,
        "roots": [_complex_to_json(z) for z in result.final],
        "disks": [{"center": _complex_to_json(d.center), "radius": d.radius}
                  for d in result.disks],
        "disjoint": result.disjoint,
        "iterations": result.iterations,
        "order_estimate": result.order_estimate,
    }


def _emit(payload: dict, as_json: bool, lines) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def _cmd_solve(args) -> int:
    f, guess = _load_request(args)
    method = _METHODS[args.method]
    if guess is None:
        rotation = 0.4
        if args.seed is not None:
            rotation = float(np.random.default_rng(args.seed).uniform(0, 2 * np.pi))
        guess = default_init(f, rotation=rotation)
    cfg = SolveConfig(method=method, p=_parse_p(args.p), max_iter=args.max_iter,
                      w_tol=args.tol,
                      require_certificate=not args.no_certificate)
    result = solve(f, guess, cfg)
    payload = _result_to_json(result)
    lines = [f"method: {method.value}   converged: {result.converged}   "
             f"iterations: {result.iterations}"]
    if result.certificate is not None:
        c = result.certificate
        lines.append(f"certificate issued: {c.issued}   E0 = {c.E0:.6g}   "
                     f"phi(E0) = {c.phi0:.6g}   tau = {c.tau:.6g}")
    for i, z in enumerate(result.final):
        lines.append(f"root[{i}] = {z.real:+.15g} {z.imag:+.15g}j")
    for i, d in enumerate(result.disks):
        lines.append(f"disk[{i}]: center = {d.center:.15g}, radius = {d.radius:.3e}")
    if result.order_estimate is not None:
        lines.append(f"order estimate: {result.order_estimate:.3f}")
    _emit(payload, args.json, lines)
    if cfg.require_certificate and result.certificate is not None \
            and not result.certificate.issued:
        return 2
    return 0


def _cmd_certify(args) -> int:
    f, guess = _load_request(args)
    if guess is None:
        raise InputError("certify needs --guess or a guess in the input file")
    method = _METHODS[args.method]
    ctx = norm_context(f.degree, _parse_p(args.p))
    bundle = gauge_bundle(method, ctx)
    cert = certify_initial(f, guess, bundle)
    lines = [f"issued: {cert.issued}   strict: {cert.strict}",
             f"E0 = {cert.E0:.6g}   tau = {cert.tau:.6g}   phi(E0) = {cert.phi0:.6g}"]
    _emit({"certificate": cert.to_dict()}, args.json, lines)
    return 0 if cert.issued else 2


def _cmd_disks(args) -> int:
    f, guess = _load_request(args)
    if guess is None:
        raise InputError("disks needs --guess or a guess in the input file")
    method = _METHODS[args.method]
    ctx = norm_context(f.degree, _parse_p(args.p))
    bundle = gauge_bundle(method, ctx)
    try:
        disks, disjoint = inclusion_disks(f, guess, bundle)
    except NotCertified as exc:
        print(f"not certified: {exc}", file=sys.stderr)
        return 2
    payload = {"disks": [{"center": _complex_to_json(d.center), "radius": d.radius}
                         for d in disks],
               "disjoint": disjoint}
    lines = [f"disjoint: {disjoint}"]
    for i, d in enumerate(disks):
        lines.append(f"disk[{i}]: center = {d.center:.15g}, radius = {d.radius:.3e}")
    _emit(payload, args.json, lines)
    return 0


def _cmd_thresholds(args) -> int:
    n = args.n
    rows = []
    for method in (MethodKind.EHRLICH, MethodKind.DOCHEV_BYRNEV):
        for p in (1.0, 2.0, math.inf):
            ctx = norm_context(n, p)
            try:
                value = corollary_threshold(method, ctx)
            except UnsupportedCombination:
                continue
            rows.append({"method": method.value,
                         "p": "inf" if math.isinf(p) else p,
                         "threshold": value})
    lines = [f"{r['method']:<14} p={r['p']!s:<5} threshold={r['threshold']:.10g}"
             for r in rows]
    _emit({"n": n, "thresholds": rows}, args.json, lines)
    return 0


def _add_common(sub):
    sub.add_argument("--coeffs", help="comma-separated real coefficients, leading-first")
    sub.add_argument("--guess", help="comma-separated real starting points")
    sub.add_argument("--input", help="JSON input file")
    sub.add_argument("--method", choices=sorted(_METHODS), default="ehrlich")
    sub.add_argument("--p", default="inf", help="norm exponent (decimal or 'inf')")
    sub.add_argument("--json", action="store_true", help="emit JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rootcert",
        description="Simultaneous polynomial root-finding with convergence "
                    "certificates")
    subs = parser.add_subparsers(dest="subcommand", required=True)

    solve_p = subs.add_parser("solve", help="run a (certified) solve")
    _add_common(solve_p)
    solve_p.add_argument("--max-iter", type=int, default=100)
    solve_p.add_argument("--tol", type=float, default=1e-13)
    solve_p.add_argument("--no-certificate", action="store_true")
    solve_p.add_argument("--seed", type=int, default=None)
    solve_p.add_argument("--batch", help="directory of JSON inputs")
    solve_p.set_defaults(func=_cmd_solve)

    certify_p = subs.add_parser("certify", help="check the initial conditions")
    _add_common(certify_p)
    certify_p.set_defaults(func=_cmd_certify)

    disks_p = subs.add_parser("disks", help="inclusion disks at a point vector")
    _add_common(disks_p)
    disks_p.set_defaults(func=_cmd_disks)

    thr_p = subs.add_parser("thresholds", help="corollary threshold table")
    thr_p.add_argument("--n", type=int, required=True)
    thr_p.add_argument("--json", action="store_true")
    thr_p.set_defaults(func=_cmd_thresholds)

    return parser


def _run_batch(args) -> int:
    directory = Path(args.batch)
    files = sorted(directory.glob("*.json"))
    if not files:
        print(f"no JSON files in {directory}", file=sys.stderr)
        return 1

    def one(path):
        sub = argparse.Namespace(**vars(args))
        sub.batch = None
        sub.input = str(path)
        sub.coeffs = None
        sub.guess = None
        f, guess = _load_request(sub)
        if guess is None:
            guess = default_init(f)
        cfg = SolveConfig(method=_METHODS[args.method], p=_parse_p(args.p),
                          max_iter=args.max_iter, w_tol=args.tol,
                          require_certificate=not args.no_certificate)
        return path.name, _result_to_json(solve(f, guess, cfg))

    with ThreadPoolExecutor() as pool:
        results = dict(pool.map(one, files))
    print(json.dumps(results, indent=2))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "batch", None):
            return _run_batch(args)
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    except RootCertError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
