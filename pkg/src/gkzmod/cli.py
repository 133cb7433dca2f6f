"""``gkzmod`` command line front end.

Problem files are JSON::

    {"A": [[1, 3]], "beta": ["-1"], "w": [-1, 0], "K": 10}

Every command prints a text summary, or with ``--format json`` a result
document (schema ``gkzmod-result/1``) with sorted keys and rationals as
strings.  Exit status: 0 success, 2 input error, 3 non-generic weight,
4 non-generic parameter, 5 resonant exponent, 6 unit indicial ideal,
7 route disagreement, 1 anything else raised by the library.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import __version__
from .errors import GKZError, InputError
from .indicial import (
    distraction,
    euler_forms,
    fake_exponents,
    indicial,
    t_initial_monomial_ideal,
)
from .polyalgebra import format_rational
from .series import build_system, gamma_series, residual_check
from .standard_pairs import rank_lower_bound, standard_pairs, top_pairs
from .toric import ProblemSpec, build_atilde, in_tau, lattice_kernel, toric_ideal

SCHEMA = "gkzmod-result/1"
COMMANDS = ("atilde", "toric", "initial", "pairs", "indicial", "series", "check", "rank-bound")


def load_problem(path: str, need_beta_w: bool = True) -> tuple[ProblemSpec, dict]:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read problem file {path}: {exc}") from None
    if not isinstance(data, dict) or "A" not in data:
        raise InputError("problem file must be a JSON object with key 'A'")
    A = data["A"]
    if not need_beta_w:
        d = len(A)
        n = len(A[0]) if A else 0
        data = {"beta": ["0"] * d, "w": [1] * n, **data}
    for key in ("beta", "w"):
        if key not in data:
            raise InputError(f"problem file is missing {key!r}")
    if any(isinstance(b, float) for b in data["beta"]):
        raise InputError("beta entries must be integers or 'p/q' strings, not floats")
    spec = ProblemSpec(A, [str(b) for b in data["beta"]], data["w"])
    return spec, data


def _q(x: Fraction) -> str:
    return format_rational(Fraction(x))


def _echo(spec: ProblemSpec, data: dict) -> dict:
    out = {"A": [list(r) for r in spec.A], "beta": [_q(b) for b in spec.beta], "w": list(spec.w)}
    if "K" in data:
        out["K"] = data["K"]
    return out


def _pair_doc(p, ring):
    return {"root": list(p.root), "face": [ring[i] for i in sorted(p.face)]}


def compute(command: str, spec: ProblemSpec, args) -> tuple[dict, list[str]]:
    """Return (result payload, text lines)."""
    if command == "atilde":
        M = build_atilde(spec)
        return {"atilde": M}, [" ".join(f"{x:>3}" for x in row) for row in M]

    if command == "toric":
        M = build_atilde(spec)
        I = toric_ideal(M)
        gens = [str(g.sign_normalized()) for g in I.generators]
        return ({"kernel_basis": lattice_kernel(M), "generators": gens},
                ["kernel basis: " + str(lattice_kernel(M))] + gens)

    if command == "initial":
        r = in_tau(toric_ideal(build_atilde(spec)))
        gens = [str(g.sign_normalized()) for g in r.ideal.generators]
        lines = [f"<{', '.join(gens)}>", "monomial" if r.is_monomial else "NOT monomial"]
        return {"generators": gens, "is_monomial": r.is_monomial}, lines

    if command == "pairs":
        M = t_initial_monomial_ideal(spec)
        pairs = standard_pairs(M)
        top = top_pairs(M)
        lines = [f"M = {M}", f"standard pairs ({len(pairs)}):"]
        lines += ["  " + p.to_text(M.ring) + ("  [top]" if p in top else "") for p in pairs]
        return ({"monomial_ideal": str(M),
                 "standard_pairs": [_pair_doc(p, M.ring) for p in pairs],
                 "top_pairs": [_pair_doc(p, M.ring) for p in top]}, lines)

    if command == "indicial":
        b = indicial(spec, args.method)
        payload = {"method": args.method, "polynomial": str(b), "factored": b.factored(),
                   "is_zero": b.is_zero,
                   "roots": None if b.roots is None else [_q(r) for r in b.roots]}
        if args.verbose and not b.is_zero:
            M = t_initial_monomial_ideal(spec)
            payload["distraction"] = [str(g) for g in distraction(M).generators]
            payload["euler"] = [str(f) for f in euler_forms(spec)]
            payload["fake_exponents"] = [
                {"pair": _pair_doc(fe.pair, M.ring), "point": [_q(x) for x in fe.point],
                 "root": _q(fe.t_exponent)} for fe in fake_exponents(M, spec)]
        return payload, [str(b)]

    if command in ("series", "check"):
        M = t_initial_monomial_ideal(spec)
        exps = fake_exponents(M, spec)
        if not exps:
            raise InputError("no top standard pairs: the indicial polynomial is 0, no series exist")
        if not 0 <= args.exponent < len(exps):
            raise InputError(f"--exponent must be in 0..{len(exps) - 1}")
        fe = exps[args.exponent]
        K = args.K if args.K is not None else int(getattr(args, "problem_K", 10))
        s = gamma_series(fe, spec, K)
        head = {"exponent_index": args.exponent, "point": [_q(x) for x in fe.point],
                "e": _q(s.e), "K": K}
        if command == "series":
            recs = s.records()
            lines = [f"t^{_q(s.e)} series from v = ({', '.join(_q(x) for x in fe.point)}), K = {K}"]
            lines += [f"  {r['coeff']} * x^({', '.join(r['x'])}) * t^{r['t']}" for r in recs]
            return {**head, "terms": recs}, lines
        rep = residual_check(build_system(spec), s)
        checks = [{"label": c.label, "operator": c.operator, "ok": c.ok,
                   "verified_through": None if c.verified_through is None else _q(c.verified_through),
                   "first_failure": None if c.first_failure is None else _q(c.first_failure)}
                  for c in rep.checks]
        lines = [f"{'ok  ' if c['ok'] else 'FAIL'} {c['label']}: {c['operator']}" for c in checks]
        lines.append("all generators verified through t-order " + _q(s.e + K) if rep.ok
                     else "residual check FAILED")
        return {**head, "ok": rep.ok, "checks": checks}, lines

    if command == "rank-bound":
        r = rank_lower_bound(spec.A)
        return {"rank_lower_bound": r}, [str(r)]

    raise InputError(f"unknown command {command!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gkzmod", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("problem", help="problem JSON file")
    p.add_argument("--method", choices=("pairs", "elimination", "both"), default="pairs")
    p.add_argument("--exponent", type=int, default=0, help="fake exponent index for series/check")
    p.add_argument("--K", type=int, default=None, help="truncation order (overrides the file)")
    p.add_argument("--format", choices=("text", "json"), default=None)
    p.add_argument("--out", default=None, help="write output here instead of stdout")
    p.add_argument("--verbose", action="store_true", help="include intermediate data")
    p.add_argument("--timings", action="store_true", help="add wall-clock timing to diagnostics")
    p.add_argument("--version", action="version", version=f"gkzmod {__version__}")
    return p


def render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec, data = load_problem(args.problem, need_beta_w=args.command != "rank-bound")
        args.problem_K = data.get("K", 10)
        fmt = args.format or data.get("format", "text")
        if fmt not in ("text", "json"):
            raise InputError(f"unknown output format {fmt!r}")
        t0 = time.perf_counter()
        payload, lines = compute(args.command, spec, args)
        elapsed = time.perf_counter() - t0
    except GKZError as exc:
        print(f"error ({type(exc).__name__}): {exc}", file=sys.stderr)
        return exc.exit_code
    if fmt == "json":
        diagnostics = {}
        seed = os.environ.get("GKZMOD_SEED")
        if seed is not None:
            diagnostics["seed"] = seed
        if args.timings:
            diagnostics["seconds"] = round(elapsed, 6)
        doc = {"schema": SCHEMA, "version": __version__, "command": args.command,
               "input": _echo(spec, data), "result": payload, "diagnostics": diagnostics}
        text = render_json(doc)
    else:
        text = "\n".join(lines) + "\n"
        if args.timings:
            text += f"# {elapsed:.3f} s\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
