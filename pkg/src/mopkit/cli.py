"""``mopkit`` command line: coeffs, verify, kp, sweep and limit.

Exit codes: 0 all checks pass, 1 a verification failed, 2 invalid input,
3 internal inconsistency (Gamma factors that should cancel did not).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import random
import sys
import time
from fractions import Fraction
from typing import Sequence

import mpmath

from .errors import ATSystemError, IncompatibleGammaError, MopError, SingularSystemError
from .exactnum import GammaScaled, gs_to_float
from .hypergeom import KPInstance, kp_lhs, kp_rhs, kp_rhs_original
from .jacobi_pineiro import JPWeightSystem, jp_type1_vector
from .laguerre_first import LaguerreWeightSystem, lag_limit_check, lag_limit_exact, lag_type1_vector
from .oracle import biorthogonal_check, oracle_type1_solve, oracle_type2_solve
from .polynomials import MultiIndex, multi_indices, weighted_pairing
from .sampling import random_alphas, random_beta

log = logging.getLogger("mopkit")

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3
FAMILIES = ("jacobi-pineiro", "laguerre1")


class InputError(MopError, ValueError):
    pass


# -- config ------------------------------------------------------------------


def _rationals(text: str) -> list:
    try:
        return [Fraction(t.strip()) for t in text.split(",") if t.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"cannot parse rational list {text!r}: {exc}") from None


def _integers(text: str) -> list:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise InputError(f"cannot parse integer list {text!r}: {exc}") from None


def make_weights(family: str, alphas: Sequence, beta=None):
    if family == "jacobi-pineiro":
        if beta is None:
            raise InputError("--beta is required for jacobi-pineiro")
        return JPWeightSystem(alphas, beta)
    if family == "laguerre1":
        return LaguerreWeightSystem(alphas)
    raise InputError(f"unknown family {family!r}")


def build_vector(ws, n: MultiIndex):
    if ws.family == "jacobi-pineiro":
        return jp_type1_vector(ws, n)
    return lag_type1_vector(ws, n)


def _weights_from_args(args):
    if not args.alpha:
        raise InputError("--alpha is required")
    beta = None
    if args.beta is not None:
        beta = _rationals(args.beta)
        if len(beta) != 1:
            raise InputError("--beta takes a single rational")
        beta = beta[0]
    return make_weights(args.family, _rationals(args.alpha), beta)


def _index_from_args(args, ws) -> MultiIndex:
    if not args.n:
        raise InputError("--n is required")
    try:
        n = MultiIndex(_integers(args.n))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if len(n) != ws.p:
        raise InputError(f"--n has {len(n)} entries but {ws.p} alphas were given")
    if n.total < 1:
        raise InputError("|n| must be at least 1")
    return n


# -- output ------------------------------------------------------------------


def _format_value(v: GammaScaled, mode: str, bits: int) -> str:
    if mode == "exact":
        return str(v)
    digits = max(15, int(bits * math.log10(2)))
    return mpmath.nstr(gs_to_float(v, bits), digits)


def _emit(args, payload, rows=None, header=None) -> None:
    fmt = args.output or getattr(args, "default_output", "json")
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        text = buf.getvalue()
    else:
        text = json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
    if args.out_file:
        with open(args.out_file, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- commands ----------------------------------------------------------------


def cmd_coeffs(args) -> int:
    ws = _weights_from_args(args)
    n = _index_from_args(args, ws)
    v = build_vector(ws, n)
    comps, rows = [], []
    for i, comp in enumerate(v.components, start=1):
        coeffs = [_format_value(c, args.mode, args.precision_bits) for c in comp.coefficients()]
        comps.append(
            {
                "component": i,
                "degree": comp.degree,
                "prefactor": _format_value(comp.prefactor, args.mode, args.precision_bits),
                "coefficients": coeffs,
            }
        )
        rows += [(i, l, c) for l, c in enumerate(coeffs)]
    payload = {"family": ws.family, "params": ws.params(), "n": list(n), "mode": args.mode, "components": comps}
    _emit(args, payload, rows, ("component", "power", "coefficient"))
    return EXIT_OK


def _check(name: str, residual, index: MultiIndex, params: dict) -> dict:
    ok = residual == 0
    return {
        "check": name,
        "status": "pass" if ok else "fail",
        "residual": str(residual),
        "index": list(index),
        "params": params,
    }


def _coefficient_residual(u, v) -> str | int:
    """First nonzero coefficient difference between two type I vectors, or 0."""
    for a, b in zip(u.components, v.components):
        for l in range(max(len(a.coeffs), len(b.coeffs))):
            x, y = a.coefficient(l), b.coefficient(l)
            if x != y:
                try:
                    return str(x - y)
                except IncompatibleGammaError:
                    return f"{x} != {y}"
    return 0


def verify_instance(ws, n: MultiIndex, rng: random.Random, vector=None) -> list:
    """Every exact check for one weight system and index."""
    params = ws.params()
    v = vector if vector is not None else build_vector(ws, n)
    N = n.total
    checks = []
    for j in range(N):
        got = weighted_pairing(v, [0] * j + [1])
        checks.append(_check(f"pairing[j={j}]", got - (1 if j == N - 1 else 0), n, params))

    try:
        o = oracle_type1_solve(ws, n)
        checks.append(_check("oracle_type1", _coefficient_residual(v, o), n, params))
    except SingularSystemError as exc:
        checks.append({"check": "oracle_type1", "status": "fail", "residual": str(exc), "index": list(n), "params": params})

    q = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(N)]
    if q[-1] == 0:
        q[-1] = Fraction(1)
    checks.append(_check("linearity", weighted_pairing(v, q) - q[-1], n, params))

    k = max(range(len(n)), key=lambda t: n[t])
    m = MultiIndex(n.entries[:k] + (n[k] - 1,) + n.entries[k + 1 :])
    try:
        B = oracle_type2_solve(ws, m)
        checks.append(_check("biorthogonal", biorthogonal_check(B, v) - 1, n, params))
    except SingularSystemError as exc:
        checks.append({"check": "biorthogonal", "status": "fail", "residual": str(exc), "index": list(n), "params": params})

    if ws.family == "laguerre1":
        for i in range(ws.p):
            if n[i] == 0:
                continue
            residual = 0
            for l, limit, coeff in lag_limit_exact(ws, n, i):
                if limit != coeff:
                    residual = f"power {l}: {limit} != {coeff}"
                    break
            checks.append(_check(f"limit_exact[component={i + 1}]", residual, n, params))
    return checks


def cmd_verify(args) -> int:
    ws = _weights_from_args(args)
    n = _index_from_args(args, ws)
    checks = verify_instance(ws, n, random.Random(args.seed))
    failed = [c for c in checks if c["status"] != "pass"]
    payload = {"family": ws.family, "status": "fail" if failed else "pass", "checks": checks}
    rows = [(c["check"], c["status"], c["residual"], " ".join(map(str, c["index"]))) for c in checks]
    _emit(args, payload, rows, ("check", "status", "residual", "index"))
    if failed:
        print(f"mopkit: check {failed[0]['check']} failed (residual {failed[0]['residual']})", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def load_kp_file(path: str) -> list:
    """Parse a JSON array of instances into ``(line, dict)`` pairs."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    dec = json.JSONDecoder()

    def line_of(pos):
        return text.count("\n", 0, pos) + 1

    def skip(pos):
        while pos < len(text) and text[pos] in " \t\r\n":
            pos += 1
        return pos

    pos = skip(0)
    if pos >= len(text) or text[pos] != "[":
        raise InputError(f"{path}:{line_of(pos)}: expected a JSON array")
    pos = skip(pos + 1)
    out = []
    if pos < len(text) and text[pos] == "]":
        return out
    while True:
        try:
            obj, end = dec.raw_decode(text, pos)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}:{exc.lineno}: {exc.msg}") from None
        if not isinstance(obj, dict):
            raise InputError(f"{path}:{line_of(pos)}: instance must be an object")
        out.append((line_of(pos), obj))
        pos = skip(end)
        if pos < len(text) and text[pos] == ",":
            pos = skip(pos + 1)
            continue
        if pos < len(text) and text[pos] == "]":
            return out
        raise InputError(f"{path}:{line_of(pos)}: expected ',' or ']'")


def _kp_from_dict(obj: dict, where: str) -> KPInstance:
    unknown = set(obj) - {"a", "f", "m", "b", "k"}
    if unknown or "a" not in obj:
        raise InputError(f"{where}: instance needs key 'a' and only keys a,f,m,b,k (got {sorted(obj)})")
    try:
        return KPInstance(
            Fraction(str(obj["a"])),
            [Fraction(str(x)) for x in obj.get("f", [])],
            [int(x) for x in obj.get("m", [])],
            [Fraction(str(x)) for x in obj.get("b", [])],
            [int(x) for x in obj.get("k", [])],
        )
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InputError(f"{where}: {exc}") from None


def cmd_kp(args) -> int:
    entries = load_kp_file(args.instance_file)
    results, rows = [], []
    all_ok = True
    for idx, (line, obj) in enumerate(entries):
        rec = {"instance": idx, "line": line, "lhs": None, "rhs": None, "rhs_original": None, "equal": False, "error": None}
        try:
            inst = _kp_from_dict(obj, f"{args.instance_file}:{line}")
            lhs, rhs = kp_lhs(inst), kp_rhs(inst)
            orig = kp_rhs_original(inst)
            rec.update(lhs=str(lhs), rhs=str(rhs), rhs_original=str(orig), equal=(lhs == rhs == orig))
        except InputError as exc:
            rec["error"] = str(exc)
        except MopError as exc:
            rec["error"] = f"{type(exc).__name__}: {exc}"
        all_ok &= rec["equal"]
        results.append(rec)
        rows.append((idx, line, rec["lhs"], rec["rhs"], rec["equal"], rec["error"] or ""))
    payload = {"status": "pass" if all_ok else "fail", "instances": results}
    _emit(args, payload, rows, ("instance", "line", "lhs", "rhs", "equal", "error"))
    return EXIT_OK if all_ok else EXIT_FAIL


def _sweep_systems(args):
    if args.alpha:
        ws = _weights_from_args(args)
        return [ws]
    rng = random.Random(args.seed)
    ps = [args.p] if args.p else range(2, args.p_max + 1)
    out = []
    for p in ps:
        alphas = random_alphas(rng, p)
        out.append(make_weights(args.family, alphas, random_beta(rng)))
    return out


def cmd_sweep(args) -> int:
    systems = _sweep_systems(args)
    rng = random.Random(args.seed)
    rows, records = [], []
    all_ok = True
    for ws in systems:
        for n in multi_indices(ws.p, args.degree_max):
            t0 = time.perf_counter()
            try:
                v = build_vector(ws, n)
                checks = verify_instance(ws, n, rng, vector=v)
                bits = v.max_bits()
            except IncompatibleGammaError:
                raise
            except MopError as exc:
                checks, bits = [{"check": "construct", "status": "fail", "residual": str(exc)}], 0
            wall = (time.perf_counter() - t0) * 1000
            passed = sum(c["status"] == "pass" for c in checks)
            ok = passed == len(checks)
            all_ok &= ok
            log.info("index %s: %d/%d checks, max coefficient bits %d", n, passed, len(checks), bits)
            rec = {
                "p": ws.p,
                "index": list(n),
                "checks_passed": passed,
                "checks_total": len(checks),
                "status": "pass" if ok else "fail",
                "max_bits": bits,
            }
            row = [ws.p, " ".join(map(str, n)), passed, len(checks), rec["status"], bits]
            if not args.no_timing:
                rec["wall_ms"] = round(wall, 3)
                row.append(f"{wall:.3f}")
            records.append(rec)
            rows.append(row)
    header = ["p", "index", "checks_passed", "checks_total", "status", "max_bits"]
    if not args.no_timing:
        header.append("wall_ms")
    payload = {"status": "pass" if all_ok else "fail", "systems": [dict(family=ws.family, **ws.params()) for ws in systems], "rows": records}
    _emit(args, payload, rows, header)
    return EXIT_OK if all_ok else EXIT_FAIL


def cmd_limit(args) -> int:
    if args.family != "laguerre1":
        raise InputError("limit compares against laguerre1; pass --family laguerre1")
    ws = _weights_from_args(args)
    n = _index_from_args(args, ws)
    i = args.component - 1
    if not 0 <= i < ws.p or n[i] == 0:
        raise InputError(f"component {args.component} is empty or out of range")
    betas = _rationals(args.betas)
    x = _rationals(args.x)[0]
    chk = lag_limit_check(ws, n, i, x, betas, precision=args.precision_bits)
    exact = [
        {"power": l, "limit": str(lim), "laguerre": str(c), "equal": lim == c} for l, lim, c in lag_limit_exact(ws, n, i)
    ]
    digits = max(15, int(args.precision_bits * math.log10(2)))
    nonzero = all(d != 0 for d in chk.deviations)
    rate = chk.rate_ok() if nonzero and len(betas) > 1 else None
    ok = all(e["equal"] for e in exact) and rate is not False
    payload = {
        "family": ws.family,
        "params": ws.params(),
        "n": list(n),
        "component": args.component,
        "x": str(x),
        "betas": [str(b) for b in betas],
        "deviations": [mpmath.nstr(d, digits) for d in chk.deviations],
        "ratios": [mpmath.nstr(r, 12) for r in chk.ratios] if nonzero else [],
        "rate_ok": rate,
        "exact": exact,
        "status": "pass" if ok else "fail",
    }
    rows = [(str(b), mpmath.nstr(d, digits)) for b, d in zip(betas, chk.deviations)]
    _emit(args, payload, rows, ("beta", "deviation"))
    return EXIT_OK if ok else EXIT_FAIL


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", choices=FAMILIES, help="default jacobi-pineiro (laguerre1 for limit)")
    common.add_argument("--alpha", help="comma-separated rationals, e.g. 0,1/2 (use --alpha=-1/2,... for negatives)")
    common.add_argument("--beta", help="rational, Jacobi–Piñeiro only")
    common.add_argument("--n", help="comma-separated multi-index, e.g. 2,1")
    common.add_argument("--mode", choices=("exact", "float"), default="exact")
    common.add_argument("--precision-bits", type=int, default=128)
    common.add_argument("--output", choices=("json", "csv"))
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out-file")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="mopkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", parents=[common], help="monomial coefficients of the type I vector")
    p.set_defaults(func=cmd_coeffs)
    p = sub.add_parser("verify", parents=[common], help="exact orthogonality, oracle and limit checks")
    p.set_defaults(func=cmd_verify)
    p = sub.add_parser("kp", parents=[common], help="check the unit-argument summation on a JSON instance file")
    p.add_argument("instance_file")
    p.set_defaults(func=cmd_kp)
    p = sub.add_parser("sweep", parents=[common], help="verify every multi-index up to a total degree")
    p.add_argument("--p", type=int, help="number of weights (random parameters); default sweeps 2..p-max")
    p.add_argument("--p-max", type=int, default=4)
    p.add_argument("--degree-max", type=int, default=6)
    p.add_argument("--no-timing", action="store_true", help="omit wall-time column for byte-stable output")
    p.set_defaults(func=cmd_sweep, default_output="csv")
    p = sub.add_parser("limit", parents=[common], help="beta -> inf limit from Jacobi–Piñeiro to Laguerre")
    p.add_argument("--component", type=int, default=1, help="1-based component")
    p.add_argument("--x", default="1")
    p.add_argument("--betas", default="100,1000,10000")
    p.set_defaults(func=cmd_limit, default_family="laguerre1")
    return parser


def _fail(code: int, exc: Exception) -> int:
    print(json.dumps({"error": type(exc).__name__, "message": str(exc)}, ensure_ascii=False), file=sys.stderr)
    return code


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.family is None:
        args.family = getattr(args, "default_family", "jacobi-pineiro")
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    if args.precision_bits < 53:
        return _fail(EXIT_INPUT, InputError("--precision-bits must be at least 53"))
    if getattr(args, "command", None) == "sweep" and args.p_max > 4 and not args.alpha:
        log.warning("p-max above 4 leaves the tested envelope")
    try:
        return args.func(args)
    except IncompatibleGammaError as exc:
        return _fail(EXIT_INTERNAL, exc)
    except (InputError, ATSystemError, OSError) as exc:
        return _fail(EXIT_INPUT, exc)
    except MopError as exc:
        return _fail(EXIT_FAIL, exc)


if __name__ == "__main__":
    sys.exit(main())
