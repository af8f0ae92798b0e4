"""Command-line front end: one subcommand per library operation, with a
versioned output envelope rendered as JSON (default), CSV, or Markdown.

Exit codes: 0 success, 1 domain error (singular curve, bad congruence, ...),
2 usage error.  All numeric output is printed with 15 significant digits and
identical argv always produces byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .amplitudes import (
    MandelstamInput,
    beta_fn,
    correspondence_table,
    pole_scan,
    veneziano,
)
from .characters import (
    MultiplicativeCharacter,
    gauss_jacobi_relation_check,
    gauss_sum,
    jacobi_sum,
)
from .complex_periods import (
    EllipticCurveQ,
    numeric_periods_catalog,
    period_map_legendre,
    periods_agm,
    periods_quadrature,
    tau_normalize,
)
from .curve_counts import (
    WeierstrassCurveFp,
    a_p_from_jacobi,
    count_points,
    count_points_ext,
    zeta_data,
)
from .errors import PeriodkitError
from .finite_field import is_prime
from .padic import PadicInt, delta_p, delta_rules_check


class UsageError(Exception):
    """Bad flag value; the message names the offending flag."""


# ---------------------------------------------------------------------------
# Output envelope and rendering


@dataclass
class OutputEnvelope:
    command: str
    params: dict
    rows: list
    errors: list = field(default_factory=list)
    version: str = __version__


def _json_emit(obj) -> str:
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return "null"
        return format(obj, ".15g")
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, Fraction):
        return json.dumps(str(obj))
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_json_emit(v) for v in obj) + "]"
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_json_emit(v)}" for k, v in obj.items()) + "}"
    raise TypeError(f"cannot serialize {type(obj)!r}")


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return format(v, ".15g") if math.isfinite(v) else str(v)
    if isinstance(v, (list, tuple, dict)):
        return _json_emit(v)
    return str(v)


def render_json(env: OutputEnvelope) -> str:
    payload = {
        "command": env.command,
        "params": env.params,
        "rows": env.rows,
        "errors": env.errors,
        "version": env.version,
    }
    return _json_emit(payload) + "\n"


def render_csv(env: OutputEnvelope) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    if env.rows:
        header = list(env.rows[0].keys())
        writer.writerow(header)
        for row in env.rows:
            writer.writerow([_cell(row.get(k)) for k in header])
    return out.getvalue()


def render_markdown(env: OutputEnvelope) -> str:
    lines = [f"# periodkit {env.command}", ""]
    if env.params:
        lines.append("params: " + ", ".join(f"{k}={_cell(v)}" for k, v in env.params.items()))
        lines.append("")
    if env.rows:
        header = list(env.rows[0].keys())
        lines.append("| " + " | ".join(header) + " |")
        lines.append("| " + " | ".join("---" for _ in header) + " |")
        for row in env.rows:
            lines.append("| " + " | ".join(_cell(row.get(k)) for k in header) + " |")
    lines.append("")
    return "\n".join(lines)


RENDERERS = {"json": render_json, "csv": render_csv, "md": render_markdown}


# ---------------------------------------------------------------------------
# Flag parsing helpers


def _require_odd_prime(p: int, flag: str = "--p") -> int:
    if p is None:
        raise UsageError(f"{flag} is required")
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise UsageError(f"{flag}: {p} is not an odd prime")
    return p


def _parse_residue_curve(text: str, p: int) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"--curve: expected 'a,b', got {text!r}")
    try:
        return int(parts[0]) % p, int(parts[1]) % p
    except ValueError as exc:
        raise UsageError(f"--curve: {exc}") from exc


def _parse_rational_curve(text: str) -> tuple[Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"--curve: expected 'a,b', got {text!r}")
    try:
        return Fraction(parts[0]), Fraction(parts[1])
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"--curve: {exc}") from exc


def _parse_float_grid(text: str) -> list[float]:
    if text.strip() == "":
        return []
    try:
        return [float(part) for part in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"--grid: {exc}") from exc


def _parse_rational_grid(text: str) -> list[Fraction]:
    if text.strip() == "":
        return []
    try:
        return [Fraction(part) for part in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"--grid: {exc}") from exc


def _re_im(z: complex) -> tuple[float, float]:
    return float(z.real), float(z.imag)


def _frac_str(x: Fraction) -> str:
    return str(x)


# ---------------------------------------------------------------------------
# Subcommand implementations


def _cmd_gauss(args) -> OutputEnvelope:
    p = _require_odd_prime(args.p)
    c = MultiplicativeCharacter(p, args.k1)
    g = gauss_sum(c)
    re, im = _re_im(g.value)
    row = {"p": p, "k1": c.k, "order": c.order, "value_re": re, "value_im": im, "norm": g.norm_sq}
    return OutputEnvelope("gauss", {"p": p, "k1": args.k1}, [row])


def _cmd_jacobi(args) -> OutputEnvelope:
    p = _require_odd_prime(args.p)
    c1 = MultiplicativeCharacter(p, args.k1)
    c2 = MultiplicativeCharacter(p, args.k2)
    j = jacobi_sum(c1, c2)
    residual = None
    if not (c1.is_trivial or c2.is_trivial or (c1 * c2).is_trivial):
        residual = gauss_jacobi_relation_check(c1, c2)
    row = {
        "p": p,
        "k1": c1.k,
        "k2": c2.k,
        "ring_order": j.m,
        "coeffs": list(j.coeffs),
        "norm": j.norm_to_int(),
        "residual": residual,
    }
    return OutputEnvelope("jacobi", {"p": p, "k1": args.k1, "k2": args.k2}, [row])


def _cmd_count(args) -> OutputEnvelope:
    p = _require_odd_prime(args.p)
    if p < 5:
        raise UsageError(f"--p: point counting needs p >= 5, got {p}")
    a, b = _parse_residue_curve(args.curve, p)
    curve = WeierstrassCurveFp(p, a, b)
    result = count_points(curve)
    row = {"p": p, "a": a, "b": b, "Np": result.n_points, "ap": result.a_p}
    if args.n == 2:
        row["Np2"] = count_points_ext(curve, 2)
    elif args.n != 1:
        raise UsageError(f"--n: extension degree must be 1 or 2, got {args.n}")
    return OutputEnvelope("count", {"p": p, "curve": args.curve, "n": args.n}, [row])


def _cmd_zeta(args) -> OutputEnvelope:
    p = _require_odd_prime(args.p)
    if p < 5:
        raise UsageError(f"--p: point counting needs p >= 5, got {p}")
    a, b = _parse_residue_curve(args.curve, p)
    data = zeta_data(WeierstrassCurveFp(p, a, b))
    ar, ai = _re_im(data.alpha)
    br, bi = _re_im(data.beta)
    row = {
        "p": p,
        "a": a,
        "b": b,
        "ap": data.a_p,
        "alpha_re": ar,
        "alpha_im": ai,
        "beta_re": br,
        "beta_im": bi,
    }
    return OutputEnvelope("zeta", {"p": p, "curve": args.curve}, [row])


def _cmd_apjacobi(args) -> OutputEnvelope:
    p = _require_odd_prime(args.p)
    row = {"p": p, "ap": a_p_from_jacobi(p)}
    return OutputEnvelope("apjacobi", {"p": p}, [row])


def _curve_rows(a: Fraction, b: Fraction, lattice) -> dict:
    o1r, o1i = _re_im(lattice.omega1)
    o2r, o2i = _re_im(lattice.omega2)
    return {
        "a": _frac_str(a),
        "b": _frac_str(b),
        "method": lattice.method,
        "omega1_re": o1r,
        "omega1_im": o1i,
        "omega2_re": o2r,
        "omega2_im": o2i,
    }


def _cmd_periods(args) -> OutputEnvelope:
    a, b = _parse_rational_curve(args.curve)
    curve = EllipticCurveQ(a, b)
    rows = [
        _curve_rows(a, b, periods_agm(curve)),
        _curve_rows(a, b, periods_quadrature(curve)),
    ]
    return OutputEnvelope("periods", {"curve": args.curve}, rows)


def _cmd_tau(args) -> OutputEnvelope:
    a, b = _parse_rational_curve(args.curve)
    curve = EllipticCurveQ(a, b)
    lattice = periods_agm(curve)
    raw = lattice.omega2 / lattice.omega1
    point = tau_normalize(lattice)
    o1r, o1i = _re_im(lattice.omega1)
    o2r, o2i = _re_im(lattice.omega2)
    row = {
        "a": _frac_str(a),
        "b": _frac_str(b),
        "omega1_re": o1r,
        "omega1_im": o1i,
        "omega2_re": o2r,
        "omega2_im": o2i,
        "raw_re": float(raw.real),
        "raw_im": float(raw.imag),
        "tau_re": float(point.tau.real),
        "tau_im": float(point.tau.imag),
        "matrix": [list(point.transform[0]), list(point.transform[1])],
    }
    return OutputEnvelope("tau", {"curve": args.curve}, [row])


def _cmd_periodmap(args) -> OutputEnvelope:
    ts = _parse_rational_grid(args.grid)
    rows = []
    for t, point in period_map_legendre(ts):
        rows.append(
            {
                "t": _frac_str(t),
                "tau_re": float(point.tau.real),
                "tau_im": float(point.tau.imag),
                "matrix": [list(point.transform[0]), list(point.transform[1])],
            }
        )
    return OutputEnvelope("periodmap", {"grid": args.grid}, rows)


def _cmd_catalog(args) -> OutputEnvelope:
    if args.n < 2 or args.n > 10**6:
        raise UsageError(f"--n: need 2 <= n <= 10^6, got {args.n}")
    rows = []
    for entry in numeric_periods_catalog(args.n):
        rows.append(
            {
                "name": entry.name,
                "value": entry.value,
                "error": entry.error_estimate,
                "variety": entry.variety,
                "divisor": entry.divisor,
                "form": entry.form,
                "domain": entry.domain,
            }
        )
    return OutputEnvelope("catalog", {"n": args.n}, rows)


def _amplitude_row(s: float, t: float, tol: float) -> dict:
    m = MandelstamInput(s12=s, s34=t)
    amp = veneziano(m, tol=tol)
    return {
        "s": s,
        "t": t,
        "alpha": m.alpha,
        "beta": m.beta,
        "value": amp.value if math.isfinite(amp.value) else None,
        "at_pole": amp.at_pole,
        "pole_index": amp.pole_index,
    }


def _cmd_veneziano(args) -> OutputEnvelope:
    row = _amplitude_row(args.s, args.t, args.tol)
    return OutputEnvelope("veneziano", {"s": args.s, "t": args.t, "tol": args.tol}, [row])


def _cmd_beta(args) -> OutputEnvelope:
    # --s and --t carry the two Beta arguments directly.
    value = beta_fn(args.s, args.t)
    row = {"alpha": args.s, "beta": args.t, "value": value}
    return OutputEnvelope("beta", {"s": args.s, "t": args.t}, [row])


def _cmd_poles(args) -> OutputEnvelope:
    if args.n < 0 or args.n > 12:
        raise UsageError(f"--n: need 0 <= n <= 12, got {args.n}")
    if abs(args.t - round(args.t)) < 1e-9:
        raise UsageError(f"--t: beta must stay off the integers, got {args.t}")
    rows = [{"beta": args.t, "n": n, "residue": res} for n, res in pole_scan(args.t, args.n)]
    return OutputEnvelope("poles", {"t": args.t, "n": args.n}, rows)


def _cmd_correspond(args) -> OutputEnvelope:
    p = _require_odd_prime(args.p)
    if p > 97:
        raise UsageError(f"--p: report is desk-scale only (p <= 97), got {p}")
    grid = _parse_float_grid(args.grid)
    if len(grid) > 100:
        raise UsageError(f"--grid: size capped at 100, got {len(grid)}")
    report = correspondence_table(p, grid)
    record = {
        "p": report.p,
        "ap": report.a_p,
        "local": [
            {"k1": r.k1, "k2": r.k2, "norm_ok": r.norm_ok, "J": list(r.coeffs)}
            for r in report.local_rows
        ],
        "global": [
            {
                "s": r.s,
                "t": r.t,
                "A": r.value if math.isfinite(r.value) else None,
                "at_pole": r.at_pole,
                "n": r.pole_index,
            }
            for r in report.global_rows
        ],
        "dictionary": [{"global": g, "local": l} for g, l in report.dictionary],
    }
    return OutputEnvelope("correspond", {"p": p, "grid": args.grid}, [record])


def _render_correspond_markdown(env: OutputEnvelope) -> str:
    record = env.rows[0]
    lines = [f"# periodkit correspond (p = {record['p']})", ""]
    lines.append("## Dictionary")
    lines.append("")
    lines.append("| global object | local object |")
    lines.append("| --- | --- |")
    for row in record["dictionary"]:
        lines.append(f"| {row['global']} | {row['local']} |")
    lines.append("")
    lines.append("## Local side: Jacobi sums with c, c', cc' nontrivial")
    lines.append("")
    if record["ap"] is not None:
        lines.append(f"trace defect of y^2 = x^3 - x at p = {record['p']}: a_p = {record['ap']}")
        lines.append("")
    lines.append("| k1 | k2 | J coefficients | norm equals p |")
    lines.append("| --- | --- | --- | --- |")
    for row in record["local"]:
        lines.append(f"| {row['k1']} | {row['k2']} | {_cell(row['J'])} | {row['norm_ok']} |")
    lines.append("")
    lines.append("## Global side: amplitude samples")
    lines.append("")
    if record["global"]:
        lines.append("| s | t | A | at_pole | n |")
        lines.append("| --- | --- | --- | --- | --- |")
        for row in record["global"]:
            lines.append(
                f"| {_cell(row['s'])} | {_cell(row['t'])} | {_cell(row['A'])} "
                f"| {row['at_pole']} | {_cell(row['n'])} |"
            )
    else:
        lines.append("(empty grid: dictionary rows only)")
    lines.append("")
    return "\n".join(lines)


def _cmd_delta(args) -> OutputEnvelope:
    if args.p is None:
        raise UsageError("--p is required")
    if not is_prime(args.p):
        raise UsageError(f"--p: {args.p} is not prime")
    if not 1 <= args.precision <= 64:
        raise UsageError(f"--precision: need 1 <= N <= 64, got {args.precision}")
    x = PadicInt(args.p, args.precision, args.x)
    dx = delta_p(x)
    row = {"p": args.p, "N": args.precision, "x": x.value, "delta": dx.value}
    params = {"p": args.p, "precision": args.precision, "x": args.x}
    if args.y is not None:
        y = PadicInt(args.p, args.precision, args.y)
        verdict = delta_rules_check(x, y)
        checks = {}
        if args.rule in (None, "sum"):
            checks["sum"] = verdict.sum_rule_ok
        if args.rule in (None, "product"):
            checks["product"] = verdict.product_rule_ok
        row.update(
            {"y": y.value, "delta_y": verdict.delta_y.value, "cocycle": verdict.cocycle, "checks": checks}
        )
        params.update({"y": args.y, "rule": args.rule})
    return OutputEnvelope("delta", params, [row])


# ---------------------------------------------------------------------------
# Parser and dispatch


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="periodkit",
        description="Periods of elliptic curves and their finite-characteristic counterparts",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, default_format: str = "json"):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("json", "csv", "md"), default=default_format)
        p.add_argument("--jobs", type=int, default=1, help="accepted for compatibility; output is deterministic either way")
        return p

    p = add("gauss", "Gauss sum of a multiplicative character")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k1", type=int, required=True)

    p = add("jacobi", "exact Jacobi sum of two characters")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)

    p = add("count", "projective point count of y^2 = x^3 + ax + b over F_p")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--curve", type=str, required=True, help="a,b as integer residues")
    p.add_argument("--n", type=int, default=1, help="extension degree (1 or 2)")

    p = add("zeta", "local zeta numerator roots for a curve over F_p")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--curve", type=str, required=True)

    p = add("apjacobi", "trace defect of y^2 = x^3 - x from a Jacobi sum (p = 1 mod 4)")
    p.add_argument("--p", type=int, required=True)

    p = add("periods", "lattice generators by AGM and quadrature")
    p.add_argument("--curve", type=str, required=True, help="a,b as exact rationals")

    p = add("tau", "SL2(Z)-reduced tau invariant")
    p.add_argument("--curve", type=str, required=True, help="a,b as exact rationals")

    p = add("periodmap", "tau(t) along the family y^2 = x(x-1)(x-t)")
    p.add_argument("--grid", type=str, required=True, help="comma-separated rational t values")

    p = add("catalog", "elementary numeric periods (pi, 2*pi, log n)", default_format="md")
    p.add_argument("--n", type=int, default=2, help="largest logarithm argument")

    p = add("veneziano", "four-point amplitude at (s, t)")
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-12, help="pole snap tolerance")

    p = add("beta", "Euler Beta via the Gamma ratio; --s and --t are its two arguments")
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--t", type=float, required=True)

    p = add("poles", "numeric residues of the amplitude at alpha = 0..-n")
    p.add_argument("--t", type=float, required=True, help="fixed beta (non-integer)")
    p.add_argument("--n", type=int, default=5)

    p = add("correspond", "two-column local/global report", default_format="md")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--grid", type=str, default="", help="comma-separated amplitude grid values")

    p = add("delta", "p-derivation of a fixed-precision p-adic integer")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--precision", type=int, required=True)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, default=None)
    p.add_argument("--rule", choices=("sum", "product"), default=None)

    return parser


_DISPATCH = {
    "gauss": _cmd_gauss,
    "jacobi": _cmd_jacobi,
    "count": _cmd_count,
    "zeta": _cmd_zeta,
    "apjacobi": _cmd_apjacobi,
    "periods": _cmd_periods,
    "tau": _cmd_tau,
    "periodmap": _cmd_periodmap,
    "catalog": _cmd_catalog,
    "veneziano": _cmd_veneziano,
    "beta": _cmd_beta,
    "poles": _cmd_poles,
    "correspond": _cmd_correspond,
    "delta": _cmd_delta,
}


def _absorb_flag_values(argv: list[str]) -> list[str]:
    # argparse reads "-1,0" as an option string; fold values of list-like
    # flags into --flag=value so negative entries parse.
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--curve", "--grid") and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_absorb_flag_values(list(argv)))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        env = _DISPATCH[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PeriodkitError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.command == "correspond" and args.format == "md":
        text = _render_correspond_markdown(env)
    elif args.command == "correspond" and args.format == "csv":
        print("error: --format: correspond supports json and md only", file=sys.stderr)
        return 2
    else:
        text = RENDERERS[args.format](env)
    sys.stdout.write(text)
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
