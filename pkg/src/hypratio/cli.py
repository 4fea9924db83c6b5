"""Command line front end.

Every run prints line-oriented ``key=value`` records (``--format kv``), a single
JSON document (``--format doc``) or CSV rows (``--format csv``). Floats are
printed with 17 significant digits. Exit status is 0 on success, 1 when a
``verify`` suite finds a deviation above its threshold, 2 when parameters are
rejected and 3 on numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass, field

import numpy as np

from .continuation import Bank, CutPlanePoint
from .errors import HypRatioError, NumericalError, ParameterError
from .quadrature import QuadratureConfig
from .ratio_theory import (
    asymptotic_profile,
    boundary_imag,
    coefficient_B,
    derive_indices,
    select_MN,
)
from .representation import (
    build_representation,
    eval_representation,
    eval_representation_detail,
    product_r111_r001,
    product_stieltjes2,
    ratio_direct,
)
from .special_core import Params, Precision, Shift
from .zeros import locate_zeros, pole_free_condition, runckel_count, winding_count

__all__ = ["JobSpec", "Report", "run", "main", "COMMANDS"]

COMMANDS = ("eval", "indices", "zeros", "represent", "boundary", "verify", "product")
SUITES = ("boundary", "repr", "zeros", "products", "all")
STRATEGIES = {"auto": "auto", "pole-free": "pole-free", "q": "q-correction", "t": "t-multiplier"}
DEFAULT_DIGITS = 30
DEFAULT_TOL = 1e-10
VERIFY_TOL = 1e-8
LOG_VERIFY_TOL = 1e-6

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARAMETER = 2
EXIT_NUMERICAL = 3

_VERIFY_POINTS = (-0.5, -3.0, -25.0, 0.5, 0.5 + 0.5j, -1 + 2j, 3 + 1j, 0.3 - 0.8j)
_BOUNDARY_POINTS = (1.1, 2.0, 10.0)
_PRODUCT_POINTS = (-2.0, -0.5, 0.5 + 0.5j, 0.3 - 0.2j)


@dataclass
class JobSpec:
    command: str
    params: Params | None = None
    shift: Shift = field(default_factory=Shift)
    points: list = field(default_factory=list)
    options: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ParameterError(f"unknown command {self.command!r}")
        if self.command != "indices" and self.params is None:
            raise ParameterError(f"{self.command} needs --a, --b and --c")
        if self.command in ("eval", "boundary", "product") and not self.points:
            raise ParameterError(f"{self.command} needs at least one --z or --grid point")
        if self.command == "boundary":
            for p in self.points:
                if not (p.z.real > 1 and p.z.imag == 0):
                    raise ParameterError(f"boundary points must be real and exceed 1, got {p.z}")


@dataclass
class Report:
    records: list = field(default_factory=list)
    status: int = EXIT_OK

    def add(self, record: str, /, **fields):
        self.records.append({"record": record, **fields})


# --------------------------------------------------------------------------
# parsing


def parse_point(text: str) -> CutPlanePoint:
    """``re,im`` or ``re,im,upper|lower`` (the bank form needs ``im = 0`` and ``re > 1``)."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) not in (2, 3):
        raise ParameterError(f"point {text!r} must look like re,im or re,im,bank")
    try:
        z = complex(float(parts[0]), float(parts[1]))
    except ValueError as exc:
        raise ParameterError(f"point {text!r} is not numeric") from exc
    if len(parts) == 3:
        return CutPlanePoint(z, Bank.parse(parts[2]))
    return CutPlanePoint(z)


def parse_point_real(text: str) -> float:
    """Real part of ``re,im`` (or a bare ``re``); boundary points live on the cut."""
    parts = [p.strip() for p in text.split(",")]
    try:
        values = [float(p) for p in parts[:2]]
    except ValueError as exc:
        raise ParameterError(f"point {text!r} is not numeric") from exc
    if len(values) == 2 and values[1] != 0:
        raise ParameterError(f"boundary points must be real, got {text!r}")
    return values[0]


def parse_grid(text: str) -> list[CutPlanePoint]:
    """``re0,re1,n``: ``n`` equally spaced real points."""
    parts = text.split(",")
    if len(parts) != 3:
        raise ParameterError(f"grid {text!r} must look like re0,re1,n")
    try:
        lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise ParameterError(f"grid {text!r} is not numeric") from exc
    if n < 1:
        raise ParameterError("grid needs at least one point")
    return [CutPlanePoint(complex(x, 0.0)) for x in np.linspace(lo, hi, n)]


def _digits(value) -> int:
    if value is not None:
        return int(value)
    env = os.environ.get("HYPRATIO_DIGITS")
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise ParameterError(f"HYPRATIO_DIGITS={env!r} is not an integer") from exc
    return DEFAULT_DIGITS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypratio", description="Ratios of associated Gauss hypergeometric functions.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--a", type=float)
    parser.add_argument("--b", type=float)
    parser.add_argument("--c", type=float)
    parser.add_argument("--n1", type=int, default=0)
    parser.add_argument("--n2", type=int, default=0)
    parser.add_argument("--m", type=int, default=0)
    parser.add_argument("--z", action="append", default=[], help="evaluation point re,im (repeatable; re,im,upper for a bank)")
    parser.add_argument("--grid", help="real sample points re0,re1,n")
    parser.add_argument("--strategy", choices=tuple(STRATEGIES), default="auto")
    parser.add_argument("--tol", type=float, default=DEFAULT_TOL, help="quadrature tolerance (absolute and relative)")
    parser.add_argument("--digits", type=int, help="working precision in decimal digits (default: $HYPRATIO_DIGITS or 30)")
    parser.add_argument("--suite", choices=SUITES, default="all")
    parser.add_argument("--format", choices=("kv", "doc", "csv"), default="kv")
    return parser


def job_from_args(args: argparse.Namespace) -> JobSpec:
    given = [v is not None for v in (args.a, args.b, args.c)]
    if any(given) and not all(given):
        raise ParameterError("--a, --b and --c must be given together")
    params = Params(args.a, args.b, args.c) if all(given) else None
    if args.command == "boundary":
        xs = [parse_point_real(z) for z in args.z]
        if args.grid:
            xs += [p.z.real for p in parse_grid(args.grid)]
        points = [CutPlanePoint.on_cut(x, Bank.UPPER) if x > 1 else CutPlanePoint(complex(x, 0.0)) for x in xs]
    else:
        points = [parse_point(z) for z in args.z]
        if args.grid:
            points += parse_grid(args.grid)
    options = {
        "strategy": STRATEGIES[args.strategy],
        "tol": float(args.tol),
        "digits": _digits(args.digits),
        "suite": args.suite,
        "format": args.format,
    }
    return JobSpec(args.command, params, Shift(args.n1, args.n2, args.m), points, options)


# --------------------------------------------------------------------------
# commands


def _config(job: JobSpec):
    tol = job.options.get("tol", DEFAULT_TOL)
    if not tol > 0:
        raise ParameterError("--tol must be positive")
    return QuadratureConfig(abs_tol=tol, rel_tol=tol), Precision(job.options.get("digits", DEFAULT_DIGITS))


def _meta(job: JobSpec, level=None) -> dict:
    out = {"tol": job.options.get("tol", DEFAULT_TOL), "digits": job.options.get("digits", DEFAULT_DIGITS)}
    out["level"] = -1 if level is None else level
    return out


def _point_fields(pt: CutPlanePoint) -> dict:
    return {"z_re": pt.z.real, "z_im": pt.z.imag, "bank": pt.bank.name.lower() if pt.bank else "none"}


def _cmd_indices(job: JobSpec, report: Report):
    idx = derive_indices(job.shift)
    report.add("indices", n1=job.shift.n1, n2=job.shift.n2, m=job.shift.m, n_low=idx.n_low, n_high=idx.n_high, p=idx.p, l=idx.l, r=idx.r)
    if job.params is None:
        return
    _, prec = _config(job)
    prof = asymptotic_profile(job.params, job.shift)
    M, N = select_MN(job.params, job.shift)
    report.add(
        "exponents",
        B=float(coefficient_B(job.params, job.shift, prec)),
        eta_base=prof.eta_base,
        eta_shifted=prof.eta_shifted,
        zeta_base=prof.zeta_base,
        zeta_shifted=prof.zeta_shifted,
        M=M,
        N=N,
        **_meta(job),
    )


def _cmd_zeros(job: JobSpec, report: Report):
    _, prec = _config(job)
    shift = None if job.shift.is_zero() else job.shift
    result = locate_zeros(job.params, prec, shift)
    report.add(
        "count",
        nu=result.count,
        degenerate=result.degenerate,
        condition=pole_free_condition(job.params) or "none",
        radius=result.radius if result.radius is not None else -1.0,
        **_meta(job),
    )
    for z, res in zip(result.zeros, result.residues):
        fields = {
            "re": z.location.real,
            "im": z.location.imag,
            "kind": z.kind,
            "on_cut": z.on_cut,
            "simple": z.simple,
            "shift": f"{result.shift.n1},{result.shift.n2},{result.shift.m}",
        }
        if res is not None:
            fields.update(residue_re=res.real, residue_im=res.imag)
        report.add("zero", **fields, **_meta(job))


def _eval_points(job: JobSpec, report: Report, rep, quad, prec):
    for pt in job.points:
        value, result = eval_representation_detail(rep, pt, quad, prec)
        oracle = complex(ratio_direct(job.params, job.shift, pt, prec))
        report.add(
            "value",
            **_point_fields(pt),
            R_re=value.real,
            R_im=value.imag,
            oracle_re=oracle.real,
            oracle_im=oracle.imag,
            abs_err_vs_oracle=abs(value - oracle),
            strategy=rep.strategy,
            **_meta(job, None if result is None else result.level),
        )


def _cmd_eval(job: JobSpec, report: Report):
    quad, prec = _config(job)
    rep = build_representation(job.params, job.shift, job.options.get("strategy", "auto"), prec)
    _eval_points(job, report, rep, quad, prec)


def _coeffs(poly) -> str:
    return ";".join(_fmt(float(c)) for c in poly.coeffs) or "0"


def _cmd_represent(job: JobSpec, report: Report):
    quad, prec = _config(job)
    rep = build_representation(job.params, job.shift, job.options.get("strategy", "auto"), prec)
    alpha, beta = rep.endpoint_exponents
    report.add(
        "representation",
        strategy=rep.strategy,
        M=rep.M,
        N=rep.N,
        d=rep.d,
        Q_num=_coeffs(rep.Q.numerator),
        Q_den=_coeffs(rep.Q.denominator),
        T=_coeffs(rep.T),
        taylor=";".join(_fmt(v) for v in rep.taylor) or "none",
        weight=_coeffs(rep.weight.B_times_Pr),
        exp_x=rep.weight.exp_x,
        exp_x_minus_1=rep.weight.exp_x_minus_1,
        alpha=alpha,
        beta=beta,
        logarithmic=rep.logarithmic,
        **_meta(job),
    )
    for beta_, res in rep.Q.poles:
        report.add("pole", re=beta_.real, im=beta_.imag, residue_re=res.real, residue_im=res.imag, **_meta(job))
    _eval_points(job, report, rep, quad, prec)


def _cmd_boundary(job: JobSpec, report: Report):
    _, prec = _config(job)
    for pt in job.points:
        x = pt.z.real
        formula = float(boundary_imag(job.params, job.shift, x, Bank.UPPER, prec))
        direct = float(complex(ratio_direct(job.params, job.shift, CutPlanePoint.on_cut(x, Bank.UPPER), prec)).imag)
        report.add("boundary", x=x, im_formula=formula, im_direct=direct, rel_err=abs(formula - direct) / (1 + abs(direct)), **_meta(job))


def _cmd_product(job: JobSpec, report: Report):
    quad, prec = _config(job)
    p = job.params
    for pt in job.points:
        first = product_r111_r001(p, pt, quad, prec)
        second = product_stieltjes2(p, pt, quad, prec)
        z = pt.z
        o1 = z * complex(ratio_direct(p, Shift(1, 1, 1), pt, prec) * ratio_direct(p, Shift(0, 0, 1), pt, prec))
        o2 = complex(ratio_direct(p, Shift(0, 0, -1), pt, prec) * ratio_direct(p, Shift(0, 0, 1), pt, prec))
        report.add(
            "product",
            **_point_fields(pt),
            zR111R001_re=first.real,
            zR111R001_im=first.imag,
            err_first=abs(first - o1),
            R00m1R001_re=second.real,
            R00m1R001_im=second.imag,
            err_second=abs(second - o2),
            **_meta(job),
        )


# verify suites -------------------------------------------------------------


def _verify_boundary(job, quad, prec):
    worst = 0.0
    for x in _BOUNDARY_POINTS:
        formula = complex(boundary_imag(job.params, job.shift, x, Bank.UPPER, prec)).real
        direct = complex(ratio_direct(job.params, job.shift, CutPlanePoint.on_cut(x, Bank.UPPER), prec)).imag
        worst = max(worst, abs(formula - direct) / (1 + abs(direct)))
    return worst, VERIFY_TOL, len(_BOUNDARY_POINTS)


def _verify_repr(job, quad, prec):
    rep = build_representation(job.params, job.shift, job.options.get("strategy", "auto"), prec)
    worst = 0.0
    checked = 0
    for z in _VERIFY_POINTS:
        if rep.d and min(abs(z - b) for b in np.roots(list(reversed(rep.T.coeffs)))) < 1e-3:
            continue
        value = eval_representation(rep, z, quad, prec)
        oracle = complex(ratio_direct(job.params, job.shift, z, prec))
        worst = max(worst, abs(value - oracle) / (1 + abs(oracle)))
        checked += 1
    return worst, LOG_VERIFY_TOL if rep.logarithmic else VERIFY_TOL, checked


def _verify_zeros(job, quad, prec):
    nu, degenerate = runckel_count(job.params)
    mismatch = 0.0
    if not degenerate:
        found = locate_zeros(job.params, prec)
        mismatch = float(abs(found.located_count() - nu))
        if found.radius:
            mismatch += abs(winding_count(job.params, found.radius) - nu)
    pole_free = pole_free_condition(job.params) is not None
    mismatch += float(pole_free != (nu == 0))
    return mismatch, 0.5, 1


def _verify_products(job, quad, prec):
    if pole_free_condition(job.params) is None:
        return 0.0, VERIFY_TOL, 0
    p = job.params
    worst = 0.0
    for z in _PRODUCT_POINTS:
        first = product_r111_r001(p, z, quad, prec)
        o1 = z * complex(ratio_direct(p, Shift(1, 1, 1), z, prec) * ratio_direct(p, Shift(0, 0, 1), z, prec))
        worst = max(worst, abs(first - o1) / (1 + abs(o1)))
        if float(p.c) != 1.0:
            second = product_stieltjes2(p, z, quad, prec)
            o2 = complex(ratio_direct(p, Shift(0, 0, -1), z, prec) * ratio_direct(p, Shift(0, 0, 1), z, prec))
            worst = max(worst, abs(second - o2) / (1 + abs(o2)))
    return worst, VERIFY_TOL, len(_PRODUCT_POINTS)


_SUITE_RUNNERS = {
    "boundary": _verify_boundary,
    "repr": _verify_repr,
    "zeros": _verify_zeros,
    "products": _verify_products,
}


def _cmd_verify(job: JobSpec, report: Report):
    quad, prec = _config(job)
    suite = job.options.get("suite", "all")
    names = tuple(_SUITE_RUNNERS) if suite == "all" else (suite,)
    for name in names:
        worst, threshold, checked = _SUITE_RUNNERS[name](job, quad, prec)
        passed = worst <= threshold
        report.add("verify", suite=name, max_deviation=worst, threshold=threshold, checked=checked, passed=passed, **_meta(job))
        if not passed:
            report.status = EXIT_MISMATCH


_HANDLERS = {
    "eval": _cmd_eval,
    "indices": _cmd_indices,
    "zeros": _cmd_zeros,
    "represent": _cmd_represent,
    "boundary": _cmd_boundary,
    "verify": _cmd_verify,
    "product": _cmd_product,
}


def run(job: JobSpec) -> Report:
    """Execute a job; errors become an ``error`` record and the matching exit status."""
    report = Report()
    try:
        _HANDLERS[job.command](job, report)
    except ParameterError as exc:
        report.records = [{"record": "error", "kind": type(exc).__name__, "message": str(exc)}]
        report.status = EXIT_PARAMETER
    except (NumericalError, ZeroDivisionError, ArithmeticError) as exc:
        report.records = [{"record": "error", "kind": type(exc).__name__, "message": str(exc)}]
        report.status = EXIT_NUMERICAL
    return report


# --------------------------------------------------------------------------
# output


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if math.isnan(value) or math.isinf(value):
            return str(value)
        return "%.17g" % value
    return str(value)


def format_kv(report: Report) -> str:
    lines = []
    for rec in report.records:
        lines.append(" ".join(f"{k}={_kv_value(v)}" for k, v in rec.items()))
    return "\n".join(lines) + "\n"


def _kv_value(value) -> str:
    text = _fmt(value)
    if isinstance(value, str) and (" " in text or "=" in text or not text):
        return json.dumps(text)
    return text


def _json_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return _fmt(value) if math.isfinite(value) else json.dumps(str(value))
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return "{" + ", ".join(f"{json.dumps(k)}: {_json_value(v)}" for k, v in value.items()) + "}"
    if isinstance(value, list):
        return "[" + ", ".join(_json_value(v) for v in value) + "]"
    return json.dumps(str(value))


def format_doc(report: Report) -> str:
    return _json_value({"status": report.status, "records": report.records}) + "\n"


CSV_HEADER = ("z_re", "z_im", "R_re", "R_im", "abs_err_vs_oracle")


def format_csv(report: Report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    values = [r for r in report.records if r["record"] == "value"]
    if not values:
        # errors and non-curve commands fall back to records
        return format_kv(report)
    writer.writerow(CSV_HEADER)
    for rec in values:
        writer.writerow([_fmt(rec[k]) for k in CSV_HEADER])
    return buf.getvalue()


FORMATTERS = {"kv": format_kv, "doc": format_doc, "csv": format_csv}


_VALUE_OPTIONS = ("--z", "--grid", "--a", "--b", "--c", "--tol")


def _attach_values(argv: list[str]) -> list[str]:
    # "--z -1,0" would be read as an option; glue such values to their flag
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_OPTIONS:
            value = next(it, None)
            out.append(tok if value is None else f"{tok}={value}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_attach_values(argv))
    try:
        job = job_from_args(args)
    except HypRatioError as exc:
        report = Report([{"record": "error", "kind": type(exc).__name__, "message": str(exc)}], EXIT_PARAMETER)
    else:
        report = run(job)
    sys.stdout.write(FORMATTERS[args.format](report))
    return report.status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
