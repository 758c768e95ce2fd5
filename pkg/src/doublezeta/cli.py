"""Command line front end.

Subcommands:
  eval     one value of zeta2(s, alpha; v, w), JSON or CSV
  verify   identity sweep at v = w = 1 (exit 1 when the sweep fails)
  scan     |zeta2| along a vertical line, CSV rows t,abs,method,err
  moments  cumulative moment integrals over [2, T]
  table    grid of values over a sigma x t rectangle

Exit codes: 0 success, 1 a verification suite failed, 2 usage or domain
errors.  The last line on stderr is always a machine-parsable key=value
summary.  Output files are written atomically (temp file plus rename), so
no partial file remains after a failure.  Floats are serialized with 17
significant digits, enough to round-trip IEEE doubles; --deterministic
forces single-threaded reduction so repeated runs are byte-identical.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import os
import sys
from dataclasses import dataclass, field

from .barnes import MethodTag, evaluate
from .errors import DoubleZetaError
from .harness import (
    _METHOD_RUNNERS,
    growth_scan,
    moment_integral,
    verify_identity_vw11,
    vw11_default_grid,
)
from .params import BarnesParams

_TOKENS = {
    "sqrt2": complex(math.sqrt(2.0)),
    "golden": complex((1.0 + math.sqrt(5.0)) / 2.0),
    "i": 1j,
}


def parse_number(text: str) -> complex:
    """Parse a CLI numeric field: a complex literal using i, or a token.

    Tokens sqrt2, golden and i are accepted so irrational and imaginary
    ratios can be requested without typing truncated decimals.
    """
    raw = text.strip().lower()
    if raw in _TOKENS:
        return _TOKENS[raw]
    try:
        return complex(raw.replace("i", "j").replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")


def _fmt(x: float) -> str:
    return f"{float(x):.17g}"


@dataclass(frozen=True)
class JobConfig:
    """One resolved CLI invocation; params hold the raw argument strings."""

    command: str
    params: dict[str, str] = field(default_factory=dict)
    method: str | None = None
    output: str | None = None
    fmt: str = "json"
    deterministic: bool = False
    seed: int | None = None


def _atomic_write(path: str, text: str) -> None:
    tmp = f"{path}.tmp.{os.getpid()}"
    try:
        with open(tmp, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _emit(config: JobConfig, text: str) -> None:
    if config.output:
        _atomic_write(config.output, text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _summary(**kv) -> None:
    line = " ".join(f"{k}={v}" for k, v in kv.items())
    print(line, file=sys.stderr)


def _params_from(config: JobConfig) -> BarnesParams:
    p = config.params
    return BarnesParams(
        parse_number(p.get("alpha", "1")),
        parse_number(p.get("v", "1")),
        parse_number(p.get("w", "1")),
    )


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)  # default \r\n line endings
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _run_eval(config: JobConfig) -> int:
    s = parse_number(config.params["s"])
    params = _params_from(config)
    if config.method is None:
        result = evaluate(s, params)
    else:
        result = _METHOD_RUNNERS[MethodTag(config.method)](s, params)
    fields = [
        ("value_re", _fmt(result.value.real)),
        ("value_im", _fmt(result.value.imag)),
        ("err", _fmt(result.abs_err_est)),
        ("method", result.method),
    ]
    if config.fmt == "csv":
        text = _csv_text(
            [k for k, _ in fields], [[v for _, v in fields]]
        )
    else:
        body = ", ".join(
            f'"{k}": {v}' if k != "method" else f'"{k}": "{v}"'
            for k, v in fields
        )
        text = "{" + body + "}\n"
    _emit(config, text)
    _summary(
        status="ok",
        command="eval",
        method=result.method,
        err=_fmt(result.abs_err_est),
        output=config.output or "-",
    )
    return 0


def _run_verify(config: JobConfig) -> int:
    tol = float(config.params.get("tol", "1e-5"))
    alphas_raw = config.params.get("alphas", "0.8,1,2")
    alphas = [parse_number(a) for a in alphas_raw.split(",") if a.strip()]
    grid = vw11_default_grid()
    reports = [verify_identity_vw11(a, grid, tol) for a in alphas]
    worst = max(r.max_rel_dev for r in reports)
    all_pass = all(r.passed for r in reports)
    lines = []
    for a, r in zip(alphas, reports):
        lines.append(
            "{"
            + f'"alpha_re": {_fmt(a.real)}, "alpha_im": {_fmt(a.imag)}, '
            + f'"points": {r.points_checked}, "max_rel_dev": {_fmt(r.max_rel_dev)}, '
            + f'"failures": {len(r.failing_points)}, '
            + f'"passed": {"true" if r.passed else "false"}'
            + "}"
        )
    text = "[\n  " + ",\n  ".join(lines) + "\n]\n"
    _emit(config, text)
    _summary(
        status="ok" if all_pass else "fail",
        command="verify",
        suite=config.params.get("suite", "vw11"),
        max_rel_dev=_fmt(worst),
        tol=_fmt(tol),
        output=config.output or "-",
    )
    return 0 if all_pass else 1


def _run_scan(config: JobConfig) -> int:
    params = _params_from(config)
    records = growth_scan(
        float(config.params["sigma"]),
        float(config.params.get("t_min", "10")),
        float(config.params.get("t_max", "1000")),
        params,
        samples_per_decade=int(config.params.get("spd", "16")),
    )
    if config.fmt == "json":
        rows = [
            "{"
            + f'"t": {_fmt(r.t)}, "abs": {_fmt(r.magnitude)}, '
            + f'"method": "{r.method}", "err": {_fmt(r.err)}'
            + "}"
            for r in records
        ]
        text = "[\n  " + ",\n  ".join(rows) + "\n]\n"
    else:
        text = _csv_text(
            ["t", "abs", "method", "err"],
            [[_fmt(r.t), _fmt(r.magnitude), r.method, _fmt(r.err)] for r in records],
        )
    _emit(config, text)
    _summary(
        status="ok",
        command="scan",
        records=len(records),
        output=config.output or "-",
    )
    return 0


def _run_moments(config: JobConfig) -> int:
    params = _params_from(config)
    T_values = [float(x) for x in config.params.get("T", "50,100,200,400").split(",")]
    curve = moment_integral(
        float(config.params.get("sigma", "1.5")),
        int(config.params.get("k", "1")),
        T_values,
        params,
        quad_points_per_unit=int(config.params.get("qppu", "4")),
    )
    if config.fmt == "csv":
        text = _csv_text(
            ["T", "moment"],
            [[_fmt(T), _fmt(val)] for T, val in curve.points],
        )
    else:
        pts = ", ".join(f"[{_fmt(T)}, {_fmt(val)}]" for T, val in curve.points)
        text = (
            "{"
            + f'"k": {curve.k}, "sigma": {_fmt(curve.sigma)}, "points": [{pts}]'
            + "}\n"
        )
    _emit(config, text)
    _summary(
        status="ok",
        command="moments",
        points=len(curve.points),
        output=config.output or "-",
    )
    return 0


def _run_table(config: JobConfig) -> int:
    params = _params_from(config)
    p = config.params
    s_lo, s_hi = float(p.get("sigma_min", "-3")), float(p.get("sigma_max", "3"))
    t_lo, t_hi = float(p.get("t_min", "-20")), float(p.get("t_max", "20"))
    n_s, n_t = int(p.get("sigma_steps", "7")), int(p.get("t_steps", "7"))
    rows = []
    skipped = 0
    for i in range(n_s):
        sigma = s_lo + (s_hi - s_lo) * i / max(n_s - 1, 1)
        for j in range(n_t):
            t = t_lo + (t_hi - t_lo) * j / max(n_t - 1, 1)
            s = complex(sigma, t)
            try:
                r = evaluate(s, params)
            except DoubleZetaError:
                skipped += 1
                continue
            rows.append(
                [
                    _fmt(sigma),
                    _fmt(t),
                    _fmt(r.value.real),
                    _fmt(r.value.imag),
                    _fmt(r.abs_err_est),
                    r.method,
                ]
            )
    if config.fmt == "json":
        body = [
            "{"
            + f'"sigma": {row[0]}, "t": {row[1]}, "value_re": {row[2]}, '
            + f'"value_im": {row[3]}, "err": {row[4]}, "method": "{row[5]}"'
            + "}"
            for row in rows
        ]
        text = "[\n  " + ",\n  ".join(body) + "\n]\n"
    else:
        text = _csv_text(
            ["sigma", "t", "value_re", "value_im", "err", "method"], rows
        )
    _emit(config, text)
    _summary(
        status="ok",
        command="table",
        records=len(rows),
        skipped=skipped,
        output=config.output or "-",
    )
    return 0


_RUNNERS = {
    "eval": _run_eval,
    "verify": _run_verify,
    "scan": _run_scan,
    "moments": _run_moments,
    "table": _run_table,
}


def run(config: JobConfig) -> int:
    """Execute a resolved job; maps library errors to exit code 2."""
    saved = os.environ.get("BARNES_ZETA_THREADS")
    try:
        if config.deterministic:
            os.environ["BARNES_ZETA_THREADS"] = "1"
        return _RUNNERS[config.command](config)
    except DoubleZetaError as exc:
        _summary(
            status="error",
            command=config.command,
            error=type(exc).__name__,
            detail=repr(str(exc)),
        )
        return 2
    except (KeyError, ValueError) as exc:
        _summary(
            status="error",
            command=config.command,
            error="usage",
            detail=repr(str(exc)),
        )
        return 2
    finally:
        if config.deterministic:
            if saved is None:
                os.environ.pop("BARNES_ZETA_THREADS", None)
            else:
                os.environ["BARNES_ZETA_THREADS"] = saved


class _Parser(argparse.ArgumentParser):
    # single-line machine-parsable usage failures, still exit code 2
    def error(self, message):
        print(f"status=error error=usage detail={message!r}", file=sys.stderr)
        raise SystemExit(2)


def _add_common(sub, with_params=True):
    sub.add_argument("--output", default=None, help="output file (atomic write)")
    sub.add_argument("--format", default=None, choices=["json", "csv"])
    sub.add_argument("--deterministic", action="store_true")
    sub.add_argument("--seed", type=int, default=None, help="reserved")
    if with_params:
        sub.add_argument("--alpha", default="1")
        sub.add_argument("--v", default="1")
        sub.add_argument("--w", default="1")


def build_parser() -> _Parser:
    parser = _Parser(prog="doublezeta", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="command", required=True)

    e = subs.add_parser("eval", help="evaluate one point")
    e.add_argument("--s", required=True, help="complex, e.g. '-0.5+5i'")
    e.add_argument(
        "--method",
        default=None,
        choices=[m.value for m in MethodTag],
        help="force one evaluation route instead of dispatching",
    )
    _add_common(e)

    v = subs.add_parser("verify", help="identity sweep at v = w = 1")
    v.add_argument("--suite", default="vw11", choices=["vw11"])
    v.add_argument("--tol", default="1e-5")
    v.add_argument("--alphas", default="0.8,1,2", help="comma separated")
    _add_common(v, with_params=False)

    sc = subs.add_parser("scan", help="|zeta2| along a vertical line")
    sc.add_argument("--sigma", required=True)
    sc.add_argument("--t-min", default="10", dest="t_min")
    sc.add_argument("--t-max", default="1000", dest="t_max")
    sc.add_argument("--samples-per-decade", default="16", dest="spd")
    _add_common(sc)

    m = subs.add_parser("moments", help="moment integrals over [2, T]")
    m.add_argument("--sigma", default="1.5")
    m.add_argument("--k", default="1")
    m.add_argument("--T", default="50,100,200,400", help="comma separated")
    m.add_argument("--qppu", default="4", help="quadrature points per unit t")
    _add_common(m)

    tb = subs.add_parser("table", help="grid of values")
    tb.add_argument("--sigma-min", default="-3", dest="sigma_min")
    tb.add_argument("--sigma-max", default="3", dest="sigma_max")
    tb.add_argument("--sigma-steps", default="7", dest="sigma_steps")
    tb.add_argument("--t-min", default="-20", dest="t_min")
    tb.add_argument("--t-max", default="20", dest="t_max")
    tb.add_argument("--t-steps", default="7", dest="t_steps")
    _add_common(tb)
    return parser


_DEFAULT_FMT = {"eval": "json", "verify": "json", "scan": "csv", "moments": "json", "table": "csv"}


def config_from_args(args: argparse.Namespace) -> JobConfig:
    skip = {"command", "method", "output", "format", "deterministic", "seed"}
    params = {
        k: str(v) for k, v in vars(args).items() if k not in skip and v is not None
    }
    return JobConfig(
        command=args.command,
        params=params,
        method=getattr(args, "method", None),
        output=args.output,
        fmt=args.format or _DEFAULT_FMT[args.command],
        deterministic=args.deterministic,
        seed=args.seed,
    )


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return run(config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
