"""Command-line entry point: ``vortexcoh VERB ...``.

Every verb writes to stdout or, with ``--out``, to a file that is written to a
temporary sibling first and renamed into place.  Floats are printed with
``repr`` (shortest round-trip) and rationals as ``num/den`` so repeated runs
are byte-identical.  Exit codes: 0 success, 1 failed verification or I/O
error, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile
from fractions import Fraction
from typing import Any, Sequence

from vortexcoh import beamfield, identities
from vortexcoh import statistics as st
from vortexcoh.exactnum import DomainError, parse_rat, rat_str
from vortexcoh.modecoeff import b_derivative_route, distribution

FIGURE_DEFAULTS = {
    1: {"N": 20},
    2: {"n": 25, "m": 25},
    3: {"n": 7, "m": 25},
    4: {"N": 25},
    5: {"N": 20, "alpha": Fraction(2)},
}


class UsageError(Exception):
    pass


def _fmt(value: Any) -> str:
    if isinstance(value, Fraction):
        return rat_str(value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _csv(header: Sequence[str], rows: Sequence[Sequence[Any]], comment: str | None = None) -> str:
    buf = io.StringIO()
    if comment:
        buf.write(f"# {comment}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def _json(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _table(fmt: str, header: Sequence[str], rows: Sequence[Sequence[Any]], meta: dict | None = None) -> str:
    if fmt == "csv":
        return _csv(header, rows)
    body = dict(meta or {})
    body["rows"] = [{h: _jsonable(v) for h, v in zip(header, row)} for row in rows]
    return _json(body)


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return rat_str(value)
    return value


def write_output(text: str, out: str | None) -> None:
    """Atomically write ``text`` to ``out`` (stdout when None)."""
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    directory = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(prefix=".vortexcoh-", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# --- verbs -------------------------------------------------------------------------


def _check_nm(args) -> None:
    if args.n < 0 or args.m < 0:
        raise UsageError(f"mode orders must be nonnegative, got n={args.n} m={args.m}")


def cmd_coeffs(args) -> tuple[str, int]:
    _check_nm(args)
    n, m = args.n, args.m
    rows = []
    for k in range(n + m + 1):
        b = b_derivative_route(n, m, k)
        rows.append((k, float(b), b.squared if args.exact else float(b.squared)))
    return _table(args.format or "csv", ["k", "b", "b2"], rows, {"n": n, "m": m}), 0


def cmd_entropy(args) -> tuple[str, int]:
    _check_nm(args)
    dist = distribution((args.n, args.m))
    header = ["n", "m", "shannon_nats"]
    row: list[Any] = [args.n, args.m, st.shannon_entropy(dist)]
    if args.alpha is not None:
        if args.alpha <= 0 or args.alpha == 1:
            raise UsageError("--alpha must be positive and different from 1")
        header += ["alpha", "renyi_nats"]
        row += [args.alpha, st.renyi_entropy(dist, args.alpha)]
    return _table(args.format or "csv", header, [row]), 0


def cmd_moments(args) -> tuple[str, int]:
    _check_nm(args)
    if not 0 <= args.max_order <= st.MAX_MOMENT:
        raise UsageError(f"--max-order must lie in 0..{st.MAX_MOMENT}")
    table = st.moments_direct(distribution((args.n, args.m)), args.max_order)
    conv = (lambda q: q) if args.exact else float
    rows = [(j, conv(table.raw[j]), conv(table.central[j])) for j in range(args.max_order + 1)]
    return _table(args.format or "csv", ["j", "raw", "central"], rows, {"n": args.n, "m": args.m}), 0


def cmd_purity(args) -> tuple[str, int]:
    _check_nm(args)
    if args.w <= 0:
        raise UsageError("--w must be positive")
    mu = st.purity((args.n, args.m))
    header = ["n", "m", "purity_exact", "purity_float"]
    row: list[Any] = [args.n, args.m, mu, float(mu)]
    if args.integral:
        header.append("purity_integral")
        row.append(beamfield.purity_integral((args.n, args.m), beamfield.WaistFrame(args.w)))
    return _table(args.format or "csv", header, [row]), 0


def cmd_corr(args) -> tuple[str, int]:
    _check_nm(args)
    if not args.w > 0:
        raise UsageError("--w must be positive")
    frame = beamfield.WaistFrame(args.w)
    out: dict[str, Any] = {"n": args.n, "m": args.m, "x": args.x, "xprime": args.xprime, "w": args.w}
    rows: list[tuple] = []
    direct = mercer = None
    if args.method in ("direct", "both"):
        direct = beamfield.gamma_direct((args.n, args.m), args.x, args.xprime, frame)
        out["direct"] = [direct.real, direct.imag]
        rows.append(("direct", direct.real, direct.imag))
    if args.method in ("mercer", "both"):
        mercer = beamfield.gamma_mercer((args.n, args.m), args.x, args.xprime, frame)
        out["mercer"] = [mercer, 0.0]
        rows.append(("mercer", mercer, 0.0))
    if direct is not None and mercer is not None:
        diff = abs(direct - mercer)
        out["abs_diff"] = diff
        rows.append(("abs_diff", diff, 0.0))
    if (args.format or "csv") == "json":
        return _json(out), 0
    return _csv(["quantity", "real", "imag"], rows), 0


def figure_table(fig: int, overrides: dict[str, Any]) -> tuple[list[str], list[tuple]]:
    """Header and rows of a figure's data with defaults updated by ``overrides``."""
    p = {**FIGURE_DEFAULTS[fig], **overrides}
    if fig in (1, 5):
        N = p["N"]
        if fig == 1:
            values = [st.shannon_entropy((n, N - n)) for n in range(N + 1)]
        else:
            values = [st.renyi_entropy((n, N - n), p["alpha"]) for n in range(N + 1)]
        return ["n", "entropy_nats"], [(n, v) for n, v in enumerate(values)]
    if fig in (2, 3):
        probs = distribution((p["n"], p["m"])).probs
        return ["k", "prob_exact", "prob_float"], [(k, q, float(q)) for k, q in enumerate(probs)]
    N = p["N"]
    rows = []
    for n in range(N + 1):
        var = st.variance((n, N - n))
        rows.append((n, var, float(var)))
    return ["n", "variance_exact", "variance_float"], rows


def cmd_figure(args) -> tuple[str, int]:
    fig = args.id
    allowed = set(FIGURE_DEFAULTS[fig])
    given = {k: getattr(args, k) for k in ("N", "n", "m", "alpha") if getattr(args, k) is not None}
    extra = set(given) - allowed
    if extra:
        raise UsageError(f"figure {fig} does not take {', '.join('--' + e for e in sorted(extra))}")
    if any(v < 0 for k, v in given.items() if k != "alpha"):
        raise UsageError("figure sizes must be nonnegative")
    if "alpha" in given and (given["alpha"] <= 0 or given["alpha"] == 1):
        raise UsageError("--alpha must be positive and different from 1")
    header, rows = figure_table(fig, given)
    comment = None
    if given:
        comment = "overrides: " + " ".join(f"{k}={_fmt(given[k])}" for k in sorted(given))
    if (args.format or "csv") == "json":
        body = {"figure": fig, "parameters": {k: _jsonable(v) for k, v in {**FIGURE_DEFAULTS[fig], **given}.items()}}
        body["rows"] = [{h: _jsonable(v) for h, v in zip(header, row)} for row in rows]
        return _json(body), 0
    return _csv(header, rows, comment), 0


def cmd_verify(args) -> tuple[str, int]:
    if args.max_nm < 0:
        raise UsageError("--max-nm must be nonnegative")
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    selection = args.ids or ["all"]
    try:
        ids = identities.resolve_selection(selection)
    except KeyError as exc:
        raise UsageError(f"{exc.args[0]}; known ids: {', '.join(identities.IDENTITY_IDS)}") from None
    result = identities.run_suite(args.max_nm, ids, jobs=args.jobs)
    code = 0 if result.all_passed else 1
    if (args.format or "json") == "csv":
        rows = [
            (r.identity_id, json.dumps(r.to_dict()["params"], sort_keys=True), r.status, r.lhs, r.rhs, r.to_dict()["residual"])
            for r in result.reports
        ]
        return _csv(["id", "params", "status", "lhs", "rhs", "residual"], rows), code
    return result.to_json(), code


# --- parser --------------------------------------------------------------------------


def _rational(text: str) -> Fraction:
    try:
        return parse_rat(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _finite(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"not a finite number: {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vortexcoh", description="LG/HG connection coefficients and their identities.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, formats=("json", "csv")):
        p.add_argument("--format", choices=formats, default=None)
        p.add_argument("--out", metavar="PATH", default=None)

    def nm(p):
        p.add_argument("n", type=int)
        p.add_argument("m", type=int)

    p = sub.add_parser("coeffs", help="table of b(n,m,k) and b^2")
    nm(p)
    p.add_argument("--exact", action="store_true", help="print b^2 as num/den")
    common(p)
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("entropy", help="Shannon (and optionally Renyi) entropy in nats")
    nm(p)
    p.add_argument("--alpha", type=_rational, default=None)
    common(p)
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("moments", help="raw and central moments of k")
    nm(p)
    p.add_argument("--max-order", type=int, default=st.MAX_MOMENT)
    p.add_argument("--exact", action="store_true")
    common(p)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("purity", help="sum of b^4, optionally by quadrature")
    nm(p)
    p.add_argument("--integral", action="store_true")
    p.add_argument("--w", type=_finite, default=1.0)
    common(p)
    p.set_defaults(func=cmd_purity)

    p = sub.add_parser("corr", help="two-point correlation Gamma(x, x')")
    nm(p)
    p.add_argument("x", type=_finite)
    p.add_argument("xprime", type=_finite)
    p.add_argument("--w", type=_finite, default=1.0)
    p.add_argument("--method", choices=("direct", "mercer", "both"), default="both")
    common(p)
    p.set_defaults(func=cmd_corr)

    p = sub.add_parser("figure", help="data behind figures 1-5 as CSV")
    p.add_argument("id", type=int, choices=sorted(FIGURE_DEFAULTS))
    p.add_argument("--N", type=int, default=None, help="total order (figures 1, 4, 5)")
    p.add_argument("--n", type=int, default=None, help="first index (figures 2, 3)")
    p.add_argument("--m", type=int, default=None, help="second index (figures 2, 3)")
    p.add_argument("--alpha", type=_rational, default=None, help="Renyi order (figure 5)")
    common(p)
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("verify", help="run identity checks and emit a JSON report")
    p.add_argument("ids", nargs="*", help="identity ids, or 'all' (default)")
    p.add_argument("--max-nm", type=int, default=5)
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, code = args.func(args)
    except (UsageError, DomainError) as exc:
        parser.print_usage(sys.stderr)
        print(f"vortexcoh {args.verb}: error: {exc}", file=sys.stderr)
        return 2
    try:
        write_output(text, args.out)
    except OSError as exc:
        print(f"vortexcoh {args.verb}: cannot write output: {exc}", file=sys.stderr)
        return 1
    return code


if __name__ == "__main__":
    sys.exit(main())
