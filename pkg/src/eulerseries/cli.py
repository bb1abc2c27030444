"""``eulerseries`` command line: compute, bench and verify.

Exit status is 0 on success, 1 when a computation or suite fails and 2 for
usage errors.  ``EULERSERIES_PRECISION`` overrides the default precision.
"""
from __future__ import annotations

import argparse
import io
import os
import sys
import time

from .catalog import METHODS, REGISTRY, evaluate_constant, get_entry, list_constants
from .verify import SUITES

ALIASES = {
    "somos": "somos_t",
    "glaisher": "glaisher_logA",
    "catalan": "catalan_over_pi",
    "zeta2": "zeta_prime_2_over_pi2",
    "word": "word_constant",
    "log_gamma": "log_gamma_1_over_B",
}


class UsageError(Exception):
    pass


def _default_precision() -> int:
    env = os.environ.get("EULERSERIES_PRECISION")
    if env is None:
        return 20
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"EULERSERIES_PRECISION must be an integer, got {env!r}") from None


def _int_list(text: str) -> list[int]:
    try:
        vals = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="eulerseries", description="Rational series for generalized Euler constants.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("constant", help="catalog name (see `eulerseries list`)")
        sp.add_argument("--base", type=int, default=2)
        sp.add_argument("--prec", type=int, default=None, help="decimal digits (6..1000)")
        sp.add_argument("--t", type=int, default=None, help="Somos parameter t")
        sp.add_argument("--b", type=int, default=None, help="argument of log_b")
        sp.add_argument("--word", default=None, help="word for word_constant")
        sp.add_argument("--folded", action="store_true", help="use the B = 2 folded form")
        sp.add_argument("--workers", type=int, default=1)
        sp.add_argument("--out", default=None, help="also write the output to this file")

    c = sub.add_parser("compute", help="evaluate one constant")
    common(c)
    c.add_argument("--terms", type=int, default=10**4)
    c.add_argument("--method", choices=METHODS, default=None)
    c.add_argument("--csv", action="store_true")
    c.add_argument("--checkpoints", type=_int_list, default=None)

    b = sub.add_parser("bench", help="compare methods at several term counts (CSV)")
    common(b)
    b.add_argument("--methods", default="vacca,addison")
    b.add_argument("--checkpoints", type=_int_list, default=[100, 1000, 10000])

    v = sub.add_parser("verify", help="run the exact identity suites")
    v.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    v.add_argument("--out", default=None)

    sub.add_parser("list", help="list the registered constants")
    return p


def _resolve(args) -> tuple[str, int, dict]:
    name = ALIASES.get(args.constant, args.constant)
    if name not in REGISTRY:
        raise UsageError(f"unknown constant {args.constant!r}; known: {', '.join(REGISTRY)}")
    prec = args.prec if args.prec is not None else _default_precision()
    if not 6 <= prec <= 1000:
        raise UsageError(f"precision must lie in [6, 1000] (got {prec})")
    if args.base < 2:
        raise UsageError(f"base must be >= 2 (got {args.base})")
    if args.workers < 1:
        raise UsageError("workers must be >= 1")
    extra = {}
    for key in ("t", "b", "word"):
        val = getattr(args, key)
        if val is not None:
            extra[key] = val
    if args.folded:
        extra["folded"] = True
    for req in get_entry(name).extras:
        if req not in extra:
            raise UsageError(f"{name} needs --{req}")
    return name, prec, extra


def _fmt(x, prec: int) -> str:
    return "" if x is None else x.format(prec)


def run_compute(args, out) -> int:
    name, prec, extra = _resolve(args)
    if args.terms < 1:
        raise UsageError(f"terms must be >= 1 (got {args.terms})")
    value, report = evaluate_constant(name, args.base, args.terms, prec, method=args.method,
                                      checkpoints=args.checkpoints, workers=args.workers, **extra)
    if args.csv:
        out.write("terms,partial,est_tail,ref_error\n")
        for c in report.checkpoints:
            out.write(f"{c.terms},{_fmt(c.partial, prec)},{_fmt(c.estimated_tail, prec)},"
                      f"{_fmt(c.reference_error, prec)}\n")
        return 0
    entry = get_entry(name)
    final = report.final
    method = args.method or entry.default_method
    out.write(f"constant: {name}\n")
    out.write(f"method: {method}\nbase: {args.base}\n")
    if final.terms:
        out.write(f"terms: {final.terms}\n")
    out.write(f"value: {value.format(prec)}\n")
    out.write(f"rounding_error: {float(value.error_bound):.3e}\n")
    out.write(f"estimated_tail: {float(final.estimated_tail.to_fraction()):.3e}\n")
    if final.reference_error is not None:
        out.write(f"reference: {entry.oracle}\n")
        out.write(f"deviation: {float(final.reference_error.to_fraction()):.3e}\n")
    return 0


def run_bench(args, out) -> int:
    name, prec, extra = _resolve(args)
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    entry = get_entry(name)
    for m in methods:
        if m not in entry.methods:
            raise UsageError(f"{name} has no method {m!r}; available: {', '.join(entry.methods)}")
    if any(n < 1 for n in args.checkpoints):
        raise UsageError("checkpoints must be >= 1")
    out.write("method,terms,abs_error,est_tail,seconds\n")
    for m in methods:
        for n in sorted(set(args.checkpoints)):
            t0 = time.perf_counter()
            _, report = evaluate_constant(name, args.base, n, prec, method=m, checkpoints=[n],
                                          workers=args.workers, **extra)
            dt = time.perf_counter() - t0
            c = report.final
            out.write(f"{m},{n},{_fmt(c.reference_error, prec)},{_fmt(c.estimated_tail, prec)},{dt:.3f}\n")
    return 0


def run_verify(args, out) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for n in names:
        passed, detail = SUITES[n]()
        ok &= passed
        out.write(f"{n}: {'PASS' if passed else 'FAIL'} ({detail})\n")
    return 0 if ok else 1


def run_list(args, out) -> int:
    for name, desc, extras, cls in list_constants():
        req = ",".join(extras) or "-"
        out.write(f"{name}\t{req}\t{cls}\t{desc}\n")
    return 0


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    buf = io.StringIO()
    handler = {"compute": run_compute, "bench": run_bench, "verify": run_verify, "list": run_list}[args.command]
    try:
        status = handler(args, buf)
    except (UsageError, ValueError, KeyError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"eulerseries: error: {msg}", file=sys.stderr)
        return 2
    except ArithmeticError as e:
        print(f"eulerseries: computation failed: {e}", file=sys.stderr)
        return 1
    text = buf.getvalue()
    sys.stdout.write(text)
    if getattr(args, "out", None):
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
