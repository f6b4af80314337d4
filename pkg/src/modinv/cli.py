"""Command-line front end: ``modinv {jeval,jinv,verify,roundtrip,figure}``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 domain or math error, 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .errors import ModInvError
from .figure import write_svg
from .forward_modular import KLEIN_FACTOR, j_paper
from .inverse_chain import invert_verified
from .report import roundtrip_sweep, verify_table

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_MATH, EXIT_IO = 0, 1, 2, 3, 4

_REAL = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_REAL_RE = re.compile(rf"[+-]?{_REAL}")
_IMAG_RE = re.compile(rf"(?P<re>[+-]?{_REAL})?(?P<sign>[+-])?(?P<im>{_REAL})?i")


def parse_complex(text: str) -> complex:
    """Parse ``real``, ``[real][sign]imag i`` or ``i``; no inner whitespace.

    >>> parse_complex("1.5-2e-3i")
    (1.5-0.002j)
    """
    if _REAL_RE.fullmatch(text):
        return complex(float(text), 0.0)
    m = _IMAG_RE.fullmatch(text)
    if m is None:
        raise ValueError(f"cannot parse complex literal {text!r}")
    re_part, sign, im_part = m.group("re", "sign", "im")
    if re_part is not None and sign is None and im_part is None:
        # "2i" or "-2.5i": the leading number was the imaginary part
        return complex(0.0, float(re_part))
    if re_part is not None and sign is None:
        raise ValueError(f"cannot parse complex literal {text!r}")
    im = float(im_part) if im_part is not None else 1.0
    if sign == "-":
        im = -im
    return complex(float(re_part) if re_part is not None else 0.0, im)


def format_complex(z: complex, digits: int = 17, clean: bool = False) -> str:
    """Format in the grammar accepted by :func:`parse_complex`.

    With ``clean`` a component below ``10**-digits`` of ``|z|`` is dropped.
    """
    re_, im = z.real, z.imag
    if clean:
        cut = abs(z) * 10.0 ** (-digits)
        if abs(im) <= cut:
            im = 0.0
        if abs(re_) <= cut:
            re_ = 0.0
        if im == 0.0:
            return f"{re_ + 0.0:.{digits}g}"
    return f"{re_ + 0.0:.{digits}g}{im + 0.0:+.{digits}g}i"


def _digits(text: str) -> int:
    n = int(text)
    if not 1 <= n <= 17:
        raise argparse.ArgumentTypeError("digits must be in 1..17")
    return n


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _seed(text: str) -> int:
    v = int(text, 0)
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _add_globals(p: argparse.ArgumentParser, suppress: bool) -> None:
    kw = {"default": argparse.SUPPRESS} if suppress else {}
    p.add_argument("--digits", type=_digits, help="significant digits printed (default 12)",
                   **(kw or {"default": 12}))
    p.add_argument("--tol", type=_positive_float, help="relative tolerance (default 1e-9)",
                   **(kw or {"default": 1e-9}))
    p.add_argument("--klein", action="store_true", help="use Klein's normalisation j(i) = 1728",
                   **(kw or {"default": False}))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="modinv", description=__doc__.splitlines()[0])
    _add_globals(parser, suppress=False)
    shared = argparse.ArgumentParser(add_help=False)
    _add_globals(shared, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jeval", parents=[shared], help="evaluate j at tau")
    p.add_argument("tau")

    p = sub.add_parser("jinv", parents=[shared], help="invert j: find tau with j(tau) = x")
    p.add_argument("x")

    p = sub.add_parser("verify", parents=[shared], help="check the 19 special values")
    p.add_argument("--json", metavar="PATH", help="also write the report as JSON")

    p = sub.add_parser("roundtrip", parents=[shared], help="random inversion sweep")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=_seed, default=1)
    p.add_argument("--include-zero", action="store_true", help="replace the first sample by x = 0")

    p = sub.add_parser("figure", parents=[shared], help="write the fundamental-domain SVG")
    p.add_argument("--out", required=True, metavar="PATH")
    return parser


def _err(msg: str) -> None:
    print(f"modinv: {msg}", file=sys.stderr)


def cmd_jeval(args) -> int:
    try:
        tau = parse_complex(args.tau)
    except ValueError as exc:
        _err(str(exc))
        return EXIT_USAGE
    try:
        j = j_paper(tau)
    except (ModInvError, ValueError) as exc:
        _err(f"domain error: {exc}")
        return EXIT_MATH
    if args.klein:
        j *= KLEIN_FACTOR
    print(format_complex(j, args.digits, clean=True))
    return EXIT_OK


def cmd_jinv(args) -> int:
    try:
        x = parse_complex(args.x)
    except ValueError as exc:
        _err(str(exc))
        return EXIT_USAGE
    if args.klein:
        x /= KLEIN_FACTOR
    try:
        res = invert_verified(x, args.tol)
    except ModInvError as exc:
        _err(f"math error: {exc}")
        return EXIT_MATH
    print(f"tau      {format_complex(res.tau, args.digits, clean=True)}")
    print(f"branch   {res.branch_used}")
    print(f"residual {res.residual:.3e}")
    return EXIT_OK


def cmd_verify(args) -> int:
    rows, ascending = verify_table(args.tol)
    scale = KLEIN_FACTOR if args.klein else 1.0
    d = args.digits
    print(f"{'#':>2}  {'label':<16}{'expected':>{d + 8}}{'forward':>{d + 8}}  {'rel_err':>9}  roundtrip  status")
    all_ok = True
    for r in rows:
        ok = r.passed(args.tol)
        all_ok &= ok
        print(
            f"{r.order_index:>2}  {r.label:<16}{r.expected * scale:>{d + 8}.{d}g}"
            f"{r.forward.real * scale:>{d + 8}.{d}g}  {r.rel_err:>9.2e}  "
            f"{'ok' if r.roundtrip_ok else 'FAIL':<9}  {'PASS' if ok else 'FAIL'}"
        )
    n_pass = sum(r.passed(args.tol) for r in rows)
    print(f"rows passed: {n_pass}/{len(rows)} at tol {args.tol:g}")
    print(f"ascending order: {'OK' if ascending else 'VIOLATED'}")
    all_ok &= ascending
    if args.json:
        report = {
            "tol": args.tol,
            "klein": args.klein,
            "rows": [r.as_record() for r in rows],
            "ascending_ok": ascending,
            "all_passed": all_ok,
        }
        if args.klein:
            for rec in report["rows"]:
                for key in ("expected", "forward", "forward_imag"):
                    rec[key] *= scale
        try:
            with open(args.json, "w", encoding="utf-8") as fh:
                json.dump(report, fh, indent=2)
        except OSError as exc:
            _err(f"cannot write {args.json}: {exc}")
            return EXIT_IO
    return EXIT_OK if all_ok else EXIT_FAIL


def cmd_roundtrip(args) -> int:
    if args.samples < 1:
        _err("--samples must be at least 1")
        return EXIT_USAGE
    limit = args.tol * 10.0
    s = roundtrip_sweep(args.samples, args.seed, limit, args.include_zero)
    print(f"samples        {s.samples}")
    print(f"seed           {args.seed}")
    print(f"failures       {s.failures}")
    print(f"max defect     {s.max_defect:.3e}")
    print(f"median defect  {s.median_defect:.3e}")
    print("branches used")
    for branch, count in sorted(s.branch_histogram.items()):
        print(f"  {branch:<8} {count}")
    ok = s.failures == 0 and s.max_defect <= limit
    print(f"verdict        {'PASS' if ok else 'FAIL'} (limit {limit:.1e})")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_figure(args) -> int:
    try:
        n = write_svg(args.out)
    except OSError as exc:
        _err(f"cannot write {args.out}: {exc}")
        return EXIT_IO
    print(f"wrote {args.out} ({n} markers)")
    return EXIT_OK


COMMANDS = {
    "jeval": cmd_jeval,
    "jinv": cmd_jinv,
    "verify": cmd_verify,
    "roundtrip": cmd_roundtrip,
    "figure": cmd_figure,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
