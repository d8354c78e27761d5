"""Command-line front end: ``pbwt encode|decode|verify|gen|bench``.

Exit codes: 0 success, 2 malformed input, 3 not a valid pBWT.
"""

from __future__ import annotations

import argparse
import csv
import random
import sys

from .codec import build_pbwt
from .core import Mode
from .errors import MalformedInput, NotAPbwt, PbwtError
from .invert import DEFAULT_PARAM_NAMES
from .textio import format_pbwt, format_pstring, parse_param_names, parse_pbwt, parse_pstring
from .workloads import INVERTERS, random_pstring, run_bench

EXIT_OK = 0
EXIT_MALFORMED = 2
EXIT_NOT_PBWT = 3


class _Abort(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _read_lines(path):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return text.splitlines()


def _open_out(path):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


def _write_lines(path, lines):
    out, close = _open_out(path)
    try:
        for line in lines:
            out.write(line + "\n")
    finally:
        if close:
            out.close()


def _mode(args) -> Mode:
    return Mode(args.mode)


def cmd_encode(args) -> int:
    mode = _mode(args)
    out = []
    for lineno, line in enumerate(_read_lines(args.input), 1):
        if args.append_terminator:
            line = line + "$"
        try:
            T = parse_pstring(line, args.param_chars)
            if not T.is_terminated():
                raise MalformedInput("line must end with a single '$' (see --append-terminator)")
            out.append(format_pbwt(build_pbwt(T, mode)))
        except PbwtError as exc:
            raise _Abort(EXIT_MALFORMED, f"line {lineno}: {exc}") from None
    _write_lines(args.output, out)
    return EXIT_OK


def cmd_decode(args) -> int:
    mode = _mode(args)
    names = parse_param_names(args.param_names) if args.param_names else DEFAULT_PARAM_NAMES
    invert = INVERTERS[args.algo]
    out = []
    for lineno, line in enumerate(_read_lines(args.input), 1):
        try:
            L = parse_pbwt(line, mode)
            out.append(format_pstring(invert(L, names)))
        except NotAPbwt as exc:
            raise _Abort(EXIT_NOT_PBWT, f"line {lineno}: not a pBWT: {exc}") from None
        except PbwtError as exc:
            raise _Abort(EXIT_MALFORMED, f"line {lineno}: {exc}") from None
    _write_lines(args.output, out)
    return EXIT_OK


def verify_line(line: str, mode: Mode) -> tuple[bool, str]:
    """Decode with both inverters, re-encode, compare. Returns (ok, label)."""
    try:
        L = parse_pbwt(line, mode)
    except PbwtError as exc:
        return False, f"FAIL(parse): {exc}"
    decoded = {}
    for algo in ("naive", "fast"):
        try:
            decoded[algo] = INVERTERS[algo](L)
        except PbwtError as exc:
            return False, f"FAIL(not-pbwt): {algo}: {exc}"
    if decoded["naive"].symbols != decoded["fast"].symbols:
        return False, (f"FAIL(disagree): naive={format_pstring(decoded['naive'])} "
                       f"fast={format_pstring(decoded['fast'])}")
    T = decoded["fast"]
    again = build_pbwt(T, mode)
    if again.tokens != L.tokens:
        return False, f"FAIL(mismatch): {format_pstring(T)} re-encodes to {format_pbwt(again)}"
    return True, "PASS"


def cmd_verify(args) -> int:
    mode = _mode(args)
    ok_all = True
    for lineno, line in enumerate(_read_lines(args.input), 1):
        ok, label = verify_line(line, mode)
        ok_all &= ok
        print(f"line {lineno}: {label}")
    return EXIT_OK if ok_all else 1


def cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    try:
        lines = [
            format_pstring(random_pstring(args.n, args.sigma_s, args.sigma_p, rng))
            for _ in range(args.count)
        ]
    except ValueError as exc:
        raise _Abort(EXIT_MALFORMED, str(exc)) from None
    _write_lines(args.output, lines)
    return EXIT_OK


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def cmd_bench(args) -> int:
    algos = ["naive", "fast"] if args.algo == "both" else [args.algo]
    rows = run_bench(algos, args.n_list, args.trials, args.workload, args.seed, _mode(args))
    out, close = _open_out(args.output)
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n", "algo", "seconds"])
        for n, algo, secs in rows:
            writer.writerow([n, algo, f"{secs:.6f}"])
    finally:
        if close:
            out.close()
    if args.plot:
        from .plotting import plot_bench

        plot_bench(rows, args.plot, title=f"pBWT inversion ({args.workload} input)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pbwt", description="Parameterized BWT codec.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_mode(p):
        p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.PREV0.value,
                       help="encoding that orders rotations (default: prev0)")

    p = sub.add_parser("encode", help="p-string file -> pBWT file")
    p.add_argument("input", help="input file, or - for stdin")
    p.add_argument("-o", "--output", help="output file (default: stdout)")
    add_mode(p)
    p.add_argument("--append-terminator", action="store_true",
                   help="append '$' to every line before encoding")
    p.add_argument("--param-chars", default=None,
                   help="characters to treat as parameters (default: lowercase letters)")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="pBWT file -> p-string file")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    add_mode(p)
    p.add_argument("--algo", choices=sorted(INVERTERS), default="fast")
    p.add_argument("--param-names", default=None,
                   help="parameter names in order, e.g. xyz or x,y,z (default: a-z)")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("verify", help="decode with both algorithms and re-encode")
    p.add_argument("input")
    add_mode(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="random terminator-anchored p-strings")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sigma-s", type=int, default=2, help="statics including '$'")
    p.add_argument("--sigma-p", type=int, default=3)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time the inverters, CSV out")
    p.add_argument("--algo", choices=["naive", "fast", "both"], default="fast")
    p.add_argument("--n-list", type=_int_list, default=[256, 512])
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--workload", choices=["unary", "random"], default="unary")
    p.add_argument("--seed", type=int, default=0)
    add_mode(p)
    p.add_argument("-o", "--output", help="CSV file (default: stdout)")
    p.add_argument("--plot", default=None, help="also render a log-log figure to this path")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Abort as exc:
        print(f"pbwt {args.command}: {exc}", file=sys.stderr)
        return exc.code
    except MalformedInput as exc:
        print(f"pbwt {args.command}: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except OSError as exc:
        print(f"pbwt {args.command}: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
