"""Command-line surface: detection, scripted backtracking, generation,
oracle runs, and counter benchmarks with optional rendered figures.

Letters are raw bytes throughout; text inputs are taken verbatim with no
normalization.  Exit codes: 0 success, 1 usage or I/O error, 2 repetition
found under --fail-on-find, 3 generator exhaustion.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .bench import render_figure, run_bench, square_free_word, write_tsv
from .core import exponent_parse
from .dyadic import DyadicDetector
from .generator import POLICIES, GenerationResult, GeneratorConfig, generate
from .oracle import oracle_first_repetition, oracle_unioccurrent
from .ordered import OrderedDetector


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; the contract here is 1
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _read_bytes(path: Optional[str], text: Optional[str]) -> bytes:
    if text is not None:
        return text.encode("utf-8")
    if path is None or path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _run_one(mode: str, e, data: bytes):
    """Feed bytes until detection; returns (report or None, prefix length)."""
    if mode == "dyadic":
        det = DyadicDetector(e)
        unwrap = lambda st: st.report
    else:
        det = OrderedDetector(e)
        unwrap = lambda st: st
    n = 0
    for b in data:
        n += 1
        st = det.read(b)
        if st is not None:
            return unwrap(st), n
    return None, len(data)


def _cmd_detect(args: argparse.Namespace) -> int:
    if args.text is not None and args.file is not None:
        print("detect: give FILE or --text, not both", file=sys.stderr)
        return 1
    e = exponent_parse(args.exponent)
    data = _read_bytes(args.file, args.text)
    modes = ("dyadic", "ordered") if args.mode == "both" else (args.mode,)
    outcomes = [_run_one(mode, e, data) for mode in modes]
    if len(outcomes) == 2 and outcomes[0] != outcomes[1]:
        print(f"detect: mode disagreement: dyadic={outcomes[0]} "
              f"ordered={outcomes[1]}", file=sys.stderr)
        return 1
    report, length = outcomes[0]
    if report is None:
        print(f"FREE length={length}")
        return 0
    print(f"FOUND prefix={report.end} start={report.start} "
          f"period={report.period}")
    return 2 if args.fail_on_find else 0


def _parse_script_letter(tok: str) -> int:
    if tok.lower().startswith("0x"):
        value = int(tok, 16)
        if not 0 <= value <= 255:
            raise ValueError(f"byte {tok} out of range")
        return value
    if len(tok) == 1 and ord(tok) <= 255:
        return ord(tok)
    raise ValueError(f"cannot read letter {tok!r} (use +0xNN for raw bytes)")


def _cmd_script(args: argparse.Namespace) -> int:
    e = exponent_parse(args.exponent)
    with open(args.file, "r", encoding="utf-8") as fh:
        lines = fh.readlines()
    det = DyadicDetector(e)
    out = sys.stdout
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(None, 1)
        if len(parts) > 1 and not parts[1].startswith("#"):
            print(f"line {lineno}: trailing junk {parts[1]!r}", file=sys.stderr)
            return 1
        op = parts[0]
        if op == "-":
            try:
                det.backtrack()
            except IndexError:
                print(f"line {lineno}: backtrack underflow", file=sys.stderr)
                return 1
        elif op.startswith("+") and len(op) > 1:
            try:
                det.read(_parse_script_letter(op[1:]))
            except ValueError as exc:
                print(f"line {lineno}: {exc}", file=sys.stderr)
                return 1
        else:
            print(f"line {lineno}: cannot parse {op!r}", file=sys.stderr)
            return 1
        # reads after a detection are skipped, but still lengthen the
        # text the caller thinks it has built
        n = len(det.text) + det.skipped_reads
        status = det.status
        if status is None:
            out.write(f"n={n} FREE\n")
        else:
            rep = status.report
            out.write(f"n={n} FOUND start={rep.start} period={rep.period}\n")
    return 0


def _cmd_generate(args: argparse.Namespace) -> int:
    e = exponent_parse(args.exponent)
    alphabet = list(args.alphabet.encode("utf-8"))
    cfg = GeneratorConfig(e, alphabet, args.length, args.seed,
                          args.max_steps, args.policy)
    result: GenerationResult = generate(cfg)
    sys.stdout.buffer.write(bytes(result.word) + b"\n")
    sys.stdout.buffer.flush()
    if result.exhausted:
        print(f"generate: exhausted after {result.steps} steps at "
              f"length {len(result)}", file=sys.stderr)
        return 3
    return 0


def _cmd_unioccurrent(args: argparse.Namespace) -> int:
    data = _read_bytes(args.file, None)
    for t in oracle_unioccurrent(list(data)):
        print(t)
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    e = exponent_parse(args.exponent)
    data = _read_bytes(args.file, None)
    res = oracle_first_repetition(list(data), e)
    if res is None:
        print(f"FREE length={len(data)}")
        return 0
    print(f"FOUND prefix={res.first_prefix} start={res.start} "
          f"period={res.period}")
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    e = exponent_parse(args.exponent)
    sizes = sorted({int(tok) for tok in args.sizes.split(",") if tok.strip()})
    if not sizes or sizes[0] < 1:
        print("bench: sizes must be positive integers", file=sys.stderr)
        return 1
    modes = ("dyadic", "ordered") if args.mode == "both" else (args.mode,)
    word = square_free_word(sizes[-1])
    rows = []
    for mode in modes:
        rows.extend(run_bench(e, sizes, mode, text=word))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            write_tsv(rows, fh)
    else:
        write_tsv(rows, sys.stdout)
    figure = args.figure
    if figure is None and args.out:
        base = args.out[:-4] if args.out.endswith(".tsv") else args.out
        figure = base + ".png"
    if figure:
        render_figure(rows, figure)
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="repfree",
                     description="Online detection of repetitions of "
                                 "exponent >= e, with backtracking.")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    d = sub.add_parser("detect", help="stream input through a detector")
    d.add_argument("-e", "--exponent", required=True,
                   help="rational exponent, N or N/D, must exceed 1")
    d.add_argument("--mode", choices=("dyadic", "ordered", "both"),
                   default="both", help="detector to run (default: both)")
    d.add_argument("--fail-on-find", action="store_true",
                   help="exit 2 when a repetition is found")
    d.add_argument("--text", help="detect on this string instead of a file")
    d.add_argument("file", nargs="?", help="input file (default: stdin)")
    d.set_defaults(func=_cmd_detect)

    s = sub.add_parser("script", help="run a read/backtrack op script")
    s.add_argument("-e", "--exponent", required=True)
    s.add_argument("file", help="script: one op per line, +X / +0xNN / -")
    s.set_defaults(func=_cmd_script)

    g = sub.add_parser("generate", help="random e-repetition-free word")
    g.add_argument("-e", "--exponent", required=True)
    g.add_argument("--alphabet", required=True, help="letters to draw from")
    g.add_argument("--length", required=True, type=int)
    g.add_argument("--seed", required=True, type=int)
    g.add_argument("--max-steps", type=int, default=1_000_000,
                   help="letter placement attempts before giving up")
    g.add_argument("--policy", choices=POLICIES, default="retry")
    g.set_defaults(func=_cmd_generate)

    u = sub.add_parser("unioccurrent",
                       help="shortest unioccurrent suffix length per prefix")
    u.add_argument("file", nargs="?", help="input file (default: stdin)")
    u.set_defaults(func=_cmd_unioccurrent)

    o = sub.add_parser("oracle", help="brute-force first repetition")
    o.add_argument("-e", "--exponent", required=True)
    o.add_argument("file", nargs="?", help="input file (default: stdin)")
    o.set_defaults(func=_cmd_oracle)

    b = sub.add_parser("bench", help="op counters over growing inputs")
    b.add_argument("-e", "--exponent", required=True)
    b.add_argument("--sizes", required=True,
                   help="comma-separated prefix lengths")
    b.add_argument("--mode", choices=("dyadic", "ordered", "both"),
                   default="both")
    b.add_argument("--out", help="write TSV here instead of stdout")
    b.add_argument("--figure",
                   help="render ops-per-letter to this image "
                        "(default: alongside --out)")
    b.set_defaults(func=_cmd_bench)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"repfree: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"repfree: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
