"""Command-line interface: ``famring {limit,verify,index,counts,dump-table} FILE``.

FILE is a path to a ``.diagram`` file or the name of a bundled example
(``famring limit sl2z``).  Exit status: 0 when every check passes,
1 on a check failure, 2 on an input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .corpus import corpus_dir
from .diagram import DiagramError
from .fileformat import DiagramFile, ParseError, load
from .groups import GroupError
from .presentation import PresentationError
from .report import (
    Report,
    counts_report,
    index_report,
    limit_report,
    render_machine,
    render_text,
    table_report,
    verify_report,
)

EXIT_OK, EXIT_CHECK, EXIT_INPUT = 0, 1, 2


def resolve(target: str) -> Path:
    p = Path(target)
    if p.exists():
        return p
    bundled = corpus_dir() / f"{target}.diagram"
    if bundled.exists():
        return bundled
    raise FileNotFoundError(f"no such file or bundled example: {target}")


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="famring", description="Limits of representation rings over families of finite subgroups.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("file", help="a .diagram file or the name of a bundled example")
        p.add_argument("--format", choices=("text", "machine"), default="text")

    p = sub.add_parser("limit", help="compute the stable-element ring")
    common(p)
    p.add_argument("--field", choices=("Q", "C"), default="Q")
    p.add_argument("--checks", action="store_true", help="run rank, axiom, meta, image and presentation checks")
    p.add_argument("--witness-bound", type=_positive, default=3)

    p = sub.add_parser("verify", help="verify a named presentation")
    common(p)
    p.add_argument("presentation")
    p.add_argument("--field", choices=("Q", "C"), default=None, help="override the presentation's field")
    p.add_argument("--witness-bound", type=_positive, default=3)

    p = sub.add_parser("index", help="index of the trivial tuple, rational Euler characteristic, integrality")
    common(p)
    p.add_argument("--subgroup-index", type=_positive, default=None)

    p = sub.add_parser("counts", help="fused class counts and the tree-group sequence")
    common(p)

    p = sub.add_parser("dump-table", help="print character tables of the file's groups")
    common(p)
    p.add_argument("--group", default=None)

    sub.add_parser("list", help="list the bundled examples")
    return ap


def run(args: argparse.Namespace) -> Report:
    f: DiagramFile = load(resolve(args.file))
    if args.command == "limit":
        return limit_report(f, args.field, args.checks, args.witness_bound)
    if args.command == "verify":
        return verify_report(f, args.presentation, args.witness_bound, args.field)
    if args.command == "index":
        return index_report(f, args.subgroup_index)
    if args.command == "counts":
        return counts_report(f)
    return table_report(f, args.group)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "list":
        for p in sorted(corpus_dir().glob("*.diagram")):
            print(p.stem)
        return EXIT_OK
    try:
        report = run(args)
    except (ParseError, DiagramError, GroupError, PresentationError, FileNotFoundError, KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"famring: error: {msg}", file=sys.stderr)
        return EXIT_INPUT
    out = render_machine(report) if args.format == "machine" else render_text(report)
    sys.stdout.write(out)
    return EXIT_OK if report.passed else EXIT_CHECK


if __name__ == "__main__":
    sys.exit(main())
