"""Regenerate the bundled .diagram files from famring.corpus."""

import argparse
from pathlib import Path

from famring.corpus import write_corpus


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=None, help="target directory (default: the package corpus)")
    args = ap.parse_args()
    for path in write_corpus(args.out):
        print(path)


if __name__ == "__main__":
    main()
