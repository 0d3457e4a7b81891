"""Print the machine report of every command over the bundled corpus (used for determinism checks)."""

import argparse
import sys

from famring.corpus import corpus_names, load_corpus
from famring.report import corpus_report


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("names", nargs="*", help="bundled example names (default: all)")
    ap.add_argument("--witness-bound", type=int, default=3)
    args = ap.parse_args()
    sys.stdout.write(corpus_report(args.names or corpus_names(), load_corpus, args.witness_bound))


if __name__ == "__main__":
    main()
