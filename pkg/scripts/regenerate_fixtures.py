"""Rebuild the packaged extremal two-colorings from scratch.

Every fixture is a two-coloring on one vertex below the corresponding
two-color Ramsey number, certified pattern-free in both colors before it
is written.  "auto" tries a fresh backtracking search first (an
independent re-derivation), falling back to the hardcoded seed if the
node budget runs out; "seed" is deterministic and instant; "search"
fails loudly rather than fall back.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from gallaikit.construct import regenerate_fixtures


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--method", choices=("auto", "seed", "search"), default="auto")
    parser.add_argument("--max-nodes", type=int, default=2_000_000,
                        help="search budget per fixture (default 2M)")
    parser.add_argument("--dest", default=None,
                        help="directory to write into (default: packaged data dir)")
    args = parser.parse_args()

    written = regenerate_fixtures(
        dest=args.dest, method=args.method, max_nodes=args.max_nodes
    )
    for path in written:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
