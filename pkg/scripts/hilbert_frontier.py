#!/usr/bin/env python3
"""Search for minimal models of the Hilbert-generalization classes.

For each pi-/pimpl- class, finds the smallest proper example up to the given
size bound and prints it (or reports absence).  With the default bound this
reproduces the boundary fact that proper pi-*RML** algebras start at size 6.
"""

import argparse
import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from implalg.classes import REGISTRY
from implalg.io import emit_table
from implalg.search import find_minimal_model


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-size", type=int, default=5)
    parser.add_argument("--show-tables", action="store_true")
    args = parser.parse_args()

    targets = [d.id for d in REGISTRY.defs
               if (d.id.startswith("pi-") or d.id.startswith("pimpl-"))
               and d.proper_forbidden is not None]
    for cid in targets:
        t0 = time.perf_counter()
        table = find_minimal_model(cid, args.max_size, proper=True)
        dt = time.perf_counter() - t0
        if table is None:
            print(f"proper {cid:<18} none up to size {args.max_size}  ({dt:.1f}s)")
        else:
            print(f"proper {cid:<18} minimum size {table.size}  ({dt:.1f}s)")
            if args.show_tables:
                print("  " + emit_table(table, "text").replace("\n", "\n  ").rstrip())
    return 0


if __name__ == "__main__":
    sys.exit(main())
