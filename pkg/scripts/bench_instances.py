#!/usr/bin/env python3
"""Benchmark the solver on the standard instances and print a results table.

Generated families run out of the box; file-based instances run when their
files are under instances/ (see instances/README.md).  Pass --include-hard
to also attempt the long-running rows (queen8_8 and up); those can take
hours and are not part of the acceptance gate.
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from twsolve import paceio, pipeline
from twsolve.families import mycielski_graph, queen_graph

INSTANCE_DIR = Path(__file__).resolve().parent.parent / "instances"

EASY = [
    ("myciel3", lambda: mycielski_graph(3)),
    ("myciel4", lambda: mycielski_graph(4)),
    ("myciel5", lambda: mycielski_graph(5)),
    ("queen5_5", lambda: queen_graph(5, 5)),
    ("queen6_6", lambda: queen_graph(6, 6)),
    ("queen7_7", lambda: queen_graph(7, 7)),
]
HARD = [
    ("myciel6", lambda: mycielski_graph(6)),
    ("queen8_8", lambda: queen_graph(8, 8)),
]
FILES = [
    "huck", "jean", "anna", "david", "miles250", "miles500",
    "ex007", "ex015", "ex049", "ex055", "ex075", "ex107", "ex113", "ex147",
]


def load_file(name: str):
    for ext, reader in ((".col", paceio.read_col), (".gr", paceio.read_gr)):
        path = INSTANCE_DIR / f"{name}{ext}"
        if path.exists():
            return reader(path.read_text())[0]
    return None


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--include-hard", action="store_true")
    args = parser.parse_args()

    rows = list(EASY) + (HARD if args.include_hard else [])
    print(f"{'instance':<12} {'n':>5} {'m':>6} {'tw':>4} {'time(s)':>9}")
    for name, make in rows:
        g = make()
        t0 = time.monotonic()
        tw, _, _ = pipeline.solve(g, instance=name)
        print(f"{name:<12} {g.n:>5} {g.edge_count:>6} {tw:>4} "
              f"{time.monotonic() - t0:>9.2f}")
    for name in FILES:
        g = load_file(name)
        if g is None:
            print(f"{name:<12} {'-':>5} {'-':>6} {'-':>4} {'missing':>9}")
            continue
        t0 = time.monotonic()
        tw, _, _ = pipeline.solve(g, instance=name)
        print(f"{name:<12} {g.n:>5} {g.edge_count:>6} {tw:>4} "
              f"{time.monotonic() - t0:>9.2f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
