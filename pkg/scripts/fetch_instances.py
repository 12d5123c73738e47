#!/usr/bin/env python3
"""Download the benchmark instance files the acceptance suite reads from
instances/.  Needs network access; prints what it could and could not get."""

import sys
import urllib.error
import urllib.request
from pathlib import Path

INSTANCE_DIR = Path(__file__).resolve().parent.parent / "instances"

DIMACS = ["huck", "jean", "anna", "david", "miles250", "miles500"]
PACE = ["ex007", "ex015", "ex049", "ex055", "ex075", "ex107", "ex113", "ex147"]

DIMACS_URLS = [
    "https://mat.tepper.cmu.edu/COLOR/instances/{name}.col",
    "https://raw.githubusercontent.com/dynaroars/npbench/master/instances/coloring/{name}.col",
]
PACE_URLS = [
    "https://raw.githubusercontent.com/PACE-challenge/Treewidth-PACE-2017-instances/master/gr/exact/{name}.gr",
]


def fetch(name: str, urls: list[str], suffix: str) -> bool:
    target = INSTANCE_DIR / f"{name}{suffix}"
    if target.exists():
        print(f"  {target.name}: already present")
        return True
    for template in urls:
        url = template.format(name=name)
        try:
            with urllib.request.urlopen(url, timeout=30) as resp:
                data = resp.read()
            target.write_bytes(data)
            print(f"  {target.name}: fetched from {url}")
            return True
        except (urllib.error.URLError, OSError) as exc:
            print(f"  {target.name}: {url} failed ({exc})")
    return False


def main() -> int:
    INSTANCE_DIR.mkdir(exist_ok=True)
    missing = []
    print("DIMACS coloring instances:")
    for name in DIMACS:
        if not fetch(name, DIMACS_URLS, ".col"):
            missing.append(name)
    print("PACE 2017 public instances:")
    for name in PACE:
        if not fetch(name, PACE_URLS, ".gr"):
            missing.append(name)
    if missing:
        print(f"could not fetch: {', '.join(missing)}")
        print("see instances/README.md for alternative sources")
        return 1
    print("all instance files present")
    return 0


if __name__ == "__main__":
    sys.exit(main())
