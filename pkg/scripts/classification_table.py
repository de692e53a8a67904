#!/usr/bin/env python3
"""Print the classification table over a parameter range.

Usage:
    python3 scripts/classification_table.py [--max-p 12] [--json]

Covers unknotted spheres n in 5..9, equal products p = 1..max_p, a few
unequal products, and the adjacent-dimension rows below 2 max_p.
"""

import argparse
import json
import sys

from extmcg import classifier as cf


def families(max_p):
    for n in range(5, 10):
        yield cf.KnotFamily.unknot_sphere(n)
    for p in range(1, max_p + 1):
        yield cf.KnotFamily.equal_product(p)
    for p, q in ((2, 3), (2, 5), (3, 7), (4, 9)):
        if q <= max_p:
            yield cf.KnotFamily.unequal_product(p, q)
    for p in range(9, 2 * max_p + 1):
        if p % 8 == 6:
            yield cf.KnotFamily.adjacent_product(p)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-p", type=int, default=12)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    rows = [cf.classify(f).to_json() for f in families(args.max_p)]
    if args.json:
        json.dump(rows, sys.stdout, indent=1)
        print()
        return 0
    width = max(len(r["manifold"]) for r in rows)
    fmt = f"{{:<{width}}}  {{:<8}} {{:<8}} {{:<8}} {{}}"
    print(fmt.format("manifold", "image", "kernel", "total", "splits"))
    for r in rows:
        print(fmt.format(
            r["manifold"],
            r["image"] or "?",
            r["kernel"] or "?",
            r["total"] or "?",
            {True: "yes", False: "no", None: "?"}[r["splits"]]))
    return 0


if __name__ == "__main__":
    sys.exit(main())
