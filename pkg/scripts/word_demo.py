#!/usr/bin/env python3
"""Decompose random member matrices and show the normal-form words.

Builds matrices by multiplying random generator words, decomposes them
back, and prints matrix, word and a roundtrip checkmark.  A quick visual
sanity pass for the word problem; the real test lives in the suite.

Usage:
    python3 scripts/word_demo.py [--count 10] [--seed 0]
"""

import argparse
import random
import sys

from extmcg import sl2z


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    for _ in range(args.count):
        tokens = []
        gen = rng.choice("VT")
        for _ in range(rng.randrange(1, 7)):
            tokens.append(("V", 1) if gen == "V"
                          else ("T", rng.choice([-3, -2, -1, 1, 2, 3])))
            gen = "T" if gen == "V" else "V"
        w = sl2z.GenWord(tuple(tokens), rng.choice([1, -1]))
        m = sl2z.eval_word(w)
        d = sl2z.decompose(m)
        ok = sl2z.eval_word(d) == m
        print(f"({m.a:5d} {m.b:5d} / {m.c:5d} {m.d:5d})  =  {str(d):28}"
              f"  roundtrip {'ok' if ok else 'FAIL'}")
        if not ok:
            return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
