#!/usr/bin/env python3
"""Census of quadratic refinements under the symplectic group.

For each k, enumerates Sp(2k,2), splits all 2^(2k) refinements of the
standard space into orbits, and reports Arf values, orbit sizes and
stabilizer orders.  k = 3 only enumerates the group (the orbit scan at
dimension 6 is skipped; stabilizers there need the full 1.45M elements).

Usage:
    python3 scripts/orbit_census.py [--max-k 2]
"""

import argparse
import sys
import time

from extmcg import f2_forms as ff


def census(k) -> None:
    space = ff.standard_space(k)
    t0 = time.time()
    sp = ff.enumerate_sp(k)
    print(f"k = {k}: |Sp({2 * k},2)| = {len(sp)} "
          f"({time.time() - t0:.2f}s, formula {ff.sp_order(k)})")
    if k > 2:
        return
    seen = set()
    for q in ff.all_refinements(space):
        if q.basis_values in seen:
            continue
        orb = ff.orbit(q)
        seen.update(t.basis_values for t in orb)
        stab = ff.stabilizer(q)
        print(f"  arf {ff.arf(q)}: orbit {len(orb):3d} x stabilizer "
              f"{len(stab):4d} = {len(orb) * len(stab)}")


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=2, choices=(1, 2, 3))
    args = ap.parse_args()
    for k in range(1, args.max_k + 1):
        census(k)
    return 0


if __name__ == "__main__":
    sys.exit(main())
