"""Erase two colour classes of the 18x18 four-colouring and recomplete them by SAT.

    python scripts/resplit_d4.py [--keep 1,2] [--dimacs out.cnf]
"""

import argparse
import time

from c4free import ramsey, sat, satenc


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--keep", default="1,2", help="colour classes left in place")
    ap.add_argument("--dimacs", help="also write the CNF here for an external solver")
    ap.add_argument("--budget", type=int, default=None)
    args = ap.parse_args()
    d = ramsey.registry().d_coloring
    keep = {int(x) for x in args.keep.split(",")}
    free = [c for c in range(1, d.k + 1) if c not in keep]
    partial = d.erase(free)
    f, vm = satenc.encode_completion(partial, free)
    print(f"vars={f.num_vars} clauses={len(f.clauses)} free_colors={free}")
    if args.dimacs:
        with open(args.dimacs, "w") as fh:
            fh.write(satenc.write_dimacs(f))
    t = time.perf_counter()
    res = sat.solve(f, budget=args.budget)
    print(f"sat={res.sat} conflicts={res.conflicts} decisions={res.decisions} "
          f"secs={time.perf_counter() - t:.1f}")
    if res.sat:
        out = satenc.decode(res.assignment, vm, partial)
        print(ramsey.verify_coloring(out).summary(out.k))
        print("same_as_original", out == d)


if __name__ == "__main__":
    main()
