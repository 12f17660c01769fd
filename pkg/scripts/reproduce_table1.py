"""Recompute z(n) by exact search and compare with the published table.

    python scripts/reproduce_table1.py --max-n 12 [--threads 2]
"""

import argparse
import time

from c4free import exact, zar
from c4free.bigraph import is_c4_free


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()
    print(f"{'n':>3} {'z_exact':>8} {'table':>6} {'kst':>5} {'best':>5} {'secs':>8}")
    mismatches = 0
    for n in range(1, args.max_n + 1):
        t = time.perf_counter()
        value, witness = exact.z_exact(n, n, threads=args.threads)
        dt = time.perf_counter() - t
        assert is_c4_free(witness) and witness.edge_count == value
        known = zar.table1(n)
        mismatches += value != known
        print(f"{n:>3} {value:>8} {known:>6} {zar.kst_bound(n, n):>5} {zar.z_upper_best(n):>5} {dt:>8.2f}",
              flush=True)
    raise SystemExit(1 if mismatches else 0)


if __name__ == "__main__":
    main()
