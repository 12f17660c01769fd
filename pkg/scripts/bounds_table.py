"""Bounds on z(n) for n up to 21 and on b_k(2) for small k."""

from c4free import ramsey, zar


def main():
    print(f"{'n':>3} {'table':>6} {'lower':>6} {'upper':>6} {'kst':>5}  source")
    for n in range(1, 22):
        r = zar.bound_report(n)
        print(f"{n:>3} {zar.table1(n):>6} {r.lower:>6} {r.best:>6} {r.kst:>5}  {r.lower_source}")
    print()
    print(f"{'k':>3} {'lower':>6} {'upper':>6}  source")
    for k in range(2, 11):
        lo, src = ramsey.bk2_lower_report(k)
        print(f"{k:>3} {lo:>6} {ramsey.bk2_upper(k):>6}  {src}")


if __name__ == "__main__":
    main()
