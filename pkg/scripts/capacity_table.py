"""Brute-force capacity of every feasible (scheme, N, method); prints a table.

    python scripts/capacity_table.py
"""
import time

from densecoding import Method, Scheme, SchemeConfig, capacity
from densecoding.verification import FEASIBILITY


def main():
    print(f"{'scheme':>8} {'N':>3} {'method':>9} {'messages':>9} {'bits':>5} {'2^N':>6} {'max_off':>9} {'sec':>6}")
    for scheme in Scheme:
        for method in Method:
            for n in range(1, FEASIBILITY[(scheme, method.value)] + 1):
                start = time.perf_counter()
                r = capacity(SchemeConfig(scheme, n), method)
                off = "-" if r.max_off_diagonal is None else f"{r.max_off_diagonal:.1e}"
                print(f"{scheme.value:>8} {n:>3} {method.value:>9} {r.message_count:>9} "
                      f"{r.bits:>5g} {2**n:>6} {off:>9} {time.perf_counter() - start:>6.2f}")


if __name__ == "__main__":
    main()
