"""Sweep r_p / r_m over N and gate-time ratios; write a CSV for plotting.

    python scripts/rate_sweep.py --n-max 200 -o rate_sweep.csv
"""
import argparse
import csv
import sys

from densecoding import Scheme, TimingModel, erroneous_rate, rate_eq1, rate_ratio_bound, rate_ratio_limit

TIME_RATIOS = [0.25, 0.5, 1.0, 2.0, 4.0]  # t_c / t_h


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=100)
    ap.add_argument("--th", type=float, default=1.0)
    ap.add_argument("-o", "--output", default=None)
    args = ap.parse_args()

    out = open(args.output, "w", newline="", encoding="utf-8") if args.output else sys.stdout
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["tc_over_th", "N", "r_p", "r_m", "ratio", "ratio_limit", "ratio_sup", "erroneous_over_r_p"])
    for k in TIME_RATIOS:
        t = TimingModel(args.th, args.th * k)
        for n in range(1, args.n_max + 1):
            rp, rm = rate_eq1(Scheme.PAIRWISE, n, t), rate_eq1(Scheme.MAX_ENTANGLED, n, t)
            wrong = erroneous_rate(n, t) / rp if n <= 1023 else ""
            w.writerow([k, n, f"{rp:.12g}", f"{rm:.12g}", f"{rp / rm:.12g}",
                        f"{rate_ratio_limit(t):.12g}", f"{rate_ratio_bound(t):.12g}",
                        f"{wrong:.12g}" if wrong != "" else ""])
    if out is not sys.stdout:
        out.close()


if __name__ == "__main__":
    main()
