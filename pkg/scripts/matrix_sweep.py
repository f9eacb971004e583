"""Dimensions and the full check suite for matrix algebras over a range of n and b."""

import argparse
import time

from cellua import AlphaConstruction, build_matrix_algebra, full_report


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=5)
    args = ap.parse_args()
    print("n,b,A,levi,parabolic,quotient,expected_ok,checks,failed,seconds")
    bad = 0
    for n in range(2, args.max_n + 1):
        for b in range(2, n + 1):
            t = time.perf_counter()
            con = AlphaConstruction(*build_matrix_algebra(n, b))
            d = con.dimensions()
            want = ((b - 1) ** 2 + (n - b + 1) ** 2, (b - 1) * n + (n - b + 1) ** 2, (n - b + 1) ** 2)
            dims_ok = (d["levi"], d["parabolic"], d["quotient"]) == want
            rep = full_report(con)
            failed = len(rep.failures)
            bad += failed + (not dims_ok)
            print(f"{n},{b},{d['A']},{d['levi']},{d['parabolic']},{d['quotient']},{dims_ok},{len(rep)},{failed},"
                  f"{time.perf_counter() - t:.2f}")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
