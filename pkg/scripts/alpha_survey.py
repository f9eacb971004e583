"""Full check suite for every monotone alpha on the path example's chain of labels."""

import argparse
import itertools

from cellua import AlphaConstruction, builtin, full_report
from cellua.poset import Poset


def chain_alpha(ad, cuts):
    blk, b = {}, 0
    for i, x in enumerate(ad.lambda_tilde):
        if i in cuts:
            b += 1
        blk[x] = f"x{b}"
    pts = [f"x{i}" for i in range(b + 1)]
    return ad.with_alpha(blk, Poset(pts, list(zip(pts, pts[1:]))))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-cuts", type=int, default=2)
    args = ap.parse_args()
    alg, ad = builtin("path-example")
    n = len(ad.lambda_tilde)
    bad = 0
    for k in range(args.max_cuts + 1):
        for cuts in itertools.combinations(range(1, n), k):
            con = AlphaConstruction(alg, chain_alpha(ad, set(cuts)))
            rep = full_report(con)
            bad += not rep.ok
            d = con.dimensions()
            print(f"cuts={list(cuts)} dims={[d[x] for x in d]} checks={len(rep)} "
                  f"{'ok' if rep.ok else 'FAILED ' + rep.failures[0].tag}")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
