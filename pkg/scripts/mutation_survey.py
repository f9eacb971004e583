"""How often a single structure-constant change slips past the cellular checks."""

import argparse
import os
import random
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "tests"))

from cellua import builtin, verify_assumptions, verify_cellular  # noqa: E402
from oracles import is_associative, mutate  # noqa: E402


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seed", type=int, default=2024)
    args = ap.parse_args()
    alg, ad = builtin("path-example")
    rng = random.Random(args.seed)
    caught, tags, accepted = 0, {}, []
    for _ in range(args.count):
        mut, info = mutate(alg, rng)
        rep = verify_cellular(mut)
        if rep.ok:
            rep = verify_assumptions(mut, ad)
        if rep.ok:
            accepted.append((info, is_associative(mut)))
            continue
        caught += 1
        first = rep.failures[0].tag
        tags[first] = tags.get(first, 0) + 1
    print(f"{caught}/{args.count} mutations caught (seed {args.seed})")
    for t, c in sorted(tags.items(), key=lambda kv: -kv[1]):
        print(f"  first failure {t}: {c}")
    for (i, j, k, d), assoc in accepted:
        print(f"  accepted: {alg.names[i]}*{alg.names[j]} += {d}*{alg.names[k]} (associative: {assoc})")


if __name__ == "__main__":
    main()
