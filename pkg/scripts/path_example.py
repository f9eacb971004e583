"""Print every computed table for the five-vertex path example."""

import argparse

from cellua import AlphaConstruction, builtin, full_report, parse_field
from cellua.alpha import ALGEBRA_NAMES
from cellua.report import fmt_label


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--field", default="rational")
    ap.add_argument("--alpha", choices=("given", "constant"), default="given")
    args = ap.parse_args()
    spec = "path-example" if args.alpha == "given" else "path-example:alpha=constant"
    con = AlphaConstruction(*builtin(spec, parse_field(args.field)))
    for name, dim in con.dimensions().items():
        print(f"dim {name} = {dim}")
    print("doubled labels:", " ".join(fmt_label(x) for x in con.omega.poset))
    for name in ALGEBRA_NAMES:
        for side in ("right", "left"):
            print(f"\n{name} ({side})")
            print(con.decomposition(name, side).to_text(), end="")
    rep = full_report(con)
    print(f"\n{sum(r.passed for r in rep)}/{len(rep)} checks pass")
    for n in rep.notes:
        print("NOTE", n)
    raise SystemExit(0 if rep.ok else 1)


if __name__ == "__main__":
    main()
