"""Command line: cellua <verb> [input | --builtin SPEC] [options].

Exit status 0 when every check passes, 1 when a mathematical check fails,
2 for bad input or usage.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .algebra import ClosureError, NotCellularError, verify_cellular
from .alpha import ALGEBRA_NAMES, AlphaConstruction, AssumptionError
from .field import parse_field
from .ingest import InputError, builtin, load
from .modules import LEFT, RIGHT
from .report import Report, fmt_label
from .repth import NonSplitError, UnsupportedCharacteristicError, linkage_partition

VERBS = ("verify", "assumptions", "decomp", "blocks", "alpha", "report")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cellua", description="Cellular algebras with an idempotent split.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("input", nargs="?", help=".cell.json or .quiver.json file")
    p.add_argument("--builtin", help="path-example, path-example:alpha=constant or matrix:n=<n>[,b=<b>]")
    p.add_argument("--field", default="rational", help="rational (default) or fp:<p> with p > dim A")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--out", help="write output here instead of stdout")
    p.add_argument("--algebra", choices=ALGEBRA_NAMES, default="A", help="for decomp")
    p.add_argument("--side", choices=(RIGHT, LEFT), default=RIGHT, help="for decomp")
    p.add_argument("--matrices", help="for report: directory receiving every decomposition matrix as CSV")
    p.add_argument("--threads", type=int, default=None, help="worker cap; overrides CELLUA_THREADS")
    return p


def _load(args):
    if bool(args.input) == bool(args.builtin):
        raise UsageError("give exactly one of an input file or --builtin")
    try:
        field = parse_field(args.field)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.builtin:
        alg, ad = builtin(args.builtin, field)
    else:
        if not os.path.exists(args.input):
            raise InputError(f"no such file: {args.input}")
        alg, ad = load(args.input, field)
    p = alg.field.characteristic
    if p and p <= alg.dim:
        raise InputError(f"fp:{p} is too small: the prime must exceed dim A = {alg.dim}")
    return alg, ad


def _need_alpha(ad):
    if ad is None:
        raise InputError("this input carries no idempotent/alpha data")


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _report_out(rep: Report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rep.to_json(), indent=2) + "\n"
    if fmt == "csv":
        return _csv([("tag", "labels", "result", "detail")]
                    + [(r.tag, r.labels, "PASS" if r.passed else "FAIL", r.detail) for r in rep])
    return rep.text()


def _classes_text(classes, order) -> str:
    cls = sorted(classes, key=lambda c: min(order.index(x) for x in c))
    return " ".join("{" + ",".join(fmt_label(x) for x in sorted(c, key=order.index)) + "}" for c in cls)


def _verify(args, alg, ad):
    rep = verify_cellular(alg)
    return (0 if rep.ok else 1), _report_out(rep, args.format)


def _assumptions(args, alg, ad):
    from .relations import check_condition_C
    _need_alpha(ad)
    con = AlphaConstruction(alg, ad, args.threads)
    rep = Report().extend(con.assumptions)
    if rep.ok:
        cc = check_condition_C(con)
        rep.note("condition C " + ("holds" if cc.holds else "fails: " + cc.witness))
        rep.extend(cc.report)
    return (0 if rep.ok else 1), _report_out(rep, args.format)


def _decomp(args, alg, ad):
    if args.algebra != "A":
        _need_alpha(ad)
    con = AlphaConstruction(alg, ad, args.threads)
    d = con.decomposition(args.algebra, args.side)
    if args.format == "csv":
        return 0, d.to_csv()
    if args.format == "json":
        doc = dict(d.to_json(), algebra=args.algebra, side=args.side)
        return 0, json.dumps(doc, indent=2) + "\n"
    return 0, d.to_text()


def _blocks(args, alg, ad):
    con = AlphaConstruction(alg, ad, args.threads)
    parts = []
    names = [("A", RIGHT)]
    if ad is not None:
        names += [("levi", RIGHT), ("parabolic", RIGHT), ("parabolic", LEFT), ("quotient", RIGHT)]
    for name, side in names:
        d = con.decomposition(name, side)
        parts.append((name, side, linkage_partition(d), list(d.rows)))
    rep = Report()
    if ad is not None:
        from .relations import check_block_relations
        rep = check_block_relations(con)
    code = 0 if rep.ok else 1
    if args.format == "json":
        doc = {"partitions": [{"algebra": n, "side": s,
                               "classes": [[fmt_label(x) for x in sorted(c, key=o.index)]
                                           for c in sorted(cl, key=lambda c: min(o.index(x) for x in c))]}
                              for n, s, cl, o in parts],
               "report": rep.to_json()}
        return code, json.dumps(doc, indent=2) + "\n"
    if args.format == "csv":
        rows = [("algebra", "side", "class", "label")]
        for n, s, cl, o in parts:
            for i, c in enumerate(sorted(cl, key=lambda c: min(o.index(x) for x in c))):
                rows += [(n, s, i, fmt_label(x)) for x in sorted(c, key=o.index)]
        return code, _csv(rows)
    lines = [f"BLOCKS {n} {s} {_classes_text(cl, o)}" for n, s, cl, o in parts]
    return code, "\n".join(lines) + "\n" + rep.text()


def _alpha(args, alg, ad):
    _need_alpha(ad)
    con = AlphaConstruction(alg, ad, args.threads)
    if not con.assumptions.ok:
        return 1, _report_out(con.assumptions, args.format)
    om = con.omega
    dims = con.dimensions()
    if args.format == "json":
        doc = {"dimensions": dims,
               "omega": [fmt_label(x) for x in om.poset],
               "lambda_bar": [fmt_label(x) for x in om.lambda_bar],
               "bases": {n: [{"label": fmt_label(lab), "element": nm}
                             for lab, nm in zip(con.algebra(n).labels, con.algebra(n).names)]
                         for n in ALGEBRA_NAMES}}
        return 0, json.dumps(doc, indent=2) + "\n"
    if args.format == "csv":
        rows = [("algebra", "cell", "row", "col", "element")]
        for n in ALGEBRA_NAMES:
            a = con.algebra(n)
            rows += [(n, fmt_label(lam), s, t, nm) for (lam, s, t), nm in zip(a.labels, a.names)]
        return 0, _csv(rows)
    lines = [f"DIM {n} {dims[n]}" for n in ALGEBRA_NAMES]
    lines.append("OMEGA " + " ".join(fmt_label(x) for x in om.poset))
    lines.append("LAMBDA-BAR " + " ".join(fmt_label(x) for x in om.lambda_bar))
    for n in ALGEBRA_NAMES:
        a = con.algebra(n)
        for lam in a.datum.cell_order():
            elems = [a.names[i] for i, c in enumerate(a.cell_of) if c == lam]
            lines.append(f"BASIS {n} {fmt_label(lam)} {' '.join(elems)}")
    return 0, "\n".join(lines) + "\n"


def _report(args, alg, ad):
    from .relations import full_report
    _need_alpha(ad)
    con = AlphaConstruction(alg, ad, args.threads)
    rep = full_report(con)
    if args.matrices and rep.ok:
        os.makedirs(args.matrices, exist_ok=True)
        for n in ALGEBRA_NAMES:
            for side in (RIGHT, LEFT):
                path = os.path.join(args.matrices, f"{n}-{side}.csv")
                with open(path, "w", encoding="utf-8") as fh:
                    fh.write(con.decomposition(n, side).to_csv())
    return (0 if rep.ok else 1), _report_out(rep, args.format)


HANDLERS = {"verify": _verify, "assumptions": _assumptions, "decomp": _decomp,
            "blocks": _blocks, "alpha": _alpha, "report": _report}


def run(argv) -> tuple[int, str, str]:
    """Exit code, standard output and standard error of one invocation."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        alg, ad = _load(args)
        code, out = HANDLERS[args.verb](args, alg, ad)
    except UsageError as exc:
        return 2, "", f"{parser.format_usage()}cellua: error: {exc}\n"
    except (InputError, UnsupportedCharacteristicError) as exc:
        return 2, "", f"cellua: input error: {exc}\n"
    except (AssumptionError, ClosureError, NotCellularError, NonSplitError) as exc:
        return 1, "", f"cellua: check failed: {exc}\n"
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(out)
        except OSError as exc:
            return 2, "", f"cellua: cannot write {args.out}: {exc.strerror}\n"
        out = ""
    return code, out, ""


def main(argv=None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
