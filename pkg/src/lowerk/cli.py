"""Command-line front end.

    python -m lowerk compute "[3,5,3]" --format text
    python -m lowerk stabilizers "[5,3,5]"
    python -m lowerk oracle C2xA5
    python -m lowerk verify --all
    python -m lowerk tables --which 7
    python -m lowerk list

Exit status: 0 success, 1 verification failure, 2 usage or input error,
3 computation error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import defaultdict

from . import catalog
from .assembly import DEGREES, JSON_KEYS, assemble
from .coxeter import CoxeterDiagram, parse_diagram, parse_matrix_text, vertex_profile
from .errors import ComputationError, InputError
from .finite_groups import catalog_types, ktheory_of, oracle_report
from .geodesics import cusp_groups, enumerate_type1, render_multiset
from .groups import FiniteGroupType

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_COMPUTE = 0, 1, 2, 3


def _diagram(args) -> CoxeterDiagram:
    if args.matrix:
        try:
            with open(args.matrix) as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read matrix file: {exc}") from None
        return CoxeterDiagram(parse_matrix_text(text), args.name or args.matrix)
    if not args.name:
        raise InputError("give a group name or --matrix PATH")
    return parse_diagram(args.name)


def cmd_compute(args, out):
    result = assemble(_diagram(args))
    if not args.exact:
        result = result.normalized()
    if args.format == "json":
        json.dump(result.to_json(), out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["group"] + [JSON_KEYS[n] for n in DEGREES])
        w.writerow([result.group] + [result[n].render(args.exact) for n in DEGREES])
    else:
        out.write(result.render(args.exact) + "\n")
    return EXIT_OK


def cmd_stabilizers(args, out):
    d = _diagram(args)
    descs = enumerate_type1(d)
    for desc in descs:
        out.write(f"{desc.render()}\t{desc.canonical}\n")
    if not descs:
        out.write("no type-I stabilizers\n")
    out.write(f"cusps: {render_multiset(cusp_groups(d))}\n")
    return EXIT_OK


def cmd_oracle(args, out):
    t = FiniteGroupType.parse(args.type)
    report = oracle_report(t)
    try:
        rec = ktheory_of(t)
        report["curated"] = {
            "Wh": rec.wh.to_json(),
            "K0t": rec.k0_tilde.to_json(),
            "Km1": rec.k_minus1.to_json(),
            "source": rec.source,
        }
    except InputError:
        report["curated"] = None
    json.dump(report, out, indent=2)
    out.write("\n")
    return EXIT_OK


def cmd_verify(args, out):
    if not args.all and not args.names:
        raise InputError("verify needs --all or at least one group name")
    selection = None if args.all else [catalog.lookup(n) for n in args.names]
    report = catalog.verify_all(selection)
    for r in report.results:
        if r.passed:
            if args.verbose:
                out.write(f"PASS {r.name}\n")
        else:
            out.write(f"FAIL {r.name}: {r.mismatch}\n")
    out.write(report.summary() + "\n")
    return EXIT_OK if report.ok else EXIT_VERIFY


def _table_rows(which, golden):
    entries = catalog.entries()
    if which in (2, 3, 4):
        ideal = which - 2
        for e in entries:
            if e.ideal_vertices != ideal:
                continue
            if golden:
                stabs = catalog.format_multiset(e.expected_stabilizers)
                cusps = catalog.format_multiset(e.expected_cusps)
            else:
                d = e.diagram
                stabs = render_multiset(x.render() for x in enumerate_type1(d))
                cusps = render_multiset(cusp_groups(d))
            yield [e.name, stabs] + ([cusps] if ideal else [])
    elif which == 5:
        for t in catalog_types():
            rec = ktheory_of(t)
            yield [str(t), rec.k_minus1.render(), rec.k0_tilde.render(), rec.wh.render()]
    elif which in (6, 7):
        for e in entries:
            if (e.ideal_vertices == 0) != (which == 6):
                continue
            if golden:
                vals = e.expected_k
            else:
                vals = assemble(e.diagram).normalized().values
            yield [e.name] + [vals[n].render() for n in (-1, 0, 1)]
    else:
        raise InputError(f"no table {which}; choose 2-7")


_HEADERS = {
    2: ["group", "stabilizers"],
    3: ["group", "stabilizers", "cusp"],
    4: ["group", "stabilizers", "cusps"],
    5: ["group", "Km1", "K0t", "Wh"],
    6: ["group", "Km1", "K0t", "Wh"],
    7: ["group", "Km1", "K0t", "Wh"],
}


def cmd_tables(args, out):
    rows = list(_table_rows(args.which, args.golden))
    header = _HEADERS[args.which]
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return EXIT_OK
    widths = [max(len(str(r[i])) for r in rows + [header]) for i in range(len(header))]
    for r in [header] + rows:
        out.write(" | ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")
    return EXIT_OK


def cmd_list(args, out):
    groups = defaultdict(list)
    for e in catalog.entries():
        groups[e.ideal_vertices].append(e.name)
    for ideal in sorted(groups):
        out.write(f"{ideal} ideal vertices ({len(groups[ideal])}): {' '.join(groups[ideal])}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lowerk", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="verb", required=True)

    c = sub.add_parser("compute", help="lower K-groups of a group")
    c.add_argument("name", nargs="?")
    c.add_argument("--matrix", help="file with a raw Coxeter matrix")
    c.add_argument("--format", choices=("json", "text", "csv"), default="text")
    norm = c.add_mutually_exclusive_group()
    norm.add_argument("--normalized", dest="exact", action="store_false")
    norm.add_argument("--exact", dest="exact", action="store_true")
    c.set_defaults(func=cmd_compute, exact=False)

    s = sub.add_parser("stabilizers", help="type-I geodesic stabilizers and cusps")
    s.add_argument("name", nargs="?")
    s.add_argument("--matrix")
    s.set_defaults(func=cmd_stabilizers)

    o = sub.add_parser("oracle", help="rank data of a finite group, as JSON")
    o.add_argument("type", help="e.g. D5, C2xD6, S4, A5, C2xA5")
    o.set_defaults(func=cmd_oracle)

    v = sub.add_parser("verify", help="recompute the catalog against the golden data")
    v.add_argument("--all", action="store_true")
    v.add_argument("names", nargs="*")
    v.add_argument("-v", "--verbose", action="store_true")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("tables", help="print a results table")
    t.add_argument("--which", type=int, required=True, choices=range(2, 8))
    t.add_argument("--golden", action="store_true", help="print stored values instead")
    t.add_argument("--format", choices=("text", "csv"), default="text")
    t.set_defaults(func=cmd_tables)

    ls = sub.add_parser("list", help="the 32 groups by number of ideal vertices")
    ls.set_defaults(func=cmd_list)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except InputError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_INPUT
    except ComputationError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_COMPUTE


def main(argv=None) -> int:
    return run(argv)


def run_captured(argv) -> tuple[int, str, str]:
    """Run the CLI in-process and return (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


if __name__ == "__main__":
    sys.exit(main())
