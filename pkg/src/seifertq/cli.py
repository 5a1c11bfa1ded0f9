"""Command-line front end.

Exit codes: 0 success, 1 error, 2 certificate found (the knot's value
lies outside the minimal-Seifert-rank subgroup).  Every subcommand
accepts --json for machine-readable output; all output is canonical, so
identical inputs produce byte-identical results.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import report as report_mod
from .claspers import (
    StandardSurface,
    WheelClasper,
    YPair,
    claspers_from_json_obj,
    claspers_to_json_obj,
    contract,
    q_surgery,
    realize_claspers,
)
from .errors import SeifertQError
from .laurent import LaurentPoly
from .ltheta import AmbientPoly, membership, minimal_rank_generators, project
from .seifert import (
    SeifertMatrix,
    add_tube,
    alexander,
    classify_basis_form,
    intersection_matrix,
    search_minimal_basis,
    seifert_rank,
    triangular_dualize,
)

CERTIFICATE_MESSAGE = "CERTIFICATE: Q value outside minimal-Seifert-rank subgroup"


def main(argv=None):
    sys.exit(run(sys.argv[1:] if argv is None else argv))


def run(argv):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return args.handler(args)
    except SeifertQError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="seifertq",
        description=(
            "Seifert-form invariants and the two-loop obstruction for "
            "Alexander-polynomial-1 knots presented by clasper surgery."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, handler, help_text, *specs):
        p = sub.add_parser(name, help=help_text)
        for flags, kwargs in specs:
            p.add_argument(*flags, **kwargs)
        p.add_argument("--json", action="store_true", dest="as_json",
                       help="emit machine-readable JSON")
        p.set_defaults(handler=handler)
        return p

    matrix_arg = (("matrix",), {"help": "Seifert matrix JSON file"})
    claspers_arg = (("claspers",), {"help": "clasper configuration JSON file"})
    expr_arg = (("expr",), {"help": "expression over t1, t2, t3, e.g. '1*t1^1 + -1'"})

    cmd("alexander", _cmd_alexander, "Alexander polynomial of a Seifert matrix", matrix_arg)
    cmd("classify", _cmd_classify, "basis-form label of a Seifert matrix", matrix_arg)
    cmd("tube", _cmd_tube, "apply tube additions to a Seifert matrix",
        matrix_arg, (("tubes",), {"help": "tube history JSON file"}))
    cmd("rank", _cmd_rank, "rank of the Seifert form over the rationals", matrix_arg)
    cmd("search-min-basis", _cmd_search, "bounded search for a minimal Seifert basis",
        matrix_arg, (("--depth",), {"type": int, "default": 3,
                                    "help": "maximum generator word length (default 3)"}))
    cmd("dualize", _cmd_dualize, "invert a unitriangular matrix over Z[t, t^-1]",
        (("lambda_matrix",), {"help": "JSON file with Laurent entries as text"}))
    cmd("ltheta-normalize", _cmd_normalize, "canonical form in the value group", expr_arg)
    cmd("member", _cmd_member,
        "membership in the minimal-Seifert-rank value subgroup", expr_arg)
    cmd("realize", _cmd_realize,
        "clasper configuration realizing a kernel element", expr_arg)
    cmd("contract", _cmd_contract, "complete contraction of a degree-2 configuration",
        claspers_arg)
    cmd("q", _cmd_q, "two-loop invariant of the surgered knot", claspers_arg)
    cmd("certify-no-minrank", _cmd_certify,
        "decide whether the surgered knot can have minimal Seifert rank",
        claspers_arg)
    cmd("report", _cmd_report,
        "write the wheel-scan table, rank-growth table and figures",
        (("out_dir",), {"help": "output directory"}),
        (("--width",), {"type": int, "default": 3,
                        "help": "scan windings with |n|,|m| <= width (default 3)"}),
        (("--max-window",), {"type": int, "default": 5, "dest": "max_window",
                             "help": "largest orbit window for rank growth (default 5)"}))
    return parser


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except json.JSONDecodeError as exc:
        raise SeifertQError(
            "%s: line %d column %d: %s" % (path, exc.lineno, exc.colno, exc.msg)
        ) from exc


def _load_matrix(path):
    return SeifertMatrix.from_json_obj(_load_json(path))


def _load_claspers(path):
    return claspers_from_json_obj(_load_json(path))


def _emit(args, text, obj):
    if args.as_json:
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    else:
        print(text)


def _matrix_text(rows):
    return "\n".join(" ".join(str(x) for x in row) for row in rows)


def _cmd_alexander(args):
    delta = alexander(_load_matrix(args.matrix))
    _emit(args, delta.to_text(), {"alexander": delta.to_text()})
    return 0


def _cmd_classify(args):
    label = classify_basis_form(_load_matrix(args.matrix))
    _emit(args, label, {"classification": label})
    return 0


def _cmd_tube(args):
    sm = _load_matrix(args.matrix)
    tubes_obj = _load_json(args.tubes)
    if not isinstance(tubes_obj, dict) or "tubes" not in tubes_obj:
        raise SeifertQError("%s: expected an object with a 'tubes' field" % args.tubes)
    for rho in tubes_obj["tubes"]:
        sm = add_tube(sm, rho)
    _emit(args, _matrix_text(sm.rows), sm.to_json_obj())
    return 0


def _cmd_rank(args):
    sm = _load_matrix(args.matrix)
    r = seifert_rank(sm)
    _emit(args, str(r),
          {"rank": r, "genus": sm.genus, "minimal_rank": r == sm.genus})
    return 0


def _cmd_search(args):
    sm = _load_matrix(args.matrix)
    cert = search_minimal_basis(sm, args.depth)
    if cert is None:
        note = (
            "NOT FOUND within depth %d (bounded search; this is not a proof "
            "that no minimal Seifert basis exists)" % args.depth
        )
        _emit(args, note, {"found": False, "depth": args.depth,
                           "note": "bounded search, not a proof of impossibility"})
        return 0
    text = "FOUND\n%s" % _matrix_text(cert)
    _emit(args, text, {"found": True, "certificate": cert})
    return 0


def _cmd_dualize(args):
    obj = _load_json(args.lambda_matrix)
    if not isinstance(obj, dict) or "matrix" not in obj:
        raise SeifertQError(
            "%s: expected an object with a 'matrix' field" % args.lambda_matrix
        )
    d = [[LaurentPoly.parse(entry) for entry in row] for row in obj["matrix"]]
    b = triangular_dualize(d)
    rows = [[entry.to_text() for entry in row] for row in b]
    _emit(args, "\n".join(", ".join(row) for row in rows), {"matrix": rows})
    return 0


def _cmd_normalize(args):
    x = project(AmbientPoly.parse(args.expr))
    _emit(args, x.to_text(), x.to_json_obj())
    return 0


def _cmd_member(args):
    x = project(AmbientPoly.parse(args.expr))
    witness = membership(x, list(minimal_rank_generators()))
    if witness is None:
        _emit(args, "OUTSIDE", {"member": False})
    else:
        _emit(args, "MEMBER %s" % " ".join(str(c) for c in witness),
              {"member": True, "coefficients": witness})
    return 0


def _cmd_realize(args):
    x = project(AmbientPoly.parse(args.expr))
    surface = StandardSurface(1)
    specs = realize_claspers(x, surface)
    obj = claspers_to_json_obj(surface, specs)
    _emit(args, json.dumps(obj, sort_keys=True, indent=2), obj)
    return 0


def _cmd_contract(args):
    surface, specs = _load_claspers(args.claspers)
    if len(specs) != 1:
        raise SeifertQError(
            "contract expects exactly one wheel or y_pair entry, got %d" % len(specs)
        )
    value = contract(specs[0], surface)
    _emit(args, value.to_text(), value.to_json_obj())
    return 0


def _cmd_q(args):
    surface, specs = _load_claspers(args.claspers)
    value = q_surgery(specs, surface)
    _emit(args, value.to_text(), value.to_json_obj())
    return 0


def _cmd_certify(args):
    surface, specs = _load_claspers(args.claspers)
    value = q_surgery(specs, surface)
    witness = membership(value, list(minimal_rank_generators()))
    if witness is None:
        _emit(args, CERTIFICATE_MESSAGE,
              {"member": False, "certificate": True, "value": value.to_json_obj()})
        return 2
    _emit(args, "MEMBER %s" % " ".join(str(c) for c in witness),
          {"member": True, "coefficients": witness, "value": value.to_json_obj()})
    return 0


def _cmd_report(args):
    paths = report_mod.render_report(
        args.out_dir, width=args.width, max_window=args.max_window
    )
    _emit(args, "\n".join(paths), {"files": paths})
    return 0


if __name__ == "__main__":
    main()
