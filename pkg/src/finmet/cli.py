"""Command-line front end.

Loads a workspace document, runs one construction or predicate, and
prints a byte-stable report.  Exit codes: 0 success / property true,
1 property false or validation failed (with witnesses), 2 malformed
input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import corelations, idempotents, pushouts, selftest, workspace
from .limits import coproduct, equalizer, product
from .maps import check_nonexpansive, factorize
from .quotients import (kernel_metric, quotient_by_submetric, quotient_leq,
                        validate_submetric)
from .spaces import validate_metric
from .workspace import (blockmetric_entry, load_workspace_file, map_entry,
                        matrix_tokens, space_entry, submetric_entry)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_BAD_INPUT = 2


def _space_lines(title, space):
    lines = ["%s:" % title,
             "  points: %s" % (" ".join(space.labels) if space.labels else "-")]
    lines.append("  dist:")
    for row in space.dist:
        lines.append("    " + " ".join(v.token() for v in row))
    return lines


def _map_lines(title, fmap):
    lines = ["%s:" % title]
    if not fmap.source.labels:
        lines.append("  (empty source)")
    for x, y in zip(fmap.source.labels, fmap.assignment):
        lines.append("  %s -> %s" % (x, y))
    return lines


def _matrix_lines(title, labels, matrix):
    lines = ["%s:" % title,
             "  points: %s" % (" ".join(labels) if labels else "-")]
    for row in matrix:
        lines.append("    " + " ".join(v.token() for v in row))
    return lines


def _report_violations(title, violations):
    if not violations:
        return EXIT_OK, ["%s: VALID" % title], {"ok": True, "violations": []}
    lines = ["%s: INVALID" % title]
    payload = []
    for v in violations:
        lines.append("  " + str(v))
        payload.append({"kind": v.kind, "points": list(v.points),
                        "detail": v.detail})
    return EXIT_FALSE, lines, {"ok": False, "violations": payload}


def cmd_validate(ws, args):
    kind, name = args.kind, args.name
    if kind == "space":
        return _report_violations("validate space %s" % name,
                                  validate_metric(ws.space(name)))
    if kind == "submetric":
        sm = ws.submetric(name)
        return _report_violations("validate submetric %s" % name,
                                  validate_submetric(sm.base, sm.gamma))
    sm = ws.map(name)
    return _report_violations("validate map %s" % name, check_nonexpansive(sm))


def cmd_product(ws, args):
    space, p1, p2 = product(ws.space(args.left), ws.space(args.right))
    lines = _space_lines("product %s x %s" % (args.left, args.right), space)
    lines += _map_lines("projection 1", p1) + _map_lines("projection 2", p2)
    return EXIT_OK, lines, {"space": space_entry("product", space)}


def cmd_coproduct(ws, args):
    space, j1, j2 = coproduct(ws.space(args.left), ws.space(args.right))
    lines = _space_lines("coproduct %s + %s" % (args.left, args.right), space)
    lines += _map_lines("injection 1", j1) + _map_lines("injection 2", j2)
    return EXIT_OK, lines, {"space": space_entry("coproduct", space)}


def cmd_equalizer(ws, args):
    incl = equalizer(ws.map(args.left), ws.map(args.right))
    lines = _space_lines("equalizer of %s, %s" % (args.left, args.right),
                         incl.source)
    lines += _map_lines("inclusion", incl)
    return EXIT_OK, lines, {"space": space_entry("equalizer", incl.source),
                            "inclusion": list(incl.assignment)}


def cmd_pushout(ws, args):
    i = ws.map(args.embedding)
    f = ws.map(args.along)
    result = pushouts.pushout_along_embedding(i, f)
    g = result.gamma
    lines = _matrix_lines("pushout gamma", g.base.labels, g.gamma)
    lines += _space_lines("apex", result.apex)
    lines += _map_lines("leg from %s" % args.along, result.leg_b)
    lines += _map_lines("leg from %s" % args.embedding, result.leg_x)
    payload = {"gamma": matrix_tokens(g.gamma),
               "apex": space_entry("apex", result.apex)}
    code = EXIT_OK
    if args.oracle:
        oracle = pushouts.pushout_closure_oracle(i, f)
        lines += _matrix_lines("oracle gamma", oracle.base.labels, oracle.gamma)
        agree = oracle.gamma == g.gamma
        lines.append("formula vs oracle: %s" % ("AGREE" if agree else "DISAGREE"))
        payload["oracle_gamma"] = matrix_tokens(oracle.gamma)
        payload["agree"] = agree
        if not agree:
            code = EXIT_FALSE
    return code, lines, payload


def cmd_cokernel_pair(ws, args):
    q0, q1, apex = pushouts.cokernel_pair(ws.map(args.embedding))
    lines = _space_lines("cokernel pair of %s" % args.embedding, apex)
    lines += _map_lines("q0", q0) + _map_lines("q1", q1)
    return EXIT_OK, lines, {"apex": space_entry("apex", apex),
                            "q0": list(q0.assignment),
                            "q1": list(q1.assignment)}


def cmd_factorize(ws, args):
    q, i = factorize(ws.map(args.map))
    lines = _space_lines("image of %s" % args.map, q.target)
    lines += _map_lines("surjection", q) + _map_lines("embedding", i)
    return EXIT_OK, lines, {"image": space_entry("image", q.target),
                            "surjection": list(q.assignment),
                            "embedding": list(i.assignment)}


def cmd_kernel_metric(ws, args):
    sm = kernel_metric(ws.map(args.map))
    lines = _matrix_lines("kernel metric of %s" % args.map,
                          sm.base.labels, sm.gamma)
    return EXIT_OK, lines, {"matrix": matrix_tokens(sm.gamma)}


def cmd_quotient(ws, args):
    proj = quotient_by_submetric(ws.submetric(args.submetric))
    lines = _space_lines("quotient by %s" % args.submetric, proj.target)
    lines += _map_lines("projection", proj)
    return EXIT_OK, lines, {"quotient": space_entry("quotient", proj.target),
                            "projection": list(proj.assignment)}


def cmd_quotient_leq(ws, args):
    verdict = quotient_leq(ws.map(args.left), ws.map(args.right))
    lines = ["quotient-leq %s %s: %s"
             % (args.left, args.right, "true" if verdict else "false")]
    return (EXIT_OK if verdict else EXIT_FALSE), lines, {"leq": verdict}


def _refl_witness(bm):
    d = bm.base.dist
    for i in (0, 1):
        for j in (0, 1):
            block = bm.block(i, j)
            for x in range(bm.base.n):
                for y in range(bm.base.n):
                    if not d[x][y] <= block[x][y]:
                        return "d(%s,%s) = %s > %s = gamma((%s,%d),(%s,%d))" % (
                            bm.base.labels[x], bm.base.labels[y], d[x][y],
                            block[x][y], bm.base.labels[x], i,
                            bm.base.labels[y], j)
    return None


def _symm_witness(bm):
    for (i, j), (pi, pj) in (((0, 0), (1, 1)), ((0, 1), (1, 0))):
        a, b = bm.block(i, j), bm.block(pi, pj)
        for x in range(bm.base.n):
            for y in range(bm.base.n):
                if a[x][y] != b[x][y]:
                    return "gamma((%s,%d),(%s,%d)) = %s != %s = gamma((%s,%d),(%s,%d))" % (
                        bm.base.labels[x], i, bm.base.labels[y], j, a[x][y],
                        b[x][y], bm.base.labels[x], pi, bm.base.labels[y], pj)
    return None


def cmd_corelation_check(ws, args):
    bm = ws.blockmetric(args.name)
    bad = corelations.validate_blockmetric(bm)
    if bad:
        return _report_violations("corelation %s" % args.name, bad)
    lines = ["corelation %s:" % args.name]
    refl = corelations.is_reflexive(bm)
    lines.append("  reflexive: %s" % ("true" if refl else "false"))
    if not refl:
        lines.append("    witness: %s" % _refl_witness(bm))
    symm = corelations.is_symmetric(bm)
    lines.append("  symmetric: %s" % ("true" if symm else "false"))
    if not symm:
        lines.append("    witness: %s" % _symm_witness(bm))
    payload = {"reflexive": refl, "symmetric": symm}
    if refl:
        trans = corelations.is_transitive(bm)
        lines.append("  transitive: %s" % ("true" if trans else "false"))
        payload["transitive"] = trans
        equiv = refl and symm and trans
    else:
        lines.append("  transitive: not defined (non-reflexive)")
        payload["transitive"] = None
        equiv = False
    lines.append("  equivalence: %s" % ("true" if equiv else "false"))
    payload["equivalence"] = equiv
    return (EXIT_OK if equiv else EXIT_FALSE), lines, payload


def cmd_corelation_effective(ws, args):
    bm = ws.blockmetric(args.name)
    try:
        verdict = corelations.is_effective(bm)
    except ValueError as exc:
        return EXIT_FALSE, ["corelation effective %s: %s" % (args.name, exc)], \
            {"error": str(exc)}
    locus = corelations.zero_locus(bm)
    lines = ["corelation effective %s: %s"
             % (args.name, "true" if verdict else "false"),
             "  zero locus: %s" % (" ".join(locus) if locus else "-")]
    return (EXIT_OK if verdict else EXIT_FALSE), lines, \
        {"effective": verdict, "zero_locus": list(locus)}


def cmd_corelation_from_subset(ws, args):
    space = ws.space(args.space)
    subset = () if args.subset in ("", "-") else tuple(args.subset.split(","))
    bm = corelations.gamma_from_subset(space, subset)
    lines = []
    for name in ("g00", "g01", "g10", "g11"):
        lines += _matrix_lines("%s" % name, space.labels, getattr(bm, name))
    return EXIT_OK, lines, blockmetric_entry("from-subset", bm, args.space)


def cmd_idempotent_check(ws, args):
    cm = ws.costmatrix(args.name)
    verdict = idempotents.is_idempotent(cm)
    lines = ["idempotent %s: %s" % (args.name, "true" if verdict else "false")]
    return (EXIT_OK if verdict else EXIT_FALSE), lines, {"idempotent": verdict}


def cmd_idempotent_factor(ws, args):
    cm = ws.costmatrix(args.name)
    try:
        report = idempotents.factor_through_zero_diagonal(cm)
    except ValueError as exc:
        return EXIT_FALSE, ["idempotent factor %s: %s" % (args.name, exc)], \
            {"error": str(exc)}
    lines = ["idempotent factor %s:" % args.name,
             "  zero diagonal: %s" % (" ".join(report.zero_diagonal)
                                      if report.zero_diagonal else "-")]
    for (x, y) in sorted(report.witnesses):
        w = report.witnesses[(x, y)]
        lines.append("  (%s,%s): %s" % (x, y, w if w is not None else "vacuous"))
    payload = {"zero_diagonal": list(report.zero_diagonal),
               "witnesses": {"%s,%s" % k: v for k, v in report.witnesses.items()},
               "ok": report.ok}
    return (EXIT_OK if report.ok else EXIT_FALSE), lines, payload


def cmd_relation_witness(ws, args):
    rel = ws.relation(args.name)
    try:
        w = idempotents.relation_density_witness(rel, args.x, args.y)
    except ValueError as exc:
        return EXIT_FALSE, ["relation witness: %s" % exc], {"error": str(exc)}
    if w is None:
        return EXIT_FALSE, ["relation witness %s %s %s: none"
                            % (args.name, args.x, args.y)], {"witness": None}
    return EXIT_OK, ["relation witness %s %s %s: %s"
                     % (args.name, args.x, args.y, w)], {"witness": w}


def cmd_selftest(_ws, args):
    results = selftest.run_suite(args.suite, seed=args.seed)
    lines = [r.line() for r in results]
    ok = all(r.ok for r in results)
    payload = {"results": [{"number": r.number, "name": r.name, "ok": r.ok,
                            "detail": r.detail} for r in results]}
    return (EXIT_OK if ok else EXIT_FALSE), lines, payload


def build_parser():
    parser = argparse.ArgumentParser(
        prog="finmet",
        description="Finite separated Lawvere metric spaces: constructions, "
                    "quotients, pushouts, corelations.")
    parser.add_argument("-w", "--workspace", help="workspace JSON document")
    parser.add_argument("--json", action="store_true", dest="as_json",
                        help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check metric / submetric / map axioms")
    p.add_argument("kind", choices=("space", "submetric", "map"))
    p.add_argument("name")
    p.set_defaults(handler=cmd_validate, needs_ws=True)

    for name, handler, help_ in (("product", cmd_product, "binary product"),
                                 ("coproduct", cmd_coproduct, "binary coproduct")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("left")
        p.add_argument("right")
        p.set_defaults(handler=handler, needs_ws=True)

    p = sub.add_parser("equalizer", help="equalizer of two parallel maps")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(handler=cmd_equalizer, needs_ws=True)

    p = sub.add_parser("pushout", help="pushout along an embedding")
    p.add_argument("--embedding", required=True)
    p.add_argument("--along", required=True)
    p.add_argument("--oracle", action="store_true",
                   help="also run the shortest-path oracle and compare")
    p.set_defaults(handler=cmd_pushout, needs_ws=True)

    p = sub.add_parser("cokernel-pair", help="pushout of an embedding along itself")
    p.add_argument("embedding")
    p.set_defaults(handler=cmd_cokernel_pair, needs_ws=True)

    p = sub.add_parser("factorize", help="(surjection, embedding) factorization")
    p.add_argument("map")
    p.set_defaults(handler=cmd_factorize, needs_ws=True)

    p = sub.add_parser("kernel-metric", help="kernel metric of a morphism")
    p.add_argument("map")
    p.set_defaults(handler=cmd_kernel_metric, needs_ws=True)

    p = sub.add_parser("quotient", help="quotient by a submetric")
    p.add_argument("submetric")
    p.set_defaults(handler=cmd_quotient, needs_ws=True)

    p = sub.add_parser("quotient-leq", help="compare two surjections out of X")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(handler=cmd_quotient_leq, needs_ws=True)

    p = sub.add_parser("corelation", help="corelation predicates")
    csub = p.add_subparsers(dest="corelation_command", required=True)
    c = csub.add_parser("check", help="reflexive/symmetric/transitive report")
    c.add_argument("name")
    c.set_defaults(handler=cmd_corelation_check, needs_ws=True)
    c = csub.add_parser("effective", help="effectiveness of an equivalence")
    c.add_argument("name")
    c.set_defaults(handler=cmd_corelation_effective, needs_ws=True)
    c = csub.add_parser("from-subset", help="subset block metric")
    c.add_argument("space")
    c.add_argument("subset", help="comma-separated labels; '-' for empty")
    c.set_defaults(handler=cmd_corelation_from_subset, needs_ws=True)

    p = sub.add_parser("idempotent", help="min-plus idempotence operations")
    isub = p.add_subparsers(dest="idempotent_command", required=True)
    c = isub.add_parser("check", help="is the matrix its own min-plus square")
    c.add_argument("name")
    c.set_defaults(handler=cmd_idempotent_check, needs_ws=True)
    c = isub.add_parser("factor", help="witnesses through the zero diagonal")
    c.add_argument("name")
    c.set_defaults(handler=cmd_idempotent_factor, needs_ws=True)

    p = sub.add_parser("relation", help="boolean relation operations")
    rsub = p.add_subparsers(dest="relation_command", required=True)
    c = rsub.add_parser("witness", help="density witness for a related pair")
    c.add_argument("name")
    c.add_argument("x")
    c.add_argument("y")
    c.set_defaults(handler=cmd_relation_witness, needs_ws=True)

    p = sub.add_parser("selftest", help="run a named acceptance suite")
    p.add_argument("--suite", default="all")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=cmd_selftest, needs_ws=False)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        ws = None
        if args.needs_ws:
            if not args.workspace:
                raise ValueError("this command needs --workspace FILE")
            ws = load_workspace_file(args.workspace)
        code, lines, payload = args.handler(ws, args)
    except (ValueError, KeyError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_BAD_INPUT
    if args.as_json:
        payload = dict(payload)
        payload["ok"] = code == EXIT_OK
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
