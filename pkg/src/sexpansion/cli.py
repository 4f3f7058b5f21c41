"""Command-line front end.

Exit codes: 0 success, 1 a semantic failure (Jacobi, associativity,
resonance, missing zero element, no plan), 2 unreadable or unknown input.
"""

import argparse
import csv
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import discovery, geometry, serialization, structure
from .errors import IndexOutOfRange, ParseError, SExpansionError, UnknownName
from .expansion import (
    check_resonance,
    default_seed,
    expanded_killing,
    resonant_subalgebra,
    s_expand,
    verify_ad_invariance,
    verify_inner_product_axioms,
    zero_reduce,
)
from .liecore import LieAlgebra, killing_form, standard_algebra, validate_algebra
from .ratlin import exact_inertia
from .semigroups import (
    Semigroup,
    enumerate_semigroups,
    mk_matrix,
    render_table,
    standard_semigroup,
    validate_semigroup,
)

EXIT_OK, EXIT_FAIL, EXIT_PARSE = 0, 1, 2


# ----------------------------------------------------------------------------
# input resolution


def _named_table(name: str) -> Semigroup | None:
    key = name.strip().lower().replace("-", "").replace("_", "")
    if key.startswith("table") and key[5:].upper() in discovery.CASE_TABLES:
        return discovery.CASE_TABLES[key[5:].upper()]
    return None


def resolve(arg: str):
    """A file path if one exists, otherwise a built-in algebra or semigroup name."""
    if Path(arg).exists():
        return serialization.load(arg)
    table = _named_table(arg)
    if table is not None:
        return table
    try:
        return standard_algebra(arg)
    except UnknownName:
        pass
    try:
        return standard_semigroup(arg)
    except UnknownName:
        raise UnknownName(f"{arg!r} is neither a readable file nor a built-in name") from None


def resolve_algebra(arg: str) -> LieAlgebra:
    obj = resolve(arg)
    if not isinstance(obj, LieAlgebra):
        raise ParseError(f"{arg!r} is not a Lie algebra")
    return obj


def resolve_semigroup(arg: str) -> Semigroup:
    obj = resolve(arg)
    if not isinstance(obj, Semigroup):
        raise ParseError(f"{arg!r} is not a semigroup")
    return obj


# ----------------------------------------------------------------------------
# output helpers


def _fmt(x) -> str:
    return str(Fraction(x)) if isinstance(x, (Fraction, int)) else str(x)


def _inertia(t) -> str:
    return f"({t.n_plus},{t.n_minus},{t.n_zero})"


def emit_table(header: list, rows: list, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    elif fmt == "md":
        out.write("| " + " | ".join(header) + " |\n")
        out.write("|" + "|".join("---" for _ in header) + "|\n")
        for r in rows:
            out.write("| " + " | ".join(str(x) for x in r) + " |\n")
    else:
        out.write(serialization.dumps([dict(zip(header, r)) for r in rows]))


def emit_matrix(M, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        out.write(serialization.dumps([[_fmt(x) for x in row] for row in M]))
        return
    header = [""] + [str(j + 1) for j in range(len(M))]
    emit_table(header, [[i + 1] + [_fmt(x) for x in row] for i, row in enumerate(M)], fmt, out)


# ----------------------------------------------------------------------------
# commands


def cmd_validate(args) -> int:
    obj = resolve(args.target)
    if isinstance(obj, LieAlgebra):
        report = validate_algebra(obj)
        what = f"algebra {obj.name or args.target} (dim {obj.dim})"
    elif isinstance(obj, Semigroup):
        report = validate_semigroup(obj)
        what = f"semigroup {obj.name or args.target} (order {obj.order})"
    else:
        raise ParseError("validate expects an algebra or a semigroup")
    if report.ok:
        print(f"valid {what}")
        return EXIT_OK
    print(f"invalid {what}: {report.message}")
    print(f"witness (0-based): {report.witness}")
    return EXIT_FAIL


def cmd_expand(args) -> int:
    S = resolve_semigroup(args.semigroup)
    L = resolve_algebra(args.algebra)
    E = s_expand(S, L)
    if args.reduce_zero:
        result = zero_reduce(E)
        doc = serialization.algebra_to_dict(
            result,
            {"semigroup": serialization.semigroup_to_dict(S), "base": L.name,
             "index_map": serialization.INDEX_MAP, "reduced": True},
        )
    else:
        result = E.algebra
        doc = serialization.expanded_to_dict(E)
    text = serialization.dumps(doc)
    log = sys.stdout
    if args.out == "-":
        sys.stdout.write(text)
        log = sys.stderr
    elif args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    inertia = exact_inertia(killing_form(result))
    print(f"dim {result.dim}", file=log)
    print(f"killing inertia {_inertia(inertia)}", file=log)
    print(f"chi {inertia.chi}", file=log)
    if args.verify:
        seed = default_seed() if args.seed is None else args.seed
        axioms = verify_inner_product_axioms(E, seed=seed)
        adinv = verify_ad_invariance(E)
        print(f"inner-product axioms ({axioms.checks} checks, seed {seed}): {'ok' if axioms.ok else 'FAIL'}", file=log)
        print(f"ad-invariance ({adinv.checks} checks): {'ok' if adinv.ok else 'FAIL'}", file=log)
        if not (axioms.ok and adinv.ok):
            return EXIT_FAIL
    return EXIT_OK


def cmd_killing(args) -> int:
    L = resolve_algebra(args.algebra)
    G = killing_form(L)
    emit_matrix(G, args.format)
    if args.format != "json":
        t = exact_inertia(G)
        print(f"inertia {_inertia(t)}  chi {t.chi}  class {geometry.classify(L)}")
    return EXIT_OK


def cmd_mk(args) -> int:
    S = resolve_semigroup(args.semigroup)
    M = mk_matrix(S)
    report = validate_semigroup(S)
    if args.format == "json":
        t = exact_inertia(M)
        doc = {"semigroup": serialization.semigroup_to_dict(S), "mk": M,
               "inertia": list(t), "associative_commutative": report.ok}
        sys.stdout.write(serialization.dumps(doc))
    else:
        print(render_table(S))
        print()
        emit_matrix(M, args.format)
        t = exact_inertia(M)
        print(f"inertia (s+,Q,H) = {_inertia(t)}")
        if not report.ok:
            print(f"note: {report.message}")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_predict(args) -> int:
    if args.chi is not None:
        P, H, Q = args.phq
        print(geometry.predict_character(args.chi, P, H, Q))
        return EXIT_OK
    if not (args.algebra and args.semigroup):
        raise ParseError("predict needs ALGEBRA and SEMIGROUP, or --chi with --phq")
    L = resolve_algebra(args.algebra)
    S = resolve_semigroup(args.semigroup)
    pred = geometry.predict_expanded_signature(geometry.signature_profile(L), geometry.semigroup_profile(S))
    print(f"predicted inertia {_inertia(pred.inertia)}  rank {pred.rank}  chi {pred.chi}")
    if not pred.summed_form_agrees:
        print(f"note: n*s0 + s*n0 = {pred.summed_n_zero} differs from the nullity {pred.n_zero}")
    if args.check:
        observed = exact_inertia(expanded_killing(s_expand(S, L)))
        verdict = "match" if observed == pred.inertia else "MISMATCH"
        print(f"observed inertia {_inertia(observed)}: {verdict}")
        if observed != pred.inertia:
            return EXIT_FAIL
    return EXIT_OK


def cmd_discover(args) -> int:
    source = resolve_algebra(args.source)
    target = resolve_algebra(args.target)
    src, tgt = geometry.signature_profile(source), geometry.signature_profile(target)
    plans = discovery.solve_phq(src, tgt, args.p_max)
    if not plans:
        print(f"no (P,H,Q) plan with P <= {args.p_max}", file=sys.stderr)
        return EXIT_FAIL
    header = ["P", "H", "Q", "status", "table", "mk_inertia", "expanded_inertia", "verified", "identified_as"]
    rows = []
    for plan in plans:
        if plan.P * source.dim != target.dim and not args.all_plans:
            # the expansion would be larger than the target; counts only
            rows.append([plan.P, plan.H, plan.Q, "dim-mismatch", "", _inertia(plan.mk_inertia), "", "", ""])
            continue
        if plan.P > args.order_max:
            rows.append([plan.P, plan.H, plan.Q, "plan-only", "", _inertia(plan.mk_inertia), "", "", ""])
            continue
        result = discovery.find_semigroups(
            plan, source, tgt, up_to_iso=not args.no_iso, well_defined=args.well_defined, order_max=args.order_max
        )
        if not result.candidates:
            rows.append([plan.P, plan.H, plan.Q, "no-candidate", "", _inertia(plan.mk_inertia), "", "", ""])
        for c in result.candidates:
            table = json.dumps([[x + 1 for x in r] for r in c.semigroup.table])
            rows.append([plan.P, plan.H, plan.Q, "candidate", table, _inertia(c.mk_inertia),
                         _inertia(c.expanded_inertia), c.verified, c.witness or ""])
    if args.format == "text":
        print(f"source {source.name}: inertia {_inertia(src.inertia)}; target {target.name}: inertia {_inertia(tgt.inertia)}")
        for plan in plans:
            print(f"plan (P,H,Q) = ({plan.P},{plan.H},{plan.Q})")
        for r in rows:
            if r[3] == "candidate":
                mark = "verified" if r[7] else "rejected"
                print(f"  P={r[0]} {r[4]} M_K {r[5]} -> {r[6]} {mark} {r[8]}".rstrip())
            else:
                print(f"  P={r[0]} {r[3]}")
    else:
        emit_table(header, rows, args.format)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    tables = list(enumerate_semigroups(args.order, up_to_iso=args.up_to_iso))
    if args.format == "text":
        kind = "isomorphism classes" if args.up_to_iso else "labeled tables"
        print(f"{len(tables)} {kind} of order {args.order}")
        if args.show:
            for S in tables:
                print()
                print(render_table(S))
        return EXIT_OK
    rows = [[i + 1, json.dumps([[x + 1 for x in r] for r in S.table]), _inertia(exact_inertia(mk_matrix(S)))]
            for i, S in enumerate(tables)]
    emit_table(["n", "table", "mk_inertia"], rows, args.format)
    return EXIT_OK


def cmd_resonant(args) -> int:
    S = resolve_semigroup(args.semigroup)
    L = resolve_algebra(args.algebra)
    D = serialization.load(args.decomposition)
    if not hasattr(D, "g_partition"):
        raise ParseError(f"{args.decomposition} is not a decomposition")
    report = check_resonance(S, L, D)
    if not report.ok:
        print(f"not resonant: {report.message}")
        return EXIT_FAIL
    sub = resonant_subalgebra(S, L, D)
    inertia = exact_inertia(killing_form(sub.algebra))
    print(f"resonant subalgebra dim {sub.algebra.dim}, killing inertia {_inertia(inertia)}")
    print(f"generators: {', '.join(sub.algebra.names)}")
    if args.out:
        Path(args.out).write_text(serialization.dumps(serialization.algebra_to_dict(sub.algebra)), encoding="utf-8")
    return EXIT_OK


def cmd_certify(args) -> int:
    S = resolve_semigroup(args.semigroup)
    L = resolve_algebra(args.algebra)
    cert = structure.ideal_certificate(S, L)
    print(f"ideal ({cert.construction}): dim {cert.dim} of {cert.ambient_dim}")
    print(f"closure checks: {cert.checks} brackets, {'verified' if cert.verified else 'FAILED'}")
    if args.show_basis:
        for v in cert.basis:
            print("  [" + ", ".join(_fmt(x) for x in v) + "]")
    if S.order >= 2:
        split = structure.split_direct_sum(S, L)
        for p in split.parts:
            kind = "copy of base" if p.copy_of_base else ("abelian" if p.algebra.is_abelian else "ideal")
            vec = "(" + ", ".join(_fmt(x) for x in p.vector) + ")"
            print(f"  part v={vec} scale {_fmt(p.scale)}: {kind}")
        print("full split: " + ("yes, verified by basis change" if split.full else "no"))
    return EXIT_OK if cert.verified else EXIT_FAIL


def _report_table1(fmt: str) -> None:
    rows = [list(r) for r in discovery.generate_table_one()]
    emit_table(["n", "n+l", "P", "H", "Q"], rows, "md" if fmt == "text" else fmt)


def _report_signature_matrix(fmt: str) -> int:
    rows = []
    for r in geometry.signature_matrix():
        summed = {None: "n/a", True: "match", False: "differs"}[r.summed_form_ok]
        rows.append([r.algebra, json.dumps([[x + 1 for x in t] for t in r.semigroup.table]),
                     _inertia(r.predicted.inertia), _inertia(r.observed), "match" if r.match else "MISMATCH", summed])
    emit_table(["algebra", "semigroup", "predicted", "observed", "verdict", "nullity_sum_form"], rows,
               "md" if fmt == "text" else fmt)
    return EXIT_OK if all(r[4] == "match" for r in rows) else EXIT_FAIL


def _report_case_study(fmt: str) -> None:
    cs = discovery.case_study()
    if fmt == "json":
        doc = {
            "source_inertia": list(cs["source"].inertia),
            "target_inertia": list(cs["target"].inertia),
            "plans": [[p.P, p.H, p.Q] for p in cs["plans"]],
            "tables": {k: {"table": serialization.semigroup_to_dict(v["semigroup"])["table"],
                           "associative_commutative": v["report"].ok, "message": v["report"].message,
                           "mk": v["mk"]} for k, v in cs["tables"].items()},
            "labeled_order2": cs["labeled_order2"],
            "classes_order2": cs["classes_order2"],
            "candidates": [{"table": [[x + 1 for x in r] for r in c.semigroup.table], "verified": c.verified}
                           for c in cs["discovery"].candidates],
            "metric": [[_fmt(x) for x in row] for row in cs["metric"]],
            "isomorphism_witness": cs["isomorphism_witness"],
        }
        sys.stdout.write(serialization.dumps(doc))
        return
    print(f"so(3) inertia {_inertia(cs['source'].inertia)} -> so(4) inertia {_inertia(cs['target'].inertia)}")
    print("plans (P,H,Q): " + ", ".join(f"({p.P},{p.H},{p.Q})" for p in cs["plans"]))
    print(f"order 2: {cs['labeled_order2']} labeled tables, {cs['classes_order2']} isomorphism classes")
    for key, v in cs["tables"].items():
        print()
        print(f"table {key}: {'associative and commutative' if v['report'].ok else v['report'].message}")
        print(render_table(v["semigroup"]))
        print(f"M_K = {v['mk']}")
    print()
    for c in cs["discovery"].candidates:
        print(f"candidate {[[x + 1 for x in r] for r in c.semigroup.table]}: "
              f"{_inertia(c.expanded_inertia)} {'verified' if c.verified else 'rejected'}")
    print()
    print("metric of the expansion by the semilattice with identity first:")
    emit_matrix(cs["metric"], "md")
    print()
    print(f"Z2 x so(3) = so(3) + so(3) by explicit basis change: {cs['isomorphism_witness']}")


def cmd_report(args) -> int:
    if args.suite == "table1":
        _report_table1(args.format)
    elif args.suite == "signature-matrix":
        return _report_signature_matrix(args.format)
    else:
        _report_case_study(args.format)
    return EXIT_OK


# ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sexp", description="Exact S-expansion of Lie algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp, default="text", choices=("text", "json", "csv", "md")):
        sp.add_argument("--format", default=default, choices=choices)

    sp = sub.add_parser("validate", help="check Jacobi or associativity/commutativity")
    sp.add_argument("target", help="JSON file or built-in name")
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("expand", help="build the S-expanded algebra")
    sp.add_argument("semigroup")
    sp.add_argument("algebra")
    sp.add_argument("--reduce-zero", action="store_true", help="apply the 0_S-reduction")
    sp.add_argument("--out", help="write JSON here ('-' for stdout)")
    sp.add_argument("--verify", action="store_true", help="also check the invariant-form axioms")
    sp.add_argument("--seed", type=int, help="sampling seed (default: $SEXP_SEED or built-in)")
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("killing", help="Killing form and its inertia")
    sp.add_argument("algebra")
    fmt(sp, "md", ("json", "csv", "md"))
    sp.set_defaults(func=cmd_killing)

    sp = sub.add_parser("mk", help="M_K matrix of a semigroup")
    sp.add_argument("semigroup")
    fmt(sp, "md", ("json", "csv", "md"))
    sp.set_defaults(func=cmd_mk)

    sp = sub.add_parser("predict", help="predicted expanded signature or character")
    sp.add_argument("algebra", nargs="?")
    sp.add_argument("semigroup", nargs="?")
    sp.add_argument("--check", action="store_true", help="build the expansion and compare")
    sp.add_argument("--chi", type=int, help="character of the source")
    sp.add_argument("--phq", type=int, nargs=3, metavar=("P", "H", "Q"), default=(1, 0, 0))
    sp.set_defaults(func=cmd_predict)

    sp = sub.add_parser("discover", help="find semigroups taking one algebra to another")
    sp.add_argument("--source", required=True)
    sp.add_argument("--target", required=True)
    sp.add_argument("--p-max", type=int, default=4)
    sp.add_argument("--order-max", type=int, default=discovery.DEFAULT_ORDER_MAX)
    sp.add_argument("--no-iso", action="store_true", help="keep every labeling")
    sp.add_argument("--well-defined", action="store_true", help="drop tables with a zero M_K diagonal entry")
    sp.add_argument("--all-plans", action="store_true", help="also enumerate plans whose P*dim differs from the target")
    fmt(sp)
    sp.set_defaults(func=cmd_discover)

    sp = sub.add_parser("enumerate", help="commutative semigroups of a given order")
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--up-to-iso", action="store_true")
    sp.add_argument("--show", action="store_true", help="print every table")
    fmt(sp)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("resonant", help="check a resonant decomposition and build its subalgebra")
    sp.add_argument("semigroup")
    sp.add_argument("algebra")
    sp.add_argument("decomposition", help="decomposition JSON")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_resonant)

    sp = sub.add_parser("certify-nonsimple", help="explicit ideal and direct-sum analysis")
    sp.add_argument("semigroup")
    sp.add_argument("algebra")
    sp.add_argument("--show-basis", action="store_true")
    sp.set_defaults(func=cmd_certify)

    sp = sub.add_parser("report", help="regenerate the so(n) table, the signature matrix or the so(3) to so(4) walkthrough")
    sp.add_argument("--suite", required=True, choices=("table1", "signature-matrix", "case-study"))
    fmt(sp)
    sp.set_defaults(func=cmd_report)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UnknownName, IndexOutOfRange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SExpansionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        witness = getattr(exc, "witness", None)
        if witness is not None:
            print(f"witness (0-based): {witness}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
