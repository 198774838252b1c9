"""Command-line front end.

Exit codes: 0 success, 1 verify mismatch, 2 usage error, 3 unknown_fact.
No colour is ever emitted, so NO_COLOR needs no special handling.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Sequence

from .cohomdb import UnknownFact, face_cohomology
from .leviweights import kostant_weight_table, lambda_from_n
from .linalg import rank
from .parabolic import ALL_NAMES, kostant_reps, parabolic
from .parity import filtered_reps, verdicts
from .report import FORMATS, ReportDocument
from .spectral import d_squared_defect, run_pipeline
from .verify import CHECKS, run_checks
from .weyl import weyl_table

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_UNKNOWN_FACT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _frac(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _policy(s: str) -> str:
    return s.replace("-", "_")


def _weyl_table(args) -> ReportDocument:
    doc = ReportDocument("weyl_table", ["w", "w_inv", "length", "w^-1(a1)", "w^-1(a2)", "w^-1(a3)"],
                         title="Weyl group of type C3")
    for r in weyl_table():
        imgs = r["inverse_images"]
        doc.add({"w": r["w"]}, {"w_inv": r["w_inv"], "length": r["length"],
                                "w^-1(a1)": imgs[0], "w^-1(a2)": imgs[1], "w^-1(a3)": imgs[2]},
                "Weyl group table appendix")
    return doc


def _kostant(args) -> ReportDocument:
    P = parabolic(args.parabolic)
    doc = ReportDocument("kostant", ["w", "length"], title=f"Kostant representatives for {P.name}")
    for e in kostant_reps(P):
        doc.add({"w": e.name}, {"length": e.length}, "Kostant representative lists")
    return doc


def _weights(args) -> ReportDocument:
    P = parabolic(args.parabolic)
    if args.symbolic and args.lam is not None:
        raise UsageError("--symbolic and --lambda are mutually exclusive")
    n = tuple(Fraction(x) for x in args.lam) if args.lam is not None else (0, 0, 0)
    doc = ReportDocument("weights", ["w", "m1", "m2", "m3"], title=f"Levi coordinates of w . lambda for {P.name}")
    prov = "weight coefficient appendix, " + ("general weight" if args.symbolic else "specialized")
    for w, row in kostant_weight_table(P, symbolic=args.symbolic, n=n):
        vals = [str(c) if args.symbolic else _frac(c) for c in row]
        doc.add({"w": w.name}, dict(zip(("m1", "m2", "m3"), vals)), prov)
    if not args.symbolic:
        doc.extra["lambda_n"] = [_frac(x) for x in n]
    return doc


def _parity(args) -> ReportDocument:
    P = parabolic(args.parabolic)
    doc = ReportDocument("parity", ["w", "length", "m1", "m2", "m3", "verdict", "reason"],
                         title=f"Parity verdicts for {P.name}")
    for entry, m, v in verdicts(P):
        doc.add({"w": entry.name},
                {"length": entry.length, "m1": _frac(m.m1), "m2": _frac(m.m2), "m3": _frac(m.m3),
                 "verdict": v.status, "reason": v.reason},
                "parity vanishing rules")
    doc.extra["surviving"] = [e.name for e in filtered_reps(P)]
    return doc


def _face(args) -> ReportDocument:
    P = parabolic(args.parabolic)
    lam = lambda_from_n([Fraction(x) for x in args.lam]) if args.lam is not None else None
    space = face_cohomology(P, lam)
    doc = ReportDocument("face", ["q", "w", "internal_degree", "dim", "formal", "tag"],
                         title=f"Face cohomology of {P.name}")
    for q in space.degrees():
        for line in space[q]:
            doc.add({"q": q, "w": line.w.name},
                    {"internal_degree": line.internal_degree, "dim": line.dim.evaluate(),
                     "formal": str(line.dim), "tag": line.tag},
                    "per-face case lists")
    doc.extra["dims"] = space.dim_vector(max(space.degrees(), default=0))
    return doc


def _page_doc(kind: str, page, title: str) -> ReportDocument:
    doc = ReportDocument(kind, ["p", "q", "dim", "lines"], title=title)
    for (p, q), v in sorted(page.entries.items()):
        if v:
            labels = [l.label for l in page.column(p, q)] if kind == "e1" else []
            doc.add({"p": p, "q": q}, {"dim": v, "lines": labels}, f"{kind.upper()}-page figure")
    return doc


def _e_page(args) -> ReportDocument:
    pipe = run_pipeline(policy=_policy(args.sign_policy))
    kind = args.command
    page = {"e1": pipe.e1, "e2": pipe.e2, "e3": pipe.e3}[kind]
    doc = _page_doc(kind, page, f"{kind.upper()} page ({args.sign_policy} signs)")
    doc.extra["sign_policy"] = args.sign_policy
    if kind == "e1":
        doc.extra["d1"] = {
            f"{p},{q}": {"rows": list(m.row_labels), "cols": list(m.col_labels), "matrix": m.to_lists()}
            for (p, q), m in sorted(pipe.d1.items()) if m.nrows and m.ncols
        }
        doc.extra["d_squared_defect"] = [list(d) for d in d_squared_defect(pipe.d1)]
    if kind == "e2":
        doc.extra["d1_ranks"] = {f"{p},{q}": rank(m) for (p, q), m in sorted(pipe.d1.items()) if rank(m)}
    if kind == "e3":
        doc.extra["d2"] = [
            {"q": a.q, "sources": list(a.source_lines), "targets": list(a.target_lines),
             "support": [list(x) for x in a.e2_pairs],
             "e1_pairs_hitting_image": [list(x) for x in a.e1_pairs_in_image]}
            for a in pipe.d2_analysis
        ]
    return doc


def _boundary(args) -> ReportDocument:
    res = run_pipeline(policy=_policy(args.sign_policy)).result
    doc = ReportDocument("boundary", ["q", "dim", "contributors"], title="Cohomology of the boundary")
    for q, d in enumerate(res.dims):
        doc.add({"q": q}, {"dim": d, "contributors": [f"E3({p},{k})" for p, k in res.contributors.get(q, ())]},
                "main theorem")
    doc.extra["H"] = list(res.dims)
    return doc


def _verify(args) -> ReportDocument:
    results = run_checks(_policy(args.sign_policy), args.check or None)
    doc = ReportDocument("verify", ["check", "ok", "detail"], title=f"Fixture verification ({args.sign_policy} signs)")
    for r in results:
        doc.add({"check": r.name}, {"ok": r.ok, "detail": r.detail}, r.provenance)
    doc.extra["passed"] = all(r.ok for r in results)
    return doc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="markdown")
    policy = argparse.ArgumentParser(add_help=False)
    policy.add_argument("--sign-policy", choices=("pure-epsilon", "paper-fixture", "solved"), default="solved")
    par = argparse.ArgumentParser(add_help=False)
    par.add_argument("--parabolic", required=True, choices=ALL_NAMES)

    ap = argparse.ArgumentParser(prog="sp6boundary", description="Boundary cohomology of Sp6(Z) with trivial coefficients.")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("weyl-table", parents=[common], help="the 48 Weyl group elements").set_defaults(fn=_weyl_table)
    sub.add_parser("kostant", parents=[common, par], help="Kostant representatives").set_defaults(fn=_kostant)
    w = sub.add_parser("weights", parents=[common, par], help="Levi coordinates of w . lambda")
    w.add_argument("--lambda", dest="lam", nargs=3, metavar=("N1", "N2", "N3"))
    w.add_argument("--symbolic", action="store_true")
    w.set_defaults(fn=_weights)
    sub.add_parser("parity", parents=[common, par], help="parity verdicts").set_defaults(fn=_parity)
    f = sub.add_parser("face", parents=[common, par], help="graded face cohomology")
    f.add_argument("--lambda", dest="lam", nargs=3, metavar=("N1", "N2", "N3"))
    f.set_defaults(fn=_face)
    for name in ("e1", "e2", "e3"):
        sub.add_parser(name, parents=[common, policy], help=f"{name.upper()} page").set_defaults(fn=_e_page)
    sub.add_parser("boundary", parents=[common, policy], help="final cohomology table").set_defaults(fn=_boundary)
    v = sub.add_parser("verify", parents=[common, policy], help="compare against embedded fixtures")
    v.add_argument("--check", action="append", choices=[c[0] for c in CHECKS])
    v.set_defaults(fn=_verify)
    return ap


def run(argv: Sequence[str] | None = None) -> tuple[int, str]:
    """Parse and execute; returns (exit code, rendered output)."""
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return (EXIT_USAGE if exc.code else EXIT_OK), ""
    try:
        doc = args.fn(args)
    except UnknownFact as exc:
        return EXIT_UNKNOWN_FACT, f"{exc}\n"
    except (UsageError, ValueError) as exc:
        return EXIT_USAGE, f"error: {exc}\n"
    text = doc.render(args.format)
    if doc.kind == "verify" and not doc.extra["passed"]:
        return EXIT_MISMATCH, text
    return EXIT_OK, text


def main(argv: Sequence[str] | None = None) -> int:
    code, text = run(argv)
    stream = sys.stderr if code in (EXIT_USAGE, EXIT_UNKNOWN_FACT) else sys.stdout
    stream.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
