"""Named comparisons between computed tables and the embedded fixtures."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import data
from .cohomdb import DimExpr, face_cohomology
from .leviweights import SymbolicCoeff, kostant_weight_table, lambda_from_n, symbolic_row, to_levi_coords
from .linalg import rank
from .parabolic import all_parabolics, kostant_reps, parabolic, weyl_levi
from .parity import filtered_reps
from .spectral import (
    Pipeline,
    build_d1,
    d_squared_defect,
    gauge_equivalent,
    run_pipeline,
)
from .weyl import dot, weyl_table


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str
    provenance: str


def _pages_key(s: str) -> tuple[int, int]:
    p, q = s.split(",")
    return int(p), int(q)


def check_weyl_table(_: Pipeline) -> tuple[bool, str]:
    rows = data.load("weyl_table.json")["rows"]
    got = weyl_table()
    bad = [r["w"] for r, g in zip(rows, got) if r != g]
    if len(rows) != len(got):
        return False, f"{len(got)} rows, fixture has {len(rows)}"
    return not bad, f"{len(got)} rows" + (f"; mismatched {bad}" if bad else "")


def check_kostant_sets(_: Pipeline) -> tuple[bool, str]:
    fx = data.load("kostant_sets.json")
    diffs = []
    for P in all_parabolics():
        reps = [e.name for e in kostant_reps(P)]
        want = fx["reps"][P.name]
        if want != "all" and reps != want:
            diffs.append(f"{P.name} reps")
        if want == "all" and len(reps) != 48:
            diffs.append(f"{P.name} size")
        if [w.name for w in weyl_levi(P)] != fx["levi_weyl"][P.name]:
            diffs.append(f"{P.name} Levi Weyl group")
        if len(reps) * len(weyl_levi(P)) != 48:
            diffs.append(f"{P.name} coset count")
    sizes = "/".join(str(len(kostant_reps(P))) for P in all_parabolics())
    return not diffs, f"sizes {sizes}" + (f"; {diffs}" if diffs else "")


def check_weights_trivial(_: Pipeline) -> tuple[bool, str]:
    fx = data.load("weight_tables.json")["trivial"]
    diffs = []
    cells = 0
    for P in all_parabolics():
        want = fx[P.name]
        got = {w.name: [Fraction(x) for x in row] for w, row in kostant_weight_table(P)}
        if set(want) != set(got):
            diffs.append(f"{P.name} row set")
            continue
        for w, row in want.items():
            cells += 3
            if [Fraction(x) for x in row] != got[w]:
                diffs.append(f"{P.name}:{w}")
    return not diffs, f"{cells} cells" + (f"; mismatched {diffs}" if diffs else "")


def check_weights_symbolic(_: Pipeline) -> tuple[bool, str]:
    fx = data.load("weight_tables.json")["general"]
    diffs = []
    for P in all_parabolics():
        for w, row in kostant_weight_table(P, symbolic=True):
            want = tuple(SymbolicCoeff.parse(s) for s in fx[P.name][w.name])
            if want != row:
                diffs.append(f"{P.name}:{w.name}")
    # independent dot-action spot checks at random integral weights
    rng = random.Random(20240611)
    for _ in range(100):
        n = tuple(rng.randint(-6, 6) for _ in range(3))
        P = rng.choice(all_parabolics())
        e = rng.choice(kostant_reps(P))
        direct = to_levi_coords(P, dot(e.w, lambda_from_n(n))).m
        if tuple(c.evaluate(n) for c in symbolic_row(P, e.w)) != direct:
            diffs.append(f"{P.name}:{e.name}@{n}")
    return not diffs, "symbolic tables and 100 random weights" + (f"; {diffs}" if diffs else "")


def _names(entries) -> list[str]:
    return [e.lstrip("*") for e in entries]


def check_filtered_sets(_: Pipeline) -> tuple[bool, str]:
    fx = data.load("filtered_sets.json")
    diffs = []
    for P in all_parabolics():
        got = [e.name for e in filtered_reps(P)]
        if got != _names(fx["e1"][P.name]):
            diffs.append(P.name)
        if set(got) != set(_names(fx["summary"][P.name])):
            diffs.append(f"{P.name} (summary list)")
    dup = len(fx["summary"]["a2"]) - len(set(_names(fx["summary"]["a2"])))
    return not diffs, f"all seven lists; summary list for a2 has {dup} duplicate" + (
        f"; {diffs}" if diffs else ""
    )


def check_face_tables(_: Pipeline) -> tuple[bool, str]:
    fx = data.load("faces.json")
    diffs = []
    for P in all_parabolics():
        ev = face_cohomology(P)
        got = {str(q): sorted(l.w.name for l in ev[q]) for q in ev.degrees()}
        want = {q: sorted(v) for q, v in fx["evaluated"][P.name].items()}
        if got != want:
            diffs.append(f"{P.name} evaluated")
        if P.name not in fx["symbolic"]:
            continue
        sy = face_cohomology(P, evaluated=False)
        formal: dict = {}
        for q in sy.degrees():
            for l in sy[q]:
                slot = formal.setdefault(str(q), {})
                slot[l.w.name] = slot.get(l.w.name, DimExpr.zero()) + l.dim
        want_sy = {
            q: {w: DimExpr.parse(e) for w, e in d.items()} for q, d in fx["symbolic"][P.name].items()
        }
        if formal != want_sy:
            diffs.append(f"{P.name} symbolic")
    return not diffs, "evaluated and symbolic case lists" + (f"; {diffs}" if diffs else "")


def _fixture_maps():
    return data.load("d1_maps.json")["maps"]


def check_d1_support(pipe: Pipeline) -> tuple[bool, str]:
    try:
        build_d1(pipe.e1, "paper_fixture")
    except AssertionError as exc:
        return False, str(exc)
    return True, "fixture support equals the matching rule"


def check_d1_ranks(pipe: Pipeline) -> tuple[bool, str]:
    diffs = []
    for m in _fixture_maps():
        key = (m["p"], m["q"])
        r = rank(pipe.d1[key])
        if r != m["rank"]:
            diffs.append(f"d1^{key}: {r} != {m['rank']}")
    return not diffs, f"{len(_fixture_maps())} ranks" + (f"; {diffs}" if diffs else "")


def check_d1_gauge(pipe: Pipeline) -> tuple[bool, str]:
    fixture = build_d1(pipe.e1, "paper_fixture")
    ok = gauge_equivalent(fixture, pipe.d1)
    return ok, "differentials agree with the fixture up to line sign changes" if ok else "not gauge-equivalent"


def check_d_squared(pipe: Pipeline) -> tuple[bool, str]:
    defects = d_squared_defect(pipe.d1)
    if defects:
        return False, "nonzero d1 o d1 entries: " + ", ".join(
            f"q={q} {t}<-{s}: {v}" for q, t, s, v in defects
        )
    return True, "d1 o d1 = 0 at every q"


def _shape_check(page, key: str) -> tuple[bool, str]:
    want = {_pages_key(k): v for k, v in data.load("pages.json")[key].items()}
    got = page.nonzero()
    if got == want:
        return True, f"{len(got)} nonzero positions"
    missing = sorted(set(want) - set(got))
    extra = sorted(set(got) - set(want))
    wrong = sorted(k for k in set(got) & set(want) if got[k] != want[k])
    return False, f"missing {missing}, extra {extra}, wrong dims {wrong}"


def check_e1_shape(pipe: Pipeline) -> tuple[bool, str]:
    return _shape_check(pipe.e1, "E1")


def check_e2_shape(pipe: Pipeline) -> tuple[bool, str]:
    ok, detail = _shape_check(pipe.e2, "E2")
    entries = data.load("pages.json")["E2_entries"]
    bad = [k for k, v in entries.items() if pipe.e2.dim(*_pages_key(k)) != v]
    if bad:
        return False, detail + f"; explicit entries differ at {bad}"
    return ok, detail


def check_d2(pipe: Pipeline) -> tuple[bool, str]:
    pages = data.load("pages.json")
    cands = [[a.q] for a in pipe.d2_analysis]
    want = [[q] for _, q in pages["d2_candidates"]]
    if cands != want:
        return False, f"candidate rows {cands} != {want}"
    a = pipe.d2_analysis[0]
    ok = (
        list(a.source_lines) == pages["d2_sources"]
        and list(a.target_lines) == [pages["d2_target"]]
        and a.empty
    )
    return ok, f"q={a.q}: sources {list(a.source_lines)}, target {list(a.target_lines)}, support empty={a.empty}"


def check_e3_shape(pipe: Pipeline) -> tuple[bool, str]:
    return _shape_check(pipe.e3, "E3")


def check_main_theorem(pipe: Pipeline) -> tuple[bool, str]:
    want = data.load("pages.json")["H"]
    got = list(pipe.result.dims)
    return got == want, f"H = {got}"


CHECKS: list[tuple[str, Callable[[Pipeline], tuple[bool, str]], str]] = [
    ("weyl-table", check_weyl_table, "Weyl group table appendix"),
    ("weights-trivial", check_weights_trivial, "weight coefficient appendix, trivial weight"),
    ("weights-symbolic", check_weights_symbolic, "weight coefficient appendix, general weight"),
    ("kostant-sets", check_kostant_sets, "Kostant representative lists"),
    ("filtered-sets", check_filtered_sets, "non-vanishing representative lists"),
    ("face-tables", check_face_tables, "per-face case lists"),
    ("d1-support", check_d1_support, "explicit first differentials"),
    ("d1-ranks", check_d1_ranks, "explicit first differentials"),
    ("d1-gauge", check_d1_gauge, "explicit first differentials"),
    ("d-squared", check_d_squared, "d o d = 0"),
    ("e1-shape", check_e1_shape, "E1-page figure"),
    ("e2-shape", check_e2_shape, "E2-page figure"),
    ("d2-support", check_d2, "second differential discussion"),
    ("e3-shape", check_e3_shape, "E3-page figure"),
    ("main-theorem", check_main_theorem, "main theorem"),
]


def run_checks(policy: str = "solved", only: list[str] | None = None) -> list[CheckResult]:
    pipe = run_pipeline(policy=policy)
    out = []
    for name, fn, prov in CHECKS:
        if only and name not in only:
            continue
        try:
            ok, detail = fn(pipe)
        except Exception as exc:  # a crashing check is a failed check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(name, ok, detail, prov))
    return out
