import pytest

from sp6boundary import spectral
from sp6boundary.linalg import rank
from sp6boundary.spectral import (
    FixtureMismatch,
    NoSolution,
    assemble_E1,
    boundary_cohomology,
    build_d1,
    build_d2,
    compute_E2,
    compute_E3,
    d_squared_defect,
    euler_characteristic,
    gauge_equivalent,
    gauge_flip,
    rank_profile,
    solve_signs,
    support_d1,
)


@pytest.fixture(scope="module")
def e1():
    return assemble_E1()


@pytest.fixture(scope="module")
def fixture_d1(e1):
    return build_d1(e1, "paper_fixture")


def labels(page, p, q):
    return [l.label for l in page.column(p, q)]


def nonzero_rows(m):
    return [list(r) for r in m.rows if any(r)]


def test_e1_examples(e1):
    assert labels(e1, 0, 5) == ["a1:12", "a1:12321", "a2:213", "a2:2321", "a3:321", "a3:323"]
    assert e1.column(2, 7) == [] and e1.dim(2, 7) == 0
    assert labels(e1, 1, 8) == ["a12:12132132", "a13:1232132"]


def test_e1_line_invariants(e1):
    for (p, q), lines in e1.lines.items():
        for k, l in enumerate(lines):
            assert l.p + 1 == l.parabolic.rank
            assert l.dim >= 1 and l.ordinal == k
            assert l.line.internal_degree == q - spectral.length(l.w)


def test_support_examples(e1):
    s13 = support_d1(e1, 1, 3)
    assert labels(e1, 2, 3) == ["b:121", "b:232"]
    assert s13 == [[False, False], [True, True]]
    s05 = support_d1(e1, 0, 5)
    col = [labels(e1, 1, 5)[i] for i, row in enumerate(s05) if row[0]]
    assert col == ["a12:2132", "a13:32132"]
    s14 = support_d1(e1, 1, 4)
    hits = {(labels(e1, 1, 4)[j], labels(e1, 2, 4)[i]) for i, row in enumerate(s14) for j, x in enumerate(row) if x}
    assert hits == {("a12:121", "b:1321"), ("a13:132", "b:2132"), ("a23:213", "b:1213")}


@pytest.mark.parametrize("policy", ["pure_epsilon", "paper_fixture", "solved"])
def test_q0_maps_for_every_policy(e1, policy):
    d = build_d1(e1, policy)
    assert [list(r) for r in d[(0, 0)].rows] == [[1, -1, 0], [1, 0, -1], [0, 1, -1]]
    assert [list(r) for r in d[(1, 0)].rows] == [[-1, 1, -1]]


def test_q6_fixture_map(fixture_d1):
    assert nonzero_rows(fixture_d1[(0, 6)]) == [[1, 1, 0], [1, 0, 1], [0, -1, 1]]


def test_q6_pure_epsilon_map(e1):
    d = build_d1(e1, "pure_epsilon")
    # (a - b, a - c, b - c): the row for a13 carries -c, so d o d vanishes
    assert nonzero_rows(d[(0, 6)]) == [[1, -1, 0], [1, 0, -1], [0, 1, -1]]
    assert [list(r) for r in d[(1, 6)].rows] == [[0, 0, -1, 0], [-1, 1, 0, -1]]


def test_d_squared(e1, fixture_d1):
    assert d_squared_defect(fixture_d1) == []
    assert [x for x in d_squared_defect(build_d1(e1, "pure_epsilon")) if x[0] == 0] == []


def test_unknown_policy(e1):
    with pytest.raises(ValueError):
        build_d1(e1, "random")


def test_solver_finds_fixture_class(e1, fixture_d1):
    sols = solve_signs(e1)
    assert len(sols) >= 1
    for s in sols:
        d = build_d1(e1, "solved", signs=s)
        assert d_squared_defect(d) == []
        assert rank_profile(d) == rank_profile(fixture_d1)
    assert any(gauge_equivalent(build_d1(e1, "solved", signs=s), fixture_d1) for s in sols)


def test_solution_is_unique_up_to_gauge(e1):
    assert len(solve_signs(e1)) == 1


def test_gauge_flip_preserves_solutions(e1):
    d = build_d1(e1, "solved")
    flipped = gauge_flip(d, 1, 6, "a12:21323")
    assert flipped != d
    assert d_squared_defect(flipped) == []
    assert rank_profile(flipped) == rank_profile(d)
    assert gauge_equivalent(flipped, d)


def test_gauge_equivalence_detects_support_change(e1, fixture_d1):
    pure = build_d1(e1, "pure_epsilon")
    assert gauge_equivalent(pure, fixture_d1)
    broken = dict(pure)
    m = pure[(0, 6)]
    rows = [list(r) for r in m.rows]
    rows[0][0] = 0
    broken[(0, 6)] = spectral.RationalMatrix.from_rows(rows, m.ncols, m.row_labels, m.col_labels)
    assert not gauge_equivalent(broken, fixture_d1)


def test_unstated_sign_single_flip_is_not_gauge(e1, fixture_d1):
    # flipping one entry of a square of faces breaks d o d = 0
    m = fixture_d1[(0, 5)]
    rows = [list(r) for r in m.rows]
    rows[1][0] = -rows[1][0]
    bad = dict(fixture_d1)
    bad[(0, 5)] = spectral.RationalMatrix.from_rows(rows, m.ncols, m.row_labels, m.col_labels)
    assert d_squared_defect(bad)
    assert not gauge_equivalent(bad, fixture_d1)


def test_transfer_hook_zeroing_a_pair(e1):
    def hook(src, tgt):
        return 0 if (src.q, src.label, tgt.label) == (0, "a1:e", "a12:e") else 1

    with pytest.raises(NoSolution):
        solve_signs(e1, transfer=hook)
    d = build_d1(e1, "pure_epsilon", transfer=hook)
    assert d[(0, 0)][0, 0] == 0


def test_fixture_mismatch(e1, monkeypatch):
    maps = spectral._fixture_maps()
    bad = dict(maps)
    entry = dict(bad[(1, 3)])
    entry["matrix"] = [[1, 0], [-1, 1]]
    bad[(1, 3)] = entry
    monkeypatch.setattr(spectral, "_fixture_maps", lambda: bad)
    with pytest.raises(FixtureMismatch):
        build_d1(e1, "paper_fixture")


def test_fixture_ranks(fixture_d1):
    want = {(0, 0): 2, (1, 0): 1, (0, 5): 5, (1, 5): 4, (0, 6): 2, (1, 6): 2, (1, 8): 1, (1, 1): 1, (1, 3): 1, (1, 4): 3}
    assert {k: v for k, v in rank_profile(fixture_d1).items() if v} == want


def test_e2_examples(pipeline):
    e2 = pipeline.e2
    assert (e2.dim(0, 0), e2.dim(1, 0), e2.dim(2, 0)) == (1, 0, 0)
    assert (e2.dim(1, 3), e2.dim(2, 3)) == (1, 1)
    assert (e2.dim(0, 5), e2.dim(1, 5), e2.dim(2, 5)) == (1, 0, 0)


def test_d2_support(pipeline):
    (a,) = pipeline.d2_analysis
    assert a.q == 5
    assert a.source_lines == ("a1:12321", "a2:2321", "a3:321")
    assert a.target_lines == ("b:2323",)
    assert a.empty
    assert ("a3:321", "b:1321") in a.e1_pairs_in_image
    assert list(pipeline.d2) == [(0, 5)] and pipeline.d2[(0, 5)].is_zero()


def test_d2_nonempty_support_is_not_lifted(pipeline, monkeypatch):
    monkeypatch.setattr(spectral, "_d2_matched", lambda s, t: True)
    with pytest.raises(NotImplementedError):
        build_d2(pipeline.e2)


def test_e3(pipeline):
    e3 = pipeline.e3
    assert e3.dim(0, 5) == 1 and e3.dim(2, 4) == 1
    assert e3.nonzero() == pipeline.e2.nonzero()


def test_boundary(pipeline):
    res = boundary_cohomology()
    assert list(res.dims) == [1, 0, 1, 0, 1, 2, 2, 1, 0, 1, 0, 1]
    assert res.contributors[5] == ((0, 5), (2, 3))
    assert res.contributors[11] == ((2, 9),)
    assert res.as_dict() == {"H": list(res.dims)}


def test_euler_characteristic(pipeline):
    chi_e1 = euler_characteristic(pipeline.e1)
    chi_h = sum((-1) ** k * d for k, d in enumerate(pipeline.result.dims))
    assert chi_e1 == chi_h == 0


def test_poincare_symmetry(pipeline):
    dims = pipeline.result.dims
    assert all(dims[q] == dims[11 - q] for q in range(12))


@pytest.mark.parametrize("policy", ["pure_epsilon", "paper_fixture", "solved"])
def test_policies_agree_on_answer(policy):
    assert list(boundary_cohomology(policy=policy).dims) == [1, 0, 1, 0, 1, 2, 2, 1, 0, 1, 0, 1]


def test_compute_e2_from_explicit_maps(e1, fixture_d1):
    e2 = compute_E2(e1, fixture_d1)
    d2, _ = build_d2(e2)
    e3 = compute_E3(e2, d2)
    assert sum(e3.nonzero().values()) == 10
    assert rank(fixture_d1[(0, 5)]) == 5
