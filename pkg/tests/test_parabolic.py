from itertools import combinations

import pytest

from sp6boundary.parabolic import (
    all_parabolics,
    condition_a,
    condition_b,
    epsilon_sign,
    kostant_match,
    kostant_reps,
    kostant_reps_condition_b,
    levi_data,
    parabolic,
    weyl_levi,
)
from sp6boundary.weyl import enumerate_weyl, from_word, length, multiply


def names(entries):
    return [e.name for e in entries]


def test_parabolic_parsing():
    assert parabolic("b").subset == (1, 2, 3)
    assert parabolic("pi") == parabolic("a123") == parabolic([3, 1, 2])
    assert parabolic("alpha_13").name == "a13"
    assert parabolic("a2").label == "alpha_2"
    for bad in ("c1", "a4", "a11", ""):
        with pytest.raises(ValueError):
            parabolic(bad)
    with pytest.raises(ValueError):
        parabolic([])


@pytest.mark.parametrize(
    "name, tags",
    [("a2", ("GL2", "Sp2")), ("a13", ("GL1", "GL2")), ("b", ("GL1", "GL1", "GL1")), ("a1", ("GL1", "Sp4"))],
)
def test_levi_factors(name, tags):
    assert levi_data(parabolic(name)).factor_tags == tags


def test_weyl_levi_examples():
    assert [w.name for w in weyl_levi(parabolic("a2"))] == ["e", "1", "3", "13"]
    assert len(weyl_levi(parabolic("a1"))) == 8
    assert [w.name for w in weyl_levi(parabolic("b"))] == ["e"]


def test_kostant_examples():
    assert names(kostant_reps(parabolic("a1"))) == ["e", "1", "12", "123", "1232", "12321"]
    a3 = names(kostant_reps(parabolic("a3")))
    assert len(a3) == 8 and a3[-1] == "321323"
    assert len(kostant_reps(parabolic("b"))) == 48


@pytest.mark.parametrize("P", all_parabolics(), ids=lambda P: P.name)
def test_coset_count(P):
    assert len(kostant_reps(P)) * len(weyl_levi(P)) == 48


@pytest.mark.parametrize("P", all_parabolics(), ids=lambda P: P.name)
def test_conditions_a_and_b_agree(P):
    assert kostant_reps(P) == kostant_reps_condition_b(P)
    for w in enumerate_weyl():
        assert condition_a(P, w) == condition_b(P, w)


@pytest.mark.parametrize("P", all_parabolics(), ids=lambda P: P.name)
def test_unique_factorization(P):
    reps = [e.w for e in kostant_reps(P)]
    levi = weyl_levi(P)
    seen = {}
    for s in levi:
        for u in reps:
            w = multiply(s, u)
            assert w not in seen
            seen[w] = (s, u)
            assert length(w) == length(s) + length(u)
    assert len(seen) == 48


def test_nested_kostant_sets():
    for I, J in combinations(all_parabolics(), 2):
        if set(I.subset) < set(J.subset):
            assert set(names(kostant_reps(I))) <= set(names(kostant_reps(J)))


def test_kostant_match_examples():
    a1, a2, a12, b = (parabolic(n) for n in ("a1", "a2", "a12", "b"))
    assert kostant_match(a1, from_word("12"), a12, from_word("2132"))
    assert kostant_match(a2, from_word("213"), a12, from_word("1213"))
    assert not kostant_match(a12, from_word("232"), b, from_word("121"))
    with pytest.raises(ValueError):
        kostant_match(a12, from_word("e"), a1, from_word("e"))


def test_epsilon_examples():
    assert epsilon_sign("a2", "a12") == -1
    assert epsilon_sign("a2", "a23") == 1
    assert epsilon_sign("a13", "b") == 1
    with pytest.raises(ValueError):
        epsilon_sign("a1", "b")


def test_sign_coherence():
    b = parabolic("b")
    for I in (parabolic(n) for n in ("a1", "a2", "a3")):
        mids = [J for J in all_parabolics() if J.rank == 2 and set(I.subset) < set(J.subset)]
        assert len(mids) == 2
        j1, j2 = mids
        assert epsilon_sign(I, j1) * epsilon_sign(j1, b) == -epsilon_sign(I, j2) * epsilon_sign(j2, b)
