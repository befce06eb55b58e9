from __future__ import annotations

import math

import pytest
from hypothesis import given, strategies as st

from tlstab.diagram import Diagram, Word, compose, enumerate_diagrams, eval_word, generator
from tlstab.link_state import (ZERO, LinkState, act, act_standard, all_states, back_to_back, dim_standard,
                               enumerate_states, include)

from . import oracles


def as_pairs(a):
    return frozenset(frozenset(pair) for pair in a.pairs())


@pytest.mark.parametrize("n", range(1, 9))
def test_states_match_string_filter(n):
    for p in range(n // 2 + 1):
        got = [v.word() for v in enumerate_states(n, p)]
        assert sorted(got) == sorted(oracles.link_words(n, p))
        assert len(set(got)) == len(got)


def test_dimension_formula_values():
    assert [dim_standard(6, p) for p in range(4)] == [1, 5, 9, 5]
    assert dim_standard(5, 3) == 0
    for n in range(1, 13):
        for p in range(n // 2 + 1):
            assert len(enumerate_states(n, p)) == math.comb(n, p) - (math.comb(n, p - 1) if p else 0)


def test_canonical_order():
    assert [str(v) for v in enumerate_states(3, 1)] == ["|()", "()|"]
    states = enumerate_states(6, 2)
    assert states == sorted(states)


def test_bad_p():
    with pytest.raises(ValueError):
        enumerate_states(3, 2)
    with pytest.raises(ValueError):
        enumerate_states(3, -1)


def test_constructors_agree():
    v = LinkState.from_word("()|")
    assert v == LinkState.from_cups(3, [(1, 2)])
    assert v.cups() == [(1, 2)] and v.defects() == [3] and v.p == 1
    with pytest.raises(ValueError):
        LinkState.from_word("(|)")  # defect under a cup
    with pytest.raises(ValueError):
        LinkState.from_word("(()")


def test_zero_singleton():
    from tlstab.link_state import _Zero
    import pickle

    assert _Zero() is ZERO
    assert pickle.loads(pickle.dumps(ZERO)) is ZERO


@pytest.mark.parametrize("n", range(2, 7))
def test_act_matches_graph_oracle(n):
    states = all_states(n) + enumerate_states(n, 0)
    for a in enumerate_diagrams(n):
        pairs = as_pairs(a)
        for v in states:
            assert act(a, v).word() == oracles.act_on_word(n, pairs, v.word())


@pytest.mark.parametrize("n", range(2, 6))
def test_action_law(n):
    ds = enumerate_diagrams(n)
    states = all_states(n)
    for a in ds:
        for b in ds:
            ab = compose(a, b)
            for v in states:
                assert act(ab, v) == act(a, act(b, v))


def test_act_standard_zero_when_cups_gained():
    u2 = generator(3, 2)
    # joining two defects closes a cup, which the standard module kills
    assert act_standard(generator(4, 3), LinkState.from_word("()||"), 1) is ZERO
    assert act(generator(4, 3), LinkState.from_word("()||")).word() == "()()"
    assert act_standard(u2, LinkState.from_word("()|"), 1) == LinkState.from_word("|()")
    assert act_standard(u2, LinkState.from_word("|()"), 1) == LinkState.from_word("|()")
    assert act_standard(generator(3, 1), LinkState.from_word("|()"), 1) == LinkState.from_word("()|")
    assert act_standard(u2, ZERO, 1) is ZERO


def test_act_standard_composition_law():
    n, p = 5, 1
    ds = enumerate_diagrams(n)
    for a in ds[::3]:
        for b in ds[::2]:
            for v in enumerate_states(n, p):
                assert act_standard(compose(a, b), v, p) == act_standard(a, act_standard(b, v, p), p)


def test_include_appends_defects():
    v = LinkState.from_word("()")
    assert include(v, 4).word() == "()||"
    assert include(include(v, 3), 5) == include(v, 5)
    with pytest.raises(ValueError):
        include(v, 1)


def test_back_to_back():
    v, w = LinkState.from_word("()|"), LinkState.from_word("|()")
    a = back_to_back(v, w)
    assert a.top_cups() == [(1, 2)] and a.bottom_cups() == [(2, 3)]
    assert act(a, w) == v
    with pytest.raises(ValueError):
        back_to_back(v, LinkState.from_word("|||"))


def test_warning_pair_tl6_agree_on_included_states():
    u4, u5 = generator(6, 4), generator(6, 5)
    a, b = compose(u5, u4), u5
    assert a != b
    for v in all_states(3):
        assert act(a, include(v, 6)) == act(b, include(v, 6))


@given(st.integers(2, 8).flatmap(lambda n: st.tuples(
    st.lists(st.integers(1, n - 1), max_size=10).map(lambda ls: Word(n, ls)),
    st.sampled_from(all_states(n)))))
def test_act_random_words_match_oracle(case):
    w, v = case
    a = eval_word(w)
    assert act(a, v).word() == oracles.act_on_word(w.n, as_pairs(a), v.word())


@pytest.mark.parametrize("n", range(2, 7))
def test_cup_count_never_drops(n):
    for a in enumerate_diagrams(n):
        for v in all_states(n):
            assert act(a, v).p >= v.p


def test_inclusion_equivariance_on_sets():
    from tlstab.diagram import pad

    for m in range(2, 6):
        for n in range(m + 1, 7):
            for a in enumerate_diagrams(m):
                big = pad(a, n)
                for v in all_states(m):
                    assert act(big, include(v, n)) == include(act(a, v), n)


def test_warning_pair_tl4_identical_on_m4():
    a = Diagram.from_pairs(4, [("t1", "t2"), ("t3", "t4"), ("b1", "b4"), ("b2", "b3")])
    b = Diagram.from_pairs(4, [("t1", "t2"), ("t3", "t4"), ("b1", "b2"), ("b3", "b4")])
    for v in all_states(4):
        assert act(a, v) == act(b, v) == LinkState.from_word("()()")


def test_worked_actions():
    assert act(generator(4, 2), LinkState.from_word("()()")).word() == "(())"
    assert act(generator(3, 1), LinkState.from_word("()|")).word() == "()|"
    v = LinkState.from_cups(5, [(1, 2), (4, 5)])
    assert include(v, 7).word() == "()|()||"
    assert include(v, 5) == v
