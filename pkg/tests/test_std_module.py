from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tlstab import linalg
from tlstab.diagram import Word, compose, enumerate_diagrams, eval_word, generator
from tlstab.link_state import enumerate_states
from tlstab.std_module import (MatrixRep, all_diagram_matrices, conjugate, direct_sum, from_json, gram_matrix,
                               pairing, rep_of_diagram, rep_of_word, standard_matrix, standard_rep, to_json,
                               verify_relations)

from . import oracles


@pytest.mark.parametrize("n,p", [(n, p) for n in range(2, 9) for p in range(1, n // 2 + 1)])
def test_standard_reps_satisfy_relations(n, p):
    rep = standard_rep(n, p)
    assert rep.dim == len(enumerate_states(n, p))
    report = verify_relations(rep)
    assert report.ok, report.violations


def test_standard_rep_v31():
    rep = standard_rep(3, 1)
    # basis |() , ()|
    assert rep.generators[1] == [[0, 0], [1, 1]]
    assert rep.generators[2] == [[1, 1], [0, 0]]


@pytest.mark.parametrize("n,p", [(4, 1), (5, 2), (6, 2)])
def test_diagram_table_two_routes(n, p):
    # word products against direct reading of the action on states
    rep = standard_rep(n, p)
    table = all_diagram_matrices(rep)
    assert set(table) == set(enumerate_diagrams(n))
    for a, m in table.items():
        assert m == standard_matrix(a, p)
        assert rep_of_diagram(rep, a) == m


@given(st.integers(3, 7).flatmap(lambda n: st.tuples(
    st.integers(1, n // 2),
    st.lists(st.integers(1, n - 1), max_size=8).map(lambda ls: Word(n, ls)),
    st.lists(st.integers(1, n - 1), max_size=8).map(lambda ls: Word(n, ls)))))
def test_rep_is_multiplicative(case):
    p, w1, w2 = case
    rep = standard_rep(w1.n, p)
    both = Word(w1.n, w1.letters + w2.letters)
    assert rep_of_word(rep, both) == linalg.matmul(rep_of_word(rep, w1), rep_of_word(rep, w2))
    assert rep_of_word(rep, both) == standard_matrix(compose(eval_word(w1), eval_word(w2)), p)


@pytest.mark.parametrize("n", range(2, 9))
def test_gram_matrix_matches_graph_oracle(n):
    for p in range(1, n // 2 + 1):
        states = enumerate_states(n, p)
        expected = [[oracles.pairing_oracle(v.word(), w.word()) for w in states] for v in states]
        assert gram_matrix(n, p) == expected


def test_gram_symmetric_and_v31_radical():
    g = gram_matrix(3, 1)
    assert g == [[1, 1], [1, 1]]
    for n in range(2, 8):
        for p in range(1, n // 2 + 1):
            m = gram_matrix(n, p)
            assert m == linalg.transpose(m)


def test_pairing_is_invariant_form():
    # <a v, w> = <v, a* w> where a* is the vertical flip
    n, p = 5, 1
    states = enumerate_states(n, p)
    rep = standard_rep(n, p)
    g = gram_matrix(n, p)
    for i in range(1, n):
        m = rep.generators[i]
        assert linalg.matmul(linalg.transpose(m), g) == linalg.matmul(g, m)
    assert pairing(states[0], states[0]) == 1


def test_relation_violations_reported():
    rep = standard_rep(3, 1)
    bad = MatrixRep(3, 2, {1: rep.generators[1], 2: [[1, 0], [0, 0]]})
    report = verify_relations(bad)
    assert not report.ok
    assert any("u1u2u1" in v for v in report.violations)


def test_shape_validation():
    with pytest.raises(ValueError):
        MatrixRep(3, 2, {1: [[1, 0], [0, 1]]})
    with pytest.raises(ValueError):
        MatrixRep(3, 2, {1: [[1, 0]], 2: [[1, 0], [0, 1]]})
    with pytest.raises(ValueError):
        standard_rep(3, 2)


def test_direct_sum_and_conjugate():
    s = direct_sum([standard_rep(4, 1), standard_rep(4, 2)])
    assert s.dim == 5 and verify_relations(s).ok
    assert s.labels[0].startswith("0:") and s.labels[-1].startswith("1:")
    empty = direct_sum([], n=4)
    assert empty.dim == 0 and verify_relations(empty).ok
    with pytest.raises(ValueError):
        direct_sum([])
    p = [[1, 1, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 2, 0, 0], [0, 0, 0, 1, 3], [0, 0, 0, 0, 1]]
    c = conjugate(s, p)
    assert verify_relations(c).ok
    assert c.generators[1] != s.generators[1]


def test_json_round_trip_with_fractions():
    rep = conjugate(standard_rep(4, 1), [[2, 0, 0], [0, 1, 0], [1, 0, 1]])
    assert any(isinstance(x, Fraction) for m in rep.generators.values() for row in m for x in row)
    back = from_json(to_json(rep))
    assert back.generators == rep.generators and back.n == 4


def test_generator_matrix_is_generator_action():
    rep = standard_rep(5, 2)
    for i in range(1, 5):
        assert rep.generators[i] == standard_matrix(generator(5, i), 2)


def test_equal_diagrams_give_equal_matrices():
    import random

    rng = random.Random(5)
    for n in range(3, 7):
        rep = standard_rep(n, 1 + (n > 3))
        seen = {}
        for _ in range(300):
            w = Word(n, [rng.randrange(1, n) for _ in range(rng.randrange(0, 7))])
            a = eval_word(w)
            m = rep_of_word(rep, w)
            if a in seen:
                assert seen[a] == m
            seen[a] = m


@pytest.mark.parametrize("n", range(2, 7))
def test_basis_states_generate(n):
    from tlstab.decomp import diagram_span_dim

    for p in range(1, n // 2 + 1):
        rep = standard_rep(n, p)
        for j in range(rep.dim):
            assert diagram_span_dim(rep, [int(k == j) for k in range(rep.dim)]) == rep.dim
