from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from tlstab import linalg
from tlstab.comb import d
from tlstab.decomp import (Decomposition, DecompositionError, certify_decomposition, cyclic_span, decompose,
                           diagram_span_dim, e_ranks, grothendieck_quotient, restrict)
from tlstab.link_state import enumerate_states
from tlstab.std_module import MatrixRep, conjugate, direct_sum, standard_rep, verify_relations


def sum_of_standards(n, mult):
    reps = [standard_rep(n, p) for p, m in enumerate(mult, start=1) for _ in range(m)]
    return direct_sum(reps, n=n)


def random_invertible(dim, rng):
    while True:
        m = [[rng.randint(-2, 2) for _ in range(dim)] for _ in range(dim)]
        if linalg.rank(m) == dim:
            return m


def trivial_rep(n):
    return MatrixRep(n, 1, {i: [[1]] for i in range(1, n)})


def test_worked_examples():
    assert decompose(standard_rep(5, 2)).mult == (0, 1)
    assert decompose(sum_of_standards(4, (2, 1))).mult == (2, 1)
    assert decompose(sum_of_standards(6, (0, 0, 0))).mult == (0, 0, 0)


@pytest.mark.parametrize("n", range(2, 9))
def test_rank_law(n):
    for q in range(1, n // 2 + 1):
        ranks = e_ranks(standard_rep(n, q))
        for p in range(1, n // 2 + 1):
            assert ranks[p - 1] == (d(n - 2 * p, q - p) if p <= q else 0)


def test_non_standard_raises_or_flags():
    # a zero action looks like nothing at all: consistent is false
    zero = MatrixRep(4, 2, {i: [[0, 0], [0, 0]] for i in range(1, 4)})
    dec = decompose(zero)
    assert dec.mult == (0, 0) and not dec.consistent
    # trivial plus V_{4,2} has too much rank at p=1 relative to p=2: still non-negative, inconsistent
    dec = decompose(direct_sum([trivial_rep(4), standard_rep(4, 2)]))
    assert not dec.consistent
    with pytest.raises(DecompositionError):
        decompose(MatrixRep(3, 1, {1: [[1]], 2: [[0]]}))


def test_negative_multiplicity_raises():
    # the trivial TL_5 module has E-ranks (1, 1), so s_1 = 1 - d(3, 1) * 1 = -1
    rep = trivial_rep(5)
    with pytest.raises(DecompositionError) as err:
        decompose(rep)
    assert err.value.p == 1


def test_certificate_distinguishes_equal_ranks():
    # trivial + V_{5,1} and V_{5,2} have the same E-ranks (2, 1) and the same dimension 5
    fake = direct_sum([trivial_rep(5), standard_rep(5, 1)])
    real = standard_rep(5, 2)
    assert e_ranks(fake) == e_ranks(real)
    dec_fake, dec_real = decompose(fake, certify=True), decompose(real, certify=True)
    assert dec_fake.mult == dec_real.mult == (0, 1)
    assert dec_real.certified is True
    assert dec_fake.certified is False


def test_certificate_is_an_isomorphism():
    rng = random.Random(3)
    base = sum_of_standards(5, (1, 1))
    rep = conjugate(base, random_invertible(base.dim, rng))
    change = certify_decomposition(rep, (1, 1))
    assert change is not None
    # columns ordered highest p first: V_{5,2} then V_{5,1}
    model = direct_sum([standard_rep(5, 2), standard_rep(5, 1)])
    for i in range(1, 5):
        assert linalg.matmul(rep.generators[i], change) == linalg.matmul(change, model.generators[i])


@settings(max_examples=25)
@given(st.integers(2, 6).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.integers(0, 2), min_size=n // 2, max_size=n // 2), st.integers(0, 10 ** 6))))
def test_basis_change_invariance(case):
    n, mult, seed = case
    rep = sum_of_standards(n, mult)
    if rep.dim == 0:
        return
    conj = conjugate(rep, random_invertible(rep.dim, random.Random(seed)))
    assert decompose(conj).mult == decompose(rep).mult == tuple(mult)
    assert verify_relations(conj).ok


def test_cyclic_span_of_basis_state_is_everything():
    for n in range(2, 8):
        for p in range(1, n // 2 + 1):
            rep = standard_rep(n, p)
            for j in range(rep.dim):
                v = [int(k == j) for k in range(rep.dim)]
                dim, _, dec = cyclic_span(rep, v)
                assert dim == rep.dim
                assert dec is not None and dec.mult[p - 1] == 1


def test_cyclic_span_radical_vector():
    # |() - ()| lies in the radical of V_{3,1}: it spans a one-dimensional trivial-looking submodule
    rep = standard_rep(3, 1)
    dim, basis, dec = cyclic_span(rep, [1, -1])
    assert dim == 1
    assert diagram_span_dim(rep, [1, -1]) == 1


@pytest.mark.parametrize("n,p", [(4, 1), (5, 1), (6, 2)])
def test_cyclic_span_dual_route(n, p):
    rep = standard_rep(n, p)
    rng = random.Random(n * 10 + p)
    for _ in range(5):
        v = [rng.randint(-2, 2) for _ in range(rep.dim)]
        assert cyclic_span(rep, v)[0] == diagram_span_dim(rep, v)


def test_doubled_module_not_cyclic_from_one_copy():
    rep = sum_of_standards(5, (2, 0))
    v = [1] + [0] * (rep.dim - 1)
    assert cyclic_span(rep, v)[0] == d(5, 1)


def test_restrict_to_summand():
    rep = sum_of_standards(4, (1, 1))
    basis = [[int(k == j) for k in range(rep.dim)] for j in range(3)]
    sub = restrict(rep, basis)
    assert sub.generators == standard_rep(4, 1).generators
    with pytest.raises(ValueError):
        cyclic_span(rep, [1, 0])


def test_grothendieck_quotient():
    dec = Decomposition(6, (2, 1, 1), True)
    assert grothendieck_quotient(dec, [1]).mult == (0, 1, 1)
    assert grothendieck_quotient(dec, []).mult == (2, 1, 1)
    with pytest.raises(ValueError):
        grothendieck_quotient(dec, [4])


def test_decomposition_json():
    dec = decompose(standard_rep(4, 2), certify=True)
    assert dec.to_json() == {"n": 4, "mult": [0, 1], "consistent": True, "certified": True}


def test_states_count_in_decomposition_dimension():
    rep = sum_of_standards(6, (1, 0, 2))
    assert rep.dim == len(enumerate_states(6, 1)) + 2 * len(enumerate_states(6, 3))
    assert decompose(rep).consistent
