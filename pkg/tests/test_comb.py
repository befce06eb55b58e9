from __future__ import annotations

import math

import pytest
from hypothesis import given, strategies as st

from tlstab.comb import (Composition, FiltrationProfile, check_hddr, closed_coefficient, compositions, d, d_lambda,
                         multiplicity_closed, multiplicity_recursive, profile_of_sum)
from tlstab.link_state import enumerate_states

from . import oracles


def test_compositions_match_cut_points():
    for m in range(1, 11):
        got = [c.parts for c in compositions(m)]
        assert set(got) == oracles.compositions_oracle(m)
        assert len(got) == 2 ** (m - 1) == len(set(got))


def test_composition_order():
    assert [c.parts for c in compositions(3)] == [(1, 1, 1), (2, 1), (1, 2), (3,)]


def test_composition_guards():
    with pytest.raises(ValueError):
        compositions(0)
    with pytest.raises(ValueError):
        compositions(21)
    with pytest.raises(ValueError):
        Composition((2, 0))


def test_d_matches_state_count():
    for n in range(0, 13):
        for p in range(-1, n):
            want = len(enumerate_states(n, p)) if 0 <= p and 2 * p <= n and n >= 1 else (1 if n == 0 == p else 0)
            assert d(n, p) == want


def test_d_lambda_worked_values():
    assert d_lambda(6, (1, 1)) == d(6, 1) * d(4, 1) == 15
    assert d_lambda(6, (2, 1)) == d(6, 2) * d(2, 1) == 9
    assert d_lambda(4, (3,)) == 0


def _d_lambda_oracle(r, parts):
    # straight from the product definition, exponent r - 2 * (sum of earlier parts)
    out, used = 1, 0
    for part in parts:
        n = r - 2 * used
        out *= (math.comb(n, part) - math.comb(n, part - 1)) if n >= 2 * part else 0
        used += part
    return out


def test_d_lambda_oracle_table():
    for r in range(0, 13):
        for m in range(1, 7):
            for lam in compositions(m):
                assert d_lambda(r, lam) == _d_lambda_oracle(r, lam.parts)


def test_hddr_identity():
    for r in range(0, 13):
        for m in range(1, 7):
            for mu in compositions(m):
                for t in range(1, 7):
                    assert check_hddr(r, t, mu)


def test_closed_coefficient_is_signed_sum():
    for r in range(0, 10):
        for m in range(1, 6):
            assert closed_coefficient(r, m) == sum((-1) ** len(l.parts) * _d_lambda_oracle(r, l.parts)
                                                   for l in compositions(m))


def test_profile_validation():
    with pytest.raises(ValueError):
        FiltrationProfile(5, 1, (1,))
    with pytest.raises(ValueError):
        FiltrationProfile(4, 1, (1, -1))


def test_worked_multiplicities():
    f = FiltrationProfile(5, 2, (2, 1))
    assert multiplicity_closed(f).mult == multiplicity_recursive(f).mult == (0, 1)
    f = FiltrationProfile(4, 1, (3, 1))
    assert multiplicity_closed(f).mult == (2, 1)
    f = FiltrationProfile(6, 1, (0, 0, 0))
    assert multiplicity_closed(f).mult == (0, 0, 0)


def test_unrealizable_profile_flagged():
    m = multiplicity_closed(FiltrationProfile(4, 1, (0, 1)))
    assert m.mult == (-1, 1) and not m.realizable


@given(st.integers(1, 14).flatmap(lambda n: st.lists(st.integers(0, 50), min_size=n // 2, max_size=n // 2)
                                  .map(lambda b: FiltrationProfile(n, 1, tuple(b)))))
def test_closed_equals_recursive(profile):
    assert multiplicity_closed(profile).mult == multiplicity_recursive(profile).mult


@given(st.integers(2, 14).flatmap(lambda n: st.lists(st.integers(0, 6), min_size=n // 2, max_size=n // 2)
                                  .map(lambda m: (n, tuple(m)))))
def test_profile_of_sum_inverts(case):
    n, mult = case
    assert multiplicity_closed(profile_of_sum(n, mult)).mult == mult


def test_total_dimension_matches_decomposer():
    import random

    from tlstab.decomp import decompose
    from tlstab.std_module import direct_sum, standard_rep

    rng = random.Random(2)
    for _ in range(15):
        n = rng.randrange(2, 7)
        mult = tuple(rng.randrange(0, 3) for _ in range(n // 2))
        rep = direct_sum([standard_rep(n, p) for p, m in enumerate(mult, 1) for _ in range(m)], n=n)
        s = multiplicity_closed(profile_of_sum(n, mult)).mult
        assert sum(x * d(n, p) for p, x in enumerate(s, 1)) == rep.dim
        assert decompose(rep).mult == s


def test_worked_d_lambda():
    assert d_lambda(8, (2, 1)) == 60 == d(8, 2) * d_lambda(4, (1,))
    assert d_lambda(7, (3,)) == d(7, 3)
