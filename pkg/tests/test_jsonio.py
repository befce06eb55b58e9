from __future__ import annotations

import json

from hypothesis import given, strategies as st

from tlstab import jsonio
from tlstab.builders import build_wedge, glued_spheres, projective_plane
from tlstab.comb import FiltrationProfile
from tlstab.decomp import decompose
from tlstab.diagram import Word, eval_word
from tlstab.link_state import all_states
from tlstab.space import homology_rep, quotient_by_Q, verify_space
from tlstab.stability import check_ls_module, standard_chain


@given(st.integers(2, 7).flatmap(lambda n: st.lists(st.integers(1, n - 1), max_size=8).map(lambda ls: Word(n, ls))))
def test_diagram_round_trip(w):
    a = eval_word(w)
    back = jsonio.diagram_from_json(json.loads(jsonio.dumps(jsonio.diagram_to_json(a))))
    assert back == a and back.loop_count == a.loop_count


def test_state_round_trip():
    for v in all_states(6):
        data = jsonio.state_to_json(v)
        assert jsonio.state_from_json(json.loads(json.dumps(data))) == v
        assert data["word"] == v.word()


def test_profile_round_trip():
    f = FiltrationProfile(6, 2, (4, 2, 1))
    assert jsonio.profile_from_json(jsonio.profile_to_json(f)) == f


def test_wedge_round_trip():
    y = build_wedge(5, [(1, 1), (2, 1)], k=3)
    z = jsonio.space_from_json(json.loads(jsonio.dumps(jsonio.space_to_json(y))))
    assert z.cells == y.cells and z.k == 3
    assert all(z.image(i, c) == y.image(i, c) for i in range(1, 5) for c in y.pieces())


def test_simplicial_round_trip():
    for s in [glued_spheres(), projective_plane(), quotient_by_Q(glued_spheres())]:
        t = jsonio.space_from_json(json.loads(jsonio.dumps(jsonio.space_to_json(s))))
        assert t.simplices == s.simplices
        assert t.collapsed_simplices() == s.collapsed_simplices()
        assert verify_space(t).to_json() == verify_space(s).to_json()
    q = quotient_by_Q(glued_spheres())
    t = jsonio.space_from_json(jsonio.space_to_json(q))
    assert decompose(homology_rep(t, 2)).mult == (1,)


def test_chain_round_trip():
    chain = standard_chain(1, 2, 4)
    back = jsonio.chain_from_json(json.loads(jsonio.dumps(jsonio.chain_to_json(chain))))
    assert back.inclusions == chain.inclusions
    assert check_ls_module(back).ok


def test_dumps_is_deterministic():
    y = build_wedge(4, [(2, 1)])
    assert jsonio.dumps(jsonio.space_to_json(y)) == jsonio.dumps(jsonio.space_to_json(build_wedge(4, [(2, 1)])))
