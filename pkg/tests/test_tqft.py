"""State spaces, Verlinde cross-checks and the torus representation."""

import itertools
import json

import pytest

from c2spider import cat, tqft
from c2spider.tqft import (Spine, curve_operator_torus, mat_identity, mat_mul,
                           mat_eq, normalize_curve, proportional, torus_rep)


def test_spine_validation():
    Spine.theta_graph().validate()
    Spine.dumbbell().validate()
    Spine.torus().validate()
    with pytest.raises(ValueError):
        Spine(2, ((0, 1), (0, 1))).validate()        # degree 2
    with pytest.raises(ValueError):
        Spine(4, ((0, 1), (0, 1), (0, 1), (2, 3), (2, 3), (2, 3))).validate()


def test_spine_genus():
    assert Spine.torus().genus() == 1
    assert Spine.theta_graph().genus() == 2
    assert Spine.dumbbell().genus() == 2


def test_spine_json_roundtrip():
    for sp in (Spine.theta_graph(), Spine.dumbbell(), Spine.torus()):
        blob = json.dumps(sp.to_json(), sort_keys=True)
        again = Spine.from_json(json.loads(blob))
        assert again == sp


def test_torus_statespace():
    for k in (0, 1, 2, 3):
        assert tqft.statespace_dim(Spine.torus(), k) == len(cat.simples(k))
    assert tqft.statespace_dim(Spine.torus(), 1) == 3


def test_genus_two_basis_independence_and_verlinde():
    for k in (1, 2):
        th = tqft.statespace_dim(Spine.theta_graph(), k)
        db = tqft.statespace_dim(Spine.dumbbell(), k)
        vd = tqft.verlinde_dim(2, k)
        assert th == db == vd


def test_verlinde_genus_one():
    for k in (1, 2, 3):
        assert tqft.verlinde_dim(1, k) == len(cat.simples(k))


def test_modular_relation_on_torus_rep():
    for k in (1, 2):
        rep = torus_rep(k)
        n = len(rep.md.simples)
        st = mat_mul(rep.s, rep.t)
        st3 = mat_mul(st, mat_mul(st, st))
        s2 = mat_mul(rep.s, rep.s)
        phase = proportional(st3, s2)
        assert phase is not None and not phase.is_zero()
        # identity word acts as the identity
        m, m_inv = rep.word_matrix(())
        assert mat_eq(m, mat_identity(n, rep.md.order))
        # twist is diagonal with the twist eigenvalues
        for i in range(n):
            assert rep.t[i][i] == rep.md.t_diag[i]


def test_curve_normalization_and_action():
    assert normalize_curve(-2, 4) == (1, -2)
    assert normalize_curve(0, -3) == (0, 1)
    assert tqft.act_on_curve(("t",), (0, 1)) == (1, 1)
    assert tqft.act_on_curve(("s",), (1, 0)) == (0, 1)
    with pytest.raises(ValueError):
        normalize_curve(0, 0)


def test_curve_operator_unit_entry():
    for k in (1, 2):
        md = torus_rep(k).md
        cm = curve_operator_torus("meridian", k)
        assert cm[0][0] == cat.qdim_at((1, 0), md.order)
        # diagonality
        n = len(md.simples)
        for i in range(n):
            for j in range(n):
                if i != j:
                    assert cm[i][j].is_zero()


def test_twist_fixes_meridian_operator():
    for k in (1, 2):
        assert tqft.conjugation_identity_holds(("t",), (1, 0), k)


def test_conjugation_identity_words_up_to_three():
    for k in (1, 2):
        for length in range(4):
            for word in itertools.product("st", repeat=length):
                for curve in ((1, 0), (0, 1)):
                    assert tqft.conjugation_identity_holds(word, curve, k), \
                        (k, word, curve)
