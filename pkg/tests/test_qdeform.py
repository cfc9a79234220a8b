import numpy as np
import pytest

from modknot.laurent import Laurent
from modknot.modgroup import S, word_to_matrix
from modknot.qdeform import (
    L_Q,
    R_Q,
    S_Q,
    T_Q,
    cos_numerator,
    cos_pair_q,
    disc_q,
    fricke_trace,
    q_matrix,
    rho_q,
)
from modknot.words import enumerate_classes


def test_generators():
    assert (T_Q @ S_Q).neg() == R_Q
    assert (T_Q @ T_Q @ S_Q).neg() == L_Q
    assert (S_Q @ S_Q).neg() == q_matrix("RL").__class__(*(Laurent.const(x) for x in (1, 0, 0, 1)))


def test_fricke_against_oracle(frozen):
    for w, sparse in frozen["fricke"].items():
        assert fricke_trace(w).sparse() == sparse


def test_fricke_examples():
    assert str(fricke_trace("RL")) == "q^2 + 1 + q^-2"
    assert str(disc_q("R")) == "q^2 - 2 + q^-2"
    assert q_matrix("RL").entries() == (Laurent({2: 1, 0: 1}), Laurent({-1: 1}), Laurent({-1: 1}), Laurent({-2: 1}))


def test_rho_q_agrees_up_to_sign():
    for a in enumerate_classes(5):
        m = q_matrix(a)
        r = rho_q(word_to_matrix(a))
        assert r == m or r.neg() == m


def test_conj_s_is_inverse_transpose():
    m = q_matrix("RRLRL")
    t = m.conj_S()
    assert (t.a, t.b, t.c, t.d) == (m.d, -m.c, -m.b, m.a)


def test_cos_limits():
    assert cos_pair_q("RLL", "LRR", 32) == pytest.approx(1, abs=0.01)
    assert cos_pair_q(q_matrix("RLL"), q_matrix("LRR").conj_S(), 32) == pytest.approx(-1, abs=0.01)


def test_cos_matches_integer_geometry():
    a, b = word_to_matrix("RLL"), word_to_matrix("LRR")
    ta, tb = a.trace, b.trace
    ref = ((a @ b).trace - (a @ b.inv()).trace) / np.sqrt((ta * ta - 4) * (tb * tb - 4))
    assert cos_pair_q("RLL", "LRR", 1) == pytest.approx(ref)
    assert cos_numerator("RLL", "LRR")(1.0) == pytest.approx((a @ b).trace - (a @ b.inv()).trace)


def test_pole():
    with pytest.raises(ZeroDivisionError):
        cos_pair_q("R", "RL", 1.0)
