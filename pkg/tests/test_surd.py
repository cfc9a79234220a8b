import random
from fractions import Fraction

import pytest

from modknot.modgroup import IDENTITY, L, R, S, T, word_to_matrix
from modknot.surd import INF, QuadSurd, act, axes_cross, compare, cord, cross, fixed_points

import oracle


def test_cord_normalization():
    assert cord(0, 1, INF) == 1
    assert cord(1, 0, INF) == -1
    assert cord(0, 0, 1) == 0
    assert cord(0, 2, 1) == -1
    assert cord(0, INF, 1) == -1


def test_cross_examples():
    assert cross(-1, 1, 0, INF) == Fraction(1)
    assert cross(-1, 1, INF, 0) == Fraction(-1)
    # swapping the two geodesics flips the sign
    assert cross(0, INF, -1, 1) == Fraction(-1)
    assert cross(0, 1, 2, 3) == 0


def test_exact_compare():
    a = QuadSurd.make(0, 1, 2)  # sqrt 2
    b = QuadSurd.rational(Fraction(99, 70))
    c = QuadSurd.rational(Fraction(140, 99))
    assert compare(a, b) < 0 and compare(a, c) > 0
    assert compare(QuadSurd.make(1, 1, 5, 2), QuadSurd.make(0, 1, 3)) < 0  # golden ratio < sqrt 3
    assert compare(QuadSurd.make(0, 2, 2), QuadSurd.make(0, 1, 8)) == 0


def test_fixed_points_match_decimal():
    for w in ("RL", "RLL", "RRLRL", "RRRLLL"):
        lo, hi = fixed_points(word_to_matrix(w))
        ref = oracle.ends(oracle.mat(w))
        assert abs(float(lo) - float(ref[0])) < 1e-12
        assert abs(float(hi) - float(ref[1])) < 1e-12
        m = word_to_matrix(w)
        assert compare(act(m, hi), hi) == 0 and compare(act(m, lo), lo) == 0


def test_cord_invariant_under_modular_action():
    rng = random.Random(11)
    pts = [fixed_points(word_to_matrix(w))[k] for w in ("RL", "RLL", "RRL", "RRLRL") for k in (0, 1)]
    for _ in range(200):
        g = IDENTITY
        for _ in range(rng.randint(1, 6)):
            g = g @ rng.choice((S, T, R, L))
        x, y, z = rng.sample(pts, 3)
        assert cord(act(g, x), act(g, y), act(g, z)) == cord(x, y, z)


def test_cross_antisymmetric():
    a, b = word_to_matrix("RLL"), word_to_matrix("LRR")
    assert axes_cross(a, b) == (1, -axes_cross(b, a)[1])


def test_common_endpoint_raises():
    m = word_to_matrix("RL")
    with pytest.raises(ValueError, match="common endpoint"):
        axes_cross(m, m.conj(S))
