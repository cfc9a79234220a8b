from fractions import Fraction

import pytest

from modknot.linking import (
    cos_a,
    crossing_matrices,
    enumerate_crossings,
    intersection_number,
    link_equiv_witness,
    lk,
    lk_all,
    lk_oracle,
    lk_shift,
    lk_slp,
    oracle_crossings,
)
from modknot.modgroup import cosign_len, word_to_matrix
from modknot.words import canonicalize, coprime, enumerate_classes, transpose

import oracle


def test_reference_values():
    assert lk_all("RLL", "RRL") == {"shift": 1, "slp": 1, "oracle": 1}
    assert lk("RLL", "RLL") == 2
    assert intersection_number("RLL", "RLL") == 6
    assert intersection_number("RL", "RLL") == 4


def test_lk_table_against_oracle(frozen):
    for key, value in frozen["lk"].items():
        a, b = key.split(",")
        assert lk_shift(a, b) == value, key
        assert lk_slp(a, b) == value, key


def test_intersection_against_oracle(frozen):
    for key, value in frozen["intersection"].items():
        a, b = key.split(",")
        if coprime(a, b):
            assert len(enumerate_crossings(a, b)) == value, key
            assert intersection_number(a, b) == value, key


def test_self_linking_pattern_sum(frozen):
    assert str(lk_slp("RLL", "RLL")) == frozen["lk_patterns_RLL_RLL"]


def test_crossing_sets_and_cosign():
    classes = enumerate_classes(5, "hyperbolic", primitive=True)
    for a in classes:
        for b in classes:
            if a == b or not coprime(a, b):
                continue
            found = enumerate_crossings(a, b)
            assert set(found) == set(oracle_crossings(a, b))
            for c in found:
                assert cosign_len(*crossing_matrices(a, b, c)) == c.cosign


def test_long_overlap_pairs():
    # pairs whose periodizations share factors longer than both words
    for a, b in [("RRLL", "RRLLRL"), ("RRLLL", "RRLRLLL")]:
        assert lk_shift(a, b) == lk_slp(a, b) == lk_oracle(a, b) == oracle.lk_geometric(a, b)
        assert lk_slp(a, b) == oracle.lk_patterns(a, b, len(a) + len(b))


def test_symmetry():
    for a, b in [("RLL", "RRLRL"), ("RRRL", "RRLLL")]:
        assert lk(a, b) == lk(b, a)
        assert lk(a, b) == lk(transpose(a), transpose(b))


def test_parabolic_and_torsion():
    assert lk("RLL", "R") == 0
    assert cos_a("RLL", "R") == 0
    assert cos_a("RRL", "S-class") == 0
    assert cos_a("R", "RRLRL") == 1


def test_cos_a_homogeneous():
    for a in ("RRL", "RRRLL"):
        for b in ("RLL", "RRLRL", "RRL"):
            v = cos_a(a, b)
            for n in range(2, 6):
                assert cos_a(a, canonicalize(b).power(n)) == n * v


def test_cos_a_matches_quasimorphism_limit():
    # f(A) = lim f(A^n X) / n for homogeneous quasi-morphisms
    for a in ("RRL", "RRRLL"):
        vals = [cos_a(a, a * n + "R") for n in (4, 8)]
        assert Fraction(vals[1] - vals[0], 4) == cos_a(a, a)


def test_not_coprime_rejected():
    with pytest.raises(ValueError):
        lk_shift("RL", "RLRL")
    with pytest.raises(ValueError):
        enumerate_crossings("RL", "RRR")


def test_matrix_inputs():
    assert lk(word_to_matrix("RLL"), word_to_matrix("LRR")) == 1


def test_witness():
    assert link_equiv_witness("RL", "RRL", 3) is not None
    assert link_equiv_witness("RRLLRL", "RRLRLL", 6, coprime_only=True) is None
    assert link_equiv_witness("RRLLRL", "RRLRLL", 7, coprime_only=True).canonical == "RRLLLRL"
