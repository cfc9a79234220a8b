import pytest
from hypothesis import given, strategies as st

from modknot.words import (
    CyclicWord,
    canonicalize,
    coprime,
    enumerate_classes,
    factor_counts,
    is_lyndon_positive,
    occ,
    periodized_compare,
    rotate,
    transpose,
    word_transpose,
)

import oracle

words = st.text(alphabet="LR", min_size=1, max_size=12)


@pytest.mark.parametrize(
    "w, canon",
    [("LRR", "RRL"), ("RL", "RL"), ("LR", "RL"), ("RLRL", "RLRL"), ("LLR", "RLL"), ("R", "R")],
)
def test_canonical_form(w, canon):
    assert canonicalize(w).canonical == canon


def test_power_and_root():
    a = canonicalize("RLRL")
    assert a.multiplicity == 2 and a.root == "RL" and not a.is_primitive
    assert a.primitive == canonicalize("RL")
    assert canonicalize("RL").power(3) == canonicalize("RLRLRL")


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        canonicalize("RXL")
    with pytest.raises(ValueError):
        canonicalize("")
    with pytest.raises(ValueError):
        occ("", "RL")


def test_transpose_examples():
    assert word_transpose("RRL") == "RLL"
    assert transpose("RRL") == canonicalize("RLL")
    assert transpose("RL") == canonicalize("RL")


@pytest.mark.parametrize("p, w, n", [("R", "RLL", 1), ("LL", "RLL", 1), ("RLLR", "RLL", 1), ("RL", "RLRL", 2), ("RR", "R", 1)])
def test_occ_cyclic(p, w, n):
    assert occ(p, w) == n


@given(words)
def test_canonical_is_max_rotation(w):
    assert canonicalize(w).canonical == oracle.canon(w)


@given(words, st.integers(0, 30))
def test_rotation_invariance(w, k):
    assert canonicalize(rotate(w, k)) == canonicalize(w)


@given(words)
def test_transpose_is_involution(w):
    a = canonicalize(w)
    assert a.transpose().transpose() == a
    assert a.transpose().canonical == oracle.tr_word(w)


@given(words, st.integers(1, 6))
def test_factor_counts_match_scan(w, n):
    counts = factor_counts(w, n)
    assert sum(counts.values()) == len(w)
    for p, k in counts.items():
        assert k == oracle.occ(p, w)


@given(words, words)
def test_periodized_compare_antisymmetric(a, b):
    assert periodized_compare(a, b) == -periodized_compare(b, a)
    if periodized_compare(a, b) == 0:
        assert not coprime(a, b)


def test_enumeration_counts():
    # necklace counts over two letters: 2, 3, 4, 6, 8, 14
    sizes = [len([a for a in enumerate_classes(n) if len(a) == n]) for n in range(1, 7)]
    assert sizes == [2, 3, 4, 6, 8, 14]
    assert [a.canonical for a in enumerate_classes(5, "hyperbolic", primitive=True)] == oracle.classes(5)


def test_lyndon_positive_half():
    names = [a.canonical for a in enumerate_classes(4, "lyndon_positive")]
    assert names == ["R", "RRL", "RRRL"]
    assert not is_lyndon_positive(canonicalize("L"))
    assert not is_lyndon_positive(canonicalize("RL"))


def test_cyclicword_validation():
    with pytest.raises(ValueError):
        CyclicWord("LRR", 1)
    assert canonicalize("RLL").rad == -1
