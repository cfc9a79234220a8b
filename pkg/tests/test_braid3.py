import pytest

from modknot.braid3 import BURAU, IDENTITY_T, alexander, braid_of, burau, fricke_alexander_check, fricke_side
from modknot.laurent import Laurent
from modknot.words import enumerate_classes, rotate, transpose


def test_braid_of():
    assert braid_of("RL") == ["s2", "s1^-1"]
    assert braid_of("R") == ["s2"]
    assert braid_of("LLR") == ["s1^-1", "s1^-1", "s2"]


def test_burau_relations():
    assert burau(["s1", "s1^-1"]) == IDENTITY_T
    assert burau(["s2", "s2^-1"]) == IDENTITY_T
    assert burau(["s1", "s2", "s1"]) == burau(["s2", "s1", "s2"])
    assert burau(["s2"]).det() == Laurent({1: -1}, "t")
    with pytest.raises(ValueError):
        burau(["s3"])


def test_alexander_against_oracle(frozen):
    for w, sparse in frozen["alexander"].items():
        assert alexander(w).sparse() == sparse, w


def test_anchor_and_rotation():
    assert alexander("RL") == Laurent.const(1, "t")
    assert alexander(rotate("RRLRL", 2)) == alexander("RRLRL")


def test_fricke_alexander_sweep():
    for a in enumerate_classes(7, "hyperbolic"):
        assert fricke_alexander_check(a), a
        assert alexander(transpose(a)) == alexander(a).invert_var().normalized()
        assert burau(braid_of(a)).det() == Laurent({a.rad: (-1) ** abs(a.rad)}, "t")


def test_fricke_side_rl():
    assert fricke_side("RL") == Laurent.const(1, "t")
    with pytest.raises(ValueError):
        fricke_alexander_check("RRR")
