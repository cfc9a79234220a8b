from fractions import Fraction

import pytest

from modknot.qmbasis import (
    FunctionalVec,
    basis_index,
    basis_matrices,
    bareiss,
    decompose,
    defect,
    det_exact,
    mas,
    named_functional,
    recombine,
    self_overlaps,
    solve_exact,
)
from modknot.words import canonicalize, enumerate_classes

import oracle


def test_mas_examples():
    assert mas("R", "RLL") == -1
    assert mas("RL", "RRLRL") == 0
    assert mas("RRL", "RRL") == 1
    assert mas("RRL", "T-class") == 0
    with pytest.raises(ValueError):
        mas("", "RL")


def test_mas_symmetries():
    for a in enumerate_classes(5):
        for p in ("R", "RRL", "RLL", "RRLL", "RRRL"):
            v = mas(p, a)
            assert v == oracle.mas(p, a.canonical)
            assert v == -mas(oracle.swap(p[::-1]), a) == -mas(p, a.transpose())
            for n in range(2, 5):
                assert mas(p, a.power(n)) == n * v
        assert mas("R", a) == a.rad


def test_defects():
    assert defect("mas:RRL", 500).max_defect <= 6
    assert not self_overlaps("RRL") and self_overlaps("RLR")
    assert defect("rad", 200).max_defect >= 0
    f = named_functional("cos:RRL")
    assert f("RRLRL") == -f(canonicalize("RRLRL").transpose())
    with pytest.raises(ValueError):
        named_functional("bogus")


def test_matrices_against_oracle(frozen):
    for m, ref in frozen["basis"].items():
        m = int(m)
        assert [a.canonical for a in basis_index(m)] == ref["index"]
        m_mas, m_cos = basis_matrices(m)
        assert m_mas == ref["mas"]
        assert det_exact(m_mas) == ref["mas_det"]
        for i, row in enumerate(ref["cos_offdiag"]):
            for j, v in enumerate(row):
                if v is not None:
                    assert m_cos[i][j] == v


def test_small_cases():
    assert basis_matrices(1) == ([[1]], [[1]])
    m_mas, m_cos = basis_matrices(3)
    assert m_cos[1][0] == 0


def test_bareiss():
    M = [[2, 1, 1], [1, 3, 2], [1, 0, 0]]
    assert det_exact(M) == -1
    assert det_exact([[0, 1], [1, 0]]) == -1
    assert det_exact([[1, 2], [2, 4]]) == 0
    x = solve_exact(M, [Fraction(1, 2), 0, Fraction(-3)])
    assert [sum(M[i][j] * x[j] for j in range(3)) for i in range(3)] == [Fraction(1, 2), 0, -3]
    with pytest.raises(ArithmeticError):
        solve_exact([[1, 2], [2, 4]], [1, 1])
    assert bareiss([[5]])[1] == 5


def test_decompositions():
    for m in range(1, 5):
        rad = FunctionalVec.of(lambda a: mas("R", a), m)
        c = decompose(rad, "cos")
        assert c.values == {k: (1 if k == "R" else 0) for k in c.values}
        assert recombine(decompose(rad, "mas"), "mas") == rad
    g = FunctionalVec.of(lambda a: mas("RRL", a), 4)
    c = decompose(g, "cos")
    assert recombine(c, "cos") == g
    e = FunctionalVec.of(named_functional("cos:RRL"), 3)
    assert decompose(e, "cos").values == {"R": 0, "RRL": 1}


def test_functional_csv(tmp_path):
    f = FunctionalVec.from_list(3, [Fraction(1, 3), -2])
    assert f.to_csv_rows() == [("R", "1/3"), ("RRL", "-2/1")]
    f.write_csv(tmp_path / "f.csv")
    assert FunctionalVec.read_csv(tmp_path / "f.csv", 3) == f
    with pytest.raises(ValueError):
        FunctionalVec(3, {"R": 1})
