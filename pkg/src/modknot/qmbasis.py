"""Homogeneous quasi-morphisms on the modular group.

A homogeneous quasi-morphism that vanishes on the symmetric classes and
changes sign under transposition is determined by its values on
``L_m = {R} + {hyperbolic primitive classes in P+ of length <= m}``.
Two bases are compared there: the asymmetries ``mas_P`` and the functions
``Cos_A`` (with ``Cos_R = Rad``). All linear algebra is exact.
"""

from __future__ import annotations

import csv
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from pathlib import Path
from typing import Callable, Sequence

from .linking import ClassLike, as_class, cos_a
from .modgroup import IDENTITY, MatZ, S, T, T2, reduce_to_cycle
from .words import CyclicWord, canonicalize, check_word, enumerate_classes, occ, word_transpose


def mas(P: str, a: ClassLike) -> int:
    """``occ_P(a) - occ_tP(a)``; zero on torsion classes."""
    if not check_word(P, allow_empty=False):
        raise ValueError("empty pattern")
    a = as_class(a)
    if not isinstance(a, CyclicWord):
        return 0
    return occ(P, a) - occ(word_transpose(P), a)


def self_overlaps(P: str) -> bool:
    """Whether a proper prefix of ``P`` is also a suffix."""
    return any(P[:k] == P[-k:] for k in range(1, len(P)))


def named_functional(name: str) -> Callable[[ClassLike], int]:
    """``rad``, ``mas:P`` or ``cos:A`` as a function on classes (torsion tags allowed)."""
    kind, _, arg = name.partition(":")
    if kind == "rad" and not arg:
        return lambda x: mas("R", x)
    if kind == "mas" and arg:
        check_word(arg, allow_empty=False)
        return lambda x: mas(arg, x)
    if kind == "cos" and arg:
        A = canonicalize(arg)
        return lambda x: cos_a(A, x)
    raise ValueError(f"unknown functional {name!r}; use rad, mas:P or cos:A")


@dataclass
class DefectReport:
    name: str
    samples: int
    max_defect: Fraction
    worst: tuple[str, str] | None = None


def random_element(rng: random.Random, max_len: int) -> MatZ:
    """Product of up to ``max_len`` alternating S and T^{+-1} factors."""
    m = IDENTITY
    for k in range(rng.randint(1, max_len)):
        m = m @ (S if k % 2 else rng.choice((T, T2)))
    return m


def defect(name: str, samples: int = 500, max_len: int = 12, seed: int = 0) -> DefectReport:
    """Sampled ``max |f(X) + f(Y) - f(XY)|`` over random elements ``X, Y``."""
    f = named_functional(name)
    rng = random.Random(seed)
    best, worst = Fraction(0), None
    for _ in range(samples):
        X, Y = random_element(rng, max_len), random_element(rng, max_len)
        d = abs(Fraction(f(reduce_to_cycle(X)) + f(reduce_to_cycle(Y)) - f(reduce_to_cycle(X @ Y))))
        if d > best:
            best, worst = d, (str(X), str(Y))
    return DefectReport(name, samples, best, worst)


# basis ------------------------------------------------------------------

def basis_index(m: int) -> list[CyclicWord]:
    """``L_m`` in its fixed order (length, then word)."""
    return enumerate_classes(m, "lyndon_positive")


def cos_functional(X: CyclicWord) -> Callable[[CyclicWord], int]:
    return lambda A: cos_a(X, A)


def basis_matrices(m: int) -> tuple[list[list[int]], list[list[int]]]:
    """``M_mas[P][A] = mas_P(A)`` and ``M_cos[X][A] = Cos_X(A)`` over ``L_m``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    idx = basis_index(m)
    m_mas = [[mas(P.canonical, A) for A in idx] for P in idx]
    m_cos = [[cos_a(X, A) for A in idx] for X in idx]
    return m_mas, m_cos


def bareiss(M: Sequence[Sequence[int]]) -> tuple[list[list[int]], int, list[int]]:
    """Fraction-free elimination with row pivoting.

    Returns the upper-triangular integer matrix, the determinant and the
    row permutation. The pivot sequence keeps every intermediate integral.
    """
    A = [list(r) for r in M]
    n = len(A)
    cols = len(A[0]) if n else 0
    perm = list(range(n))
    sign, prev = 1, 1
    for k in range(n):
        p = next((r for r in range(k, n) if A[r][k] != 0), None)
        if p is None:
            return A, 0, perm
        if p != k:
            A[k], A[p] = A[p], A[k]
            perm[k], perm[p] = perm[p], perm[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, cols):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return A, sign * (A[n - 1][n - 1] if n else 1), perm


def det_exact(M: Sequence[Sequence[int]]) -> int:
    return bareiss(M)[1]


def solve_exact(M: Sequence[Sequence[int]], b: Sequence[Fraction]) -> list[Fraction]:
    """Solve ``M x = b`` over the rationals for square integer ``M``."""
    n = len(M)
    b = [Fraction(x) for x in b]
    den = lcm(*(x.denominator for x in b)) if b else 1
    aug = [list(M[i]) + [int(b[i] * den)] for i in range(n)]
    U, det, _ = bareiss(aug)
    if det == 0:
        raise ArithmeticError("singular matrix")
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(U[i][n]) - sum(U[i][j] * x[j] for j in range(i + 1, n))
        x[i] = s / U[i][i]
    return [xi / den for xi in x]


def transpose_matrix(M: Sequence[Sequence[int]]) -> list[list[int]]:
    return [list(col) for col in zip(*M)]


@dataclass
class FunctionalVec:
    """Rational values indexed by ``L_m``."""

    m: int
    values: dict[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        idx = [a.canonical for a in basis_index(self.m)]
        if set(self.values) != set(idx):
            raise ValueError(f"values must be indexed exactly by L_{self.m}")
        self.values = {k: Fraction(self.values[k]) for k in idx}

    @classmethod
    def of(cls, f: Callable[[CyclicWord], int | Fraction], m: int) -> "FunctionalVec":
        return cls(m, {a.canonical: Fraction(f(a)) for a in basis_index(m)})

    @classmethod
    def from_list(cls, m: int, vals: Sequence[Fraction]) -> "FunctionalVec":
        idx = basis_index(m)
        if len(vals) != len(idx):
            raise ValueError("wrong number of values")
        return cls(m, {a.canonical: Fraction(v) for a, v in zip(idx, vals)})

    def as_list(self) -> list[Fraction]:
        return list(self.values.values())

    def to_csv_rows(self) -> list[tuple[str, str]]:
        return [(k, f"{v.numerator}/{v.denominator}") for k, v in self.values.items()]

    def write_csv(self, path: str | Path) -> None:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["class", "value"])
            w.writerows(self.to_csv_rows())

    @classmethod
    def read_csv(cls, path: str | Path, m: int) -> "FunctionalVec":
        vals = {}
        with open(path, newline="") as fh:
            for row in csv.reader(fh):
                if not row or row[0] == "class":
                    continue
                vals[canonicalize(row[0]).canonical] = Fraction(row[1])
        return cls(m, vals)


def _matrix(basis: str, m: int) -> list[list[int]]:
    m_mas, m_cos = basis_matrices(m)
    if basis == "mas":
        return m_mas
    if basis == "cos":
        return m_cos
    raise ValueError("basis must be 'mas' or 'cos'")


def decompose(f: FunctionalVec, basis: str) -> FunctionalVec:
    """Coefficients ``c`` with ``f = sum_X c_X g_X`` where ``g`` runs over the chosen basis."""
    M = _matrix(basis, f.m)
    return FunctionalVec.from_list(f.m, solve_exact(transpose_matrix(M), f.as_list()))


def recombine(c: FunctionalVec, basis: str) -> FunctionalVec:
    M = _matrix(basis, c.m)
    coeffs = c.as_list()
    n = len(coeffs)
    return FunctionalVec.from_list(c.m, [sum(coeffs[x] * M[x][a] for x in range(n)) for a in range(n)])
