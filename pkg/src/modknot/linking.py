"""Linking numbers of modular knots.

Three independent routes compute ``lk(A, B)`` for coprime hyperbolic
cyclic words:

* ``lk_shift``: half the number of pairs of Euclidean representatives
  ``(sigma^i A, sigma^j B)`` ending with different letters whose tree axes
  cross, decided by comparing the periodizations lexicographically;
* ``lk_oracle``: the same index set, with the crossing decided exactly from
  the quadratic-irrational endpoints of the axes;
* ``lk_slp``: the sum over linked patterns ``(RwL, LwR)`` of products of
  occurrence counts.

Crossings with opposite orientations (the "minus" side) pair ``sigma^i A``
with ``S (sigma^j B) S^-1``; they are the plus-side crossings of ``A`` with
the transpose of ``B``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Union

from .modgroup import TORSION_TAGS, MatZ, S, reduce_to_cycle, word_to_matrix
from .surd import axes_cross
from .words import (
    CyclicWord,
    canonicalize,
    coprime,
    enumerate_classes,
    factor_counts,
    periodized_compare,
    word_transpose,
)

ClassLike = Union[str, CyclicWord, MatZ]


@dataclass(frozen=True)
class Crossing:
    """A crossing between the axes of ``sigma^i A`` and ``sigma^j B`` (plus) or ``S sigma^j B S^-1`` (minus).

    ``i`` and ``j`` are shift indices in ``1..len`` relative to the canonical
    words; ``sign`` is the algebraic intersection sign of the two axes.
    """

    i: int
    j: int
    side: str
    sign: int

    @property
    def cosign(self) -> int:
        return 1 if self.side == "plus" else -1


def as_class(x: ClassLike):
    """A :class:`CyclicWord`, or a torsion tag passed through unchanged."""
    if isinstance(x, MatZ):
        return reduce_to_cycle(x)
    if isinstance(x, str) and x in TORSION_TAGS:
        return x
    return canonicalize(x)


def _require_pair(A, B) -> tuple[CyclicWord, CyclicWord]:
    A, B = canonicalize(A), canonicalize(B)
    if not (A.is_hyperbolic and B.is_hyperbolic):
        raise ValueError("linking needs hyperbolic classes (both letters present)")
    if not coprime(A, B):
        raise ValueError(f"{A} and {B} are not coprime")
    return A, B


def _plus_crosses(x: str, y: str) -> bool:
    """Lexicographic crossing rule for Euclidean representatives ending with different letters."""
    c = periodized_compare(x, y)
    if c == 0:
        raise ValueError("equal periodizations: classes are not coprime")
    return c > 0 if x[-1] == "L" else c < 0


def _plus_sign(x: str) -> int:
    # crossing with x ending in L: both endpoints of x's axis lie above those of y's
    return -1 if x[-1] == "L" else 1


def enumerate_crossings(A: ClassLike, B: ClassLike) -> list[Crossing]:
    """All crossings between the modular geodesics of ``A`` and ``B``; their number is ``I(A, B)``."""
    A, B = _require_pair(as_class(A), as_class(B))
    out = []
    for i in range(1, len(A) + 1):
        x = A.rotation(i)
        for j in range(1, len(B) + 1):
            y = B.rotation(j)
            if x[-1] != y[-1] and _plus_crosses(x, y):
                out.append(Crossing(i, j, "plus", _plus_sign(x)))
            yt = word_transpose(y)
            if x[-1] != yt[-1] and _plus_crosses(x, yt):
                out.append(Crossing(i, j, "minus", -_plus_sign(x)))
    return out


def crossing_matrices(A: ClassLike, B: ClassLike, c: Crossing) -> tuple[MatZ, MatZ]:
    """The pair of integer matrices whose axes realize the crossing ``c``."""
    A, B = canonicalize(as_class(A)), canonicalize(as_class(B))
    x = word_to_matrix(A.rotation(c.i))
    y = word_to_matrix(B.rotation(c.j))
    return (x, y) if c.side == "plus" else (x, y.conj(S))


def oracle_crossings(A: ClassLike, B: ClassLike) -> list[Crossing]:
    """Crossings found by exact comparison of axis endpoints in the real quadratic fields."""
    A, B = _require_pair(as_class(A), as_class(B))
    out = []
    for i in range(1, len(A) + 1):
        x = A.rotation(i)
        X = word_to_matrix(x)
        for j in range(1, len(B) + 1):
            y = B.rotation(j)
            Y = word_to_matrix(y)
            if x[-1] != y[-1]:
                hit, sign = axes_cross(X, Y)
                if hit:
                    out.append(Crossing(i, j, "plus", sign))
            if x[-1] == y[0]:
                hit, sign = axes_cross(X, Y.conj(S))
                if hit:
                    out.append(Crossing(i, j, "minus", sign))
    return out


def _half(n: int, what: str) -> int:
    if n % 2:
        raise ArithmeticError(f"odd {what} count {n}")
    return n // 2


def lk_shift(A: ClassLike, B: ClassLike) -> int:
    """Half the number of co-oriented crossings, by the lexicographic rule."""
    plus = [c for c in enumerate_crossings(A, B) if c.side == "plus"]
    return _half(len(plus), "plus-side crossing")


def lk_oracle(A: ClassLike, B: ClassLike) -> int:
    """Half the number of co-oriented crossings, by exact endpoint comparison."""
    plus = [c for c in oracle_crossings(A, B) if c.side == "plus"]
    return _half(len(plus), "plus-side crossing")


def _linked_pattern_sum(A: CyclicWord, B: CyclicWord, bound: int) -> int:
    """``sum_w occ_RwL(A) occ_LwR(B) + occ_LwR(A) occ_RwL(B)`` over ``len(w) < bound``."""
    total = 0
    for n in range(2, bound + 2):
        fa = factor_counts(A, n)
        fb = factor_counts(B, n)
        for p, k in fa.items():
            if p[0] != p[-1]:
                mate = p[-1] + p[1:-1] + p[0]
                total += k * fb.get(mate, 0)
    return total


def pattern_bound(A: CyclicWord, B: CyclicWord) -> int:
    """Bound on ``len(w)`` for the linked-pattern sums.

    For coprime classes ``A^oo`` and ``B^oo`` share no factor of length
    ``len A + len B - gcd`` (Fine and Wilf), so every further term vanishes
    and the sum is exact. For commensurable classes the sum is truncated at
    ``max(len A, len B)``.
    """
    if coprime(A, B):
        return len(A) + len(B) - gcd(len(A), len(B))
    return max(len(A), len(B))


def lk_slp(A: ClassLike, B: ClassLike) -> int | Fraction:
    """Sum of linked patterns.

    For coprime classes this is the linking number. For ``A = C^m``,
    ``B = C^n`` it is the sum truncated at ``len(w) < max(len A, len B)``,
    which is ``m n`` times a framed self-linking of ``C``.
    """
    A, B = canonicalize(as_class(A)), canonicalize(as_class(B))
    total = _linked_pattern_sum(A, B, pattern_bound(A, B))
    return total // 2 if total % 2 == 0 else Fraction(total, 2)


def lk(A: ClassLike, B: ClassLike) -> int | Fraction:
    """Linking number (framed self-linking for non-coprime classes)."""
    A, B = as_class(A), as_class(B)
    if not isinstance(A, CyclicWord) or not isinstance(B, CyclicWord):
        return 0
    return lk_slp(A, B)


def lk_all(A: ClassLike, B: ClassLike) -> dict[str, int]:
    return {"shift": lk_shift(A, B), "slp": lk_slp(A, B), "oracle": lk_oracle(A, B)}


def intersection_number(A: ClassLike, B: ClassLike) -> int:
    """Geometric intersection ``I(A, B) = 2 (lk(A, B) + lk(A, ^tB))``."""
    A, B = canonicalize(as_class(A)), canonicalize(as_class(B))
    if not (A.is_hyperbolic and B.is_hyperbolic):
        raise ValueError("intersection needs hyperbolic classes")
    return int(2 * (lk(A, B) + lk(A, B.transpose())))


def _cos_pattern_sum(A: CyclicWord, B: CyclicWord) -> Fraction:
    """``1/2 sum_w occ_RwL(A) mas_LwR(B) + occ_LwR(A) mas_RwL(B)``, ``len(w)`` bounded as in :func:`pattern_bound`."""
    bound = pattern_bound(A, B)
    total = 0
    for n in range(2, bound + 2):
        fa = factor_counts(A, n)
        fb = factor_counts(B, n)
        for p, k in fa.items():
            if p[0] != p[-1]:
                mate = p[-1] + p[1:-1] + p[0]
                total += k * (fb.get(mate, 0) - fb.get(word_transpose(mate), 0))
    return Fraction(total, 2)


def cos_a(A: ClassLike, B: ClassLike) -> int:
    """``Cos_A(B) = lk(A, B) - lk(A, ^tB)``, with ``Cos_R = Rad``; zero on torsion.

    Evaluated both as a difference of linking numbers and as the pattern
    sum with asymmetries; the two must agree.
    """
    A, B = canonicalize(as_class(A)), as_class(B)
    if not isinstance(B, CyclicWord):
        return 0
    if A.canonical == "R":
        return B.rad
    if not A.is_hyperbolic:
        raise ValueError("Cos_A needs a hyperbolic A (or A = R)")
    diff = lk(A, B) - lk(A, B.transpose())
    patterns = _cos_pattern_sum(A, B)
    if diff != patterns:
        raise ArithmeticError(f"Cos_{A}({B}): {diff} != {patterns}")
    return int(diff)


def link_equiv_witness(A: ClassLike, B: ClassLike, max_len: int, coprime_only: bool = False) -> CyclicWord | None:
    """First primitive hyperbolic ``X`` (by length, then word) with ``lk(A, X) != lk(B, X)``.

    ``X`` may equal ``A`` or ``B``, in which case ``lk`` is the framed
    self-linking. With ``coprime_only`` such ``X`` are skipped and only
    genuine linking numbers are compared.
    """
    A, B = canonicalize(as_class(A)), canonicalize(as_class(B))
    if A == B:
        return None
    for X in enumerate_classes(max_len, "hyperbolic", primitive=True):
        if coprime_only and not (coprime(A, X) and coprime(B, X)):
            continue
        if lk_slp(A, X) != lk_slp(B, X):
            return X
    return None
