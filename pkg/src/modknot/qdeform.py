"""The one-parameter deformation ``rho_q`` of the modular group.

``L_q = (q 0; 1 1/q)`` and ``R_q = (q 1; 0 1/q)``; ``S`` is kept fixed and
``T_q = (1 -q; 1/q 0)``, so that ``T_q S = -R_q`` and ``T_q^2 S = -L_q``.
Traces of ``A_q`` are the Fricke polynomials.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Union

import numpy as np

from .laurent import Laurent
from .modgroup import MatZ, st_factor, word_to_matrix
from .words import CyclicWord, canonicalize, check_word

ONE = Laurent.const(1)
ZERO = Laurent()
Q = Laurent.monomial(1)
QINV = Laurent.monomial(-1)


@dataclass(frozen=True)
class MatLaurent:
    a: Laurent
    b: Laurent
    c: Laurent
    d: Laurent

    def __matmul__(self, other: "MatLaurent") -> "MatLaurent":
        return MatLaurent(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def det(self) -> Laurent:
        return self.a * self.d - self.b * self.c

    def trace(self) -> Laurent:
        return self.a + self.d

    def inv(self) -> "MatLaurent":
        """Adjugate; the inverse for determinant-one matrices."""
        return MatLaurent(self.d, -self.b, -self.c, self.a)

    def neg(self) -> "MatLaurent":
        return MatLaurent(-self.a, -self.b, -self.c, -self.d)

    def conj_S(self) -> "MatLaurent":
        """``S M S^-1``."""
        return S_Q @ self @ S_Q.inv()

    def evaluate(self, q: complex) -> np.ndarray:
        return np.array([[self.a(q), self.b(q)], [self.c(q), self.d(q)]], dtype=complex)

    def entries(self) -> tuple[Laurent, Laurent, Laurent, Laurent]:
        return (self.a, self.b, self.c, self.d)


IDENTITY_Q = MatLaurent(ONE, ZERO, ZERO, ONE)
R_Q = MatLaurent(Q, ONE, ZERO, QINV)
L_Q = MatLaurent(Q, ZERO, ONE, QINV)
S_Q = MatLaurent(ZERO, -ONE, ONE, ZERO)
T_Q = MatLaurent(ONE, -Q, QINV, ZERO)
_TOKENS_Q = {"S": S_Q, "T": T_Q, "T2": T_Q @ T_Q}


def q_matrix(w: str | CyclicWord) -> MatLaurent:
    """``rho_q`` of a positive word, letter by letter."""
    if isinstance(w, CyclicWord):
        w = w.canonical
    check_word(w)
    out = IDENTITY_Q
    for x in w:
        out = out @ (R_Q if x == "R" else L_Q)
    return out


def rho_q(m: MatZ) -> MatLaurent:
    """``rho_q`` of an arbitrary element, through its {S, T} factorization (defined up to sign)."""
    out = IDENTITY_Q
    for tok in st_factor(m):
        out = out @ _TOKENS_Q[tok]
    return out


def fricke_trace(a: str | CyclicWord) -> Laurent:
    """``Tr(A_q)``: reciprocal, of degree ``len(a)``."""
    return q_matrix(canonicalize(a)).trace()


def disc_q(a: str | CyclicWord) -> Laurent:
    tr = fricke_trace(a)
    return tr * tr - 4


MatLike = Union[str, CyclicWord, MatZ, MatLaurent]


def as_q_matrix(x: MatLike) -> MatLaurent:
    if isinstance(x, MatLaurent):
        return x
    if isinstance(x, MatZ):
        return rho_q(x)
    return q_matrix(x)


def trace_sign(m: MatLaurent) -> int:
    """Sign of ``Tr(m_q)`` on the ray ``q > 1`` far out, i.e. of its leading coefficient."""
    tr = m.trace()
    if not tr:
        raise ValueError("trace vanishes identically")
    return 1 if tr.leading() > 0 else -1


def cos_numerator(A: MatLike, B: MatLike) -> Laurent:
    """``sign(Tr A Tr B) (Tr(AB) - Tr(AB^-1))`` as a Laurent polynomial."""
    A, B = as_q_matrix(A), as_q_matrix(B)
    s = trace_sign(A) * trace_sign(B)
    num = (A @ B).trace() - (A @ B.inv()).trace()
    return num if s > 0 else -num


def cos_pair_q(A: MatLike, B: MatLike, q: complex) -> complex:
    """Cosine of the angle (or hyperbolic cosine of the ortho-distance) between the axes of ``A_q``, ``B_q``.

    The square root is the principal branch of ``disc(A_q) disc(B_q)``; the
    sign factor is frozen at its value for real ``q > 1``.
    """
    A, B = as_q_matrix(A), as_q_matrix(B)
    s = trace_sign(A) * trace_sign(B)
    a, b = A.evaluate(q), B.evaluate(q)
    binv = np.array([[b[1, 1], -b[0, 1]], [-b[1, 0], b[0, 0]]])
    ta, tb = np.trace(a), np.trace(b)
    prod = (ta * ta - 4) * (tb * tb - 4)
    if prod == 0:
        raise ZeroDivisionError(f"pole: discriminant vanishes at q={q}")
    return s * (np.trace(a @ b) - np.trace(a @ binv)) / cmath.sqrt(prod)


def integer_trace(a: str | CyclicWord) -> int:
    return word_to_matrix(canonicalize(a)).trace
