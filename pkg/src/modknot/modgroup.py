"""Exact elements of PSL2(Z) and their conjugacy classes.

The generators are ``S = (0 -1; 1 0)`` of order 2 and ``T = (1 -1; 1 0)``
of order 3, with ``R = T S`` and ``L = T^2 S`` projectively. A matrix is
reduced to its conjugacy class by factoring it over {S, T, T^2}, reducing
cyclically in Z/2 * Z/3 and reading the blocks ``T S -> R``, ``T^2 S -> L``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .words import CyclicWord, canonicalize, check_word


@dataclass(frozen=True)
class MatZ:
    """A determinant-one integer matrix modulo sign.

    The stored lift has positive trace, or trace zero and ``c > 0``, so that
    dataclass equality and hashing are projective.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant of {self.entries} is not 1")
        tr = self.a + self.d
        if tr < 0 or (tr == 0 and self.c < 0):
            for name in "abcd":
                object.__setattr__(self, name, -getattr(self, name))

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @property
    def trace(self) -> int:
        return self.a + self.d

    @property
    def disc(self) -> int:
        return self.trace**2 - 4

    def __matmul__(self, other: "MatZ") -> "MatZ":
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return MatZ(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def inv(self) -> "MatZ":
        return MatZ(self.d, -self.b, -self.c, self.a)

    def transpose(self) -> "MatZ":
        return MatZ(self.a, self.c, self.b, self.d)

    def __pow__(self, n: int) -> "MatZ":
        base = self if n >= 0 else self.inv()
        out = IDENTITY
        for _ in range(abs(n)):
            out = out @ base
        return out

    def conj(self, c: "MatZ") -> "MatZ":
        """``c self c^-1``."""
        return c @ self @ c.inv()

    def __str__(self):
        return format_matrix(self)


IDENTITY = MatZ(1, 0, 0, 1)
S = MatZ(0, -1, 1, 0)
T = MatZ(1, -1, 1, 0)
T2 = T @ T
R = MatZ(1, 1, 0, 1)
L = MatZ(1, 0, 1, 1)

_TOKEN_MATS = {"S": S, "T": T, "T2": T2}


def parse_matrix(text: str) -> MatZ:
    """Parse ``"a,b,c,d"``."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise ValueError(f"expected four comma-separated integers, got {text!r}")
    return MatZ(*(int(p) for p in parts))


def format_matrix(m: MatZ) -> str:
    return ",".join(str(x) for x in m.entries)


def word_to_matrix(w: str | CyclicWord) -> MatZ:
    if isinstance(w, CyclicWord):
        w = w.canonical
    check_word(w)
    a, b, c, d = 1, 0, 0, 1
    for x in w:
        if x == "R":
            b, d = a + b, c + d
        else:
            a, c = a + b, c + d
    return MatZ(a, b, c, d)


def classify(m: MatZ) -> str:
    t = abs(m.trace)
    if m == IDENTITY:
        return "identity"
    if t < 2:
        return "elliptic"
    if t == 2:
        return "parabolic"
    return "hyperbolic"


def _lr_factor(m: MatZ) -> list[tuple[str, int]]:
    """Factor ``m`` as a product of powers of R, L and at most one S.

    Euclid's algorithm on the first column: left multiplication by ``R^-k``
    subtracts ``k c`` from ``a``, by ``L^-k`` subtracts ``k a`` from ``c``.
    The result is a list of ``(gen, exponent)`` with gen in {"R", "L", "S"}.
    """
    a, b, c, d = m.entries
    out: list[tuple[str, int]] = []
    while a != 0 and c != 0:
        if abs(a) >= abs(c):
            k = a // c
            a, b = a - k * c, b - k * d
            out.append(("R", k))
        else:
            k = c // a
            c, d = c - k * a, d - k * b
            out.append(("L", k))
    # remaining matrix is +-(1 n; 0 1) or +-(0 -1; 1 n) up to sign
    if c == 0:
        # a*d == 1
        out.append(("R", b * a))
    else:
        # a == 0, -b*c == 1: (0 b; c d) = +-S (1 d*c; 0 1)
        out.append(("S", 1))
        out.append(("R", d * c))
    return out


def _push(tokens: list[str], tok: str) -> None:
    """Append a token to a freely reduced {S, T, T2} word, reducing in Z/2 * Z/3."""
    exp = {"S": 0, "T": 1, "T2": 2}
    if tok == "S":
        if tokens and tokens[-1] == "S":
            tokens.pop()
        else:
            tokens.append("S")
        return
    if tokens and tokens[-1] != "S":
        e = (exp[tokens.pop()] + exp[tok]) % 3
        if e:
            tokens.append("T" if e == 1 else "T2")
    else:
        tokens.append(tok)


_LR_AS_ST = {
    ("R", 1): ("T", "S"),
    ("R", -1): ("S", "T2"),
    ("L", 1): ("T2", "S"),
    ("L", -1): ("S", "T"),
}


def st_factor(m: MatZ) -> list[str]:
    """Freely reduced word over ``{"S", "T", "T2"}`` evaluating to ``m`` projectively."""
    tokens: list[str] = []
    for gen, k in _lr_factor(m):
        if gen == "S":
            _push(tokens, "S")
            continue
        step = _LR_AS_ST[(gen, 1 if k > 0 else -1)]
        for _ in range(abs(k)):
            for tok in step:
                _push(tokens, tok)
    return tokens


def st_evaluate(tokens: list[str]) -> MatZ:
    out = IDENTITY
    for tok in tokens:
        out = out @ _TOKEN_MATS[tok]
    return out


TORSION_TAGS = ("id", "S-class", "T-class", "T2-class")

Cycle = Union[CyclicWord, str]


def cyclic_reduce(tokens: list[str]) -> list[str]:
    """Cyclically reduce a freely reduced {S, T, T2}-word (conjugating as needed)."""
    tokens = list(tokens)
    exp = {"T": 1, "T2": 2}
    while len(tokens) >= 2:
        first, last = tokens[0], tokens[-1]
        if first == "S" and last == "S":
            tokens = tokens[1:-1]
        elif first != "S" and last != "S":
            e = (exp[first] + exp[last]) % 3
            tokens = tokens[1:-1]
            if e:
                tokens.insert(0, "T" if e == 1 else "T2")
        else:
            break
    return tokens


def reduce_to_cycle(m: MatZ) -> Cycle:
    """Conjugacy class of ``m``: a :class:`CyclicWord` or a torsion tag."""
    tokens = cyclic_reduce(st_factor(m))
    if not tokens:
        return "id"
    if len(tokens) == 1:
        return {"S": "S-class", "T": "T-class", "T2": "T2-class"}[tokens[0]]
    if tokens[0] == "S":
        tokens = tokens[1:] + tokens[:1]
    letters = []
    for k in range(0, len(tokens), 2):
        t, s = tokens[k], tokens[k + 1]
        assert s == "S" and t in ("T", "T2"), tokens
        letters.append("R" if t == "T" else "L")
    return canonicalize("".join(letters))


def comb_len(m: MatZ) -> int:
    """Combinatorial length: minimal displacement of a vertex of the trivalent tree."""
    c = reduce_to_cycle(m)
    return len(c) if isinstance(c, CyclicWord) else 0


def cosign_len(A: MatZ, B: MatZ) -> int:
    """Orientation comparison of two tree axes along their common segment.

    Computed as ``sign(len(AB) - len(AB^-1))``; equal lengths mean the axes
    share no edge, which is reported as an error.
    """
    for m in (A, B):
        if classify(m) != "hyperbolic":
            raise ValueError("cosign needs hyperbolic elements")
    diff = comb_len(A @ B) - comb_len(A @ B.inv())
    if diff == 0:
        raise ValueError("axes are disjoint in the tree")
    return 1 if diff > 0 else -1


def geodesic_length(m: MatZ) -> float:
    """Translation length ``2 arcsinh(sqrt(Tr^2 - 4) / 2)`` of a hyperbolic element."""
    if classify(m) != "hyperbolic":
        raise ValueError(f"{m} is not hyperbolic")
    return 2.0 * math.asinh(math.sqrt(m.disc) / 2.0)
