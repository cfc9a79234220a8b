"""Binary words and cyclic words over the alphabet {L, R}.

Words are plain ``str`` objects over ``"LR"``; since ``"L" < "R"`` in ASCII,
Python's string comparison is already the lexicographic order with L < R.
A conjugacy class of infinite order in the modular group is a
:class:`CyclicWord`, stored through its lexicographically maximal rotation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

_WORD_RE = re.compile(r"[LR]*")
_SWAP = str.maketrans("LR", "RL")


def check_word(w: str, allow_empty: bool = True) -> str:
    if not isinstance(w, str) or not _WORD_RE.fullmatch(w):
        raise ValueError(f"not an {{L,R}}-word: {w!r}")
    if not w and not allow_empty:
        raise ValueError("empty word")
    return w


def rotate(w: str, k: int) -> str:
    """Cyclic shift moving the first ``k`` letters to the end."""
    if not w:
        return w
    k %= len(w)
    return w[k:] + w[:k]


def word_transpose(w: str) -> str:
    """Reverse the word and swap L <-> R (matrix transpose on PSL2(N))."""
    return w[::-1].translate(_SWAP)


def primitive_root(w: str) -> str:
    """Shortest ``u`` with ``w == u**k``."""
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return w[:d]
    return w


def periodize(w: str, n: int) -> str:
    """First ``n`` letters of the infinite word ``w w w ...``."""
    reps = -(-n // len(w))
    return (w * reps)[:n]


def periodized_compare(a: str, b: str) -> int:
    """Compare ``a^oo`` with ``b^oo`` lexicographically (L < R).

    Returns -1, 0 or +1. Two periodic sequences with periods p and q that
    agree on p + q letters are equal (Fine and Wilf), so a finite prefix
    suffices.
    """
    n = len(a) + len(b)
    x, y = periodize(a, n), periodize(b, n)
    return (x > y) - (x < y)


@dataclass(frozen=True, order=True)
class CyclicWord:
    """A cyclic {L,R}-word, i.e. a non-elliptic conjugacy class of PSL2(Z).

    ``canonical`` is the lexicographically maximal rotation and
    ``canonical == root * multiplicity`` for the primitive root ``root``.
    """

    canonical: str
    multiplicity: int = 1

    def __post_init__(self):
        check_word(self.canonical, allow_empty=False)
        if max_rotation(self.canonical) != self.canonical:
            raise ValueError(f"{self.canonical!r} is not a maximal rotation")
        if len(self.canonical) % self.multiplicity:
            raise ValueError("multiplicity must divide the length")

    def __str__(self):
        return self.canonical

    def __len__(self):
        return len(self.canonical)

    @property
    def root(self) -> str:
        return self.canonical[: len(self.canonical) // self.multiplicity]

    @property
    def primitive(self) -> "CyclicWord":
        return CyclicWord(self.root, 1)

    @property
    def is_primitive(self) -> bool:
        return self.multiplicity == 1

    @property
    def is_hyperbolic(self) -> bool:
        return "L" in self.canonical and "R" in self.canonical

    @property
    def rad(self) -> int:
        return self.canonical.count("R") - self.canonical.count("L")

    def rotation(self, i: int) -> str:
        return rotate(self.canonical, i)

    def rotations(self) -> list[str]:
        """All ``len`` shifts ``sigma^i``, ``i = 1..len`` (the last is the canonical word)."""
        n = len(self.canonical)
        return [rotate(self.canonical, i) for i in range(1, n + 1)]

    def transpose(self) -> "CyclicWord":
        return canonicalize(word_transpose(self.canonical))

    def power(self, n: int) -> "CyclicWord":
        if n < 1:
            raise ValueError("power must be positive")
        return CyclicWord(self.canonical * n, self.multiplicity * n)


@lru_cache(maxsize=None)
def max_rotation(w: str) -> str:
    return max(rotate(w, i) for i in range(len(w))) if w else w


def canonicalize(w: str | CyclicWord) -> CyclicWord:
    """Canonical representative (maximal rotation) of the cyclic class of ``w``."""
    if isinstance(w, CyclicWord):
        return w
    check_word(w)
    if not w:
        raise ValueError("empty cycle")
    can = max_rotation(w)
    return CyclicWord(can, len(can) // len(primitive_root(can)))


cyc = canonicalize


def transpose(a: str | CyclicWord) -> CyclicWord:
    return canonicalize(a).transpose()


def rad_len(a: str | CyclicWord) -> tuple[int, int]:
    """``(len, Rad) = (#R + #L, #R - #L)``."""
    a = canonicalize(a)
    return len(a), a.rad


@lru_cache(maxsize=4096)
def _factor_counts(canonical: str, length: int) -> dict[str, int]:
    n = len(canonical)
    src = periodize(canonical, n + length)
    counts: dict[str, int] = {}
    for j in range(n):
        f = src[j : j + length]
        counts[f] = counts.get(f, 0) + 1
    return counts


def factor_counts(a: str | CyclicWord, length: int) -> dict[str, int]:
    """Map each pattern of the given length to its number of cyclic occurrences in ``a``."""
    a = canonicalize(a)
    return _factor_counts(a.canonical, length)


def occ(P: str, a: str | CyclicWord) -> int:
    """Number of shifts ``j in [1, len a]`` such that ``P`` is a prefix of ``sigma^j(a^oo)``."""
    check_word(P)
    if not P:
        raise ValueError("empty pattern")
    return factor_counts(a, len(P)).get(P, 0)


def coprime(a: str | CyclicWord, b: str | CyclicWord) -> bool:
    """True when no positive powers of ``a`` and ``b`` are conjugate."""
    return canonicalize(a).root != canonicalize(b).root


def is_lyndon_positive(a: CyclicWord) -> bool:
    """Membership in the fixed half P+ of the non-symmetric primitive classes.

    A class is in P+ when its canonical word exceeds the canonical word of
    its transpose; this puts ``R`` in P+ and ``L`` in P-.
    """
    return a.is_primitive and a.canonical > a.transpose().canonical


def necklaces(n: int) -> Iterator[CyclicWord]:
    """Every cyclic class of length exactly ``n``, in increasing canonical order."""
    for letters in product("LR", repeat=n):
        w = "".join(letters)
        if max_rotation(w) == w:
            yield canonicalize(w)


_FILTERS = ("all", "hyperbolic", "lyndon_positive")


def enumerate_classes(max_len: int, filter: str = "all", primitive: bool = False) -> list[CyclicWord]:
    """One representative per cyclic class of length ``<= max_len``.

    Ordered by length, then canonical word. ``filter`` is one of ``all``,
    ``hyperbolic`` (both letters occur) or ``lyndon_positive`` (the P+ half,
    always primitive). ``primitive=True`` drops proper powers.
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    if filter not in _FILTERS:
        raise ValueError(f"unknown filter {filter!r}")
    out = []
    for n in range(1, max_len + 1):
        for a in necklaces(n):
            if primitive and not a.is_primitive:
                continue
            if filter == "hyperbolic" and not a.is_hyperbolic:
                continue
            if filter == "lyndon_positive" and not is_lyndon_positive(a):
                continue
            out.append(a)
    return out
