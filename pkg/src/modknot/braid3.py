"""Three-strand braids of modular knots and their Alexander polynomials.

The monoid morphism ``L -> s1^-1``, ``R -> s2`` sends a cyclic word ``A``
to a braid ``sigma_A`` whose closure is a Lorenz-like link. Its Alexander
polynomial comes from the reduced Burau representation

    s1 -> [[-t, 1], [0, 1]],    s2 -> [[1, 0], [t, -t]],

as ``det(Id - Br(sigma_A)) / (1 + t + t^2)``, and agrees up to a unit with
the substitution ``q^2 = -t`` in ``q^Rad (q^Rad - Tr(A_q) + q^-Rad)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import Laurent
from .qdeform import fricke_trace
from .words import CyclicWord, canonicalize

TOKENS = ("s1", "s1^-1", "s2", "s2^-1")

_ONE = Laurent.const(1, "t")
_ZERO = Laurent({}, "t")
_T = Laurent.monomial(1, var="t")
_TINV = Laurent.monomial(-1, var="t")
CYCLOTOMIC = Laurent({0: 1, 1: 1, 2: 1}, "t")  # 1 + t + t^2


@dataclass(frozen=True)
class MatT:
    a: Laurent
    b: Laurent
    c: Laurent
    d: Laurent

    def __matmul__(self, o: "MatT") -> "MatT":
        return MatT(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def det(self) -> Laurent:
        return self.a * self.d - self.b * self.c

    def trace(self) -> Laurent:
        return self.a + self.d


IDENTITY_T = MatT(_ONE, _ZERO, _ZERO, _ONE)
BURAU = {
    "s1": MatT(-_T, _ONE, _ZERO, _ONE),
    "s1^-1": MatT(-_TINV, _TINV, _ZERO, _ONE),
    "s2": MatT(_ONE, _ZERO, _T, -_T),
    "s2^-1": MatT(_ONE, _ZERO, _ONE, -_TINV),
}


def braid_of(a: str | CyclicWord) -> list[str]:
    """Letterwise image ``L -> s1^-1``, ``R -> s2`` in word order."""
    w = a.canonical if isinstance(a, CyclicWord) else a
    return ["s2" if x == "R" else "s1^-1" for x in w]


def burau(b: list[str]) -> MatT:
    out = IDENTITY_T
    for tok in b:
        if tok not in BURAU:
            raise ValueError(f"unknown braid token {tok!r}")
        out = out @ BURAU[tok]
    return out


def _exact_quotient(num: Laurent, what: str) -> Laurent:
    quot, rem = num.divmod_monic(CYCLOTOMIC)
    if rem:
        raise ArithmeticError(f"convention mismatch: {what} not divisible by 1+t+t^2")
    return quot


def alexander(a: str | CyclicWord) -> Laurent:
    """``det(Id - Br(sigma_A)) / (1 + t + t^2)``, normalized to valuation 0 and positive constant term."""
    a = canonicalize(a)
    m = burau(braid_of(a))
    num = (_ONE - m.a) * (_ONE - m.d) - m.b * m.c
    return _exact_quotient(num, "det(Id - Br)").normalized()


def fricke_side(a: str | CyclicWord) -> Laurent:
    """``q^Rad (q^Rad - Tr(A_q) + q^-Rad)`` at ``q^2 = -t``, divided by ``1 + t + t^2``."""
    a = canonicalize(a)
    rad = a.rad
    expr = Laurent.monomial(2 * rad) - fricke_trace(a).shift(rad) + 1
    if not expr.is_even():
        raise ArithmeticError(f"parity violation for {a}")
    return _exact_quotient(expr.substitute_square(-1, "t"), "Fricke side").normalized()


def fricke_alexander_check(a: str | CyclicWord) -> bool:
    a = canonicalize(a)
    if not a.is_hyperbolic:
        raise ValueError("Fricke-Alexander identity needs a hyperbolic class")
    return alexander(a) == fricke_side(a)
