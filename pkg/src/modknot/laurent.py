"""Sparse integer Laurent polynomials in one variable.

Coefficients are Python ints, so nothing overflows; evaluation at a complex
point uses Horner's rule on the shifted ordinary polynomial.
"""

from __future__ import annotations

from typing import Iterable, Mapping

import numpy as np


class Laurent:
    __slots__ = ("_c", "var")

    def __init__(self, coeffs: Mapping[int, int] | None = None, var: str = "q"):
        self._c = {int(e): int(c) for e, c in (coeffs or {}).items() if c}
        self.var = var

    # construction -------------------------------------------------------
    @classmethod
    def const(cls, c: int, var: str = "q") -> "Laurent":
        return cls({0: c}, var)

    @classmethod
    def monomial(cls, e: int, c: int = 1, var: str = "q") -> "Laurent":
        return cls({e: c}, var)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], var: str = "q") -> "Laurent":
        acc: dict[int, int] = {}
        for c, e in pairs:
            acc[e] = acc.get(e, 0) + c
        return cls(acc, var)

    def _coerce(self, other) -> "Laurent":
        if isinstance(other, Laurent):
            return other
        if isinstance(other, int):
            return Laurent.const(other, self.var)
        return NotImplemented

    # ring operations ----------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._c)
        for e, c in other._c.items():
            acc[e] = acc.get(e, 0) + c
        return Laurent(acc, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Laurent({e: -c for e, c in self._c.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return Laurent(acc, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials are invertible")
            ((e, c),) = self._c.items()
            if abs(c) != 1:
                raise ValueError("only unit monomials are invertible")
            return Laurent({e * n: c ** abs(n)}, self.var)
        out = Laurent.const(1, self.var)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __bool__(self):
        return bool(self._c)

    # inspection ---------------------------------------------------------
    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def coeff(self, e: int) -> int:
        return self._c.get(e, 0)

    def degree(self) -> int:
        if not self._c:
            raise ValueError("degree of the zero polynomial")
        return max(self._c)

    def valuation(self) -> int:
        if not self._c:
            raise ValueError("valuation of the zero polynomial")
        return min(self._c)

    def leading(self) -> int:
        return self._c[self.degree()]

    def is_reciprocal(self) -> bool:
        """Invariant under ``q -> 1/q``."""
        return all(self._c.get(-e) == c for e, c in self._c.items())

    def is_even(self) -> bool:
        return all(e % 2 == 0 for e in self._c)

    # transformations ----------------------------------------------------
    def shift(self, k: int) -> "Laurent":
        """Multiply by ``var**k``."""
        return Laurent({e + k: c for e, c in self._c.items()}, self.var)

    def invert_var(self) -> "Laurent":
        """Substitute ``var -> 1/var``."""
        return Laurent({-e: c for e, c in self._c.items()}, self.var)

    def substitute_square(self, sign: int = 1, var: str = "t") -> "Laurent":
        """For an even polynomial in q, substitute ``q^2 = sign * t``."""
        if not self.is_even():
            raise ValueError("polynomial has odd exponents")
        return Laurent({e // 2: c * sign ** abs(e // 2) for e, c in self._c.items()}, var)

    def normalized(self) -> "Laurent":
        """Unit-orbit representative: valuation 0 and positive constant term."""
        if not self._c:
            return self
        out = self.shift(-self.valuation())
        return -out if out.coeff(0) < 0 else out

    def divmod_monic(self, divisor: "Laurent") -> tuple["Laurent", "Laurent"]:
        """Long division by a polynomial with leading coefficient +-1.

        Both are treated as ordinary polynomials after clearing the
        valuation of ``self``; the quotient is shifted back.
        """
        if not divisor:
            raise ZeroDivisionError("division by zero polynomial")
        if abs(divisor.leading()) != 1:
            raise ValueError("divisor must have unit leading coefficient")
        if not self._c:
            return Laurent({}, self.var), Laurent({}, self.var)
        v = divisor.valuation()
        dv = divisor.shift(-v)
        n = dv.degree()
        rem = dict(self._c)
        quot: dict[int, int] = {}
        lead = dv.leading()
        low = self.valuation()
        while rem:
            top = max(rem)
            if top - n < low:
                break
            c = rem[top] * lead  # lead is +-1
            quot[top - n] = c
            for e, dc in dv._c.items():
                k = top - n + e
                rem[k] = rem.get(k, 0) - c * dc
                if rem[k] == 0:
                    del rem[k]
        return Laurent(quot, self.var).shift(-v), Laurent(rem, self.var)

    # evaluation ---------------------------------------------------------
    def to_array(self) -> tuple[np.ndarray, int]:
        """Coefficients from highest to lowest exponent (``numpy.polyval`` order) and the valuation."""
        if not self._c:
            return np.zeros(1), 0
        lo, hi = self.valuation(), self.degree()
        arr = np.array([float(self._c.get(e, 0)) for e in range(hi, lo - 1, -1)])
        return arr, lo

    def __call__(self, z):
        """Evaluate at a nonzero complex number or numpy array."""
        z = np.asarray(z)
        if z.dtype.kind in "iub":
            z = z.astype(float)
        if np.any(z == 0):
            raise ZeroDivisionError("Laurent polynomial evaluated at 0")
        if not self._c:
            val = np.zeros_like(z)
        else:
            arr, lo = self.to_array()
            val = np.polyval(arr, z) * z**lo if lo else np.polyval(arr, z)
        return val.item() if val.ndim == 0 else val

    eval_at = __call__

    # printing -----------------------------------------------------------
    def sparse(self) -> str:
        """``"c:e"`` pairs, highest exponent first, space separated."""
        return " ".join(f"{self._c[e]}:{e}" for e in sorted(self._c, reverse=True))

    @classmethod
    def parse_sparse(cls, text: str, var: str = "q") -> "Laurent":
        pairs = []
        for tok in text.split():
            c, e = tok.split(":")
            pairs.append((int(c), int(e)))
        return cls.from_pairs(pairs, var)

    def __str__(self):
        if not self._c:
            return "0"
        terms = []
        for e in sorted(self._c, reverse=True):
            c = self._c[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = self.var if e == 1 else f"{self.var}^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Laurent({self.sparse()!r}, var={self.var!r})"


def q_poly(coeffs: Mapping[int, int]) -> Laurent:
    return Laurent(coeffs, "q")


def t_poly(coeffs: Mapping[int, int]) -> Laurent:
    return Laurent(coeffs, "t")
