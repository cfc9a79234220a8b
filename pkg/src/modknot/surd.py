"""Exact real quadratic irrationals on the projective line.

A point is ``(p + e*sqrt(D)) / r`` with ``e`` in {-1, 0, 1}, or infinity.
Comparisons never use floating point: the sign of ``A + B sqrt(D1) + C sqrt(D2)``
is decided by isolating one radical and squaring once.

``cord`` is normalized by ``cord(0, 1, oo) = +1`` and ``cross`` is the
algebraic intersection number of two oriented geodesics of the hyperbolic
plane given by their endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .modgroup import MatZ, classify


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _square_divisor(g: int, n: int) -> int:
    """Largest divisor ``t`` of ``g`` with ``t*t`` dividing ``n``."""
    g, t, f = abs(g), 1, 2
    while g > 1:
        if f * f > g:
            f = g
        if g % f == 0:
            k = 0
            while g % f == 0:
                g //= f
                k += 1
            while k and n % (f * f) == 0:
                n //= f * f
                t *= f
                k -= 1
        f += 1
    return t


@dataclass(frozen=True)
class QuadSurd:
    p: int
    e: int
    D: int
    r: int

    @classmethod
    def make(cls, p: int, k: int = 0, D: int = 0, r: int = 1) -> "QuadSurd":
        """Normalized ``(p + k*sqrt(D)) / r`` for integers ``k`` and ``D >= 0``."""
        if D < 0:
            raise ValueError("negative radicand")
        if k == 0 or D == 0:
            k, D = 0, 0
        else:
            s = isqrt(D)
            if s * s == D:
                p, k, D = p + k * s, 0, 0
        if r == 0:
            if p == 0 and k == 0:
                raise ZeroDivisionError("0/0")
            return INF
        if k == 0:
            g = gcd(p, r)
            p, r = p // g, r // g
            if r < 0:
                p, r = -p, -r
            return cls(p, 0, 0, r)
        D = k * k * D
        e = _sign(k)
        g = _square_divisor(gcd(p, r), D)
        p, r, D = p // g, r // g, D // (g * g)
        if r < 0:
            p, e, r = -p, -e, -r
        return cls(p, e, D, r)

    @classmethod
    def rational(cls, num: int | Fraction, den: int = 1) -> "QuadSurd":
        f = Fraction(num) / den
        return cls.make(f.numerator, 0, 0, f.denominator)

    @property
    def is_inf(self) -> bool:
        return self.r == 0

    def __float__(self):
        if self.is_inf:
            return float("inf")
        return (self.p + self.e * self.D**0.5) / self.r

    def __str__(self):
        if self.is_inf:
            return "oo"
        if self.e == 0:
            return f"{self.p}" if self.r == 1 else f"{self.p}/{self.r}"
        sgn = "+" if self.e > 0 else "-"
        return f"({self.p}{sgn}√{self.D})/{self.r}"

    def __lt__(self, other: "QuadSurd") -> bool:
        return compare(self, other) < 0


INF = QuadSurd(1, 0, 0, 0)
ZERO = QuadSurd(0, 0, 0, 1)


def as_surd(x) -> QuadSurd:
    if isinstance(x, QuadSurd):
        return x
    if x is None:
        return INF
    return QuadSurd.rational(Fraction(x))


def _sign_two(a: int, b: int, d: int) -> int:
    """Sign of ``a + b sqrt(d)``."""
    if b == 0 or d == 0:
        return _sign(a)
    sa, sb = _sign(a), _sign(b)
    if sa == 0 or sa == sb:
        return sb
    diff = a * a - b * b * d
    if diff > 0:
        return sa
    if diff < 0:
        return sb
    return 0


def _sign_three(a: int, b: int, d1: int, c: int, d2: int) -> int:
    """Sign of ``a + b sqrt(d1) + c sqrt(d2)``."""
    su = _sign_two(a, b, d1)
    sv = _sign(c) if d2 else 0
    if sv == 0:
        return su
    if su == 0 or su == sv:
        return sv
    # |u| against |v|: u^2 - v^2 = a^2 + b^2 d1 - c^2 d2 + 2ab sqrt(d1)
    s = _sign_two(a * a + b * b * d1 - c * c * d2, 2 * a * b, d1)
    if s > 0:
        return su
    if s < 0:
        return sv
    return 0


def compare(x: QuadSurd, y: QuadSurd) -> int:
    """Exact sign of ``x - y`` for finite points."""
    x, y = as_surd(x), as_surd(y)
    if x.is_inf or y.is_inf:
        raise ValueError("compare needs finite points")
    return _sign_three(x.p * y.r - y.p * x.r, x.e * y.r, x.D, -y.e * x.r, y.D)


def same_point(x: QuadSurd, y: QuadSurd) -> bool:
    if x.is_inf or y.is_inf:
        return x.is_inf and y.is_inf
    return compare(x, y) == 0


def act(g: MatZ, x: QuadSurd) -> QuadSurd:
    """Moebius action ``x -> (a x + b) / (c x + d)``."""
    a, b, c, d = g.entries
    x = as_surd(x)
    if x.is_inf:
        return QuadSurd.make(a, 0, 0, c)
    n0, n1 = a * x.p + b * x.r, a * x.e
    m0, m1 = c * x.p + d * x.r, c * x.e
    if m0 == 0 and m1 == 0:
        return INF
    den = m0 * m0 - m1 * m1 * x.D
    return QuadSurd.make(n0 * m0 - n1 * m1 * x.D, n1 * m0 - n0 * m1, x.D, den)


def fixed_points(m: MatZ) -> tuple[QuadSurd, QuadSurd]:
    """Repulsive and attractive fixed points ``(alpha_minus, alpha_plus)``.

    With the positive-trace lift, the eigenvalue at ``(a - d + sqrt(disc)) / 2c``
    is ``(tr + sqrt(disc)) / 2 > 1``, so that point is attractive.
    """
    if classify(m) != "hyperbolic":
        raise ValueError(f"{m} is not hyperbolic")
    a, b, c, d = m.entries
    disc = m.disc
    return (QuadSurd.make(a - d, -1, disc, 2 * c), QuadSurd.make(a - d, 1, disc, 2 * c))


def cord(x: QuadSurd, y: QuadSurd, z: QuadSurd) -> int:
    """Cyclic order of three points of the real projective line, in {-1, 0, 1}."""
    x, y, z = as_surd(x), as_surd(y), as_surd(z)
    if same_point(x, y) or same_point(y, z) or same_point(x, z):
        return 0
    if z.is_inf:
        return compare(y, x)
    if y.is_inf:
        return compare(x, z)
    if x.is_inf:
        return compare(z, y)
    return compare(y, x) * compare(z, y) * compare(z, x)


def cross(u: QuadSurd, v: QuadSurd, x: QuadSurd, y: QuadSurd) -> Fraction:
    """Algebraic intersection of the oriented geodesics ``(u, v)`` and ``(x, y)``."""
    return Fraction(cord(u, x, v) - cord(u, y, v), 2)


def across(u, v, x, y) -> Fraction:
    return abs(cross(u, v, x, y))


def axes_cross(A: MatZ, B: MatZ) -> tuple[int, int]:
    """``(across, cross_sign)`` for the axes of two hyperbolic elements.

    Evaluates ``cross(alpha_plus, alpha_minus, beta_plus, beta_minus)``.
    """
    am, ap = fixed_points(A)
    bm, bp = fixed_points(B)
    for x in (am, ap):
        for y in (bm, bp):
            if same_point(x, y):
                raise ValueError("common endpoint")
    c = cross(ap, am, bp, bm)
    return int(abs(c)), int(c)


def interleaved(A: MatZ, B: MatZ) -> bool:
    return axes_cross(A, B)[0] == 1
