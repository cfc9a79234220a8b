"""Linking functions on the character variety of the modular group.

For ``q`` on the real ray ``q > 1`` the deformed representation is
Fuchsian and every crossing of the modular geodesics of ``A`` and ``B``
persists. Summing over the (q-independent) crossing set:

    Link_q(A, B) = 1/2 sum (1 + cos_c) / 2
    Cos_q(A, B)  = 1/2 sum cos_c

where ``cos_c`` is the cosine of the crossing angle of the deformed axes.
Both extend to complex ``q`` through the trace formula, with the principal
square root of ``disc(A_q) disc(B_q)``.
"""

from __future__ import annotations

import colorsys
import csv
import math
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, NamedTuple

import numpy as np

from .laurent import Laurent
from .linking import Crossing, ClassLike, _require_pair, as_class, enumerate_crossings
from .modgroup import MatZ, classify
from .qdeform import MatLaurent, cos_numerator, cos_pair_q, disc_q, q_matrix, rho_q
from .surd import axes_cross
from .words import CyclicWord


def _crossing_q_matrices(A: CyclicWord, B: CyclicWord, c: Crossing) -> tuple[MatLaurent, MatLaurent]:
    x = q_matrix(A.rotation(c.i))
    y = q_matrix(B.rotation(c.j))
    return (x, y) if c.side == "plus" else (x, y.conj_S())


@lru_cache(maxsize=4096)
def _terms_for(A: CyclicWord, B: CyclicWord):
    return tuple((c, *_crossing_q_matrices(A, B, c)) for c in enumerate_crossings(A, B))


def _crossing_terms(A: ClassLike, B: ClassLike):
    # the crossing set does not depend on q, so it is computed once per pair
    A, B = _require_pair(as_class(A), as_class(B))
    return A, B, _terms_for(A, B)


def crossing_cosines(A: ClassLike, B: ClassLike, q: complex) -> list[tuple[Crossing, complex]]:
    """``cos`` of the deformed axes at every crossing."""
    _, _, terms = _crossing_terms(A, B)
    return [(c, cos_pair_q(x, y, q)) for c, x, y in terms]


def link_q(A: ClassLike, B: ClassLike, q: complex) -> complex:
    """``Link_q(A, B) = 1/2 sum (1 + cos) / 2``; tends to ``lk(A, B)`` as ``q -> oo``."""
    return sum(0.25 * (1 + cos) for _, cos in crossing_cosines(A, B, q))


def cos_q(A: ClassLike, B: ClassLike, q: complex) -> complex:
    """``Cos_q(A, B) = 1/2 sum cos``; tends to ``2 lk(A, B) - I(A, B)/2``."""
    return sum(0.5 * cos for _, cos in crossing_cosines(A, B, q))


def wolpert_sum(A: ClassLike, B: ClassLike, q: complex) -> complex:
    """``1/2 sum cross_sign * cos`` over the crossings."""
    return sum(0.5 * c.sign * cos for c, cos in crossing_cosines(A, B, q))


@dataclass(frozen=True)
class SymbolicLinkFn:
    """Closed form ``Link_q = I/4 + N(q) / (4 sqrt(discA discB))``."""

    crossing_count: int
    numerator: Laurent
    discA: Laurent
    discB: Laurent

    def __call__(self, q):
        q = np.asarray(q, dtype=complex)
        root = np.sqrt(self.discA(q) * self.discB(q))
        with np.errstate(divide="ignore", invalid="ignore"):
            out = self.crossing_count / 4 + self.numerator(q) / (4 * root)
        return out.item() if np.ndim(out) == 0 else out

    def cos(self, q):
        """``Cos_q = 2 Link_q - I/2``."""
        return 2 * self(q) - self.crossing_count / 2

    @property
    def pole_polynomial(self) -> Laurent:
        return self.discA * self.discB


def link_q_symbolic(A: ClassLike, B: ClassLike) -> SymbolicLinkFn:
    A, B, terms = _crossing_terms(A, B)
    num = Laurent()
    for _, x, y in terms:
        num = num + cos_numerator(x, y)
    return SymbolicLinkFn(len(terms), num, disc_q(A), disc_q(B))


def geodesic_pair_geometry(A: MatZ, B: MatZ, q: float = 1.0) -> dict[str, float]:
    """Angle at a crossing, or signed ortho-length between disjoint axes.

    Crossing axes give ``{"angle": theta}`` with ``cos theta = cos(A_q, B_q)``
    and the sign of ``theta`` the intersection sign. Disjoint axes give
    ``{"ortho_length": lam}`` with ``cosh lam = |cos|`` and ``sign(lam) = sign(cos)``.
    """
    for m in (A, B):
        if classify(m) != "hyperbolic":
            raise ValueError(f"{m} is not hyperbolic")
    hit, sign = axes_cross(A, B)
    cos = cos_pair_q(rho_q(A), rho_q(B), q).real
    if hit:
        return {"angle": sign * math.acos(max(-1.0, min(1.0, cos)))}
    return {"ortho_length": math.copysign(math.acosh(max(1.0, abs(cos))), cos)}


# roots ------------------------------------------------------------------

class Root(NamedTuple):
    value: complex
    kind: str  # "zero" or "pole"

    @property
    def modulus(self) -> float:
        return abs(self.value)


def _backward_error(coeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
    """``|p(z)| / sum |c_k| |z|^k``, coefficients highest first."""
    return np.abs(np.polyval(coeffs, z)) / np.polyval(np.abs(coeffs), np.abs(z))


def durand_kerner(coeffs: Iterable[complex], tol: float = 1e-10, max_iter: int = 500) -> np.ndarray:
    """All roots of an ordinary polynomial, coefficients highest first.

    Simultaneous iteration from points on a circle of radius 1.2 rotated off
    the real axis; stops when every relative residual is below ``tol``.
    """
    c = np.trim_zeros(np.asarray(list(coeffs), dtype=complex), "f")
    if c.size == 0:
        raise ValueError("zero polynomial")
    n = c.size - 1
    if n == 0:
        return np.zeros(0, dtype=complex)
    monic = c / c[0]
    z = 1.2 * np.exp(1j * (2 * np.pi * np.arange(n) / n + 0.4))
    for _ in range(max_iter):
        if np.all(_backward_error(c, z) < tol):
            return z
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        z = z - np.polyval(monic, z) / np.prod(diff, axis=1)
    res = _backward_error(c, z)
    if np.all(res < tol):
        return z
    raise ArithmeticError(f"Durand-Kerner did not converge; residuals {res.tolist()}")


def merge_clusters(coeffs: np.ndarray, z: np.ndarray, radius: float = 1e-3) -> np.ndarray:
    """Replace each tight cluster of approximate roots by its centroid.

    A root of multiplicity ``k`` is only found to about ``tol**(1/k)``, spread
    symmetrically around the true value, so the centroid is far more
    accurate. The centroid is kept only if its residual is no worse.
    """
    z = np.array(z, dtype=complex)
    label = list(range(len(z)))
    for a in range(len(z)):
        for b in range(a):
            if abs(z[a] - z[b]) < radius * max(1.0, abs(z[a])):
                old, new = label[a], label[b]
                label = [new if x == old else x for x in label]
    for lab in set(label):
        idx = [k for k, x in enumerate(label) if x == lab]
        if len(idx) > 1:
            centre = z[idx].mean()
            if _backward_error(coeffs, np.array([centre]))[0] <= _backward_error(coeffs, z[idx]).max():
                z[idx] = centre
    return z


def laurent_roots(p: Laurent, tol: float = 1e-10) -> np.ndarray:
    """Nonzero roots of a Laurent polynomial, repeated by multiplicity."""
    if not p:
        raise ValueError("zero polynomial")
    arr, _ = p.to_array()
    return merge_clusters(arr, durand_kerner(arr, tol))


def roots(f: SymbolicLinkFn, tol: float = 1e-10) -> list[Root]:
    """Zero candidates (roots of N) and pole candidates (roots of discA discB)."""
    if not f.numerator:
        raise ValueError("numerator vanishes identically")
    out = [Root(complex(z), "zero") for z in laurent_roots(f.numerator, tol)]
    out += [Root(complex(z), "pole") for z in laurent_roots(f.pole_polynomial, tol)]
    return out


def closed_under(points: np.ndarray, op, tol: float) -> bool:
    """Whether the multiset ``points`` is mapped into itself by ``op``, within ``tol``."""
    points = np.asarray(points, dtype=complex)
    images = op(points)
    return all(np.min(np.abs(points - w)) < tol for w in images)


# plots ------------------------------------------------------------------

def sample_grid(f, center: complex, radius: float, pixels: int) -> np.ndarray:
    """Values of ``f`` on a ``pixels x pixels`` square grid; row 0 is the top edge."""
    if pixels < 16:
        raise ValueError("pixels must be at least 16")
    xs = np.linspace(center.real - radius, center.real + radius, pixels)
    ys = np.linspace(center.imag + radius, center.imag - radius, pixels)
    q = xs[None, :] + 1j * ys[:, None]
    with np.errstate(all="ignore"):
        vals = np.asarray(f(q), dtype=complex)
    return np.broadcast_to(vals, q.shape).copy()


def render_grid(values: np.ndarray) -> np.ndarray:
    """HSV colouring: hue from the argument, value ``|z| / (1 + |z|)``; poles white."""
    h, w = values.shape
    out = np.empty((h, w, 3), dtype=np.uint8)
    hue = (np.angle(values) / (2 * np.pi)) % 1.0
    mod = np.abs(values)
    for r in range(h):
        for k in range(w):
            m = mod[r, k]
            if not np.isfinite(m):
                rgb = (1.0, 1.0, 1.0)
            else:
                rgb = colorsys.hsv_to_rgb(hue[r, k], 1.0, m / (1 + m))
            out[r, k] = [round(255 * x) for x in rgb]
    return out


def plot_grid(A: ClassLike, B: ClassLike, center: complex, radius: float, pixels: int) -> np.ndarray:
    """RGB raster of ``Link_q(A, B)`` around ``center``."""
    return render_grid(sample_grid(link_q_symbolic(A, B), center, radius, pixels))


def ppm_bytes(raster: np.ndarray) -> bytes:
    h, w, _ = raster.shape
    return f"P6\n{w} {h}\n255\n".encode() + raster.astype(np.uint8).tobytes()


def write_ppm(path: str | Path, raster: np.ndarray) -> None:
    Path(path).write_bytes(ppm_bytes(raster))


def write_samples_csv(path: str | Path, qs: Iterable[complex], values: Iterable[complex]) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["q_re", "q_im", "val_re", "val_im"])
        for q, v in zip(qs, values):
            q, v = complex(q), complex(v)
            w.writerow([repr(q.real), repr(q.imag), repr(v.real), repr(v.imag)])


def write_roots_csv(path: str | Path, found: Iterable[Root]) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["re", "im", "kind"])
        for r in found:
            w.writerow([repr(r.value.real), repr(r.value.imag), r.kind])
