"""
The q-deformed linking function
===============================

Replacing L and R by their q-analogues turns every crossing angle into a
function of q. Summing over the crossings gives Link_q(A, B), a rational
function equal to lk(A, B) in the limit q -> oo.

We evaluate it, find its zeros and poles with Durand-Kerner, and render
a phase portrait as a PPM image.
"""

import numpy as np

from modknot import link_q, link_q_symbolic, lk, roots
from modknot.charvar import plot_grid, write_ppm

A, B = "RLL", "RLRLL"
f = link_q_symbolic(A, B)
print("crossings", f.crossing_count)
print("numerator", f.numerator)

# approach to lk (for pairs such as RL, RLL the numerator is 0 and Link_q is constant)
for q in (1, 2, 4, 8, 16, 32):
    print(f"q={q:>2}  Link_q={link_q(A, B, q).real:.6f}")
print("lk =", lk(A, B))

# zeros and poles come in orbits under q -> 1/q and complex conjugation
for r in roots(f):
    print(f"{r.kind:>4} {r.value:.6f}  |q|={r.modulus:.6f}")

# vectorized evaluation on a ring of the unit circle
ring = np.exp(1j * np.linspace(0, np.pi, 7))
print(np.round(f(ring), 4))

img = plot_grid(A, B, 0j, 2.0, 128)
write_ppm("link_q_RLL_RLRLL.ppm", img)
print("wrote link_q_RLL_RLRLL.ppm", img.shape)
