"""
Fricke polynomials and Alexander polynomials
============================================

A word in L, R is also a positive braid on three strands, so its closure
is a Lorenz link with an Alexander polynomial. The q-deformed trace of
the word (the Fricke polynomial) determines that polynomial after the
substitution q^2 = -t.
"""

from modknot import alexander, braid_of, fricke_alexander_check, fricke_trace
from modknot.braid3 import fricke_side

for w in ("RL", "RLL", "RRL", "RRLL", "RLRLL", "RRRLL"):
    print(f"{w:>6}  braid {' '.join(braid_of(w))}")
    print(f"        Fricke    {fricke_trace(w)}")
    print(f"        Alexander {alexander(w)}")
    print(f"        from trace {fricke_side(w)}  agree={fricke_alexander_check(w)}")
