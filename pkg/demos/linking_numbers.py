"""
Linking numbers of modular knots
================================

Each primitive hyperbolic class of PSL2(Z) is a cyclic word in L and R.
Its closed geodesic on the modular surface lifts to a knot in the
complement of the trefoil, and two such knots have a linking number.

Below the linking number is computed three ways and the results are
compared over a small corpus.
"""

from modknot import enumerate_classes, coprime, intersection_number, lk, lk_oracle, lk_shift, lk_slp
from modknot.linking import enumerate_crossings

# a pair of classes and their crossings
A, B = "RLL", "RRL"
for c in enumerate_crossings(A, B):
    print(c)
print("lk", lk(A, B), "I", intersection_number(A, B))

# the three routes agree on every coprime pair of length <= 5
classes = enumerate_classes(5, "hyperbolic", primitive=True)
pairs = [(a, b) for a in classes for b in classes if a != b and coprime(a, b)]
agree = sum(lk_shift(a, b) == lk_slp(a, b) == lk_oracle(a, b) for a, b in pairs)
print(f"{agree}/{len(pairs)} pairs agree")

# framed self-linking: the pattern sum still makes sense when A = B
print("lk(RLL, RLL) =", lk("RLL", "RLL"))

# a small table
names = [c.canonical for c in classes[:6]]
print("      " + " ".join(f"{n:>6}" for n in names))
for a in names:
    row = [str(lk(a, b)) if a != b else "-" for b in names]
    print(f"{a:>6} " + " ".join(f"{v:>6}" for v in row))
