"""Zero-dimensional schemes and what they impose on forms of degree d.

A scheme built from points, jets and fat points either imposes independent
conditions on degree-d forms or fails by a measurable amount h1.  Everything
below is exact rational arithmetic; no tolerances anywhere.
"""

import random
from fractions import Fraction

from veronese.schemes import (
    FatPoint,
    Hyperplane,
    Reduced,
    SchemeSpec,
    castelnuovo_check,
    conditions_matrix,
    h1,
    random_scheme,
    residual_trace_split,
    scheme_degree,
)

rng = random.Random(0)

# Any scheme of degree at most d+1 imposes independent conditions.
print("random schemes of degree <= d+1 in the plane, d = 6:")
for _ in range(5):
    Z = random_scheme(rng, 2, 7, bound=9)
    print(f"  degree {scheme_degree(Z):2d}  h1 = {h1(Z, 6)}")

# The first failure: d+2 points on a line are one condition short.
d = 5
collinear = SchemeSpec(
    2, tuple(Reduced((Fraction(1), Fraction(z), Fraction(0))) for z in range(d + 2))
)
M = conditions_matrix(collinear, d)
print(f"\n{d + 2} collinear points, d = {d}:")
print(f"  conditions matrix {M.rows} x {M.cols}, h1 = {h1(collinear, d)}")

# Fat points: a triple point plus six double points at d = 6 still imposes
# independent conditions (21 + 3 = 24 of the 28 available).
comps = [FatPoint((Fraction(1), Fraction(0), Fraction(0)), 3)]
pts = [(1, 1, 1), (1, -1, 2), (2, 1, -1), (1, 3, 1), (3, -1, 1), (1, 2, 5)]
comps += [FatPoint(tuple(Fraction(c) for c in p), 2) for p in pts]
Z = SchemeSpec(2, tuple(comps))
print(f"\ntriple + 6 doubles at d = 6: degree {scheme_degree(Z)}, h1 = {h1(Z, 6)}")

# Residual splitting along a hyperplane and the resulting inequality.
H = Hyperplane((Fraction(0), Fraction(0), Fraction(1)))
Z = SchemeSpec(2, (FatPoint((Fraction(1), Fraction(2), Fraction(0)), 3),))
res, tra = residual_trace_split(Z, H)
print("\ntriple point on the line x2 = 0:")
print(f"  residual degree {scheme_degree(res)} (a double point)")
print(f"  trace degree    {scheme_degree(tra)} (a triple point of the line)")
print(f"  h1 inequality holds: {castelnuovo_check(Z, H, 4)}")
