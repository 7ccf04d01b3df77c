"""Descent statistics and the two-sided Eulerian polynomial.

A walk through the basic vocabulary: descents, inverse descents, and the
joint distribution of the pair over a full symmetric group.
"""
from gammalab import (
    descent_set,
    des,
    des_ides,
    eulerian_distribution,
    gamma_expand_bivariate,
    ides,
    inverse,
)

pi = (2, 4, 6, 1, 3, 5)
print(f"pi            = {pi}")
print(f"descent set   = {sorted(descent_set(pi))}")
print(f"des(pi)       = {des(pi)}")
print(f"inverse       = {inverse(pi)}")
print(f"ides(pi)      = {ides(pi)}")
print()

# The joint distribution of (des, ides) over S_4 is a small palindromic
# polynomial whose coefficient grid is symmetric about both diagonals.
dist = eulerian_distribution(4)
print(f"A_4(s,t) = {dist.poly.text()}   ({dist.count} permutations)")
size = 4
grid = [[dist.poly.coeff(i, j) for j in range(size)] for i in range(size)]
for row in grid:
    print("   " + " ".join(f"{v:3d}" for v in row))
print()

# Palindromicity means A_4 expands exactly in the gamma basis
# (st)^i (s+t)^j (1+st)^(3-j-2i), here with nonnegative coefficients.
expansion = gamma_expand_bivariate(dist.poly, 3)
for (i, j), c in expansion.gammas:
    print(f"gamma[{i},{j}] = {c}")
print(f"gamma-positive: {expansion.is_positive()}")
print()

# Both statistics in one pass, the form used by the enumeration loops.
print("des_ides over S_3:")
import itertools
for p in itertools.permutations((1, 2, 3)):
    print(f"   {p} -> {des_ides(p)}")
