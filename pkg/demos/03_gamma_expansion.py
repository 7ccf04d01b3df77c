"""Palindromic polynomials and the gamma basis, bivariate and univariate.

Expands the simple-permutation polynomial for n = 6, demonstrates the error
reporting for inputs outside the span, and shows the univariate analogue.
"""
from gammalab import (
    BivarPoly,
    UniPoly,
    gamma_expand_bivariate,
    gamma_expand_univariate,
    is_palindromic_bivariate,
    simple_distribution,
)
from gammalab.errors import ExpansionError
from gammalab.polys import gamma_basis_bivariate

# The joint polynomial over the 46 simple permutations of length 6.
simp6 = simple_distribution(6).poly
print(f"simp_6(s,t) = {simp6.text()}")
print(f"palindromic of darga 5: {is_palindromic_bivariate(simp6, 5)}")

expansion = gamma_expand_bivariate(simp6, 5)
print("gamma expansion:")
for (i, j), c in expansion.gammas:
    print(f"   {c} * (st)^{i} (s+t)^{j} (1+st)^{5 - j - 2 * i}")
print(f"gamma-positive: {expansion.is_positive()}")
assert expansion.reconstruct() == simp6
print()

# Each basis element expands to a single unit coefficient.
basis = gamma_basis_bivariate(2, 1, 5)
print(f"basis (2,1) darga 5 = {basis.text()}")
print(f"expands to {gamma_expand_bivariate(basis, 5).as_dict()}")
print()

# Inputs outside the span are rejected with the violated symmetry named.
try:
    gamma_expand_bivariate(BivarPoly({(2, 1): 1}), 3)
except ExpansionError as exc:
    print(f"rejected: {exc}")
print()

# Univariate: the one-sided Eulerian polynomial of S_4.
a4q = UniPoly({0: 1, 1: 11, 2: 11, 3: 1})
uni = gamma_expand_univariate(a4q, 3)
print(f"A_4(q) = {a4q.text()}")
print(f"gamma  = {uni.as_dict()}   positive: {uni.is_positive()}")
