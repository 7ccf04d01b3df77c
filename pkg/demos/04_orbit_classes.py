"""Tree involutions, orbit classes, and the factorization they explain.

Flipping an odd chain moves (des, ides) diagonally; swapping a length-4
label moves one descent across.  Orbits under both moves each contribute a
single gamma-basis element, and grouping by simplified tree factors the whole
two-sided Eulerian polynomial.
"""
from gammalab import (
    binary_right_chains,
    class_polynomial,
    closure_class_report,
    decompose,
    equivalence_class,
    flip_odd_chain,
    reconstruct,
    swap_length4_label,
    tree_text,
    verify_reduction,
)
from gammalab.permutations import des_ides

pi = (6, 7, 1, 3, 2, 5, 4)
tree = decompose(pi)
print(f"pi   = {pi}   (des, ides) = {des_ides(pi)}")
print(f"tree = {tree_text(tree)}")

part = binary_right_chains(tree)
odd = [i for i, c in enumerate(part.chains) if len(c) % 2 == 1]
flipped = flip_odd_chain(tree, odd[0])
print(f"flip chain {odd[0]} -> {reconstruct(flipped)}   (des, ides) = {des_ides(reconstruct(flipped))}")
print()

quartet = decompose((2, 4, 1, 3))
print(f"swap 2413 label -> {reconstruct(swap_length4_label(quartet, 0))}")
print()

# The full orbit of a permutation whose skeletons stay short.
cls = equivalence_class(pi)
print(f"orbit of {pi}: {len(cls.members)} members")
for member in sorted(cls.members):
    print(f"   {member}  (des, ides) = {des_ides(member)}")
print(f"minimal representative: {tree_text(cls.minimal)}")
print(f"class polynomial      = {class_polynomial(cls).text()}")
print()

# Every class of the length-<=5 closure of S_6, checked wholesale.
report = closure_class_report(6)
print(f"closure classes at n=6: {len(report.classes)}, all checks pass: {report.ok}")
print(f"total = {report.total.text()}")
print(f"gamma = {report.expansion.as_dict()}")
print()

# The simplified-tree factorization covers all of S_n, not just the closure.
red = verify_reduction(6)
print(f"S_6 partitions into {red.group_count} simplified-tree groups; ok: {red.ok}")
