#!/usr/bin/env python3
# Walkthrough: the cohomological table stabilizes as n grows.
#
# Embedding operators on C^n into operators on C^N (adding a simple-spectrum
# complement) maps the cohomological tables onto each other, and each cell
# eventually stops changing.  The bound comes from the stabilization of flag
# manifold cohomology for each fixed shape.

from conres import (
    MultiIndex,
    cohomological_rank,
    e1_stable_bound,
    gauss_multinomial,
    stab_index,
    stable_table,
)

# Low-degree coefficients of [m; 2]_q as m grows: they increase and freeze.
A = MultiIndex((2,))
print("low coefficients of [m; 2]_q:")
for m in range(2, 8):
    poly = gauss_multinomial(m, A.parts)
    print(f"  m={m}: {[poly.coefficient(j) for j in range(4)]}")

# The scan finds the freezing point for each degree.
for degree in (0, 2, 4, 6):
    report = stab_index(A, degree)
    print(f"stab((2), degree {degree}) = {report.stab_n}, witness {report.witness}")

# A cell bound is the worst case over all shapes of the right complexity.
for p, q in ((-1, 3), (-1, 5), (-2, 6), (-3, 9)):
    bound = e1_stable_bound(p, q)
    ranks = [cohomological_rank(m, p, q) for m in (bound, bound + 1, bound + 2)]
    print(f"cell ({p}, {q}): stable from n = {bound}, ranks there {ranks}")

# The stable table itself, for a small window.  The line p + q = 2 carries
# exactly one rank per column: the degree-2 classes of each order.
print("\nstable table (p >= -2, q <= 8):")
for cell in stable_table(-2, 8):
    if cell.rank:
        print(
            f"  E(p={cell.p}, q={cell.q}) = {cell.rank}"
            f"   (stable from n = {cell.bound_n})"
        )
