#!/usr/bin/env python3
# Walkthrough: the cohomology ring of operators with simple spectrum.
#
# Ordering the eigenvalues gives n eigenline bundles with Chern classes
# c^1, ..., c^n, and the ring is Z[c^1..c^n] modulo all symmetric
# polynomials.  Normal forms live on the staircase basis (exponent of c^i
# at most n - i).

from conres import (
    DegreeTwoClass,
    cup,
    first_order_h4,
    generator,
    h2_order,
    normal_form,
    ring_poincare,
    shift_difference,
)
from conres.cohomring import elementary_symmetric

n = 4

# The ring has rank n! in total, distributed like a product of projective
# spaces.
print(f"ring Poincare polynomial, n={n}: {ring_poincare(n)}")

# The defining relations reduce to zero.
for k in range(1, n + 1):
    assert normal_form(elementary_symmetric(n, k), n).is_zero()
print("e_1, ..., e_n all reduce to 0: OK")

# Products renormalize automatically.
c = [None] + [generator(n, i) for i in range(1, n + 1)]
print(f"c1 * c1       = {cup(c[1], c[1])}")
print(f"c1 * c2 * c3  = {cup(cup(c[1], c[2]), c[3])}")
# In n = 2 the square of a generator already dies:
print(f"c1 * c1 (n=2) = {cup(generator(2, 1), generator(2, 1))}")

# Degree-2 classes are integer sequences modulo constants.  Their order is
# the degree of the interpolating integer polynomial, read from finite
# differences; the shift-difference operator drops it by exactly one.
squares = DegreeTwoClass(tuple(i * i for i in range(1, 8)))
print(f"\norder of (1, 4, 9, ..., 49): {h2_order(squares)}")
print(f"order of its difference    : {h2_order(shift_difference(squares))}")
print(f"order of a constant        : {h2_order((3, 3, 3, 3))}")
delta_like = (0, 0, 1, -1, 0)
print(f"order of {delta_like}  : {h2_order(delta_like)} (a wall-crossing class)")

# In degree 4 the order-1 line is generated by sum_i i (c^i)^2; for n = 2
# the degree-4 part of the ring is zero and the class collapses with it.
for m in (2, 3, 4, 5):
    print(f"sum i*(c^i)^2, n={m}: {first_order_h4(m)}")
