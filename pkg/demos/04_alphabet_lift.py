"""Lifting a code to a bigger alphabet with polynomial tags.

Starting from the 8-word ternary base code, each non-star symbol b gets
paired with evaluations of a polynomial f over GF(m), flattened back to
a single symbol.  The m**2 polynomial choices multiply the code size by
m**2 while the alphabet only grows to q = 2m + 1, and the result stays
2-frameproof and 2-determined, so the step can be repeated.
"""

from frameproof import (
    augment_infinity,
    base_code,
    default_eval_points,
    is_frameproof_naive,
    is_t_determined,
    polynomial_lift,
    ssw_bound,
)

parent = base_code("q3")
print("parent:", parent)

m = 3
points = default_eval_points(m, parent.length)
print(f"evaluation points over GF({m}) (None = infinity point):", points)

lifted = polynomial_lift(parent, m, 2, 2)
print("lifted:", lifted)
print("  2-frameproof:", is_frameproof_naive(lifted, 2).verdict)
print("  2-determined:", is_t_determined(lifted, 2).verdict)
print("  size 2(q-1)^2 =", 2 * (lifted.q - 1) ** 2, "| cardinality bound:",
      ssw_bound(2, lifted.length, lifted.q))

print("\nfirst few lifted words (star = 0):")
for w in lifted.words[:6]:
    print("  ", w)

# The all-star word can join at the very end without breaking anything.
final = augment_infinity(lifted, 2, 2)
print("\nafter adjoining the all-star word:", final)
print("  still 2-frameproof:", is_frameproof_naive(final, 2).verdict)

# Lifting twice reaches q = 2*3*5 + 1 = 31 before augmenting.
twice = polynomial_lift(lifted, 5, 2, 2)
print("\nlifted again with m=5:", twice)
print("  size check 2(q-1)^2 =", 2 * (twice.q - 1) ** 2)
