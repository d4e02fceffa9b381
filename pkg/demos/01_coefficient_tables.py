"""
Coefficient tables for restricted Euler products
================================================

"""

# Every computation here is exact integer arithmetic: the expansion of
# prod_{m in S} (1 - q^m)^(-f_ell(m)) has integer coefficients, and we
# keep them that way.  S is the complement of a small exception set E.

from eulerprod import (
    coeffs_by_product,
    coeffs_by_recurrence,
    delta,
    exceptions_from_spec,
    weight_from_spec,
)

# With no exceptions and constant weight 1 (the power family at ell = 1)
# the coefficients are the ordinary partition numbers.
E = exceptions_from_spec("none")
w = weight_from_spec("power")
table = coeffs_by_recurrence(E, w, 1, 12)
print("partition numbers:", list(table.coeffs))

# Excluding parts 2 and 4 changes the count: only partitions avoiding
# those part sizes remain.
E24 = exceptions_from_spec("2,4")
table24 = coeffs_by_recurrence(E24, w, 1, 12)
print("parts 2, 4 excluded:", list(table24.coeffs))

# Raising ell steepens the weights.  At ell = 3 each allowed part m
# contributes with multiplicity m^2, so the coefficients explode.
table3 = coeffs_by_recurrence(E24, w, 3, 12)
print("ell = 3:", list(table3.coeffs))

# The same numbers come out of a completely different route: multiply
# the truncated factors (1 - q^m)^(-f(m)) directly.  The two paths
# share no code beyond the weight evaluation, which makes them useful
# cross-checks for each other.
check = coeffs_by_product(E24, w, 3, 12)
print("product oracle agrees:", check.coeffs == table3.coeffs)

# The question the rest of the package revolves around: is the sequence
# eventually log-concave (p(n)^2 > p(n-1) p(n+1)) or log-convex?  The
# difference delta(n) = p(n)^2 - p(n-1) p(n+1) tells us at each n.
print()
print(" n  p(n)   delta  sign")
for n in range(1, 12):
    d = delta(table3, n)
    print(f"{n:2d}  {table3[n]:4d}  {d.value:6d}  {d.sign:+d}")

# Signs that flip around at small n can still settle down for large
# ell; the sign-grid demo explores exactly that.
