"""
Weight families, custom weights, growth envelopes
=================================================

"""

# The exponent f_ell(n) attached to each factor (1 - q^n)^(-f_ell(n))
# comes from a weight family.  Three are built in, and arbitrary
# variants load from a small JSON description.

import json
from pathlib import Path

from eulerprod import (
    check_bounds,
    coeffs_by_recurrence,
    delta,
    exceptions_from_spec,
    max_product,
    weight_from_spec,
)

# The power family is the workhorse: f_ell(n) = n^(ell - 1).  The two
# example families perturb single values; example2 makes the exponents
# at n = 2 and n = 4 swing with the parity of ell.
for family in ("power", "example1", "example2"):
    w = weight_from_spec(family)
    print(f"{family:9s} f_3(n) for n = 1..5:",
          [w.eval(3, n) for n in range(1, 6)])

# A custom family is a JSON file: 'base' offsets the exponent so that
# f(n) = n^(ell + base), and 'overrides' replaces the exponent formula
# at chosen n with sums of 'ell', 'alt' (the sign (-1)^ell), and
# integers.  'phi', 'psi', 'B' describe the family's growth envelope,
# used below.  This file reproduces example2 exactly.
spec = {
    "base": 0,
    "phi": -1,
    "psi": 1,
    "B": 2,
    "overrides": {"2": "ell+alt", "4": "ell-alt"},
}
Path("swing.json").write_text(json.dumps(spec))
w = weight_from_spec("custom:swing.json")
ex2 = weight_from_spec("example2")
same = all(w.eval(ell, n) == ex2.eval(ell, n)
           for ell in range(1, 12) for n in range(1, 30))
print("custom file matches example2:", same)

# The parity swing shows up in the signs: at fixed n the difference
# delta(n) oscillates with ell instead of settling.
E = exceptions_from_spec("none")
print()
print("example2 sign of delta(5):")
for ell in range(20, 28):
    table = coeffs_by_recurrence(E, ex2, ell, 6)
    print(f"  ell = {ell}: {delta(table, 5).sign:+d}")

# Every family carries envelope exponents phi(ell) and psi(ell) that
# squeeze the coefficients against powers of the maximal product M(n):
# k! p(n) >= M(n)^phi and p(n) <= p_1(n) M(n)^psi, with k the part
# count of a maximizer and p_1 the unit-weight count.  The bounds are
# checked exactly, no floats involved.
E24 = exceptions_from_spec("2,4")
power = weight_from_spec("power")
table = coeffs_by_recurrence(E24, power, 3, 10)
report = max_product(E24, 9)
k = len(report.maximizers[0].parts)
print()
print("p(9) =", table[9], " M(9) =", report.product, " k =", k)
print("envelope holds:", check_bounds(table, 9, report.product, k))
