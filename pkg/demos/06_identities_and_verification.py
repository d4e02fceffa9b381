"""
Structured identities and the verification battery
==================================================

"""

# Some restricted products have closed-form coefficient structure that
# the general machinery must reproduce.  The sharpest example: allow
# only parts 1 and 3.  With f_ell(1) = 1 the coefficients repeat in
# blocks of three, each block a single binomial coefficient.

from math import comb

from eulerprod import (
    coeffs_by_recurrence,
    delta,
    exceptions_from_spec,
    verify_suite,
    weight_from_spec,
)

S13 = exceptions_from_spec("support:1,3")
w = weight_from_spec("power")
table = coeffs_by_recurrence(S13, w, 4, 18)
print("coefficients, parts 1 and 3 only, ell = 4:")
print(" ", list(table.coeffs))

# Block m holds C(m + f(3), m) three times, where f(3) = 3^(ell-1).
f3 = w.eval(4, 3)
blocks = [comb(m + f3, m) for m in range(7)]
print("predicted blocks:", blocks)

# Constant blocks force exact ties: at the middle residue n = 1 mod 3
# the neighbors n - 1 and n + 1 land in the same block as n, all three
# coefficients coincide, and the difference vanishes identically in
# ell.
print("delta at n = 4, 7, 10, 13:",
      [delta(table, n).value for n in (4, 7, 10, 13)])

# Facts like these are frozen into named verification suites.  Each
# suite re-derives a family of claims from scratch and reports one
# line per check; the same battery backs the test suite and the
# command line's verify subcommand.
report = verify_suite("maxprod")
for check in report.checks:
    status = "PASS" if check.passed else "FAIL"
    print(f"{status} {report.suite}/{check.name}")

report = verify_suite("q-tables")
print(f"q-tables: {sum(c.passed for c in report.checks)}"
      f" of {len(report.checks)} checks pass")
