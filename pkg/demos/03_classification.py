"""
Predicting terminal sign behavior
=================================

"""

# For fixed n, the sign of delta(n) = p(n)^2 - p(n-1) p(n+1) settles as
# ell grows.  The classifier predicts the settled sign without sweeping
# ell, from exact maximal-product data alone.

from eulerprod import (
    a_ratio,
    classify_pipeline,
    exceptions_from_spec,
    q_value,
    weight_from_spec,
)

# The first-order criterion is the quotient Q(n) = M(n)^2 over
# M(n-1) M(n+1).  Above 1 the column turns positive eventually
# (log-concave), below 1 negative (log-convex).  For unrestricted
# partitions the quotient cycles with period 3:
E = exceptions_from_spec("none")
for n in range(4, 10):
    qv = q_value(E, n)
    print(f"n = {n}: Q = {qv.q}  ({qv.relation})")

# Q = 1 decides nothing, and it hits a third of the columns.  The
# tie-break compares second-order data: the ratio of ordering
# coefficients across the window n-1, n, n+1, valid when the maximizers
# are unique and their part multisets balance.  Excluding part 4 keeps
# the same tie at n = 8 but restores uniqueness, so the ratio applies.
ar = a_ratio(exceptions_from_spec("4"), 8)
print()
print("tie-break ratio at n = 8, part 4 excluded:", ar.ratio,
      " hypotheses hold:", ar.hypotheses.all_hold())

# The full pipeline stacks the closed-form verdicts, the quotient, and
# the tie-break, and reports which mechanism fired.
print()
for spec, n in (("2,4", 6), ("2,3", 5), ("4", 8), ("support:1,3", 7)):
    p = classify_pipeline(exceptions_from_spec(spec), n)
    print(f"E = {spec:11s} n = {n}: {p.verdict}  [{p.mechanism}]")

# Back in the unrestricted family the tie at n = 8 resists even the
# coefficient ratio: two maximizers at n = 7 break its hypotheses.
# The answer then depends on the weight family, and the pipeline says
# so with a conditional verdict carrying exact probe ratios at the
# requested ells, so the caller can see which branch the weights pick.
w = weight_from_spec("power")
p = classify_pipeline(E, 8, w, probe_ells=range(1, 7))
print()
print("verdict:", p.verdict, " branch trend:", p.detail["trend"])
for ell, ratio in p.detail["probes"]:
    print(f"  ell = {ell}: probe = {ratio}")
