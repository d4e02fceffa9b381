"""Eventual log-behavior classification from maximal-product data.

The quotient Q(n) = M(n)^2 / (M(n-1) M(n+1)) decides the eventual sign
of the log-concavity difference when it differs from 1; the tie case
falls to a refined criterion built on the composition-count
coefficients A(n) of the maximizers, and one special configuration
is only conditionally decidable and gets exact probe data instead.

Verdict strings: eventually-concave, eventually-convex, zero,
conditional, unknown.  Mechanism strings: q-criterion, a-criterion,
theorem-table, s13-identity, delta-branch, none.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .maxprod import MaxProdReport, max_product, max_product_values
from .model import ExceptionSet, WeightFamily, member, weight_from_spec
from .qseries import g_table

EVENTUALLY_CONCAVE = "eventually-concave"
EVENTUALLY_CONVEX = "eventually-convex"
ZERO = "zero"
CONDITIONAL = "conditional"
UNKNOWN = "unknown"

MECH_Q = "q-criterion"
MECH_A = "a-criterion"
MECH_TABLE = "theorem-table"
MECH_S13 = "s13-identity"
MECH_DELTA = "delta-branch"
MECH_NONE = "none"

GREATER_THAN_1 = "greater-than-1"
EQUAL_1 = "equal-1"
LESS_THAN_1 = "less-than-1"


@dataclass(frozen=True)
class QValue:
    n: int
    q: Fraction
    relation: str


@dataclass(frozen=True)
class HypothesisRecord:
    """Checks backing the refined criterion at one n.

    strict_growth: the maximal products strictly increase over the
    checked window; unique_*: single maximizer at n-1, n, n+1;
    balanced: the doubled part multiset of the maximizer at n equals
    the merged part multisets of the maximizers at n-1 and n+1.
    """

    strict_growth: bool
    unique_below: bool
    unique_at: bool
    unique_above: bool
    balanced: bool

    def all_hold(self) -> bool:
        return (self.strict_growth and self.unique_below and self.unique_at
                and self.unique_above and self.balanced)


@dataclass(frozen=True)
class ARatio:
    n: int
    ratio: Fraction
    hypotheses: HypothesisRecord


@dataclass(frozen=True)
class Prediction:
    verdict: str
    mechanism: str
    detail: dict


def q_value(E: ExceptionSet, n: int) -> QValue:
    """Exact quotient M(n)^2 / (M(n-1) M(n+1)) with its trichotomy."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    m = max_product_values(E, n + 1)
    q = Fraction(m[n] * m[n], m[n - 1] * m[n + 1])
    relation = GREATER_THAN_1 if q > 1 else LESS_THAN_1 if q < 1 else EQUAL_1
    return QValue(n, q, relation)


def classify_basic(E: ExceptionSet, n: int) -> Prediction:
    """Quotient criterion: above 1 concave, below 1 convex, tie open."""
    qv = q_value(E, n)
    if qv.q > 1:
        return Prediction(EVENTUALLY_CONCAVE, MECH_Q, {"q": qv.q})
    if qv.q < 1:
        return Prediction(EVENTUALLY_CONVEX, MECH_Q, {"q": qv.q})
    return Prediction(UNKNOWN, MECH_NONE, {"q": qv.q, "note": "quotient ties at 1; try the refined criterion"})


def _reports_window(E: ExceptionSet, n: int) -> dict[int, MaxProdReport]:
    return {m: max_product(E, m) for m in (n - 1, n, n + 1)}


def _balanced(reports: dict[int, MaxProdReport], n: int) -> bool:
    if not (reports[n - 1].unique and reports[n].unique and reports[n + 1].unique):
        return False
    doubled = sorted(reports[n].maximizers[0].parts * 2)
    merged = sorted(reports[n - 1].maximizers[0].parts + reports[n + 1].maximizers[0].parts)
    return doubled == merged


def a_ratio(E: ExceptionSet, n: int, growth_guard: int = 5) -> ARatio:
    """Coefficient ratio A(n)^2 / (A(n-1) A(n+1)) with hypothesis record."""
    if n < 2:
        raise ValueError(f"the ratio needs n >= 2, got {n}")
    reports = _reports_window(E, n)
    values = max_product_values(E, n + 1 + growth_guard)
    lo = max(2, n - 1 - growth_guard)
    strict = all(values[m] > values[m - 1] for m in range(lo, n + 2 + growth_guard))
    record = HypothesisRecord(
        strict,
        reports[n - 1].unique,
        reports[n].unique,
        reports[n + 1].unique,
        _balanced(reports, n),
    )
    ratio = reports[n].coefficient ** 2 / (reports[n - 1].coefficient * reports[n + 1].coefficient)
    return ARatio(n, ratio, record)


def classify_refined(E: ExceptionSet, n: int, weights: WeightFamily | None = None,
                     probe_ells: Iterable[int] | None = None,
                     growth_guard: int = 5) -> Prediction:
    """Coefficient-ratio criterion for the quotient tie Q(n) = 1.

    All hypotheses holding, the ratio decides the verdict.  When only
    uniqueness below fails, in the one two-maximizer configuration with
    parts 2, 3, 4 allowed and n = 2 mod 3, the verdict is delegated to
    the conditional branch analysis.  Anything else stays unknown.
    """
    qv = q_value(E, n)
    if qv.q != 1:
        raise ValueError(f"refined criterion needs quotient 1 at n={n}, got {qv.q}")
    if n < 2:
        return Prediction(UNKNOWN, MECH_NONE, {"note": "window n-1, n, n+1 leaves the table"})
    ar = a_ratio(E, n, growth_guard)
    record = ar.hypotheses
    if record.all_hold():
        detail = {"ratio": ar.ratio, "hypotheses": record}
        if ar.ratio > 1:
            return Prediction(EVENTUALLY_CONCAVE, MECH_A, detail)
        if ar.ratio < 1:
            return Prediction(EVENTUALLY_CONVEX, MECH_A, detail)
        return Prediction(UNKNOWN, MECH_NONE, detail)
    reports = _reports_window(E, n)
    if (record.strict_growth and record.unique_at and record.unique_above
            and not record.unique_below and len(reports[n - 1].maximizers) == 2
            and n % 3 == 2 and not any(member(E, m) for m in (2, 3, 4))):
        return classify_delta_branch(E, n, weights or weight_from_spec("power"),
                                     probe_ells if probe_ells is not None else range(1, 13))
    return Prediction(UNKNOWN, MECH_NONE, {"hypotheses": record})


def delta_branch_n_bound(delta: Fraction) -> Fraction:
    """Threshold 2(delta+2)/(delta-1) below which the convex branch is silent."""
    delta = Fraction(delta)
    if delta <= 1:
        raise ValueError(f"the threshold exists for delta > 1 only, got {delta}")
    return 2 * (delta + 2) / (delta - 1)


def _trend(values: list[Fraction]) -> str:
    if len(values) < 2:
        return "constant"
    diffs = [b - a for a, b in zip(values, values[1:])]
    if all(d > 0 for d in diffs):
        return "increasing"
    if all(d < 0 for d in diffs):
        return "decreasing"
    if all(d == 0 for d in diffs):
        return "constant"
    signs = [(d > 0) - (d < 0) for d in diffs]
    if all(s != 0 and s == -t for s, t in zip(signs, signs[1:])):
        return "oscillating"
    return "mixed"


def classify_delta_branch(E: ExceptionSet, n: int, w: WeightFamily,
                          probe_ells: Iterable[int]) -> Prediction:
    """Probe 2 g(4) / g(2)^2 exactly and report both published branches.

    If the probed ratio eventually stays above some fixed delta > 1 and
    n > 2(delta+2)/(delta-1), the sequence turns convex; if it stays
    below some delta < 1, concave.  Finitely many probes cannot assert
    either limit, so the verdict is always conditional and carries the
    exact probe values and the observed trend.
    """
    for m in (2, 3, 4):
        if member(E, m):
            raise ValueError("branch analysis needs parts 2, 3 and 4 allowed")
    if n % 3 != 2:
        raise ValueError(f"branch analysis applies to n = 2 mod 3, got {n}")
    probes: list[tuple[int, Fraction]] = []
    for ell in probe_ells:
        gt = g_table(E, w, ell, 4)
        probes.append((ell, Fraction(2 * gt.values[4], gt.values[2] ** 2)))
    if not probes:
        raise ValueError("at least one probe ell is required")
    ratios = [r for _, r in probes]
    last = ratios[-1]
    trend = _trend(ratios)
    detail: dict = {
        "probes": tuple(probes),
        "trend": trend,
        "oscillates": trend == "oscillating",
        "last_ratio": last,
        "convex_branch": "ratio eventually above a fixed delta > 1 and n > 2(delta+2)/(delta-1)",
        "concave_branch": "ratio eventually below a fixed delta < 1",
    }
    if last > 1:
        detail["n_bound_at_last"] = delta_branch_n_bound(last)
    return Prediction(CONDITIONAL, MECH_DELTA, detail)


def theorem_table(E: ExceptionSet, n: int) -> Prediction:
    """Published eventual-sign table for the settled configurations.

    Matches the exception set against the resolved cases and returns
    the stated verdict with its validity threshold honored; anything
    not covered (including the open configuration with 2, 4, 5
    excluded but support beyond {1, 3}) comes back unknown.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")

    def in_S(m: int) -> bool:
        return not member(E, m)

    s2, s3, s4, s5 = in_S(2), in_S(3), in_S(4), in_S(5)
    # parts above n + 1 cannot influence the difference at n
    support_is_13 = s3 and all(member(E, m) for m in range(2, n + 2) if m != 3)
    if support_is_13 and n % 3 == 1:
        return Prediction(ZERO, MECH_S13, {
            "case": "support {1,3}",
            "rule": "coefficients repeat in blocks of three, difference vanishes at n = 1 mod 3"})
    if s2 and s3:
        if n < 3:
            return Prediction(UNKNOWN, MECH_NONE, {"note": "below the stated range n >= 3"})
        r = n % 3
        if r == 0:
            return Prediction(EVENTUALLY_CONCAVE, MECH_TABLE, {"case": "1,2,3 allowed", "rule": "n = 0 mod 3"})
        if r == 1:
            return Prediction(EVENTUALLY_CONVEX, MECH_TABLE, {"case": "1,2,3 allowed", "rule": "n = 1 mod 3"})
        if not s4:
            return Prediction(EVENTUALLY_CONCAVE, MECH_TABLE,
                              {"case": "1,2,3 allowed, 4 excluded", "rule": "n = 2 mod 3"})
        return Prediction(CONDITIONAL, MECH_TABLE, {
            "case": "1,2,3,4 allowed", "rule": "n = 2 mod 3",
            "note": "sign depends on the weight family; see the branch analysis"})
    if s2 and not s3:
        if n < 5:
            return Prediction(UNKNOWN, MECH_NONE, {"note": "below the stated range n >= 5"})
        if n % 2 == 0:
            return Prediction(EVENTUALLY_CONCAVE, MECH_TABLE, {"case": "1,2 allowed, 3 excluded", "rule": "even n"})
        return Prediction(EVENTUALLY_CONVEX, MECH_TABLE, {"case": "1,2 allowed, 3 excluded", "rule": "odd n"})
    if not s2 and s3 and not s4:
        r = n % 3
        if r != 1:
            if n < 4:
                return Prediction(UNKNOWN, MECH_NONE, {"note": "below the stated range n >= 4"})
            if r == 0:
                return Prediction(EVENTUALLY_CONCAVE, MECH_TABLE,
                                  {"case": "1,3 allowed, 2,4 excluded", "rule": "n = 0 mod 3"})
            return Prediction(EVENTUALLY_CONVEX, MECH_TABLE,
                              {"case": "1,3 allowed, 2,4 excluded", "rule": "n = 2 mod 3"})
        if s5:
            if n < 4:
                return Prediction(UNKNOWN, MECH_NONE, {"note": "below the stated range n >= 4"})
            return Prediction(EVENTUALLY_CONVEX, MECH_TABLE,
                              {"case": "1,3,5 allowed, 2,4 excluded", "rule": "n = 1 mod 3"})
        return Prediction(UNKNOWN, MECH_NONE,
                          {"note": "2, 4 and 5 excluded with support beyond {1,3}: open configuration"})
    head = next((m for m in range(2, n + 2) if in_S(m)), None)
    if (head is not None and head >= 3 and in_S(head + 1)
            and all(member(E, m) for m in range(2, head))):
        r = head
        if n >= (r * (r - 1) * (3 * r - 1) + 4) // 2:
            if n % r == r - 1:
                return Prediction(EVENTUALLY_CONVEX, MECH_TABLE, {
                    "case": f"1,{r},{r + 1} allowed, 2..{r - 1} excluded", "rule": f"n = {r - 1} mod {r}"})
            return Prediction(EVENTUALLY_CONCAVE, MECH_TABLE, {
                "case": f"1,{r},{r + 1} allowed, 2..{r - 1} excluded", "rule": f"n != {r - 1} mod {r}"})
        return Prediction(UNKNOWN, MECH_NONE,
                          {"note": f"below the stated range n >= {(r * (r - 1) * (3 * r - 1) + 4) // 2}"})
    return Prediction(UNKNOWN, MECH_NONE, {"note": "configuration not covered by the table"})


def classify_pipeline(E: ExceptionSet, n: int, weights: WeightFamily | None = None,
                      probe_ells: Iterable[int] | None = None) -> Prediction:
    """Table first, then the quotient, then the refined tie-break.

    A conditional table verdict (the weight-dependent configuration)
    falls through to the refined path so the answer carries exact
    probe data; it is restored if the refined path decides nothing.
    """
    table = theorem_table(E, n)
    if table.verdict not in (UNKNOWN, CONDITIONAL):
        return table
    basic = classify_basic(E, n)
    if basic.verdict != UNKNOWN or n < 2:
        return table if table.verdict == CONDITIONAL else basic
    refined = classify_refined(E, n, weights, probe_ells)
    if refined.verdict == UNKNOWN and table.verdict == CONDITIONAL:
        return table
    return refined
