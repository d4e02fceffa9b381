from fractions import Fraction

import pytest

from eulerprod import (
    CONDITIONAL,
    EVENTUALLY_CONCAVE,
    EVENTUALLY_CONVEX,
    UNKNOWN,
    ZERO,
    a_ratio,
    classify_basic,
    classify_delta_branch,
    classify_pipeline,
    classify_refined,
    delta_branch_n_bound,
    exceptions_from_spec,
    q_value,
    theorem_table,
    weight_from_spec,
)

E0 = exceptions_from_spec("none")
E4 = exceptions_from_spec("4")
E24 = exceptions_from_spec("2,4")
S13 = exceptions_from_spec("support:1,3")


class TestQuotient:
    @pytest.mark.parametrize("espec,n,expected", [
        ("4", 6, Fraction(9, 8)),
        ("none", 7, Fraction(8, 9)),
        ("none", 5, Fraction(1)),
        ("2,4", 6, Fraction(9, 5)),
        ("2,4", 7, Fraction(3, 5)),
        ("support:1,3", 9, Fraction(3)),
        ("support:1,3", 7, Fraction(1)),
        ("3", 6, Fraction(32, 25)),
    ])
    def test_values(self, espec, n, expected):
        qv = q_value(exceptions_from_spec(espec), n)
        assert qv.q == expected

    def test_relation_strings(self):
        assert q_value(E24, 6).relation == "greater-than-1"
        assert q_value(E24, 7).relation == "less-than-1"
        assert q_value(E0, 5).relation == "equal-1"

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            q_value(E0, 0)


class TestBasic:
    def test_decides_when_quotient_leaves_one(self):
        p = classify_basic(E24, 6)
        assert p.verdict == EVENTUALLY_CONCAVE and p.detail["q"] == Fraction(9, 5)
        p = classify_basic(E24, 7)
        assert p.verdict == EVENTUALLY_CONVEX

    def test_open_when_quotient_ties(self):
        assert classify_basic(E0, 5).verdict == UNKNOWN


class TestARatio:
    def test_published_ratio_shape(self):
        ar = a_ratio(E4, 8)
        assert ar.ratio == Fraction(3)
        assert ar.hypotheses.all_hold()

    def test_tie_at_one_detected(self):
        ar = a_ratio(S13, 7)
        assert ar.ratio == Fraction(2)
        assert not ar.hypotheses.strict_growth
        assert ar.hypotheses.balanced

    def test_multi_maximizer_below(self):
        ar = a_ratio(E0, 8)
        h = ar.hypotheses
        assert h.strict_growth and h.unique_at and h.unique_above
        assert not h.unique_below and not h.balanced

    def test_needs_room(self):
        with pytest.raises(ValueError):
            a_ratio(E0, 1)


class TestRefined:
    def test_concave_family(self):
        for n in (5, 8, 11, 14):
            p = classify_refined(E4, n)
            assert p.verdict == EVENTUALLY_CONCAVE
            assert p.mechanism == "a-criterion"
            assert p.detail["ratio"] == Fraction(2 * (n + 1), n - 2)

    def test_requires_quotient_tie(self):
        with pytest.raises(ValueError):
            classify_refined(E24, 6)

    def test_unmet_hypotheses_stay_open(self):
        assert classify_refined(S13, 7).verdict == UNKNOWN

    def test_delegates_full_support_case(self):
        p = classify_refined(E0, 8)
        assert p.verdict == CONDITIONAL and p.mechanism == "delta-branch"
        probes = dict(p.detail["probes"])
        assert probes[10] == Fraction(2099202, 1050625)


class TestDeltaBranch:
    def test_probe_values_power(self):
        p = classify_delta_branch(E0, 8, weight_from_spec("power"), range(1, 5))
        probes = dict(p.detail["probes"])
        assert probes[1] == Fraction(14, 9)
        assert probes[2] == Fraction(42, 25)
        assert p.detail["trend"] == "increasing"
        assert not p.detail["oscillates"]
        assert "n_bound_at_last" in p.detail

    def test_alternating_weights_oscillate(self):
        p = classify_delta_branch(E0, 8, weight_from_spec("example2"), range(1, 9))
        assert p.detail["oscillates"] and p.detail["trend"] == "oscillating"

    def test_validation(self):
        w = weight_from_spec("power")
        with pytest.raises(ValueError):
            classify_delta_branch(E4, 8, w, range(1, 3))
        with pytest.raises(ValueError):
            classify_delta_branch(E0, 7, w, range(1, 3))
        with pytest.raises(ValueError):
            classify_delta_branch(E0, 8, w, [])

    def test_n_bound(self):
        assert delta_branch_n_bound(2) == 8
        assert delta_branch_n_bound(Fraction(3, 2)) == 14
        with pytest.raises(ValueError):
            delta_branch_n_bound(1)


class TestTheoremTable:
    @pytest.mark.parametrize("espec,n,verdict", [
        ("none", 9, EVENTUALLY_CONCAVE),
        ("none", 7, EVENTUALLY_CONVEX),
        ("none", 8, CONDITIONAL),
        ("4", 8, EVENTUALLY_CONCAVE),
        ("3", 8, EVENTUALLY_CONCAVE),
        ("3", 9, EVENTUALLY_CONVEX),
        ("3,5", 10, EVENTUALLY_CONCAVE),
        ("2,4", 6, EVENTUALLY_CONCAVE),
        ("2,4", 8, EVENTUALLY_CONVEX),
        ("2,4", 7, EVENTUALLY_CONVEX),
        ("powers:2", 9, EVENTUALLY_CONCAVE),
        ("powers:2", 7, EVENTUALLY_CONVEX),
        ("powers:3", 7, EVENTUALLY_CONVEX),
        ("powers:3", 8, EVENTUALLY_CONCAVE),
        ("support:1,3", 7, ZERO),
        ("support:1,3", 9, EVENTUALLY_CONCAVE),
        ("support:1,3", 8, EVENTUALLY_CONVEX),
        ("support:1,3,4", 26, EVENTUALLY_CONVEX),
        ("support:1,3,4", 27, EVENTUALLY_CONCAVE),
        ("2", 30, EVENTUALLY_CONCAVE),
        ("2,3", 68, EVENTUALLY_CONCAVE),
        ("2,3", 71, EVENTUALLY_CONVEX),
    ])
    def test_verdicts(self, espec, n, verdict):
        assert theorem_table(exceptions_from_spec(espec), n).verdict == verdict

    @pytest.mark.parametrize("espec,n", [
        ("none", 2),
        ("3", 4),
        ("2,4", 3),
        ("2,4,5", 7),
        ("support:1,3,4", 25),
        ("2,3", 67),
        ("support:1,3,7", 13),
    ])
    def test_open_cases(self, espec, n):
        assert theorem_table(exceptions_from_spec(espec), n).verdict == UNKNOWN

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            theorem_table(E0, 0)


class TestPipeline:
    def test_table_precedence(self):
        p = classify_pipeline(E24, 6)
        assert p.verdict == EVENTUALLY_CONCAVE and p.mechanism == "theorem-table"

    def test_quotient_when_table_silent(self):
        p = classify_pipeline(exceptions_from_spec("2,3"), 5)
        assert p.verdict == EVENTUALLY_CONCAVE and p.mechanism == "q-criterion"
        assert p.detail["q"] == Fraction(25, 24)

    def test_conditional_falls_through_to_probes(self):
        p = classify_pipeline(E0, 8)
        assert p.verdict == CONDITIONAL and p.mechanism == "delta-branch"
        assert "probes" in p.detail

    def test_open_configuration_stays_open(self):
        p = classify_pipeline(exceptions_from_spec("2,4,5"), 7)
        assert p.verdict == UNKNOWN
