import json

import pytest

from eulerprod import (
    ExceptionSet,
    MultiplesOf,
    PowersOf,
    SupportComplement,
    divisors,
    enumerate_members,
    exceptions_from_spec,
    largest_S_divisor,
    member,
    sigma_E1,
    support_view,
    weight_from_spec,
)


@pytest.mark.parametrize("n,expected", [
    (1, [1]),
    (6, [1, 2, 3, 6]),
    (12, [1, 2, 3, 4, 6, 12]),
    (13, [1, 13]),
    (36, [1, 2, 3, 4, 6, 9, 12, 18, 36]),
])
def test_divisors(n, expected):
    assert divisors(n) == expected


def test_divisors_rejects_nonpositive():
    with pytest.raises(ValueError):
        divisors(0)


class TestExceptionGrammar:
    def test_empty_forms(self):
        for text in ("", "none", "empty"):
            E = exceptions_from_spec(text)
            assert enumerate_members(E, 50) == []
            assert E.spec_text == "none"

    def test_atom_list(self):
        E = exceptions_from_spec("2,4")
        assert enumerate_members(E, 10) == [2, 4]
        assert E.spec_text == "2,4"

    def test_powers(self):
        E = exceptions_from_spec("powers:2")
        assert enumerate_members(E, 40) == [2, 4, 8, 16, 32]
        assert member(E, 64) and not member(E, 6)

    def test_multiples(self):
        E = exceptions_from_spec("multiples:3")
        assert enumerate_members(E, 13) == [3, 6, 9, 12]

    def test_union(self):
        E = exceptions_from_spec("3 + powers:5")
        assert enumerate_members(E, 30) == [3, 5, 25]

    def test_support_form(self):
        E = exceptions_from_spec("support:1,3")
        assert not member(E, 1) and not member(E, 3)
        assert all(member(E, m) for m in (2, 4, 5, 6, 7, 100))

    def test_support_cannot_combine(self):
        with pytest.raises(ValueError):
            exceptions_from_spec("support:1,3 + 2")

    @pytest.mark.parametrize("bad", ["1", "0", "powers:1", "multiples:1", "x", "support:2,3", "powers:"])
    def test_rejects_bad_tokens(self, bad):
        with pytest.raises(ValueError):
            exceptions_from_spec(bad)

    def test_one_never_excluded(self):
        with pytest.raises(ValueError):
            ExceptionSet(frozenset({1}), ())


def test_family_validation():
    with pytest.raises(ValueError):
        PowersOf(1)
    with pytest.raises(ValueError):
        MultiplesOf(1)
    with pytest.raises(ValueError):
        SupportComplement(frozenset({2, 3}))


def test_support_view_lists_complement():
    view = support_view(exceptions_from_spec("2,4"), 8)
    assert view.elements == (1, 3, 5, 6, 7, 8)


@pytest.mark.parametrize("espec,n,expected", [
    ("none", 6, 12),
    ("none", 1, 1),
    ("2,4", 4, 1),
    ("2", 12, 26),
    ("powers:2", 8, 1),
    ("support:1,3", 9, 4),
])
def test_sigma_restricted_divisor_sum(espec, n, expected):
    assert sigma_E1(exceptions_from_spec(espec), n) == expected


@pytest.mark.parametrize("espec,n,expected", [
    ("none", 12, 12),
    ("2,4", 4, 1),
    ("2,4", 12, 12),
    ("powers:2", 8, 1),
    ("powers:2", 12, 12),
    ("support:1,3", 9, 3),
    ("support:1,3", 10, 1),
])
def test_largest_allowed_divisor(espec, n, expected):
    assert largest_S_divisor(exceptions_from_spec(espec), n) == expected


class TestWeightFamilies:
    def test_power(self):
        w = weight_from_spec("power")
        assert [w.eval(1, n) for n in range(1, 6)] == [1, 1, 1, 1, 1]
        assert w.eval(4, 3) == 27
        assert w.phi(5) == 4 and w.psi(5) == 4 and w.envelope_gap == 0

    def test_example1_bumps_two(self):
        w = weight_from_spec("example1")
        assert w.eval(3, 2) == 8
        assert w.eval(3, 3) == 9
        assert w.eval(1, 2) == 2
        assert w.phi(5) == 4 and w.psi(5) == 5 and w.envelope_gap == 1

    def test_example2_alternates(self):
        w = weight_from_spec("example2")
        assert w.eval(2, 3) == 9
        assert w.eval(2, 2) == 8
        assert w.eval(3, 2) == 4
        assert w.eval(2, 4) == 4
        assert w.eval(1, 4) == 16
        assert w.phi(5) == 4 and w.psi(5) == 6 and w.envelope_gap == 2

    def test_envelope_brackets_values(self):
        for spec in ("power", "example1", "example2"):
            w = weight_from_spec(spec)
            for ell in range(1, 6):
                lo, hi = w.phi(ell), w.psi(ell)
                for n in range(2, 12):
                    assert n ** lo <= w.eval(ell, n) <= n ** hi, (spec, ell, n)

    def test_custom_file(self, tmp_path):
        path = tmp_path / "weights.json"
        path.write_text(json.dumps({
            "base": -1,
            "phi": -1,
            "psi": 0,
            "B": 1,
            "overrides": {"2": "ell"},
        }))
        w = weight_from_spec(f"custom:{path}")
        assert w.eval(3, 5) == 25
        assert w.eval(3, 2) == 8
        assert w.eval(3, 1) == 1
        assert w.phi(3) == 2 and w.psi(3) == 3 and w.envelope_gap == 1

    def test_custom_alternating_override(self, tmp_path):
        path = tmp_path / "weights.json"
        path.write_text(json.dumps({
            "base": 0, "phi": -1, "psi": 1, "B": 2,
            "overrides": {"2": "ell+alt", "4": "ell-alt"},
        }))
        w = weight_from_spec(f"custom:{path}")
        ref = weight_from_spec("example2")
        for ell in range(1, 7):
            for n in range(1, 9):
                assert w.eval(ell, n) == ref.eval(ell, n)

    def test_custom_missing_key(self, tmp_path):
        path = tmp_path / "weights.json"
        path.write_text(json.dumps({"base": 0, "phi": 0, "psi": 0}))
        with pytest.raises(ValueError):
            weight_from_spec(f"custom:{path}")

    def test_custom_negative_exponent(self, tmp_path):
        path = tmp_path / "weights.json"
        path.write_text(json.dumps({"base": -2, "phi": -2, "psi": 0, "B": 2}))
        w = weight_from_spec(f"custom:{path}")
        with pytest.raises(ValueError):
            w.eval(1, 2)

    def test_custom_bad_formula(self, tmp_path):
        path = tmp_path / "weights.json"
        path.write_text(json.dumps({
            "base": 0, "phi": 0, "psi": 0, "B": 0,
            "overrides": {"2": "ell*2"},
        }))
        with pytest.raises(ValueError):
            weight_from_spec(f"custom:{path}")

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            weight_from_spec("cubic")
