import json
from math import comb

import pytest

from eulerprod import (
    check_bounds,
    check_g_bounds,
    coeffs_by_product,
    coeffs_by_recurrence,
    delta,
    exceptions_from_spec,
    g_table,
    weight_from_spec,
)

POWER = weight_from_spec("power")


def test_unit_weights_give_partition_numbers():
    t = coeffs_by_recurrence(exceptions_from_spec("none"), POWER, 1, 10)
    assert t.coeffs == (1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42)


def test_restricted_support_counts():
    t = coeffs_by_recurrence(exceptions_from_spec("2,4"), POWER, 1, 5)
    assert t.coeffs == (1, 1, 1, 2, 2, 3)


def test_product_path_matches_recurrence():
    for espec in ("none", "2,4", "powers:2", "support:1,3"):
        E = exceptions_from_spec(espec)
        for ell in range(1, 5):
            a = coeffs_by_recurrence(E, POWER, ell, 30)
            b = coeffs_by_product(E, POWER, ell, 30)
            assert a.coeffs == b.coeffs, (espec, ell)


def test_product_path_trivial_horizon():
    t = coeffs_by_product(exceptions_from_spec("none"), POWER, 1, 0)
    assert t.coeffs == (1,)


@pytest.mark.parametrize("espec,ell,n,expected", [
    ("none", 2, 4, 21),
    ("2", 2, 4, 17),
    ("none", 1, 6, 12),
    ("2,4", 1, 4, 1),
    ("none", 3, 2, 9),
])
def test_g_values(espec, ell, n, expected):
    gt = g_table(exceptions_from_spec(espec), POWER, ell, n)
    assert gt[n] == expected


def test_g_table_validation():
    E = exceptions_from_spec("none")
    with pytest.raises(ValueError):
        g_table(E, POWER, 0, 5)
    with pytest.raises(ValueError):
        g_table(E, POWER, 1, 0)
    gt = g_table(E, POWER, 1, 5)
    with pytest.raises(IndexError):
        gt[0]
    with pytest.raises(IndexError):
        gt[6]


def test_table_indexing():
    t = coeffs_by_recurrence(exceptions_from_spec("none"), POWER, 1, 5)
    assert t.horizon == 5
    assert t[0] == 1 and t[5] == 7
    with pytest.raises(IndexError):
        t[6]
    with pytest.raises(ValueError):
        coeffs_by_recurrence(exceptions_from_spec("none"), POWER, 1, -1)


def test_delta_values_and_signs():
    t = coeffs_by_recurrence(exceptions_from_spec("none"), POWER, 1, 12)
    d = delta(t, 6)
    assert d.value == 11 * 11 - 7 * 15 == 16 and d.sign == 1
    d = delta(t, 1)
    assert d.value == -1 and d.sign == -1
    with pytest.raises(ValueError):
        delta(t, 0)
    with pytest.raises(ValueError):
        delta(t, 12)


def test_block_structure_for_sparse_support():
    E = exceptions_from_spec("support:1,3")
    for ell in (1, 2, 3):
        t = coeffs_by_recurrence(E, POWER, ell, 20)
        f3 = POWER.eval(ell, 3)
        for m in range(6):
            want = comb(m + f3, m)
            assert t.coeffs[3 * m] == t.coeffs[3 * m + 1] == t.coeffs[3 * m + 2] == want


def test_coefficient_bounds_hold():
    E24 = exceptions_from_spec("2,4")
    t = coeffs_by_recurrence(E24, POWER, 3, 9)
    assert t.coeffs[9] == 1024
    assert check_bounds(t, 9, 27, 3)
    t = coeffs_by_recurrence(exceptions_from_spec("none"), POWER, 2, 6)
    assert t.coeffs[6] == 48
    assert check_bounds(t, 6, 9, 2)


def test_coefficient_bounds_detect_violation():
    # deliberately feed an inflated maximal product: the lower bound fails
    t = coeffs_by_recurrence(exceptions_from_spec("none"), POWER, 2, 6)
    assert not check_bounds(t, 6, 10 ** 6, 2)


def test_coefficient_bounds_reject_negative_envelope(tmp_path):
    path = tmp_path / "weights.json"
    path.write_text(json.dumps({"base": 0, "phi": -2, "psi": 0, "B": 2}))
    w = weight_from_spec(f"custom:{path}")
    t = coeffs_by_recurrence(exceptions_from_spec("none"), w, 1, 4)
    with pytest.raises(ValueError):
        check_bounds(t, 4, 4, 2)


def test_g_envelope_checks():
    for espec in ("none", "2,4", "powers:2"):
        E = exceptions_from_spec(espec)
        for ell in (1, 2, 3):
            gt = g_table(E, POWER, ell, 60)
            assert all(check_g_bounds(gt, n) for n in range(1, 61)), (espec, ell)
    gt = g_table(exceptions_from_spec("none"), POWER, 1, 5)
    with pytest.raises(ValueError):
        check_g_bounds(gt, 0)


def test_variant_weights_change_coefficients():
    E = exceptions_from_spec("none")
    base = coeffs_by_recurrence(E, POWER, 3, 8).coeffs
    bumped = coeffs_by_recurrence(E, weight_from_spec("example1"), 3, 8).coeffs
    assert base[0] == bumped[0] == 1
    assert base[1] == bumped[1]
    assert bumped[2] > base[2]
