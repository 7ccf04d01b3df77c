"""Power series over polynomial coefficients: inversion, the system, the oracle."""
import itertools

import pytest

from gammalab.errors import InversionError, ResourceBoundError
from gammalab.permutations import (
    eulerian_distribution,
    is_simple,
    is_skew_indecomposable,
    is_sum_indecomposable,
    joint_distribution,
    simple_distribution,
)
from gammalab.polys import ONE, ST, S_PLUS_T, ZERO, BivarPoly
from gammalab.series import (
    PowerSeries,
    eulerian_series,
    functional_inverse,
    geometric_inverse,
    indecomposable_series,
    rsk_two_sided_eulerian,
    simple_series,
    verify_system_identities,
)


def all_perms(n):
    return itertools.permutations(range(1, n + 1))


# ---------------------------------------------------------------------------
# series arithmetic
# ---------------------------------------------------------------------------

def test_series_basics():
    x = PowerSeries.x(5)
    assert (x * x).coeff(2) == ONE
    assert (x * x).coeff(3) == ZERO
    sq = x * x
    assert (sq * sq).coeff(4) == ONE
    assert x.compose(x) == x
    with pytest.raises(ValueError):
        PowerSeries(3, [ONE]).compose(PowerSeries(3, [ONE]))
    with pytest.raises(ValueError):
        x + PowerSeries.x(4)


def test_series_truncation_closure():
    x = PowerSeries.x(3)
    high = (x * x) * (x * x)  # x^4 truncates away
    assert all(high.coeff(n) == ZERO for n in range(4))


def test_geometric_inverse():
    F = eulerian_series(6)
    inv = geometric_inverse(F)
    product = inv * F + inv  # (1 + F) * inv
    assert product.coeff(0) == ONE
    assert all(product.coeff(n) == ZERO for n in range(1, 7))
    with pytest.raises(ValueError):
        geometric_inverse(PowerSeries(3, [ONE]))


# ---------------------------------------------------------------------------
# functional inverse
# ---------------------------------------------------------------------------

def test_functional_inverse_of_x():
    x = PowerSeries.x(4)
    assert functional_inverse(x) == x


def test_functional_inverse_catalan_signs():
    F = PowerSeries(6, [ZERO, ONE, ONE])  # x + x^2
    G = functional_inverse(F)
    expected = [1, -1, 2, -5, 14, -42]
    for n, c in enumerate(expected, start=1):
        assert G.coeff(n) == BivarPoly.const(c)
    assert F.compose(G) == PowerSeries.x(6)
    assert G.compose(F) == PowerSeries.x(6)


def test_functional_inverse_second_coefficient():
    # f_2 of the Eulerian series is 1 + st, so its inverse starts x - (1+st)x^2.
    F = eulerian_series(4)
    G = functional_inverse(F)
    assert G.coeff(2) == -BivarPoly({(0, 0): 1, (1, 1): 1})


def test_functional_inverse_requires_unit_linear_term():
    with pytest.raises(InversionError):
        functional_inverse(PowerSeries(4, [ZERO, ST]))
    with pytest.raises(InversionError):
        functional_inverse(PowerSeries(4, [ONE, ONE]))


def test_functional_inverse_roundtrip_eulerian():
    F = eulerian_series(8)
    G = functional_inverse(F)
    x = PowerSeries.x(8)
    assert F.compose(G) == x
    assert G.compose(F) == x


# ---------------------------------------------------------------------------
# the Eulerian series and the tableau oracle
# ---------------------------------------------------------------------------

def test_eulerian_series_low_coefficients():
    F = eulerian_series(4, method="enumerate")
    assert F.coeff(1) == ONE
    assert F.coeff(2) == BivarPoly({(0, 0): 1, (1, 1): 1})
    assert F.coeff(3) == BivarPoly({(0, 0): 1, (1, 1): 4, (2, 2): 1})
    assert F.coeff(4) == eulerian_distribution(4).poly


def test_rsk_examples():
    assert rsk_two_sided_eulerian(2) == BivarPoly({(0, 0): 1, (1, 1): 1})
    assert rsk_two_sided_eulerian(4) == eulerian_distribution(4).poly


def test_rsk_matches_enumeration():
    for n in range(1, 8):
        assert rsk_two_sided_eulerian(n) == eulerian_distribution(n).poly


def test_methods_agree():
    assert eulerian_series(6, method="rsk") == eulerian_series(6, method="enumerate")


def test_resource_bounds():
    with pytest.raises(ResourceBoundError):
        rsk_two_sided_eulerian(15)
    with pytest.raises(ResourceBoundError):
        eulerian_series(15, method="rsk")
    with pytest.raises(ResourceBoundError, match="rsk"):
        eulerian_series(13, method="enumerate")
    with pytest.raises(ResourceBoundError, match="inversion"):
        simple_series(13, method="enumerate")


# ---------------------------------------------------------------------------
# indecomposable series
# ---------------------------------------------------------------------------

def test_indecomposable_low_orders():
    F = eulerian_series(6)
    i_plus, i_minus = indecomposable_series(F)
    assert i_plus.coeff(1) == ONE and i_minus.coeff(1) == ONE
    assert i_plus.coeff(2) == ST          # only 21
    assert i_minus.coeff(2) == ONE        # only 12


def test_indecomposable_matches_filters():
    F = eulerian_series(8)
    i_plus, i_minus = indecomposable_series(F)
    for n in range(1, 9):
        plus = joint_distribution(
            (p for p in all_perms(n) if is_sum_indecomposable(p)), n).poly
        minus = joint_distribution(
            (p for p in all_perms(n) if is_skew_indecomposable(p)), n).poly
        assert i_plus.coeff(n) == plus
        assert i_minus.coeff(n) == minus


# ---------------------------------------------------------------------------
# the simple-permutation series
# ---------------------------------------------------------------------------

def test_simple_series_golden():
    S = simple_series(6, method="inversion")
    assert all(S.coeff(n) == ZERO for n in range(4))
    assert S.coeff(4) == ST * S_PLUS_T
    assert S.coeff(5) == ST * ST * 6
    assert S.coeff(6) == simple_distribution(6).poly


def test_simple_series_methods_agree():
    S_inv = simple_series(8, method="inversion")
    S_enum = simple_series(8, method="enumerate")
    for n in range(1, 9):
        assert S_inv.coeff(n) == S_enum.coeff(n)


def test_simple_series_order_bound():
    with pytest.raises(ValueError):
        simple_series(3)


def test_simple_composed_with_f_lowest_order():
    S = simple_series(6)
    F = eulerian_series(6)
    assert S.compose(F).coeff(4) == ST * S_PLUS_T


# ---------------------------------------------------------------------------
# the identity suite
# ---------------------------------------------------------------------------

def test_system_identities_order_six():
    report = verify_system_identities(6)
    assert report.ok, report.failures()
    assert len(report.checks) == 11


def test_system_identities_trivial_order():
    report = verify_system_identities(1)
    assert report.ok, report.failures()


def test_system_identities_enumerate_backend():
    report = verify_system_identities(5, method="enumerate")
    assert report.ok, report.failures()


def test_series_json_form():
    F = eulerian_series(2)
    assert F.json_form() == {
        "order": 2,
        "coefficients": [
            [{"s": 0, "t": 0, "c": 1}],
            [{"s": 0, "t": 0, "c": 1}, {"s": 1, "t": 1, "c": 1}],
        ],
    }
    with_const = geometric_inverse(PowerSeries.x(2))
    assert with_const.json_form()["constant"] == [{"s": 0, "t": 0, "c": 1}]
