import os

import pytest

try:
    import latcount as lc
except ImportError:
    import _latcount as lc


def test_bulk_counts():
    assert lc.bulk("A", 2, 1) == 7
    assert lc.bulk("D", 4, 2) == 313
    assert lc.bulk("E", 8, 1) == 3281
    assert lc.bulk("Z", 3, 2) == 125


def test_surface_is_first_difference():
    for n in range(6):
        assert lc.surface("A", 3, n) == lc.bulk("A", 3, n) - (lc.bulk("A", 3, n - 1) if n else 0)


def test_big_values_are_exact_ints():
    v = lc.bulk("A", 8, 50)
    assert isinstance(v, int)
    assert v == lc.centered_multinomial(9, 50)


def test_oracle_matches_closed_form():
    assert lc.oracle_bulk("A", 3, 2) == lc.bulk("A", 3, 2)
    assert lc.oracle_bulk("Dstar", 2, 1) == 9
    assert lc.oracle_bulk("Dstar", 2, 1, full_lattice=True) == 13


def test_genfunc_and_expansion():
    gf = lc.genfunc("D", 4)
    assert gf["numerator"] == [1, 36, 118, 36, 1]
    assert gf["pow_one_minus_x"] == 5
    terms = lc.expand("D", 4, "bulk", 5)
    assert terms == [lc.bulk("D", 4, n) for n in range(5)]


def test_fit_polynomial():
    fit = lc.fit_polynomial("A", 3, "bulk", "n")
    assert fit["period"] == 1
    assert fit["components"][0] == ["1", "14/3", "8", "16/3"]


def test_eta_gamma():
    assert lc.eta(3, 2) == 24
    assert lc.gamma_coeff(4, 2) == 136


def test_budget_exception():
    with pytest.raises(lc.BudgetExceeded):
        lc.oracle_bulk("Z", 8, 3, budget=100)


def test_invalid_spec():
    with pytest.raises(lc.InvalidSpec):
        lc.bulk("E", 9, 1)


def test_verify_tables_if_data_present():
    data_dir = os.environ.get("LATCOUNT_DATA_DIR")
    if not data_dir:
        pytest.skip("LATCOUNT_DATA_DIR not set")
    checks = lc.verify_tables(os.path.join(data_dir, "fixtures.txt"),
                              os.path.join(data_dir, "errata.txt"))
    assert checks and all(c["pass"] for c in checks)
