from fractions import Fraction

import pytest

import ueaspin


def test_normal_form_commutator():
    assert ueaspin.normal_form("Jx*Jy - Jy*Jx") == ueaspin.normal_form("Jz")


def test_decompose():
    assert ueaspin.decompose("Jx*Jy - Jy*Jx") == [(0, 1, "z", "1/1")]
    rows = ueaspin.decompose("Jx*Jx")
    assert (1, 0, "", "1/3") in rows
    assert (0, 2, "xx", "1/1") in rows


def test_parse_error():
    with pytest.raises(ValueError, match="position 6"):
        ueaspin.decompose("Jx*(Jy")


def test_multipole_ranks():
    assert [ueaspin.multipole_rank(k) for k in range(4)] == [1, 3, 5, 7]


def test_spin_tables():
    for two_s in range(4):
        assert ueaspin.spin_dimension(two_s) == (two_s + 1) ** 2
    data = ueaspin.spin_table_data(1)
    assert data["two_s"] == 1
    # J_x J_x = -1/4 in S_{1/2}
    jx = next(i for i, b in enumerate(data["basis"]) if b["indices"] == "x")
    c = {(e["i"], e["j"], e["l"]): Fraction(e["c"]) for e in data["constants"]}
    assert c[(jx, jx, 0)] == Fraction(-1, 4)
    assert ueaspin.oracle_max_deviation(2) < 1e-10


def test_multipole_table():
    data = ueaspin.multipole_table_data(2)
    assert [len(level["components"]) for level in data["levels"]] == [1, 3, 5]
    assert ueaspin.multipole_table(1, "text").startswith("multipole images")
    with pytest.raises(ValueError):
        ueaspin.multipole_table(1, "xml")


def test_verify():
    code, report = ueaspin.verify(two_s_max=1, k_max=2)
    assert code == 0
    assert "FAIL" not in report
