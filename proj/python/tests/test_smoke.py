import pytest

import qres


def test_ext_gcd():
    assert qres.ext_gcd(2, 3) == (1, -1, 1)
    assert qres.ext_gcd(4, 6) == (2, -1, 1)
    assert qres.ext_gcd(7, 0) == (7, 1, 0)


def test_low_level_helpers():
    assert qres.w_order("x^3 + y^2", 2, 3) == 6
    assert qres.newton_weights("x^3 + y^2") == (2, 3)
    assert qres.milnor_jacobian("x^3 + y^2") == 2
    assert "t^6-1" in qres.classical_charpoly("x^3 + y^2")


def test_curve_document():
    doc = qres.curve("x^3 + y^2", verify=True)
    assert doc["mu"] == "2"
    assert doc["delta_expanded"] == ["1", "-1", "1"]
    assert doc["verified"]
    assert doc["points"][0]["resolution"]["divisors"][0]["weights"] == [2, 3]


def test_surface_document():
    doc = qres.surface("y^2*z - x^3 + z^4", verify=True)
    assert doc["m"] == 3
    assert doc["k"] == 1
    assert doc["mu"] == "10"
    assert doc["surface"]["divisors"][0]["mult"] == "24"

    yls = qres.surface("y^2*z - x^3 + z^5")
    assert yls["mu"] == "12"


def test_germ_mode():
    doc = qres.surface(germs=["x^3 + y^2"] * 6, m=6, k=1)
    assert doc["mu"] == "137"


def test_scope_error():
    with pytest.raises(qres.ScopeError):
        qres.surface("y^2*z - 2*x^2*z + z^4")


def test_weight_scripts():
    doc = qres.curve("x^3 + y^2", weights=[(2, 3)])
    assert doc["mu"] == "2"
    classical = qres.curve("x^3 + y^2", weights="classical")
    assert classical["mu"] == "2"
    assert len(classical["points"][0]["resolution"]["divisors"]) == 3
