import pytest

import framedlie


def test_apply_k_golden():
    assert framedlie.apply_map("K", "x*y") == "x*y - d(x,y)"


def test_k_roundtrip():
    image = framedlie.apply_map("K", "x*y*z")
    assert framedlie.apply_map("Kinv", image) == "x*y*z"


def test_t_base():
    assert framedlie.apply_map("t", "1", omega="x,y") == "d(x,y) - d(y,x) - [x,y]"


def test_identity_golden():
    assert (
        framedlie.identity(3, 1)
        == "∇_i∇_j∇_k−∇_j∇_i∇_k"
        "+T_{ij}^l∇_l∇_k+R_{ijk}^l∇_l=0"
    )


def test_identity_sexp_shape():
    text = framedlie.identity(4, 2, format="sexp")
    assert text.startswith("(identity 4 2 ")


def test_theorem_holds():
    assert framedlie.theorem_holds("x*y", "x,z", "y")
    assert framedlie.theorem_holds("1", "x,y", "1")


def test_verify_sweep():
    result = framedlie.verify(2, 1, 1)
    assert result["cases"] > 0
    assert result["all_zero"]
    assert result["kappa_equal"]
    assert result["degree_ok"]


def test_oracle_sweep():
    assert framedlie.oracle("sl2", seed=3, trials=4, max_len=2) == 0


def test_cli_passthrough():
    code, out, err = framedlie.run(["identity", "--n", "2", "--pos", "1"])
    assert code == 0
    assert out.endswith("=0\n")
    assert err == ""


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        framedlie.apply_map("K", "x*")
    with pytest.raises(ValueError):
        framedlie.identity(3, 7)
