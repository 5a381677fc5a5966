import os

import pytest

import branchcheck as bc


def test_displayed_singular_vectors():
    assert bc.singular_vector(3, 2) == bc.canonical("-(2*l+n-3)*xn^2 + Sp", "xi", 3)
    assert bc.singular_vector(5, 3) == bc.canonical("-(2*l+n-5)*xn^3 + 3*xn*Sp", "xi", 5)
    assert bc.singular_vector(4, 1, lambda_="1/2") == "x4"


def test_low_ladder_constants():
    e, f = bc.ladder_constants(3, 2)
    # alpha = -lambda - 1 for n = 3, so e_0 = -2 alpha = 2 lambda + 2
    assert e == ["2*l + 2", "-1", "2*l"]
    # f_2 = 2(2 alpha + 1)
    assert f == ["0", "1", "-4*l - 2"]


def test_orthogonal_polynomials():
    assert bc.gegenbauer(2) == bc.canonical("-a + 2*a*(1+a)*x^2", "x")
    assert bc.gegenbauer_tilde(1) == bc.canonical("2*a", "t")
    assert bc.jacobi_t(1) == bc.canonical("m*t - l", "t")
    assert bc.orthogonality_integral(2, 3, 1, 1) == "0"
    assert bc.lowering_constant(2) == "-2*l*m + 2*l + 2*m - 2"


def test_branching():
    s = bc.branching_sets(3, 8)
    assert s["Lambda_s"] == [3, 1]
    assert s["only_definitional"] == [-1]
    assert all(bc.hilbert_check(n, 20) for n in range(2, 7))


def test_run_reports():
    code, rep = bc.run("branching", N=3, cutoff=8)
    assert code == 0
    assert rep["meta"]["schema"] == bc.schema_version
    statuses = {r["status"] for r in rep["records"]}
    assert "discrepancy-reported" in statuses and "fail" not in statuses
    ids = [r["check_id"] for r in rep["records"]]
    assert ids == sorted(ids)


def test_run_is_deterministic():
    a = bc.run_json("so_pair", n=3, max_degree=3, seed=7, cases=10)
    b = bc.run_json("so_pair", n=3, max_degree=3, seed=7, cases=10)
    assert a == b and a[0] == 0


def test_goldens_through_python():
    goldens = os.environ.get("BRANCHCHECK_GOLDENS")
    if not goldens:
        pytest.skip("goldens directory not provided")
    code, rep = bc.run("all", goldens=goldens, cases=5)
    assert code == 0
    golden = [r for r in rep["records"] if r["check_id"].startswith("golden.")]
    assert len(golden) == 33


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        bc.run("diag_pair", max_degree=1, lambda_="0", mu="0")
    with pytest.raises(ValueError):
        bc.run("nonsense")
    with pytest.raises(ValueError):
        bc.singular_vector(3, 2, lambda_="x")
