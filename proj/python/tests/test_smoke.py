import json
import math
from fractions import Fraction

import pytest

import schurpb

ZETA3 = 1.2020569031595942


def test_corners_and_conjugate():
    assert schurpb.corners([4, 4, 3, 1]) == [(2, 4), (3, 3), (4, 1)]
    assert schurpb.conjugate([3, 1]) == [2, 1, 1]
    with pytest.raises(schurpb.InputError):
        schurpb.corners([1, 2])


def test_single_box_tables():
    b = schurpb.bernoulli_table([[1]], [4], "B")
    assert [b[(n,)] for n in range(5)] == [1, Fraction(1, 2), Fraction(1, 6), 0, Fraction(-1, 30)]
    c = schurpb.bernoulli_table([[1]], [2], "C")
    assert c[(1,)] == Fraction(-1, 2)


def test_tables_by_binomial_transform():
    # B_m = sum_{j <= m} C(m1,j1) C(m2,j2) C_j for two corners.
    k = [[1, 2], [2]]
    b = schurpb.bernoulli_table(k, 3, "B")
    c = schurpb.bernoulli_table(k, 3, "C")
    for (m1, m2), value in b.items():
        want = sum(math.comb(m1, j1) * math.comb(m2, j2) * c[(j1, j2)]
                   for j1 in range(m1 + 1) for j2 in range(m2 + 1))
        assert value == want


def test_hook_stirling_matches_table():
    k = [[1, 2], [3]]
    b = schurpb.bernoulli_table(k, 3, "B")
    for n in range(4):
        for m in range(4):
            assert schurpb.hook_b_stirling(k, n, m) == b[(n, m)]


def test_zeta_values():
    value, bound, method = schurpb.mzv([1, 2])
    assert abs(value - ZETA3) <= bound + 1e-14
    assert method == "truncated-sum"
    z2 = math.pi ** 2 / 6
    z4 = math.pi ** 4 / 90
    value, bound, _ = schurpb.mzv_star([2, 2])
    assert abs(value - (z2 * z2 + z4) / 2) <= bound + 1e-13
    direct, _, _ = schurpb.schur_zeta([[1, 2], [2]])
    via, _, _ = schurpb.schur_zeta_via_decomposition([[1, 2], [2]])
    assert direct == pytest.approx(via, abs=1e-8)
    with pytest.raises(schurpb.DomainError):
        schurpb.schur_zeta([[2], [1]])


def test_decompose():
    assert schurpb.decompose([["a", "b"]]) == [(1, ["a+b"]), (1, ["a", "b"])]
    assert schurpb.decompose([["a"], ["b"]], star=True) == [(-1, ["a+b"]), (1, ["a", "b"])]


def test_xi_and_eta():
    value, bound, _ = schurpb.xi([[1]], [1.0])
    assert abs(value - math.pi ** 2 / 6) <= bound + 1e-9
    q, _, _ = schurpb.xi([[1, 2], [2]], [1.5, 2.0], abs_tol=1e-8)
    o, _, _ = schurpb.xi_oracle([[1, 2], [2]], [1.5, 2.0], tol=1e-7)
    assert q == pytest.approx(o, abs=1e-6)
    assert schurpb.xi_special_value([[1]], [1]) == Fraction(1, 2)
    assert schurpb.eta_special_value([[1, 1], [1]], [1, 1]) == Fraction(1, 4)
    value, bound, _ = schurpb.eta(1, 2.0)
    assert abs(value - 2 * ZETA3) <= bound + 1e-9


def test_polylog():
    value, bound, _ = schurpb.polylog([[1]], [0.5])
    assert abs(value - math.log(2)) <= bound + 1e-15


def test_run_cli():
    code, out, err = schurpb.run_cli(["bernoulli", "--shape", "1", "--k", "[[1]]", "--orders", "2"])
    assert code == 0 and err == ""
    assert json.loads(out)["rows"][2]["value"] == "1/6"
    code, _, err = schurpb.run_cli(["zeta", "eval", "--shape", "1,1", "--s", "[[2],[1]]"])
    assert code == 3 and err
