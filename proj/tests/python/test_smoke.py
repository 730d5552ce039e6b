import json

import pytest

bwck = pytest.importorskip("bwck")


def test_phi_reference_values():
    assert bwck.phi(8, 8)["value"] == 24
    assert bwck.phi(7, 7) == {
        "m": 7,
        "n": 7,
        "value": 18,
        "uncolored": 13,
        "regime": "odd_n",
    }
    assert bwck.phi(9, 3)["value"] == 11
    assert bwck.phi(1, 9)["value"] == 4
    assert bwck.phi(5, 5)["regime"] == "small_table"


def test_conjecture_and_balance_helpers():
    assert bwck.conjecture_value(5) == 7
    assert bwck.conjecture_value(8) == 24
    assert bwck.phi(7, 7)["value"] == bwck.conjecture_value(7) + 1
    assert bwck.uncolored_target(8, 8) == 16
    assert bwck.w_opt(8, 8, 24) == 24
    assert bwck.w_opt(8, 8, 25) == 23


def test_construct_round_trips_through_verify():
    built = bwck.construct(8, 8)
    assert (built["b"], built["w"], built["uncolored"]) == (24, 24, 16)
    report = bwck.verify(built["placement"])
    assert report["valid"]
    assert report["violation"] is None
    doc = json.loads(built["placement"])
    assert doc["rows"] == 8 and doc["piece"] == "knight"
    assert len(doc["black"]) == 24


def test_verify_flags_attacking_pair():
    placement = json.dumps(
        {
            "rows": 8,
            "cols": 8,
            "piece": "knight",
            "black": [[1, 1]],
            "white": [[2, 3]],
        }
    )
    report = bwck.verify(placement)
    assert not report["valid"]
    assert report["violation"] == ((1, 1), (2, 3))


def test_solver_proves_small_boards():
    result = bwck.solve(3, 7)
    assert result["value"] == 8
    assert result["proven"]
    assert bwck.verify(result["witness"])["valid"]

    fixed = bwck.solve_fixed_b(3, 7, 0)
    assert fixed["value"] == 21


def test_solver_threads_agree():
    one = bwck.solve(5, 5, threads=1)
    four = bwck.solve(5, 5, threads=4)
    assert one["value"] == four["value"] == 10
    assert one["witness"] == four["witness"]


def test_normalize_trace():
    built = bwck.construct(8, 8)
    trace = bwck.normalize(built["placement"])
    assert trace["monotone"]
    assert trace["n_initial"] == trace["n_final"] == 16
    assert trace["steps"][0] == ("initial", 16)


def test_export_lp_shape():
    text = bwck.export_lp(2, 3)
    assert text.count("nbhd_") == 6
    assert text.startswith("\\")
    assert text.rstrip().endswith("End")
    fixed = bwck.export_lp(3, 7, fix_b=8)
    assert " b = 8" in fixed
