import json
import subprocess
import sys
from fractions import Fraction

import pytest

from rooted_turan import blow_up, densify, graph_from_json, identify, rho, subdivide, tree_T
from rooted_turan.exponent import chain_from_json

from .golden import cli_golden

EXPECTED = json.loads((cli_golden.HERE / "expected.json").read_text())


@pytest.fixture(scope="module")
def runs():
    return cli_golden.run_all(), cli_golden.run_all()


def test_every_case_matches_golden(runs):
    first, _ = runs
    assert set(first) == set(EXPECTED)
    for name, got in first.items():
        assert got == EXPECTED[name], name


def test_byte_stable_across_runs(runs):
    first, second = runs
    for name in first:
        assert first[name]["stdout"] == second[name]["stdout"], name


def test_all_exit_codes_and_verbs_covered():
    codes = {v["exit"] for v in EXPECTED.values()}
    assert codes == {0, 1, 2, 3}
    verbs = {c["argv"][c["argv"][0] == "--summary"] for c in cli_golden.load_cases() if c["argv"]}
    assert {"construct", "transform", "check", "realise", "embed", "ex", "fit"} <= verbs


def test_golden_values_independently(runs):
    out, _ = runs
    assert out["check_rho"]["stdout"] == "19/5\n"
    assert out["construct_D"]["exit"] == 0
    assert out["check_roots_not_proper"]["error"] == "RootsNotProper"
    chain = json.loads(out["realise_thm48"]["stdout"])
    assert chain["rho"] == "7/3" and chain["exponent"] == "11/7"
    assert rho(chain_from_json(chain).result) == Fraction(7, 3)
    T = tree_T(3, 5)
    assert graph_from_json(out["transform_blowup"]["stdout"]) == blow_up(T, 2)
    assert graph_from_json(out["transform_subdivide"]["stdout"]) == subdivide(T)
    assert graph_from_json(out["transform_densify"]["stdout"]) == densify(T, 1)
    assert graph_from_json(out["transform_densify_star"]["stdout"]) == densify(T, 1, starred=True)
    assert graph_from_json(out["transform_identify"]["stdout"]) == identify(T, 3, 5)
    ex = json.loads(out["ex_K3"]["stdout"])
    assert ex["max_edges"] == 9 and ex["certified"]
    assert json.loads(out["ex_budget"]["stdout"])["qualifier"] == "lower bound only"


def test_real_pipe():
    construct = subprocess.run(
        [sys.executable, "-m", "rooted_turan", "construct", "D", "4", "3"],
        capture_output=True, text=True, check=True,
    )
    check = subprocess.run(
        [sys.executable, "-m", "rooted_turan", "check", "rho"],
        input=construct.stdout, capture_output=True, text=True,
    )
    assert check.returncode == 0 and check.stdout == "19/5\n"
    bad = subprocess.run(
        [sys.executable, "-m", "rooted_turan", "check", "balanced"],
        input='{"n":3,"edges":[[0,1],[0,2]],"roots":[0,1,2]}', capture_output=True, text=True,
    )
    assert bad.returncode == 2
    assert json.loads(bad.stderr)["error"] == "RootsNotProper"
