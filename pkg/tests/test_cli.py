import json

import pytest

from agt.cli import UNKNOWN_TEXT, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_card_example(capsys):
    code, out, _ = run(capsys, "card", "Z(2)^(aleph0)", "--topology", "gamma", "--invariant", "w")
    assert (code, out.strip()) == (0, "2^aleph0")


def test_card_json_shape(capsys):
    code, out, _ = run(capsys, "card", "T(2)", "--topology", "nu", "--invariant", "d", "--json")
    assert code == 0
    assert json.loads(out) == {
        "group": "T(2)",
        "topology": "nu",
        "invariant": "d",
        "value": "aleph0",
        "basis": "natural-density-formula",
        "mode": "zfc",
    }


def test_card_gch_mode(capsys):
    _, out, _ = run(capsys, "card", "Z(2)^(aleph0)", "--topology", "gamma", "--invariant", "w", "--mode", "gch")
    assert out.strip() == "aleph1"


def test_equalizer_false_and_unknown(capsys):
    assert run(capsys, "equalizer", "gamma", "bohr", "Z")[1].strip() == "false"
    code, out, _ = run(capsys, "equalizer", "gbound", "rho", "Z")
    assert code == 0 and out.strip() == UNKNOWN_TEXT


def test_equalizer_json(capsys):
    _, out, _ = run(capsys, "equalizer", "nu_p:2", "bohr_p:2", "Z(2^inf)", "--json")
    data = json.loads(out)
    assert data["verdict"] == "false" and "Z(p^inf)" in data["note"]


def test_classify(capsys):
    _, out, _ = run(capsys, "classify", "Z^3 + Z(5^2)^(c)", "--class", "strongly_non_divisible", "--json")
    assert json.loads(out)["classes"] == {"strongly_non_divisible": "true"}
    _, out, _ = run(capsys, "classify", "Q", "--json")
    classes = json.loads(out)["classes"]
    assert classes["divisible"] == "true" and classes["residually_finite"] == "false"


def test_invariants(capsys):
    code, out, _ = run(capsys, "invariants", "Z + Z(6) + Q", "--json")
    data = json.loads(out)
    assert code == 0 and data["csize"] == "aleph0" and data["primes"]["2"]["quotient_p"] == "Z(2)^2"


def test_finite_commands(capsys):
    code, out, _ = run(capsys, "finite", "subgroups", "2,2", "--json")
    data = json.loads(out)
    assert code == 0 and data["count"] == 5 and "elements" in data["subgroups"][0]
    code, out, _ = run(capsys, "finite", "verify", "2,4", "--json")
    assert code == 0 and json.loads(out)["ok"] is True


def test_large_subgroups_listed_by_generators(capsys):
    _, out, _ = run(capsys, "finite", "subgroups", "64", "--json")
    biggest = json.loads(out)["subgroups"][-1]
    assert biggest["order"] == 64 and "elements" not in biggest and biggest["generators"] == [[1]]


def test_fg_commands(capsys):
    _, out, _ = run(capsys, "fg", "count", "3", "2", "--json")
    assert json.loads(out)["count"] == 7
    code, out, _ = run(capsys, "fg", "enclose", "Z^2", "[[1,0]]", "--json")
    data = json.loads(out)
    assert code == 0 and data["enclosure"]["index"] == 2 and data["subgroup"]["index"] == "infinite"


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "fg-closure", "--samples", "50", "--json")
    assert code == 0 and json.loads(out)["checked"] == 50


@pytest.mark.parametrize(
    "argv",
    [
        ["card", "Z(4^2)", "--topology", "nu", "--invariant", "d"],
        ["card", "Z", "--topology", "sigma", "--invariant", "d"],
        ["card", "Z", "--topology", "discrete", "--invariant", "w"],
        ["classify", "Z", "--class", "narrow:2"],
        ["finite", "subgroups", "200,200"],
        ["finite", "subgroups", "2,x"],
        ["fg", "enclose", "Z^2", "[[1,0]"],
        ["fg", "enclose", "Z + Q", "[[1,0]]"],
        ["fg", "enclose", "Z^2", "[[1,0],[0,1]]"],
    ],
)
def test_user_errors_exit_1(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == "" and "error" in err


def test_json_errors_are_json(capsys):
    code, _, err = run(capsys, "card", "Z(", "--topology", "nu", "--invariant", "d", "--json")
    assert code == 1 and "offset" in json.loads(err)["error"]


def test_mismatch_exit_3(capsys, monkeypatch):
    import agt.cli as cli

    monkeypatch.setattr(cli, "csize", lambda g: __import__("agt.cardinal", fromlist=["Finite"]).Finite(0))
    code, out, _ = run(capsys, "finite", "verify", "2,2", "--json")
    assert code == 3 and "counterexample" in json.loads(out)


def test_internal_violation_exit_2(capsys, monkeypatch):
    import agt.cli as cli
    from agt.cardinal import Verdict

    monkeypatch.setattr(cli, "check_log_bound", lambda g, mode: Verdict.FALSE)
    code, _, err = run(capsys, "invariants", "Z")
    assert code == 2 and "invariant" in err
