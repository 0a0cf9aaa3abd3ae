import io
import json
import subprocess
import sys

import pytest

from pinchukmaps.cli import CHECKS, main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_verify_jacobian():
    code, text = run("verify", "jacobian")
    reports = json.loads(text)
    assert code == 0
    assert [r["check"] for r in reports] == ["jacobian_identity", "degrees", "positivity"]
    assert all(r["status"] == "pass" for r in reports)
    assert "13 + 15h" in json.dumps(reports[0]["details"])


def test_verify_minpoly():
    code, text = run("verify", "minpoly")
    assert code == 0
    (cert,) = [r for r in json.loads(text) if r["check"] == "minimal_polynomial_degree_6"]
    assert cert["details"]["certificate"] == {"P0": "1", "Q0": "-1", "prime": 23}


def test_verify_levelsets_reports_reference_value_mismatch():
    code, text = run("verify", "levelsets")
    status = {r["check"]: r["status"] for r in json.loads(text)}
    assert code == 1
    assert status.pop("level_c3_reference_values") == "fail"
    assert set(status.values()) == {"pass"}


@pytest.mark.parametrize("scope", ["avariety", "identities"])
def test_verify_other_scopes(scope):
    code, text = run("verify", scope)
    assert code == 0 and all(r["status"] == "pass" for r in json.loads(text))


def test_verify_all_lists_every_check_once():
    code, text = run("verify", "all")
    names = [r["check"] for r in json.loads(text)]
    assert names == [name for name, _, _ in CHECKS]
    assert code == 1  # the reference c = 3 value check fails


def test_verify_bogus_scope():
    assert run("verify", "bogus")[0] == 2


def test_fiber_output():
    code, text = run("fiber", "--p", "0", "--q", "208")
    payload = json.loads(text)
    assert code == 0 and payload["count"] == 1 and payload["classification"] == "on_curve"
    code, text = run("fiber", "--p", "0", "--q", "-1")
    pts = {(p["x"], p["y"]) for p in json.loads(text)["points"]}
    assert pts == {("1", "0"), ("-1", "-2")}


def test_bad_rational():
    assert run("fiber", "--p", "1.5", "--q", "0")[0] == 2
    assert run("fiber", "--p", "1/0", "--q", "0")[0] == 2


def test_levelset_output():
    code, text = run("levelset", "--c", "3", "--samples", "8")
    header, body = text.split("\n", 1)
    meta = json.loads(header[2:])
    assert code == 0
    assert sorted(p["h"] for p in meta["poles"]) == ["-3", "1", "3"]
    lines = body.strip().splitlines()
    assert lines[0] == "h,x,y,Q" and len(lines) == 9


@pytest.mark.parametrize("c", ["0", "-1"])
def test_levelset_excluded(c, capsys):
    code, _ = run("levelset", "--c", c)
    assert code == 2
    assert "-1 and 0" in capsys.readouterr().err


def test_avariety_output():
    code, text = run("avariety", "--from", "-2", "--to", "0", "--step", "1")
    lines = text.strip().splitlines()
    assert code == 0 and lines[1] == "s,P,Q"
    assert lines[2:] == ["-2,0,0", "-1,-1,-163/4", "0,0,208"]
    assert run("avariety", "--from", "0", "--to", "1", "--step", "0")[0] == 2


def test_family_round_trip():
    code, text = run("family", "--s-coeffs", "1/2,-5,0,1")
    payload = json.loads(text)
    assert code == 0
    assert payload["recovered_S"] == ["1/2", "-5", "0", "1"] and payload["round_trip"]
    assert payload["deg_Q"] == 30 and payload["jacobian_identity"]


def test_deterministic_output():
    for argv in (("verify", "identities", "--seed", "3"), ("fiber", "--p", "1", "--q", "0"),
                 ("levelset", "--c", "2", "--samples", "4")):
        assert run(*argv) == run(*argv)
    assert "elapsed_ms" in run("verify", "jacobian", "--timing")[1]
    assert "elapsed_ms" not in run("verify", "jacobian")[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pinchukmaps", "minpoly", "--print"],
                          capture_output=True, text=True, check=True)
    payload = json.loads(proc.stdout)
    assert payload["degree"] == 6 and len(payload["coeffs_by_power_of_T"]) == 7
    assert payload["coeffs_by_power_of_T"][6] == "1"
