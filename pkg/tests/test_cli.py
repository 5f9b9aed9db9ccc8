import json
import subprocess
import sys

import pytest

from polysym.cli import main, run
from polysym.polycore import Polynomial

LEHMER_JSON = '{"coeffs": [1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]}'


@pytest.fixture
def feed(monkeypatch):
    def go(text, argv):
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(text))
        code, out = run(argv)
        return code, (json.loads(out) if code in (0, 3) and out.startswith("{") else out)

    return go


def test_classify(feed):
    code, out = feed('{"coeffs":[1,1,1]}', ["classify"])
    assert code == 0 and out["psr"] is True and out["schema"] == 1


def test_mahler(feed):
    code, out = feed(LEHMER_JSON, ["mahler"])
    assert code == 0 and out["measure"] == 1.17628081826 and out["class"] == "salem"


def test_count(feed):
    code, out = feed('{"coeffs":[-0.25,0,1]}', ["count", "--method", "marden-jury"])
    assert out["inside"] == 2
    code, out = feed('{"coeffs":[-0.25,0,1]}', ["count"])
    assert out["inside"] == 2 and out["method"] == "oracle"


def test_malformed_json(feed):
    code, out = feed('{"coeffs": [1, 2,', ["classify"])
    assert code == 1 and "line 1 column" in out
    code, out = feed('{"coeffs": "x"}', ["classify"])
    assert code == 1


def test_usage_errors(feed):
    assert run(["nope"])[0] == 1
    assert run(["bethe", "--L", "4"])[0] == 1
    assert run(["catalog", "--family", "alexander", "--knot", "9_9"])[0] == 1
    assert run(["bethe", "--sweep", "3:4"])[0] == 1


def test_roots_csv(feed):
    code, out = feed('{"coeffs":[1,0,1]}', ["roots", "--format", "csv"])
    lines = out.splitlines()
    assert lines[0] == "re,im,multiplicity" and len(lines) == 3


def test_transform_round_trip(feed):
    p = Polynomial([0.1, 1 / 3 + 2j, -7.25])
    code, out = feed(p.to_json(), ["transform", "--kind", "inversive"])
    q = Polynomial.from_dict(out["poly"])
    code, out = feed(json.dumps(out["poly"]), ["transform", "--kind", "inversive"])
    assert Polynomial.from_dict(out["poly"]) == p and q != p


def test_salem_search_chunks():
    a = run(["salem-search", "--degree", "10", "--psr"])
    b = run(["salem-search", "--degree", "10", "--psr", "--chunks", "5"])
    assert a == b and json.loads(a[1])["argmin"] == [[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]]


def test_bethe_and_catalog():
    out = json.loads(run(["bethe", "--L", "4", "--a", "4", "--delta", "3"])[1])
    assert out["phase"]["observed"] == "AllButTwoOnCircle"
    csv = run(["bethe", "--sweep", "4:4:0:1:0.5", "--format", "csv"])[1].splitlines()
    assert csv[0].startswith("L,a,delta") and len(csv) == 1 + 3 * 3
    out = json.loads(run(["catalog", "--family", "hermite", "--n", "4"])[1])
    assert out["poly"]["coeffs"] == [12.0, 0.0, -48.0, 0.0, 16.0]


def test_chebyshev_and_mobius(feed):
    code, out = feed('{"coeffs":[1,2.5,1]}', ["chebyshev"])
    assert out["q"]["coeffs"] == [2.5, 1.0]
    code, out = feed('{"coeffs":[1,0,1]}', ["mobius", "--direction", "Q"])
    assert out["poly"]["coeffs"] == [-2.0, 0.0, 2.0] and out["degree_drop"] == 0


def test_criteria(feed):
    code, out = feed(LEHMER_JSON, ["criteria", "--all"])
    assert code == 0 and out["incidents"] == []
    code, out = feed('{"coeffs":[1,1,4]}', ["criteria", "--name", "rouche"])
    assert [v["conclusion"] for v in out["verdicts"]] == ["ExactInside(2)"]


def test_deterministic_output(feed):
    a = feed('{"coeffs":[1,[0,2],3,4]}', ["roots", "--seed", "3"])
    b = feed('{"coeffs":[1,[0,2],3,4]}', ["roots", "--seed", "3"])
    assert a == b


def test_file_input_and_entry_point(tmp_path):
    f = tmp_path / "p.json"
    f.write_text(LEHMER_JSON)
    r = subprocess.run([sys.executable, "-m", "polysym.cli", "mahler", str(f)], capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["class"] == "salem"
    assert main(["classify", str(tmp_path / "missing.json")]) == 1


def test_exit_codes_for_incident_and_non_convergence(feed, monkeypatch):
    import numpy as np

    from polysym import criteria, roots

    monkeypatch.setattr(criteria, "contradicts", lambda v, rs, tol: v.criterion == "cohn")
    code, out = feed('{"coeffs":[1,1,1]}', ["criteria"])
    assert code == 3 and out["incidents"]

    def fail(p, **kw):
        raise roots.RootFindingError("no convergence", np.zeros(1), np.ones(1))

    monkeypatch.setattr(roots, "find_roots", fail)
    code, out = feed('{"coeffs":[1,1,1]}', ["roots"])
    assert code == 2 and "no convergence" in out
