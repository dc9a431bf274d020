"""Command-line behaviour: output formats, determinism and error reporting."""

from __future__ import annotations

import json

import pytest

from yhinv.cli import main
from yhinv.invariants import lambda_h
from yhinv.scalars import parse_scalar, ratfun_eq


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def corpus(tmp_path):
    f = tmp_path / "corpus.txt"
    f.write_text("# small corpus\n1 1 1\nn=3; 1 -2 1 -2\nn=3; 1 2 2 1 2 2\n1 1\n")
    return str(f)


def test_homflypt_trivial_braid(capsys):
    code, out, _ = run(capsys, "homflypt", "--braid", "")
    assert code == 0 and out == "1\n"


def test_homflypt_json_round_trips(capsys):
    code, out, _ = run(capsys, "homflypt", "--braid", "1 -2 1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["n"] == 3 and payload["epsilon"] == 1
    lam = parse_scalar(payload["radicand"])
    assert ratfun_eq(lam, lambda_h())
    parse_scalar(payload["value"], radicand=lambda_h())


def test_homflypt_with_bindings(capsys):
    code, out, _ = run(capsys, "homflypt", "--braid", "1 1 1", "--bind", "q=2,zeta=3")
    assert code == 0 and out.strip() == "11/9"


def test_delta_text_prints_radicand_for_odd_values(capsys):
    code, out, _ = run(capsys, "delta", "--braid", "1 1", "--d", "2", "--subset", "0,1")
    assert code == 0
    assert out.splitlines()[1].startswith("r^2 = ")


def test_esystem_outputs(capsys):
    code, out, _ = run(capsys, "esystem", "--d", "2", "--subset", "0,1")
    assert code == 0 and out == "d=2 S={0,1}: x_1 = 0; E = 1/2\n"
    code, out, _ = run(capsys, "esystem", "--d", "3", "--all", "--verify", "--format", "json")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 7 and all(r["verified"] for r in rows)


def test_compare_case_json(capsys, corpus):
    code, out, _ = run(capsys, "compare", "--case", "13", "--d", "3", "--subset", "0", "--corpus", corpus)
    rows = json.loads(out)
    assert code == 0 and len(rows) == 4 and all(r["equal"] for r in rows)
    assert set(rows[0]) >= {"braid", "n", "epsilon", "case", "equal", "P", "Delta"}


def test_compare_diagnostic(capsys, corpus):
    code, out, _ = run(
        capsys, "compare", "--bind", "q=2,zeta=3,u=5,z=7", "--d", "2", "--subset", "0,1", "--corpus", corpus, "--diagnostic"
    )
    payload = json.loads(out)
    assert code == 0
    assert payload["diagnostic"]["forced_c_n"] is None
    assert not all(r["equal"] for r in payload["rows"])


def test_output_is_deterministic(capsys, corpus):
    argv = ("compare", "--case", "3", "--d", "2", "--subset", "0,1", "--corpus", corpus)
    first = run(capsys, *argv)
    assert run(capsys, *argv) == first


def test_threads_do_not_change_order(capsys, corpus, monkeypatch):
    argv = ("compare", "--case", "7", "--d", "3", "--subset", "0,2", "--corpus", corpus)
    monkeypatch.setenv("YH_THREADS", "1")
    serial = run(capsys, *argv)
    monkeypatch.setenv("YH_THREADS", "4")
    assert run(capsys, *argv) == serial


def test_markov_test_passes(capsys, corpus):
    code, out, _ = run(capsys, "markov-test", "--d", "2", "--subset", "0,1", "--corpus", corpus, "--format", "json")
    rows = json.loads(out)
    assert code == 0 and rows and all(r["P"] and r["Delta"] for r in rows)


@pytest.mark.parametrize(
    "argv,kind",
    [
        (("homflypt", "--braid", "1 x"), "parse_error"),
        (("homflypt", "--braid", "1", "--bind", "q=1.5"), "usage"),
        (("homflypt", "--braid", "1", "--bind", "u=2"), "usage"),
        (("delta", "--braid", "1", "--d", "2", "--subset", "1,1"), "esystem"),
        (("compare", "--case", "9", "--d", "2", "--subset", "0,1"), "case_pairing"),
        (("esystem", "--d", "2"), "usage"),
    ],
)
def test_errors_exit_2_with_json(capsys, argv, kind):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == ""
    payload = json.loads(err)
    assert payload["error"] == kind and payload["message"]


def test_bad_thread_count(capsys, corpus, monkeypatch):
    monkeypatch.setenv("YH_THREADS", "0")
    code, _, err = run(capsys, "compare", "--case", "1", "--d", "1", "--subset", "0", "--corpus", corpus)
    assert code == 2 and json.loads(err)["error"] == "usage"
