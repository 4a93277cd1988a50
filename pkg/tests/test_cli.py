"""CLI behaviour, compared against frozen JSON in tests/golden/.

Set ``NOMBIND_REGOLD=1`` to rewrite the golden files after an intended change.
"""
import json
import os
from pathlib import Path

import pytest

from nombind import corpus
from nombind.cli import main, run as _run

def run(argv):
    return _run([str(a) for a in argv])


GOLDEN = Path(__file__).parent / "golden"

CASES = {
    "check_lam": ["check", corpus.path("lam")],
    "check_tysch": ["check", corpus.path("tysch")],
    "check_baz1": ["check", corpus.path("baz1")],
    "check_bnexp_bad": ["check", corpus.path("bnexp_bad")],
    "alpha_scheme_equal": ["alpha", corpus.path("tysch"), "tsc",
                        "(TAll {x, y} (TFun (TVar x) (TVar y)))", "(TAll {x, y} (TFun (TVar y) (TVar x)))"],
    "alpha_scheme_differ": ["alpha", corpus.path("tysch"), "tsc",
                         "(TAll {x, y} (TFun (TVar x) (TVar y)))", "(TAll {z} (TFun (TVar z) (TVar z)))"],
    "alpha_lam": ["alpha", corpus.path("lam"), "lam", "(Lam x (Var x))", "(Lam y (Var y))"],
    "fa_let": ["fa", corpus.path("letrec"), "trm", "(Let (ACons x (Var x) ANil) (Var x))"],
    "fa_letrec": ["fa", corpus.path("letrec"), "trm", "(Let_rec (ACons x (Var x) ANil) (Var x))"],
    "bn_nil": ["bn", corpus.path("letrec"), "bn", "(ANil)"],
    "bn_pat": ["bn", corpus.path("letpat"), "bn", "(PTup (PVar x) (PVar y))"],
    "supp_alpha": ["supp", corpus.path("lam"), "lam", "(Lam x (Var x))"],
    "supp_raw": ["supp", corpus.path("lam"), "lam", "(Lam x (Var x))", "--eq", "raw"],
    "permute_lam": ["permute", corpus.path("lam"), "lam", "(Lam x (Var x))", "(x y)"],
    "permute_empty": ["permute", corpus.path("lam"), "lam", "(Lam x (Var x))", ""],
    "permute_bn": ["permute", corpus.path("letrec"), "assn", "(ACons x (Var x) ANil)", "(x y)", "--bn", "bn"],
    "parse_error": ["fa", corpus.path("lam"), "lam", "(Lam x"],
}


def _golden(name, payload):
    path = GOLDEN / f"{name}.json"
    if os.environ.get("NOMBIND_REGOLD"):
        path.write_text(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    return json.loads(path.read_text(encoding="utf-8"))


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name):
    result = run(CASES[name])
    payload = {"exit": result.code, **result.to_json()}
    assert payload == _golden(name, payload)


def test_main_streams(capsys):
    assert main(["check", str(corpus.path("baz1"))]) == 1
    out, err = capsys.readouterr()
    doc = json.loads(out)
    assert doc["ok"] is False and doc["diagnostics"][0]["code"] == "R3"
    assert "ERROR R3" in err


def test_missing_file(capsys):
    assert main(["check", "/definitely/not/here.spec"]) == 2
    doc = json.loads(capsys.readouterr().out)
    assert doc["diagnostics"][0]["code"] == "IOError"


def test_cap_env(monkeypatch):
    args = ["alpha", corpus.path("tysch"), "tsc", "(TAll {a, b, c} (TFun (TVar a) (TFun (TVar b) (TVar c))))",
            "(TAll {a, b, c} (TFun (TVar b) (TFun (TVar c) (TVar a))))"]
    assert run(args).data["equal"] is True
    monkeypatch.setenv("NOMBIND_CAP", "2")
    r = run(args)
    assert r.code == 1 and r.diagnostics[0].code == "CapExceeded"
    monkeypatch.setenv("NOMBIND_CAP", "zero")
    assert run(args).code == 2


def test_unknown_bn():
    r = run(["bn", corpus.path("letrec"), "nope", "(ANil)"])
    assert r.code == 1 and r.diagnostics[0].code == "UnknownBinder"


def test_usage_error():
    with pytest.raises(SystemExit) as exc:
        run(["frobnicate"])
    assert exc.value.code == 2
