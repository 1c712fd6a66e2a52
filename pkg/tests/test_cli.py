"""Command-line surface: verbs, exit statuses, determinism."""

import json

import pytest

from formtop.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_example(capsys):
    code, out, _ = run(capsys, "example", "dl3")
    assert code == 0
    assert json.loads(out)["base"] == ["0", "1", "m"]


def test_models_lawson_dl3(capsys):
    code, out, _ = run(capsys, "models", "--theory", "lawson",
                       "--site", "dl3")
    assert code == 0
    assert json.loads(out)["count"] == 3


def test_construct_patch_stats(capsys):
    code, out, _ = run(capsys, "construct", "patch", "--site", "bool4",
                       "--stats")
    assert code == 0
    doc = json.loads(out)
    assert doc["generators"] == 20 and doc["axioms"] == 395


def test_located_points(capsys):
    code, out, _ = run(capsys, "located", "--site", "bool4", "--points")
    assert json.loads(out)["count"] == 2 and code == 0


def test_saturate_and_classify(capsys):
    code, out, _ = run(capsys, "saturate", "--site", "dl3",
                       "--subset", "m")
    assert code == 0 and json.loads(out)["saturation"] == ["0", "m"]
    code, out, _ = run(capsys, "classify", "--site", "bool4")
    assert code == 0 and json.loads(out)["stone"] is True


def test_export_dot(capsys):
    code, out, _ = run(capsys, "export", "site", "--site", "dl3",
                       "--format", "dot")
    assert code == 0 and out.count("->") == 2


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "6")
    assert code == 0 and "PASS" in out


def test_verify_flag_after_verb(capsys):
    code, out, _ = run(capsys, "verify", "9", "--max-base", "3")
    assert code == 0


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "classify", "--site", "nope")[0] == 2
    assert run(capsys, "models", "--theory", "nope", "--site", "dl3")[0] \
        == 2
    assert run(capsys, "construct", "vietoris", "--site", "chain2")[0] \
        == 2
    assert run(capsys, "saturate", "--site", "dl3", "--subset", "z")[0] \
        == 2
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2


def test_max_base_bound(capsys):
    code, _, err = run(capsys, "--max-base", "2", "classify",
                       "--site", "bool4")
    assert code == 2 and "max-base" in err


def test_determinism(capsys):
    a = run(capsys, "example", "bool4")[1]
    b = run(capsys, "example", "bool4")[1]
    assert a == b


def test_subtop_iso(capsys):
    code, out, _ = run(capsys, "subtop", "iso", "--site", "chain2s")
    assert code == 0 and json.loads(out)["passed"] is True
