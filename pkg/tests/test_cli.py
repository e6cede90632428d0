import json
import subprocess
import sys

import pytest

from fdalg.cli import main

from golden_runner import CASES, INPUTS, compare, run


@pytest.mark.parametrize("name,argv,code", CASES, ids=[c[0] for c in CASES])
def test_golden(name, argv, code):
    assert compare(name, argv, code) is None


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["spectrum"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_missing_file_exits_2(capsys):
    assert main(["validate", "/nonexistent/file.json"]) == 2
    assert "cannot read" in capsys.readouterr().err


def test_bad_element_exits_2():
    assert run(["spectrum", "t2.alg.json", "--element", "[1, 2, 3]"])[0] == 2
    assert run(["spectrum", "t2.alg.json", "--element", "[1,"])[0] == 2


def test_wrong_kind_of_file_exits_2():
    assert run(["spectrum", "z2.sg.json", "--element", "[1, 0]"])[0] == 2
    assert run(["convolve", "t2.alg.json", "--f1", "[1, 0]", "--f2", "[1, 0]"])[0] == 2


def test_non_ideal_quotient_exits_2():
    assert run(["quotient", "t2.alg.json", "--ideal", "[[1, 0]]"])[0] == 2


def test_whole_algebra_quotient_exits_2():
    assert run(["quotient", "t2.alg.json", "--ideal", "[[1, 0], [0, 1]]"])[0] == 2


def test_neumann_precondition_is_a_result():
    code, out = run(["invert", "t2.alg.json", "--element", "[0, 1]", "--neumann", "--lambda", "0.5"])
    assert code == 0 and json.loads(out)["result"] == "PRECONDITION_VIOLATED"


def test_neumann_needs_lambda():
    assert run(["invert", "t2.alg.json", "--element", "[0, 1]", "--neumann"])[0] == 2


def test_inapplicable_norm_exits_2():
    assert run(["invert", "t2.alg.json", "--element", "[0, 1]", "--neumann", "--lambda", "2", "--norm", "sup"])[0] == 2


def test_invalid_file_exits_1(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"size": 2, "table": [[0, 1], [0, 1]], "identity_index": 0}))
    assert main(["validate", str(bad)]) == 1
    assert main(["semicharacters", str(bad)]) == 1
    assert "commutativity" in capsys.readouterr().err


def test_validate_reports_failure(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"size": 2, "table": [[0, 1], [0, 1]], "identity_index": 0}))
    main(["validate", str(bad)])
    report = json.loads(capsys.readouterr().out)
    assert report["kind"] == "semigroup" and not report["ok"]


@pytest.mark.parametrize("name", ["fn3.alg.json", "t4.alg.json", "z3.sg.json"])
def test_check_is_clean(name):
    code, out = run(["check", name, "--trials", "50", "--seed", "1"])
    assert code == 0 and json.loads(out)["ok"]


def test_check_flags_a_bad_norm():
    # fn3 has unit (1, 1, 1), so the coordinate l1 norm of the unit is 3
    code, out = run(["check", "fn3.alg.json", "--norm", "coordinate-l1", "--trials", "20"])
    assert code == 1 and not json.loads(out)["norm"]["ok"]


def test_check_is_reproducible():
    argv = ["check", "z3.sg.json", "--trials", "30", "--seed", "7"]
    assert run(argv) == run(argv)


def test_console_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "fdalg.cli", "convolve", "z2.sg.json", "--f1", "[1, 2]", "--f2", "[3, 4]"],
        cwd=INPUTS,
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0 and out.stdout == "[11, 10]\n"


def test_check_is_clean_on_whole_catalog(tmp_path):
    assert main(["catalog", str(tmp_path)]) == 0
    for f in sorted(tmp_path.iterdir()):
        code, out = run(["check", str(f), "--trials", "20"])
        assert code == 0, f.name
