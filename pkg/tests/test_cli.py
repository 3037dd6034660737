import io
import json
import subprocess
import sys

import pytest

from partcalc.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.mark.parametrize(
    "argv, expected",
    [
        (("eval", "S:1", "2,1"), "8"),
        (("eval", "invH", ""), "1"),
        (("eval", "q:2", "6,3,3,2"), "28"),
        (("eval", "S:1/H", "2,1"), "8/3"),
        (("sum", "--stat", "invH", "--mu", "1", "--n", "3"), "1"),
        (("sum", "--stat", "S:1/H", "--mu", "", "--n", "4", "--mode", "binomial"), "18"),
        (("sum", "--stat", "S:1/H", "--mu", "2,1", "--n", "0"), "8/3"),
        (("fit", "--stat", "S:1/H", "--mu", "", "--degree", "2", "--n-max", "8"), "3/2*n^2 - 3/2*n"),
        (("fit", "--stat", "invH", "--mu", "2", "--degree", "0", "--n-max", "4"), "1/2"),
    ],
)
def test_pretty_outputs(argv, expected):
    code, text = run(*argv)
    assert code == 0
    assert text == expected + "\n"


def test_fit_L2():
    code, text = run("fit", "--stat", "L:2/H", "--mu", "", "--degree", "4", "--n-max", "10", "--format", "json")
    rec = json.loads(text)
    assert code == 0 and rec["pass"] is True
    assert len(rec["polynomial"]) == 5 and rec["polynomial"][4] != "0"


def test_fit_failure_exit_code():
    code, text = run("fit", "--stat", "S:1/H", "--degree", "1", "--n-max", "6")
    assert code == 1


def test_verify_marked_hook_reports():
    code, text = run("verify", "marked-hook", "--n-max", "15", "--format", "json")
    lines = text.splitlines()
    assert code == 0 and len(lines) == 15
    assert all(json.loads(line)["pass"] for line in lines)


def test_verify_okada_panova():
    code, text = run("verify", "okada-panova", "--n-max", "12", "--r-max", "3")
    assert code == 0
    assert "okada-panova" in text


def test_verify_tsv_and_determinism():
    args = ("verify", "DS", "--lambda-max", "3", "--r-max", "2", "--format", "tsv")
    a = run(*args)
    b = run(*args, "--workers", "3")
    assert a == b and a[0] == 0
    assert a[1].splitlines()[0] == "identity\tparams\tlhs\trhs\tpass"


def test_usage_errors():
    assert run("verify", "no-such-identity")[0] == 2
    assert run("enumerate", "50")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["eval", "X:1", "1"], out=io.StringIO())
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["eval", "S:1", "1,2"], out=io.StringIO())
    assert exc.value.code == 2


def test_enumerate_json():
    code, text = run("enumerate", "2", "--mu", "1", "--format", "json")
    rows = [json.loads(line) for line in text.splitlines()]
    assert code == 0
    assert rows == [
        {"H": "6", "f": "1", "f_skew": "1", "lambda": "3"},
        {"H": "3", "f": "2", "f_skew": "2", "lambda": "2,1"},
        {"H": "6", "f": "1", "f_skew": "1", "lambda": "1,1,1"},
    ]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "partcalc", "eval", "S:1", "2,1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "8\n"
    proc = subprocess.run([sys.executable, "-m", "partcalc", "eval", "nope", "1"], capture_output=True, text=True)
    assert proc.returncode == 2
