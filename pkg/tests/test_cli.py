import json
import subprocess
import sys

import pytest

from famring.cli import main


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_limit_text(capsys):
    code, out, _ = run(capsys, "limit", "trivial", "--checks")
    assert code == 0 and "rank: 1" in out and "result: ok" in out


def test_limit_machine(capsys):
    code, out, _ = run(capsys, "limit", "sl3z-c2", "--field", "Q", "--checks", "--format", "machine")
    doc = json.loads(out)
    assert code == 0 and doc["rank"] == 5 and doc["passed"]
    assert {p["name"]: p["verdict"] for p in doc["presentations"]} == {"printed-x": "pass"}


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "z3z5", "printed-cubic")
    assert code == 1 and "FAIL presentation printed-cubic" in out


def test_index_and_counts(capsys):
    code, out, _ = run(capsys, "index", "sl2z", "--subgroup-index", "12")
    assert code == 0 and "chi_rational: -1/12" in out and "chi_subgroup: -1" in out
    code, out, _ = run(capsys, "counts", "bianchi-m3-f3")
    assert code == 0 and "n: 4" in out


def test_dump_table(capsys):
    code, out, _ = run(capsys, "dump-table", "s3-edge", "--group", "S3")
    assert code == 0 and "X2" in out


@pytest.mark.parametrize(
    "args",
    [
        ("limit", "no-such-example"),
        ("index", "z3z5"),
        ("index", "sl2z", "--subgroup-index", "6"),
        ("verify", "sl2z", "no-such-presentation"),
        ("dump-table", "sl2z", "--group", "nope"),
    ],
)
def test_input_errors_exit_2(capsys, args):
    code, _, err = run(capsys, *args)
    assert code == 2 and err.startswith("famring: error:")


def test_bad_file_reports_line(tmp_path, capsys):
    p = tmp_path / "bad.diagram"
    p.write_text('[groups]\nA = {"cyclic": 2}\n1 = {"cyclic": 1}\n[nodes]\nX = A\n1 = 1\n[res]\n1 < X = [5]\n')
    code, _, err = run(capsys, "limit", str(p))
    assert code == 2 and "line 8" in err


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "famring", "list"], capture_output=True, text=True)
    assert r.returncode == 0 and "sl2z" in r.stdout.split()


def test_argparse_rejects_bad_flags(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["limit", "sl2z", "--field", "R"])
    assert exc.value.code == 2
