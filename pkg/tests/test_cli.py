import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from qtwist import cli
from qtwist.errors import ParseError, SchemaError, UnknownCommand

FIX = Path(__file__).parents[1] / "fixtures"


def run(command, name, *extra, tmp_path=None):
    out = tmp_path / "report.json"
    code = cli.main([command, "--input", str(FIX / name), "--output", str(out), *extra])
    return code, json.loads(out.read_text())


def test_parse_happy_path():
    job = cli.parse_input("verify-iso", FIX / "a2.json")
    assert job.command == "verify-iso" and job.max_degree == 4
    assert job.inputs["q"][1][0].denominator == 24


def test_parse_errors():
    with pytest.raises(SchemaError) as ei:
        cli.parse_input("validate", FIX / "missing_cartan.json")
    assert ei.value.field == "cartan"
    with pytest.raises(ParseError) as ei:
        cli.parse_input("validate", FIX / "decimal_q.json")
    assert ei.value.line == 3
    with pytest.raises(SchemaError):
        cli.parse_input("validate", io.BytesIO(b'{"cartan": [[2]], "q": [["4"]], "extra": 1}'))
    with pytest.raises(ParseError):
        cli.parse_input("validate", io.BytesIO(b'{"cartan": [[2]], "q": [[0.25]]}'))
    with pytest.raises(UnknownCommand):
        cli.parse_input("frobnicate", FIX / "a2.json")


@pytest.mark.parametrize("command,name,code", [
    ("verify-iso", "a2.json", 0),
    ("verify-iso", "a2_mutated_r5.json", 1),
    ("twist-to-dj", "a2.json", 0),
    ("twist-to-dj", "b2.json", 0),
    ("serre", "b2.json", 0),
    ("present", "a2.json", 0),
    ("quotient-dj", "a2.json", 0),
    ("halfroot-cocycle", "sl2.json", 0),
    ("rack-check", "rack_s3.json", 0),
    ("hq-deform", "hq_n4.json", 0),
    ("compose-twist", "compose_n4.json", 0),
    ("compose-twist", "compose_n4_bad.json", 1),
    ("validate", "decimal_q.json", 2),
    ("validate", "missing_cartan.json", 2),
])
def test_exit_codes(command, name, code, tmp_path):
    got, rep = run(command, name, tmp_path=tmp_path)
    assert got == code
    assert rep["pass"] is (code == 0)


def test_nichols_series(tmp_path):
    code, rep = run("nichols-hilbert", "nichols_s3.json", tmp_path=tmp_path)
    assert code == 0 and rep["series"] == [1, 3, 4, 3, 1]


def test_report_fields(tmp_path):
    code, rep = run("verify-iso", "a2.json", "--max-degree", "4", tmp_path=tmp_path)
    for key in ("input_hash", "bounds", "checks", "pass", "wall_time"):
        assert key in rep
    assert rep["bounds"]["max_degree"] == 4
    assert all(c["bound"] == 4 for c in rep["checks"])


def test_module_error_is_exit_two(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"cartan": [[2, -1], [-1, 2]], "q": [["4", "6"], ["1", "4"]]}')
    code = cli.main(["validate", "--input", str(p), "--output", str(tmp_path / "r.json")])
    rep = json.loads((tmp_path / "r.json").read_text())
    assert code == 2 and rep["error"]["type"] == "CartanCompatibility"


def test_deterministic(tmp_path):
    reports = []
    for k in range(2):
        out = tmp_path / f"r{k}.json"
        cli.main(["twist-to-dj", "--input", str(FIX / "a2.json"), "--output", str(out)])
        rep = json.loads(out.read_text())
        rep.pop("wall_time")
        reports.append(json.dumps(rep, sort_keys=True))
    assert reports[0] == reports[1]


def test_console_script():
    r = subprocess.run(
        [sys.executable, "-m", "qtwist.cli", "nichols-hilbert", "--input", str(FIX / "nichols_s3.json")],
        capture_output=True, text=True,
    )
    assert r.returncode == 0
    assert json.loads(r.stdout)["series"] == [1, 3, 4, 3, 1]
