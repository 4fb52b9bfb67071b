import json
import subprocess
import sys

import pytest

from oddhooks.cli import run
from oddhooks.verify import VerificationReport


def cli(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_apply(capsys):
    code, out, _ = cli(capsys, "apply", "--k", "2", "10,1,1")
    assert code == 0
    assert out.splitlines()[0] == "6,1,1"
    code, out, _ = cli(capsys, "--format", "json", "apply", "--k", "2", "10,1^2")
    d = json.loads(out)
    assert d["result"] == [6, 1, 1] and d["hook"]["row"] == 1 and d["hook"]["col"] == 7


def test_count_with_oracle(capsys):
    code, out, _ = cli(capsys, "--format", "json", "count", "G", "--n", "24", "--k", "2", "--oracle")
    assert code == 0
    assert json.loads(out) == {"formula": "G_2(24)", "value": 112, "oracle_value": 112, "match": True}
    code, out, _ = cli(capsys, "count", "F", "--n", "36", "--k", "2", "--l", "3")
    assert code == 0 and out.strip().endswith("= 24")


def test_odd_list(capsys):
    code, out, _ = cli(capsys, "odd", "list", "4")
    assert code == 0 and out.split() == ["4", "3,1", "2,1,1", "1,1,1,1"]
    code, out, _ = cli(capsys, "--format", "csv", "odd", "list", "3")
    assert out.splitlines() == ["partition", "3", '"1,1,1"']


def test_chain_char_classify_tower(capsys):
    assert cli(capsys, "chain", "2,2")[1].strip() == "no 2-chain"
    assert cli(capsys, "chain", "3,1")[1].strip() == "3,1 -> 0"
    assert cli(capsys, "char", "10,1,1", "--class", "8,2^2")[1].strip() == "-1"
    assert cli(capsys, "classify", "--l", "2", "9")[1].strip() == "1+"
    code, out, _ = cli(capsys, "--format", "json", "tower", "10,1,1", "--depth", "2", "--show-abacus", "4")
    d = json.loads(out)
    assert code == 0 and d["odd"] and d["core_sizes"] == [0, 0, 1] and d["abacus"]


@pytest.mark.parametrize("argv, token", [
    (["apply", "--k", "1", "3,x"], "'x'"),
    (["char", "3", "--class", "3,q"], "'q'"),
    (["tower", "1,3"], "'3'"),
])
def test_malformed_input_exits_2(capsys, argv, token):
    code, _, err = cli(capsys, *argv)
    assert code == 2 and token in err


def test_usage_errors(capsys):
    assert cli(capsys, "count", "T", "--n", "9", "--k", "0")[0] == 2
    assert cli(capsys, "apply", "--k", "0", "2,2")[0] == 2  # not odd
    assert cli(capsys, "bogus")[0] == 2
    assert cli(capsys, "verify", "--max-n", "4")[0] == 2


def test_verify_json_and_out(capsys, tmp_path):
    out_file = tmp_path / "r.json"
    code, out, _ = cli(capsys, "--format", "json", "verify", "--max-n", "12", "--suite", "lemmas", "--out", str(out_file))
    assert code == 0
    rep = VerificationReport.from_json(out)
    assert rep.ok and rep.bounds["lemmas"] == 12
    assert VerificationReport.from_json(out_file.read_text()).to_json(timings=False) == rep.to_json(timings=False)
    code, out, _ = cli(capsys, "--format", "csv", "verify", "--max-n", "10", "--suite", "counts")
    assert code == 0 and out.startswith("id,params")


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "oddhooks", "apply", "--k", "2", "10,1,1"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("6,1,1")
