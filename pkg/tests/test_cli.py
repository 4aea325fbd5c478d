import json
import subprocess
import sys

import numpy as np
import pytest

from gptkit import bell, cli, spaces


def run_cli(capsys, argv, stdin=None):
    if stdin is not None:
        import io
        old = sys.stdin
        sys.stdin = io.StringIO(stdin)
        try:
            code = cli.run(argv)
        finally:
            sys.stdin = old
    else:
        code = cli.run(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_prbox_chsh_pipeline(capsys):
    code, out, _ = run_cli(capsys, ["prbox", "--variant", "000"])
    assert code == 0
    code, out, _ = run_cli(capsys, ["chsh", "--table", "-"], stdin=out)
    assert code == 0
    assert "CHSH  = +4.000000000" in out
    assert "classical: no" in out
    assert "no-signalling: yes" in out


def test_chsh_json_and_csv(capsys, tmp_path):
    table_file = tmp_path / "t.json"
    table_file.write_text(bell.table_to_json(bell.pr_box()))
    code, out, _ = run_cli(capsys, ["chsh", "--table", str(table_file),
                                    "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["chsh"] == 4.0
    assert doc["classical"] is False
    code, out, _ = run_cli(capsys, ["chsh", "--table", str(table_file),
                                    "--format", "csv"])
    assert out.splitlines()[0] == "x,y,E"
    assert len(out.splitlines()) == 5


def test_tsirelson(capsys):
    code, out, _ = run_cli(capsys, ["tsirelson", "--seed", "0",
                                    "--iters", "100", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert abs(doc["value"] - 2 * np.sqrt(2)) < 1e-6
    assert doc["operator_norm"] <= 2 * np.sqrt(2) + 1e-9


def test_distinguish(capsys, tmp_path):
    space_file = tmp_path / "space.json"
    space_file.write_text(spaces.space_to_json(spaces.make_gbit()))
    states_file = tmp_path / "states.json"
    states_file.write_text(json.dumps(
        {"states": [[-1, -1, 1], [1, 1, 1]]}))
    code, out, _ = run_cli(capsys, ["distinguish", "--space", str(space_file),
                                    "--states", str(states_file),
                                    "--format", "json"])
    assert code == 0
    assert json.loads(out)["distinguishable"] is True
    states_file.write_text(json.dumps(
        {"states": [[-1, -1, 1], [1, 1, 1], [1, -1, 1]]}))
    code, out, _ = run_cli(capsys, ["distinguish", "--space", str(space_file),
                                    "--states", str(states_file)])
    assert code == 0
    assert out.strip() == "none"


def test_compose(capsys, tmp_path):
    space_file = tmp_path / "c2.json"
    space_file.write_text(spaces.space_to_json(spaces.make_classical(2)))
    code, out, _ = run_cli(capsys, ["compose", "--a", str(space_file),
                                    "--b", str(space_file), "--kind", "max",
                                    "--vertices"])
    assert code == 0
    doc = json.loads(out)
    assert len(doc["vertices"]) == 4


def test_sorkin(capsys, tmp_path):
    exp_file = tmp_path / "exp.json"
    third = [[1 / 3, 0.0]] * 3
    exp_file.write_text(json.dumps(
        {"M": 3, "rho": [third, third, third],
         "Q": [[[1.0, 0.0], [0, 0], [0, 0]],
               [[0, 0], [1.0, 0.0], [0, 0]],
               [[0, 0], [0, 0], [1.0, 0.0]]]}))
    code, out, _ = run_cli(capsys, ["sorkin", "--exp", str(exp_file),
                                    "--format", "json"])
    assert code == 0
    assert abs(json.loads(out)["I3"]) < 1e-12


def test_bloch_ops(capsys):
    code, out, _ = run_cli(capsys, ["bloch", "--op", "roundtrip",
                                    "--format", "json"])
    assert code == 0
    assert json.loads(out)["max_error"] < 1e-12
    code, out, _ = run_cli(capsys, ["bloch", "--op", "average",
                                    "--samples", "100000", "--seed", "0",
                                    "--format", "json"])
    assert code == 0
    assert json.loads(out)["mean_norm"] < 0.02


def test_nspolytope(capsys):
    code, out, _ = run_cli(capsys, ["nspolytope"])
    assert code == 0
    assert out.strip() == "24 vertices: 16 deterministic, 8 PR-type"


def test_invalid_input_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run_cli(capsys, ["chsh", "--table", str(bad)])
    assert code == 1
    assert json.loads(err)["error"] == "invalid_input"
    code, _, _ = run_cli(capsys, ["prbox", "--variant", "7"])
    assert code == 1


def test_scale_limit_exit_code(capsys, tmp_path):
    big = tmp_path / "c11.json"
    big.write_text(spaces.space_to_json(spaces.make_classical(11)))
    code, _, err = run_cli(capsys, ["compose", "--a", str(big),
                                    "--b", str(big), "--kind", "max"])
    assert code == 2
    assert json.loads(err)["error"] == "scale_limit"


def test_determinism(capsys):
    outs = []
    for _ in range(2):
        code, out, _ = run_cli(capsys, ["tsirelson", "--seed", "7",
                                        "--iters", "50", "--format", "json"])
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]


def test_entry_point_installed():
    res = subprocess.run(["gptkit", "prbox", "--variant", "000"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["p"][0] == 0.5
