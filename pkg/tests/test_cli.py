import json

from tqftbench import cli
from tqftbench.suite import data_dir


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr().out


def test_bord_compose(capsys):
    code, out = run(capsys, "bord", "compose", "pants", "copants", "--no-footer")
    assert code == 0
    assert "g=0 in=0,1 out=0,1" in out
    assert "verdict: pass" in out


def test_bord_surgery_path(capsys):
    code, out = run(capsys, "bord", "surgery-path", "{3}", "{1}", "--no-footer")
    assert code == 0
    assert out.count("one_nonseparating") == 2
    assert "moves 2 replay ok" in out


def test_frob_torus(capsys):
    code, out = run(capsys, "frob", "eval", "Z/2", "torus", "--no-footer")
    assert code == 0
    assert "[2]" in out


def test_output_is_deterministic(capsys):
    _, first = run(capsys, "inv", "cy", "semion", "CP2", "--no-footer")
    _, second = run(capsys, "inv", "cy", "semion", "CP2", "--no-footer")
    assert first == second
    assert "inputs-sha256:" in first
    assert "wall-time" not in first


def test_footer_present_by_default(capsys):
    _, out = run(capsys, "inv", "euler", "3", "pants")
    assert out.splitlines()[-1].startswith("wall-time:")


def test_dump(capsys, tmp_path):
    path = tmp_path / "out.txt"
    code, _ = run(capsys, "inv", "cy", "toric_code", "S4", "--dump", str(path), "--no-footer")
    assert code == 0
    text = path.read_text()
    assert "verdict=pass" in text


def test_unsupported_exit(capsys):
    path = data_dir() / "structures2d" / "two_framings.struct"
    code, out = run(capsys, "tang", "reduce", str(path), "--mode", "total", "--no-footer")
    assert code == 3
    assert "verdict: unsupported" in out


def test_bad_input_exit(capsys, tmp_path):
    bad = tmp_path / "bad.alg"
    bad.write_text("field Q\ndim 2\nmult 0 0 -> (9:1)\n")
    code = cli.main(["frob", "check", str(bad), "--no-footer"])
    captured = capsys.readouterr()
    assert code == 2
    assert "bad.alg:3" in captured.out + captured.err


def test_euler_zero_is_input_error(capsys):
    code = cli.main(["inv", "euler", "0", "pants", "--no-footer"])
    capsys.readouterr()
    assert code == 2


def test_unknown_subcommand(capsys):
    assert cli.main(["teleport"]) == 2
    assert "invalid choice" in capsys.readouterr().err


def test_bad_config(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"tolerance": -1}))
    code = cli.main(["report", "all", "--config", str(cfg), "--no-footer"])
    capsys.readouterr()
    assert code == 2


def test_azu_harness(capsys):
    code, out = run(capsys, "azu", "harness", str(data_dir() / "algebras"), "--no-footer")
    assert code == 0
    assert "VIOLATION" not in out
