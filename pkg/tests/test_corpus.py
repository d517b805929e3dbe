import json

import pytest

from tqftbench import algebras as alg
from tqftbench.corpus import (
    AlgebraParseError,
    azumaya_corpus,
    format_algebra,
    frobenius_corpus,
    load_corpus,
    parse_algebra,
)
from tqftbench.exactlin import QQ
from tqftbench.report import RunReport, digest_inputs
from tqftbench.suite import ConfigError, data_dir, load_config, run_all


def test_round_trip():
    a = alg.symmetric_group_algebra(QQ)
    parsed = parse_algebra(format_algebra(a, counit=[1] + [0] * 5))
    assert parsed.algebra.table == a.table
    assert list(parsed.algebra.unit) == list(a.unit)


def test_shipped_algebras_load():
    files = load_corpus([data_dir() / "algebras"])
    assert len(files) == 7
    assert all(f.algebra.is_valid() for f in files)


@pytest.mark.parametrize(
    "text,line",
    [
        ("field Q\ndim 2\nmult 0 0 -> (5:1)\nunit (1, 0)\n", 3),
        ("field R\n", 1),
        ("dim 2\nunit (1, 0)\n", 2),
        ("field Q\ndim 2\nunit (1)\n", 3),
        ("field Q\ndim 2\nfrobnicate\n", 3),
        ("field Q\ndim 1\nmult 0 0 -> (0:x)\n", 3),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(AlgebraParseError) as exc:
        parse_algebra(text, path="t.alg")
    assert exc.value.line == line
    assert str(exc.value).startswith(f"t.alg:{line}:")


def test_corpus_sizes():
    assert len(frobenius_corpus()) == 32
    az = azumaya_corpus()
    assert len([n for n in az if n.startswith(("Q", "M2(Q)", "M3(Q)"))]) >= 5
    assert len(az) >= 15


def test_digest_tracks_content(tmp_path):
    f = tmp_path / "x.alg"
    f.write_text("a")
    d1 = digest_inputs("cmd", [f])
    f.write_text("b")
    assert digest_inputs("cmd", [f]) != d1
    assert digest_inputs("cmd", ["lit"]) == digest_inputs("cmd", ["lit"])


def test_report_verdict_order():
    rep = RunReport("x")
    rep.fail()
    rep.merge_verdict("unsupported")
    rep.merge_verdict("fail")
    assert rep.verdict == "unsupported" and rep.exit_code == 3


def test_config_validation(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"colour": "red"}))
    with pytest.raises(ConfigError):
        load_config(cfg)
    cfg.write_text(json.dumps({"genus_cap": -1}))
    with pytest.raises(ConfigError):
        load_config(cfg)


def test_default_run_passes():
    cfg = load_config()
    first = RunReport("report all")
    run_all(cfg, first)
    second = RunReport("report all")
    run_all(cfg, second)
    assert first.verdict == "pass"
    assert first.body() == second.body()
