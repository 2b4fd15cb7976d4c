"""Command-line interface: parsing, output formats, exit codes."""

import json

import pytest

from takiffo.cli import Config, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_partition_example(capsys):
    code, out, _ = run(capsys, "partition", "--type", "A2", "--chi", "-1,-1")
    assert code == 0 and out.strip() == "2"


def test_partition_two_colored(capsys):
    code, out, _ = run(capsys, "partition", "--type", "A2", "--chi", "-1,-1", "--two")
    assert code == 0 and out.strip() == "6"


def test_reduce_example(capsys):
    code, out, _ = run(capsys, "reduce", "--type", "A2", "--mu", "1,-1")
    assert code == 0
    lines = dict(ln.split(" = ", 1) for ln in out.strip().splitlines())
    assert lines["w"] in ("1", "2")
    assert lines["levi"] == "A1+T1"


def test_mult_example(capsys):
    code, out, _ = run(
        capsys, "mult", "--type", "A1", "--lambda", "0", "--mu", "0",
        "--lambda2", "-2", "--mu2", "0",
    )
    assert code == 0 and out.splitlines()[0] == "2"


def test_mult_explain(capsys):
    code, out, _ = run(
        capsys, "mult", "--type", "A1", "--lambda", "0", "--mu", "0",
        "--lambda2", "-2", "--mu2", "0", "--explain",
    )
    assert "w = e" in out and "levi = A1" in out and "chi=" in out


def test_kl_word_lookup(capsys):
    code, out, _ = run(capsys, "kl", "--type", "A3", "--x", "2", "--w", "2132")
    assert code == 0 and out.strip() == "1 + q"


def test_kl_identity_word(capsys):
    code, out, _ = run(capsys, "kl", "--type", "A2", "--x", "e", "--w", "121")
    assert code == 0 and out.strip() == "1"


def test_series(capsys):
    code, out, _ = run(
        capsys, "series", "--type", "A1", "--lambda", "0", "--mu", "0",
        "--height", "4",
    )
    values = [ln.split() for ln in out.strip().splitlines()]
    assert [v for _, v in values] == ["1", "2", "1", "1", "1"]


def test_json_is_canonical(capsys):
    code, out, _ = run(
        capsys, "--json", "mult", "--type", "A1", "--lambda", "0", "--mu", "0",
        "--lambda2", "-2", "--mu2", "0",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["value"] == 2
    rendered = json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
    assert rendered == out  # byte-identical round trip


def test_json_char_schema(capsys):
    code, out, _ = run(
        capsys, "--json", "char", "--type", "A1", "--lambda", "2",
        "--height", "4", "--kind", "weyl",
    )
    doc = json.loads(out)
    assert doc["H"] == 4
    assert doc["base"] == {"coroot": ["2"]}
    assert {e["dim"] for e in doc["entries"]} == {1}


def test_bad_weight_token_is_usage_error(capsys):
    code, _, err = run(
        capsys, "mult", "--type", "A2", "--lambda", "1,x", "--mu", "0,0",
        "--lambda2", "0,0", "--mu2", "0,0",
    )
    assert code == 2
    assert "token 2" in err and "'x'" in err


def test_wrong_arity_is_usage_error(capsys):
    code, _, err = run(capsys, "reduce", "--type", "A2", "--mu", "1")
    assert code == 2 and "expected 2 coroot coordinates" in err


def test_bad_type_is_usage_error(capsys):
    code, _, err = run(capsys, "reduce", "--type", "Q9", "--mu", "1")
    assert code == 2


def test_unknown_subcommand_exits_two(capsys):
    assert run(capsys, "frobnicate")[0] == 2


def test_central_coordinates(capsys):
    code, out, _ = run(
        capsys, "reduce", "--type", "A1+T1", "--mu", "0;1/2",
    )
    assert code == 0 and "w = e" in out


def test_cache_stats_and_clear(tmp_path, capsys, monkeypatch):
    path = str(tmp_path / "kl.jsonl")
    monkeypatch.setenv("TAKIFFO_CACHE", path)
    code, _, _ = run(capsys, "kl", "--type", "A3", "--x", "2", "--w", "2132")
    assert code == 0
    code, out, _ = run(capsys, "cache", "stats")
    assert code == 0 and f"path: {path}" in out
    assert int(out.split("entries: ")[1].split()[0]) > 0
    code, _, _ = run(capsys, "cache", "clear")
    assert code == 0
    code, out, _ = run(capsys, "cache", "stats")
    assert "entries: 0" in out


def test_height_env_override(capsys, monkeypatch):
    monkeypatch.setenv("TAKIFFO_HEIGHT", "2")
    code, out, _ = run(capsys, "series", "--type", "A1", "--lambda", "0", "--mu", "0")
    assert len(out.strip().splitlines()) == 3  # offsets 0, 1, 2


def test_config_validation():
    with pytest.raises(ValueError):
        Config(default_truncation_height=-1)
    with pytest.raises(ValueError):
        Config(output_format="xml")
