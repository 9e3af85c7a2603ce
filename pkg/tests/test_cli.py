"""Command-line surface: output, exit codes, caching."""

import json
import os

import pytest

from spechtdiv.cli import (
    TOOL_VERSION,
    ResultRecord,
    _record_from_chain,
    cache_load,
    cache_store,
    run,
)
from spechtdiv.specht import gram_chain


@pytest.fixture
def cache(tmp_path):
    return str(tmp_path / "cache")


def test_ediv_known_chain(cache, capsys):
    assert run(["--cache-dir", cache, "ediv", "2,2"]) == 0
    out = capsys.readouterr().out
    assert "divisors 2 6" in out
    assert "rank 2" in out
    assert "det 12" in out


def test_ediv_exponent_notation(cache, capsys):
    assert run(["--cache-dir", cache, "ediv", "2^2,1^2"]) == 0
    out = capsys.readouterr().out
    assert "divisors 4 20 20 20 40 80 80 80 80" in out


def test_ediv_json(cache, capsys):
    assert run(["--cache-dir", cache, "ediv", "2,2", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["elementary_divisors"] == ["2", "6"]
    assert data["partition"] == "2,2"
    assert data["det"] == "12"
    assert data["tool_version"] == TOOL_VERSION


def test_ediv_prime_valuations(cache, capsys):
    assert run(["--cache-dir", cache, "ediv", "3,2,1", "--prime", "3"]) == 0
    out = capsys.readouterr().out
    expected = [0] * 4 + [1] * 8 + [2] * 4
    assert "3-valuations " + " ".join(map(str, expected)) in out


def test_ediv_malformed_partition(cache, capsys):
    assert run(["--cache-dir", cache, "ediv", "1,2,zzz"]) == 2
    assert run(["--cache-dir", cache, "ediv", "1,2"]) == 2


def test_unknown_command(capsys):
    assert run(["frobnicate"]) == 2


def test_cache_round_trip_byte_identical(cache, capsys):
    assert run(["--cache-dir", cache, "ediv", "3,2,1"]) == 0
    first = capsys.readouterr().out
    files = os.listdir(cache)
    assert len(files) == 1
    with open(os.path.join(cache, files[0]), "rb") as fh:
        raw = fh.read()
    record = cache_load(cache, (3, 2, 1))
    assert record is not None
    assert record.to_json().encode() == raw
    # A second run hits the cache and prints the same thing.
    assert run(["--cache-dir", cache, "ediv", "3,2,1"]) == 0
    assert capsys.readouterr().out == first
    # Re-storing the loaded record reproduces the bytes exactly.
    cache_store(cache, (3, 2, 1), record)
    with open(os.path.join(cache, files[0]), "rb") as fh:
        assert fh.read() == raw


def test_cache_ignores_corrupt_files(cache):
    lam = (2, 2)
    chain, det = gram_chain(lam)
    record = _record_from_chain(lam, chain, det, "brute")
    cache_store(cache, lam, record)
    assert cache_load(cache, lam) == record
    # Corrupt the payload: the loader treats it as a miss.
    files = os.listdir(cache)
    with open(os.path.join(cache, files[0]), "w") as fh:
        fh.write("{not json")
    assert cache_load(cache, lam) is None
    # Stale tool versions are ignored too.
    stale = ResultRecord(
        partition=record.partition,
        rank=record.rank,
        elementary_divisors=record.elementary_divisors,
        p_parts=record.p_parts,
        det=record.det,
        provenance=record.provenance,
        tool_version="0.0",
    )
    with open(os.path.join(cache, files[0]), "w") as fh:
        fh.write(stale.to_json())
    assert cache_load(cache, lam) is None


def test_cache_env_fallback(tmp_path, monkeypatch, capsys):
    target = str(tmp_path / "envcache")
    monkeypatch.setenv("SPECHT_CACHE", target)
    assert run(["ediv", "2,1"]) == 0
    capsys.readouterr()
    assert os.path.isdir(target)


def test_formula_two_row(capsys):
    assert run(["formula", "two-row", "--n", "6", "--m", "2", "--prime", "2"]) == 0
    capsys.readouterr()
    assert run(["formula", "two-row", "--n", "6", "--m", "9", "--prime", "2"]) == 2


def test_formula_hook(capsys):
    assert run(["formula", "hook", "--n", "5", "--l", "2", "--prime", "2"]) == 0
    capsys.readouterr()


def test_formula_two_column(capsys):
    assert run(["formula", "two-column", "--n", "6", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["chain"] == [4, 20, 20, 20, 40, 80, 80, 80, 80]


def test_formula_large_prime(capsys):
    assert run(["formula", "large-prime", "3,2,1", "--prime", "5"]) == 0
    capsys.readouterr()


def test_jantzen(capsys):
    assert run(["jantzen", "3,2,1", "--prime", "3", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["layers"] == {"0": 4, "1": 8, "2": 4}


def test_symmetric(capsys):
    assert run(["symmetric", "3,2,1"]) == 0
    capsys.readouterr()
    assert run(["symmetric", "3,1"]) == 2


def test_unimodular(capsys):
    assert run(["unimodular", "--n", "8", "--m", "3"]) == 0
    capsys.readouterr()


def test_pell(capsys):
    assert run(["pell", "--bound", "1000"]) == 0
    assert capsys.readouterr().out.strip().splitlines() == ["1 1 1"]


def test_conm5(capsys):
    assert run(["conm5", "--n", "6", "--h", "2"]) == 0
    capsys.readouterr()
    assert run(["conm5", "--n", "5", "--h", "3"]) == 2


def test_verify_exit_codes(capsys):
    assert run(["verify", "fixtures"]) == 0
    capsys.readouterr()
    assert run(["verify", "no-such-suite"]) == 2


def test_verify_two_column_small(capsys):
    assert run(["verify", "two-column", "--max-n", "6"]) == 0
    out = capsys.readouterr().out
    assert "1/1 ok" in out
