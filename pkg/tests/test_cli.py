"""CLI tests: exit codes, JSON determinism and the on-disk cache."""

import json

import pytest
from click.testing import CliRunner

from dihedralcat.cli import cached_simplified_complex, main


@pytest.fixture()
def runner(tmp_path, monkeypatch):
    monkeypatch.setenv("SOERGEL_CACHE", str(tmp_path / "cache"))
    return CliRunner()


def test_hhh_json_deterministic(runner):
    first = runner.invoke(main, ["hhh", "s t", "--json"])
    second = runner.invoke(main, ["hhh", "s t", "--json"])
    assert first.exit_code == 0
    assert first.output == second.output  # warm cache, byte-identical
    payload = json.loads(first.output)
    assert payload["m"] == 3 and payload["series"]


def test_hhh_experimental_note_for_other_m(runner):
    res = runner.invoke(main, ["hhh", "s", "--m", "4", "--json"])
    assert res.exit_code == 0
    assert "experimental" in json.loads(res.output)["note"]


def test_bad_braid_exits_one(runner):
    res = runner.invoke(main, ["hhh", "q u x"])
    assert res.exit_code == 1


def test_minimal_lists_degrees(runner):
    res = runner.invoke(main, ["minimal", "s"])
    assert res.exit_code == 0
    assert "deg 0" in res.output and "deg 1" in res.output


def test_trace_functor_output(runner):
    res = runner.invoke(main, ["trace", "s", "--functor", "pi_s_plus"])
    assert res.exit_code == 0
    res = runner.invoke(main, ["trace", "s t", "--functor", "hh0", "--json"])
    assert res.exit_code == 0
    assert "homology" in json.loads(res.output)


def test_homfly_command(runner):
    res = runner.invoke(main, ["homfly", "s t", "--json"])
    assert res.exit_code == 0
    assert json.loads(res.output)["homfly"] == "1"


def test_serre_check_exit_codes(runner):
    res = runner.invoke(main, ["serre-check", "--suite", "pift", "--m", "2",
                               "--json"])
    assert res.exit_code == 0
    assert json.loads(res.output)["status"] == "pass"
    bad = runner.invoke(main, ["serre-check", "--suite", "bogus"])
    assert bad.exit_code == 2  # click usage error


def test_cache_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv("SOERGEL_CACHE", str(tmp_path / "cache"))
    cold = cached_simplified_complex("s t^-1", 3)
    files = list((tmp_path / "cache").glob("*.json"))
    assert len(files) == 1
    warm = cached_simplified_complex("s t^-1", 3)
    assert warm.graded_atom_profile() == cold.graded_atom_profile()
    # corrupt entry falls back to recomputation
    files[0].write_text("{not json")
    again = cached_simplified_complex("s t^-1", 3)
    assert again.graded_atom_profile() == cold.graded_atom_profile()
