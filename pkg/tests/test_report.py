import dataclasses
import json

import pytest

from pispec.arithmetic import sieve_primes
from pispec.catalog import parse_name
from pispec.enumerator import enumerate_groups
from pispec.report import (
    collapse_runs,
    expand_runs,
    render,
    series_key,
    verify_against_paper,
)


def test_series_key_routing():
    assert series_key(parse_name("A17")) == (("A",), 17)
    assert series_key(parse_name("L2(7)")) == (("L", 2, 1), 7)
    assert series_key(parse_name("L2(49)")) == (("L", 2, 2), 7)
    assert series_key(parse_name("L2(65536)")) == (("L", 2, "k>=4"), 65536)
    assert series_key(parse_name("Sz(512)")) == (("Sz",), 9)
    assert series_key(parse_name("O+8(4)")) == (("O+", 8, "k>=2"), 4)
    assert series_key(parse_name("S10(4)")) == (("S", 10), 4)
    assert series_key(parse_name("M11")) == (("Spor",), "M11")


def test_collapse_expand_integers():
    vals = [5, 6, 7, 8, 9, 12, 14, 15, 16]
    text = collapse_runs(vals, prime_steps=False)
    assert text == "5,...,9, 12, 14,...,16"
    assert expand_runs(text, prime_steps=False) == vals


def test_collapse_expand_primes():
    vals = [233, 239, 241, 251, 269, 293]
    text = collapse_runs(vals, prime_steps=True)
    assert text == "233,...,251, 269, 293"
    assert expand_runs(text, prime_steps=True) == vals


def test_collapse_short_runs_stay_explicit():
    assert collapse_runs([3, 5, 7, 9], prime_steps=False) == "3, 5, 7, 9"
    assert collapse_runs([], prime_steps=False) == "---"


def test_flat_json_round_trip():
    result = enumerate_groups(sieve_primes(13))
    doc = render(result, "json", "flat")
    names = {json.loads(line)["name"] for line in doc.splitlines()}
    assert names == {c.group.name for c in result.classes}
    a5 = next(
        json.loads(line) for line in doc.splitlines() if json.loads(line)["name"] == "A5"
    )
    assert a5["order"] == "60" and a5["spectrum"] == [2, 3, 5]


def test_render_deterministic():
    result = enumerate_groups(sieve_primes(13))
    for fmt in ("text", "json", "csv"):
        for style in ("flat", "sp-table", "series-table"):
            assert render(result, fmt, style) == render(result, fmt, style)


def test_csv_header():
    result = enumerate_groups(sieve_primes(5))
    doc = render(result, "csv", "flat")
    assert doc.splitlines()[0] == "name,family,n,p,k,order,spectrum,max_prime"
    assert "A5,A,5,,,60,2;3;5,5" in doc


def test_render_rejects_unknown():
    result = enumerate_groups(sieve_primes(5))
    with pytest.raises(ValueError):
        render(result, "xml", "flat")
    with pytest.raises(ValueError):
        render(result, "json", "wide")


def test_sp_table_counts():
    result = enumerate_groups(sieve_primes(13))
    doc = render(result, "text", "sp-table")
    assert "S_5  #3" in doc
    assert "S_2  #0" in doc


def test_verify_rejects_wrong_prime_set():
    result = enumerate_groups(sieve_primes(13))
    with pytest.raises(ValueError):
        verify_against_paper(result)


def test_verify_full_run(full_result):
    report = verify_against_paper(full_result)
    assert report.passed
    assert report.total_classes == 1972
    assert report.table2_missing == () and report.table2_extra == ()
    assert report.table4_diffs == {}


def test_verify_detects_missing_series(full_result):
    doctored = dataclasses.replace(
        full_result,
        classes=tuple(c for c in full_result.classes if c.group.family != "Sz"),
        names=tuple(g for g in full_result.names if g.family != "Sz"),
    )
    report = verify_against_paper(doctored)
    assert not report.passed
    missing, extra = report.table4_diffs["Sz(2^k)"]
    assert missing == (3, 5, 7, 9) and extra == ()


def test_full_series_table_rows(full_result):
    doc = render(full_result, "text", "series-table")
    assert "Sz(2^k): k = 3, 5, 7, 9" in doc
    assert "E8(q): q = 2" in doc
    assert "A_n: n = 5,...,1008" in doc
