"""Tests for report hashing and JSON/CSV writers."""

import csv
import json

import pytest
from mpmath import mp, mpf

from rsc.analysis import ErrorProfile, ErrorSample
from rsc.config import build_run_config
from rsc.exceptions import InputError
from rsc.report import (
    MEANSQ_HEADER,
    SIEVE_HEADER,
    RunReport,
    analysis_report,
    content_hash,
    delta_rows,
    finalize,
    meansq_rows,
    render_json,
    sieve_rows,
    sieve_summary,
    t_series_report,
    write_csv,
    write_json,
)
from rsc.sieve import sieve_f
from rsc.singular import TSeries, TSeriesMethod


@pytest.fixture
def report():
    config = build_run_config({"command": "sieve", "x_max": 4}, environ={})
    table = sieve_f(4)
    return RunReport(
        command="sieve",
        config=config.fingerprint(),
        results={"sieve": sieve_summary(table).model_dump(mode="json")},
    )


class TestHashing:
    """Content hashes over canonical JSON."""

    def test_key_order_irrelevant(self):
        assert content_hash({"a": 1, "b": [1, 2]}) == content_hash({"b": [1, 2], "a": 1})
        assert content_hash({"a": 1}) != content_hash({"a": 2})

    def test_finalize_excludes_hash(self, report):
        done = finalize(report)
        assert len(done.content_hash) == 64
        assert done.content_hash == content_hash(report.model_dump(mode="json", exclude={"content_hash"}))
        assert finalize(done).content_hash == done.content_hash

    def test_render_is_stable(self, report):
        text = render_json(report)
        assert text == render_json(report)
        assert text.endswith("\n")
        data = json.loads(text)
        assert data["results"]["sieve"]["D"] == "34"
        assert data["config"]["x_max"] == 4
        assert list(data) == sorted(data)


class TestWriters:
    """Files on disk."""

    def test_write_json(self, report, tmp_path):
        path = write_json(report, tmp_path / "out" / "report.json")
        assert path.read_text(encoding="utf-8") == render_json(report)

    def test_sieve_csv(self, tmp_path):
        path = write_csv(sieve_rows(sieve_f(4)), SIEVE_HEADER, tmp_path / "f.csv")
        with open(path, newline="") as f:
            rows = list(csv.reader(f))
        assert rows[0] == ["k", "f", "D"]
        assert rows[1:] == [["1", "1", "1"], ["2", "6", "7"], ["3", "6", "13"], ["4", "21", "34"]]

    def test_meansq_csv(self, tmp_path):
        rows = meansq_rows([(1, 0.0), (2, 4.0), (4, 16.0)])
        path = write_csv(rows, MEANSQ_HEADER, tmp_path / "m.csv")
        lines = path.read_text().splitlines()
        assert lines[0] == "T,M,alpha_partial"
        assert lines[1] == "1,0.0,"
        assert lines[3] == "4,16.0,2.0"

    def test_streaming_table_has_no_rows(self):
        with pytest.raises(InputError):
            list(sieve_rows(sieve_f(100, keep_table=False)))


class TestConverters:
    """Extended-precision values become decimal strings."""

    def test_t_series_report(self):
        with mp.workdps(30):
            third = mpf(1) / 3
        series = TSeries(
            c=(third, mpf(-2)),
            method=TSeriesMethod.DIRECT,
            E=16,
            prime_cutoff=1000,
            tail_bound=2.17e-3,
            precision_digits=20,
        )
        data = t_series_report(series).model_dump(mode="json")
        assert data["c"][0] == "0.33333333333333333333"
        assert data["c"][1] == "-2.0"
        assert data["method"] == "direct"
        assert data["tail_bound"] == "2.170e-03"
        assert data["increment"] is None

    def test_error_samples_keep_precision(self):
        with mp.workdps(30):
            main = mpf(100) / 3
            sample = ErrorSample(x=4, D=34, main=main, delta=34 - main, precision_digits=25)
        profile = ErrorProfile(samples=[sample])
        row = analysis_report(profile).samples[0]
        assert row == {"x": "4", "D": "34", "main": "33." + "3" * 23, "delta": "0." + "6" * 24 + "7"}
        assert list(delta_rows(profile)) == [(4, 34, row["main"], row["delta"])]
        assert sample.relative_error == pytest.approx(2 / 3 / 34)
