#!/usr/bin/env python3.10
# -*- coding: utf-8 -*-
"""
Integration tests for FileHandler, JSONHandler and the documents they
store.

Verifies that certificates and simulation reports survive a save and
load under DATA_ROOT and that a reloaded certificate still verifies.
"""

from wgeo.core.certify import Certificate, certify, verify_certificate
from wgeo.core.report import ReportGenerator
from wgeo.core.splice import TrialResult, splice_trial
from wgeo.file.file_handler import FileHandler
from wgeo.file.json_handler import JSONHandler, dumps


def test_certificate_round_trip(k33_words, isolate_data_root):
    cert = certify(k33_words)
    saved = JSONHandler.save_json(cert.to_dict(), "certs/k33.json")
    assert saved == isolate_data_root / "certs" / "k33.json"

    loaded = JSONHandler.load_json("certs/k33.json")
    assert verify_certificate(loaded)
    assert Certificate.from_dict(loaded) == cert
    assert saved.read_text(encoding="utf-8") == dumps(cert.to_dict())


def test_saving_twice_gives_the_same_bytes(k33_words, isolate_data_root):
    first = JSONHandler.save_json(certify(k33_words).to_dict(), "a.json")
    second = JSONHandler.save_json(certify(k33_words).to_dict(), "b.json")
    assert first.read_bytes() == second.read_bytes()


def test_simulation_report_round_trip(isolate_data_root):
    results = [splice_trial(3, 4, 6, seed=s, trial=s) for s in range(3)]
    report = ReportGenerator.simulation_report(results, 0, None, n=6, k=3)
    JSONHandler.save_json(report, "sim/report.json")
    loaded = JSONHandler.load_json("sim/report.json")
    assert [TrialResult.from_dict(t) for t in loaded["per_trial"]] == results
    assert loaded["summary"] == ReportGenerator.summary(results)

    csv_path = ReportGenerator.export_to_csv(
        results, FileHandler.prepare_output("sim/report.csv", ".csv")
    )
    assert csv_path.parent == isolate_data_root / "sim"
    assert len(csv_path.read_text(encoding="utf-8").splitlines()) == 4
