#!/usr/bin/env python3.10
# -*- coding: utf-8 -*-
"""
Summarize splice simulations and export them.
"""

from __future__ import annotations

import csv
from collections import Counter
from pathlib import Path
from typing import Any, Sequence

from ..utils.rng import algorithm
from .splice import TrialResult

CSV_FIELDS = (
    "trial",
    "seed",
    "vertices",
    "edges",
    "valence",
    "edge_connectivity",
    "planar",
    "minor_found",
    "deletion_connectivity",
    "violations",
)


class ReportGenerator:
    """Compute summaries of trial batches and export them."""

    @staticmethod
    def summary(results: Sequence[TrialResult]) -> dict[str, Any]:
        """Count the trials, their failures and their observed values.

        Args:
            results (Sequence[TrialResult]): The trials.

        Returns:
            dict[str, Any]:
                {
                    "trials": number of trials,
                    "passed": trials without violations,
                    "failed": trials with violations,
                    "valences": count per observed valence,
                    "edge_connectivity": count per observed value,
                    "planar": number of planar results,
                    "minor_found": number of minors found,
                    "minor_checked": number of minor checks run
                }
        """
        valences = Counter(str(r.valence) for r in results)
        connectivity = Counter(str(r.edge_connectivity) for r in results)
        passed = sum(1 for r in results if r.ok)
        return {
            "trials": len(results),
            "passed": passed,
            "failed": len(results) - passed,
            "valences": dict(sorted(valences.items())),
            "edge_connectivity": dict(sorted(connectivity.items())),
            "planar": sum(1 for r in results if r.planar),
            "minor_found": sum(1 for r in results if r.minor_found),
            "minor_checked": sum(
                1 for r in results if r.minor_found is not None
            ),
        }

    @staticmethod
    def simulation_report(
        results: Sequence[TrialResult],
        seed: int,
        d: int | None,
        **extra: Any,
    ) -> dict[str, Any]:
        """Build the JSON report of a batch of trials.

        Keys come in a fixed order: seed, d, trials, per_trial, then any
        extra keys given, then rng and summary.

        Args:
            results (Sequence[TrialResult]): The trials.
            seed (int): Batch seed.
            d (int | None): Number of copies, None for regular-graph
                splices.
            **extra: Parameters of the run to record.

        Returns:
            dict[str, Any]: The report.

        Examples:
            >>> report = ReportGenerator.simulation_report(results, 7, 3)
            >>> list(report)[:4]
            ['seed', 'd', 'trials', 'per_trial']
        """
        report: dict[str, Any] = {
            "seed": seed,
            "d": d,
            "trials": len(results),
            "per_trial": [r.to_dict() for r in results],
        }
        report.update(extra)
        report["rng"] = algorithm()
        report["summary"] = ReportGenerator.summary(results)
        return report

    @staticmethod
    def export_to_csv(results: Sequence[TrialResult], path: Path) -> Path:
        """Export one row per trial to a CSV file.

        Args:
            results (Sequence[TrialResult]): The trials.
            path (Path): Target CSV path.

        Returns:
            Path: Path of the written file.

        Raises:
            OSError: If the file cannot be written.
        """
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(CSV_FIELDS)
            for r in results:
                row = r.to_dict()
                row["violations"] = ";".join(r.violations)
                writer.writerow(
                    tuple("" if row[k] is None else row[k] for k in CSV_FIELDS)
                )
        return path
