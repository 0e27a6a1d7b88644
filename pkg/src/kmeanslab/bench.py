"""Repeated-trial benchmark harness.

Runs seed+Lloyd many times per strategy, times each trial, optionally scores
label agreement, and aggregates everything into one table per run: average
potential, minimum potential, wall time normalized to a baseline strategy,
and (for labeled data) the fraction of trials that recovered the classes.

Trial t of a strategy draws from a generator derived from (master_seed,
strategy label, t), so tables are reproducible bit for bit apart from the
timing columns.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

from .geometry import Assignment, Dataset
from .lloyd import LloydConfig, run_lloyd
from .seeding import SeedingStrategy, derive_rng, seed_centers

__all__ = [
    "TrialReport",
    "BenchmarkRow",
    "BenchmarkTable",
    "run_trials",
    "accuracy",
    "aggregate",
    "emit_table",
]


@dataclass
class TrialReport:
    """Outcome of one seed+Lloyd execution."""

    strategy: str
    final_phi: float
    iterations: int
    wall_time: float
    correct: bool | None = None


@dataclass
class BenchmarkRow:
    strategy: str
    avg_phi: float
    min_phi: float
    time_ratio: float
    accuracy: float | None = None


@dataclass
class BenchmarkTable:
    rows: list[BenchmarkRow]
    baseline: str
    trials: int
    dataset: str
    k: int
    master_seed: int

    def to_dict(self) -> dict:
        """JSON report shape: {dataset, k, trials, master_seed, rows}."""
        rows = []
        for r in self.rows:
            d = {
                "strategy": r.strategy,
                "avg_phi": r.avg_phi,
                "min_phi": r.min_phi,
                "time_ratio": r.time_ratio,
            }
            if r.accuracy is not None:
                d["accuracy"] = r.accuracy
            rows.append(d)
        return {
            "dataset": self.dataset,
            "k": self.k,
            "trials": self.trials,
            "master_seed": self.master_seed,
            "rows": rows,
        }

    @staticmethod
    def from_dict(report: dict) -> "BenchmarkTable":
        rows = [
            BenchmarkRow(
                strategy=r["strategy"],
                avg_phi=r["avg_phi"],
                min_phi=r["min_phi"],
                time_ratio=r["time_ratio"],
                accuracy=r.get("accuracy"),
            )
            for r in report["rows"]
        ]
        baseline = rows[0].strategy if rows else ""
        return BenchmarkTable(
            rows=rows,
            baseline=baseline,
            trials=report["trials"],
            dataset=report["dataset"],
            k=report["k"],
            master_seed=report["master_seed"],
        )


def accuracy(assignment: Assignment, labels: list[str], k: int,
             threshold: float = 0.80) -> tuple[float, bool]:
    """Best-case label agreement of a clustering.

    Clusters are matched one-to-one to classes by the assignment that
    maximizes total agreement (Hungarian method on the contingency matrix,
    exact for any k). Returns the agreement fraction and whether it reaches
    ``threshold``.
    """
    owner = assignment.owner
    if len(labels) != owner.shape[0]:
        raise ValueError(
            f"got {len(labels)} labels for {owner.shape[0]} assigned points"
        )
    classes = sorted(set(labels))
    if len(classes) > k:
        raise ValueError(f"{len(classes)} classes exceed the k={k} clusters")
    index = {c: i for i, c in enumerate(classes)}
    y = np.array([index[v] for v in labels], dtype=np.int64)
    table = np.zeros((k, len(classes)), dtype=np.int64)
    np.add.at(table, (owner, y), 1)
    rows, cols = linear_sum_assignment(table, maximize=True)
    agreement = float(table[rows, cols].sum()) / len(labels)
    return agreement, agreement >= threshold


def run_trials(X: Dataset, k: int, strategies: list[SeedingStrategy], trials: int,
               master_seed: int, cfg: LloydConfig = LloydConfig(),
               correctness_threshold: float = 0.80) -> list[TrialReport]:
    """Run ``trials`` independent seed+Lloyd executions per strategy.

    Wall time covers seeding plus Lloyd only; label scoring happens outside
    the timed section. Agreement is scored only when the dataset is labeled
    with at most k classes.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    score_labels = X.labels is not None and len(set(X.labels)) <= k
    reports: list[TrialReport] = []
    for strategy in strategies:
        label = strategy.label
        for t in range(trials):
            rng = derive_rng(master_seed, label, t)
            try:
                t0 = time.perf_counter()
                C0 = seed_centers(X, k, strategy, rng)
                result = run_lloyd(X, C0, cfg)
                dt = time.perf_counter() - t0
            except ValueError as exc:
                raise ValueError(f"strategy {label}, trial {t}: {exc}") from exc
            correct = None
            if score_labels:
                _, correct = accuracy(result.assignment, X.labels, k,
                                      correctness_threshold)
            reports.append(TrialReport(
                strategy=label,
                final_phi=result.assignment.potential,
                iterations=result.iterations,
                wall_time=max(dt, 1e-12),
                correct=correct,
            ))
    return reports


def aggregate(reports: list[TrialReport], baseline: str, *, dataset: str = "",
              k: int = 0, master_seed: int = 0) -> BenchmarkTable:
    """Collapse per-trial reports into one row per strategy.

    Rows keep first-appearance order; time ratios divide each strategy's
    mean wall time by the baseline's, so the baseline row is exactly 1.0.
    """
    if not reports:
        raise ValueError("cannot aggregate an empty report list")
    order: list[str] = []
    groups: dict[str, list[TrialReport]] = {}
    for r in reports:
        if r.strategy not in groups:
            order.append(r.strategy)
            groups[r.strategy] = []
        groups[r.strategy].append(r)
    if baseline not in groups:
        raise ValueError(f"baseline strategy {baseline!r} has no reports")
    base_time = _mean([r.wall_time for r in groups[baseline]])
    rows = []
    for label in order:
        batch = groups[label]
        phis = [r.final_phi for r in batch]
        flags = [r.correct for r in batch if r.correct is not None]
        rows.append(BenchmarkRow(
            strategy=label,
            avg_phi=_mean(phis),
            min_phi=min(phis),
            time_ratio=_mean([r.wall_time for r in batch]) / base_time,
            accuracy=(sum(flags) / len(flags)) if flags else None,
        ))
    return BenchmarkTable(
        rows=rows,
        baseline=baseline,
        trials=len(groups[order[0]]),
        dataset=dataset,
        k=k,
        master_seed=master_seed,
    )


def _mean(values: list[float]) -> float:
    total = 0.0
    for v in values:
        total += v
    return total / len(values)


def _sci3(value: float) -> str:
    """Three significant digits in compact scientific notation: 381000 -> 3.81e5."""
    if value == 0.0:
        return "0.00e0"
    mantissa, exponent = f"{value:.2e}".split("e")
    return f"{mantissa}e{int(exponent)}"


def emit_table(table: BenchmarkTable, format: str = "markdown") -> str:
    """Serialize a benchmark table.

    ``markdown`` mirrors the column order Algorithm, Avg Potential,
    Min Potential, Time (plus Accuracy when present) with potentials in
    3-significant-digit scientific notation. ``csv`` uses full-precision
    floats that round-trip exactly. ``json`` is the report schema and
    includes the master seed.
    """
    fmt = {"md": "markdown"}.get(format, format)
    if fmt == "json":
        return json.dumps(table.to_dict(), indent=2)
    with_accuracy = any(r.accuracy is not None for r in table.rows)
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        header = ["strategy", "avg_phi", "min_phi", "time_ratio"]
        if with_accuracy:
            header.append("accuracy")
        writer.writerow(header)
        for r in table.rows:
            row = [r.strategy, repr(r.avg_phi), repr(r.min_phi), repr(r.time_ratio)]
            if with_accuracy:
                row.append("" if r.accuracy is None else repr(r.accuracy))
            writer.writerow(row)
        return out.getvalue()
    if fmt == "markdown":
        header = ["Algorithm", "Avg Potential", "Min Potential", "Time"]
        if with_accuracy:
            header.append("Accuracy")
        lines = [
            "| " + " | ".join(header) + " |",
            "| " + " | ".join("---" for _ in header) + " |",
        ]
        for r in table.rows:
            cells = [r.strategy, _sci3(r.avg_phi), _sci3(r.min_phi), f"{r.time_ratio:.3g}"]
            if with_accuracy:
                cells.append("" if r.accuracy is None else f"{r.accuracy:.2f}")
            lines.append("| " + " | ".join(cells) + " |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {format!r}; expected markdown, csv or json")
