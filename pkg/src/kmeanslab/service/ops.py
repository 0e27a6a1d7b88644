"""Request executors shared by the FastAPI endpoints and the CLI client.

Everything validates before it computes: strategy strings, k against the
dataset, and alpha against the per-dataset lower bound 1/N are all checked
up front, so a bad request fails before any trial runs.
"""

from __future__ import annotations

import numpy as np

from ..bench import BenchmarkTable, aggregate, run_trials
from ..data import builtin_fixture, standardize, synth_mixture
from ..geometry import Dataset
from ..lloyd import LloydConfig, run_lloyd
from ..seeding import SeedingStrategy, StrategyKind, make_rng, seed_centers
from .schemas import (
    BenchmarkReport,
    BenchmarkRequest,
    ClusterRequest,
    ClusterResponse,
    InlineDataset,
    SyntheticRequest,
)

STRATEGY_GRAMMAR = ["kmeans", "kmeans++", "alpha:<float>", "alpha:eps", "norandom"]


def dataset_from_request(data: InlineDataset | None, fixture: str | None,
                         apply_standardize: bool) -> Dataset:
    if (data is None) == (fixture is None):
        raise ValueError("specify exactly one of data or fixture")
    if fixture is not None:
        ds = builtin_fixture(fixture)
    else:
        ds = Dataset(points=np.array(data.points, dtype=np.float64),
                     labels=data.labels, name=data.name)
    return standardize(ds) if apply_standardize else ds


def parse_strategies(algos: list[str]) -> list[SeedingStrategy]:
    if not algos:
        raise ValueError("at least one strategy is required")
    strategies = [SeedingStrategy.parse(a) for a in algos]
    seen: set[str] = set()
    for s in strategies:
        if s.label in seen:
            raise ValueError(f"duplicate strategy {s.label!r}")
        seen.add(s.label)
    return strategies


def validate_instance(ds: Dataset, k: int, strategies: list[SeedingStrategy]) -> None:
    if k > ds.n:
        raise ValueError(f"k={k} exceeds the {ds.n} points in {ds.name or 'dataset'}")
    needs_distinct = [s for s in strategies if s.kind is not StrategyKind.UNIFORM]
    if needs_distinct and k > ds.distinct_points:
        raise ValueError(
            f"k={k} exceeds the {ds.distinct_points} distinct points "
            f"in {ds.name or 'dataset'}"
        )
    eps = 1.0 / ds.n
    for s in strategies:
        if s.kind is StrategyKind.ALPHA and s.alpha <= eps:
            raise ValueError(
                f"alpha={s.alpha:g} outside (1/N, 1] = ({eps:g}, 1] for "
                f"{ds.name or 'dataset'} (N={ds.n})"
            )


def execute_benchmark(request: BenchmarkRequest) -> BenchmarkReport:
    """Validate and run a full benchmark; the first strategy is the timing
    baseline."""
    strategies = parse_strategies(request.algos)
    ds = dataset_from_request(request.data, request.fixture, request.standardize)
    validate_instance(ds, request.k, strategies)
    cfg = LloydConfig(max_iterations=request.max_iterations)
    reports = run_trials(
        ds, request.k, strategies, request.trials, request.master_seed, cfg,
        correctness_threshold=request.correctness_threshold,
    )
    table = aggregate(
        reports, baseline=strategies[0].label,
        dataset=ds.name, k=request.k, master_seed=request.master_seed,
    )
    return BenchmarkReport(**table.to_dict())


def benchmark_table(report: BenchmarkReport) -> BenchmarkTable:
    return BenchmarkTable.from_dict(report.model_dump(exclude_none=True))


def execute_cluster(request: ClusterRequest) -> ClusterResponse:
    """One seeded Lloyd run, returning centers, ownership and the trace."""
    strategy = SeedingStrategy.parse(request.algo, rng_seed=request.seed)
    ds = dataset_from_request(request.data, request.fixture, request.standardize)
    validate_instance(ds, request.k, [strategy])
    rng = make_rng(request.seed)
    C0 = seed_centers(ds, request.k, strategy, rng)
    result = run_lloyd(ds, C0, LloydConfig(max_iterations=request.max_iterations))
    return ClusterResponse(
        dataset=ds.name,
        k=request.k,
        algo=strategy.label,
        centers=[[float(v) for v in row] for row in result.centers.coords],
        owner=[int(v) for v in result.assignment.owner],
        potential=result.assignment.potential,
        per_cluster_potential=result.assignment.per_cluster_potential,
        iterations=result.iterations,
        converged=result.converged,
        potential_trace=result.potential_trace,
    )


def execute_synthetic(request: SyntheticRequest) -> InlineDataset:
    ds = synth_mixture(request.clusters, request.points_per_cluster,
                       request.separation, request.dim, request.seed)
    return InlineDataset(
        name=ds.name,
        points=[[float(v) for v in row] for row in ds.points],
        labels=ds.labels,
    )
