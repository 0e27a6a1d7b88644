"""Pydantic request/response models for the service (and the CLI client)."""

from __future__ import annotations

from pydantic import BaseModel, Field


class InlineDataset(BaseModel):
    """A dataset shipped inside a request body."""

    name: str = "dataset"
    points: list[list[float]]
    labels: list[str] | None = None


class SyntheticRequest(BaseModel):
    clusters: int = Field(ge=1)
    points_per_cluster: int = Field(ge=1)
    separation: float = Field(gt=0.0)
    dim: int = Field(ge=1)
    seed: int = 0


class ClusterRequest(BaseModel):
    """One seed+Lloyd execution."""

    data: InlineDataset | None = None
    fixture: str | None = None
    k: int = Field(ge=1)
    algo: str = "kmeans++"
    seed: int = 42
    max_iterations: int = Field(default=300, ge=1)
    standardize: bool = False


class ClusterResponse(BaseModel):
    dataset: str
    k: int
    algo: str
    centers: list[list[float]]
    owner: list[int]
    potential: float
    per_cluster_potential: list[float]
    iterations: int
    converged: bool
    potential_trace: list[float]


class BenchmarkRequest(BaseModel):
    """A full repeated-trial benchmark over one dataset."""

    data: InlineDataset | None = None
    fixture: str | None = None
    k: int = Field(ge=1)
    trials: int = Field(default=100, ge=1)
    algos: list[str]
    master_seed: int = 42
    correctness_threshold: float = Field(default=0.80, gt=0.0, le=1.0)
    max_iterations: int = Field(default=300, ge=1)
    standardize: bool = False


class BenchmarkRowModel(BaseModel):
    strategy: str
    avg_phi: float
    min_phi: float
    time_ratio: float
    accuracy: float | None = None


class BenchmarkReport(BaseModel):
    """Response mirroring the JSON report schema emitted by the CLI."""

    dataset: str
    k: int
    trials: int
    master_seed: int
    rows: list[BenchmarkRowModel]


class StrategiesResponse(BaseModel):
    strategies: list[str]


class FixturesResponse(BaseModel):
    fixtures: list[str]
