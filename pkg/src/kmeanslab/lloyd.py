"""Lloyd iteration engine plus verification helpers for per-step descent.

The loop alternates nearest-center assignment with centroid updates and
stops at an exact assignment fixpoint (ownership is discrete, so no movement
threshold is needed). Clusters that come up empty during an update are
respawned at the point currently farthest from the surviving centers, which
keeps all k clusters alive without breaking monotone descent.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .geometry import Assignment, CenterSet, Dataset, centroid, potential, sq_dist_columns

__all__ = [
    "LloydConfig",
    "LloydResult",
    "ClusteringState",
    "assign_step",
    "update_step",
    "run_lloyd",
    "lloyd_partition_trace",
    "centroid_offset_identity",
    "step_improvement_bound",
]

RESPAWN_FARTHEST = "respawn-farthest"


@dataclass(frozen=True)
class LloydConfig:
    """Iteration safeguards; convergence itself is always the exact
    assignment fixpoint."""

    max_iterations: int = 300
    empty_cluster_policy: str = RESPAWN_FARTHEST

    def __post_init__(self) -> None:
        if self.max_iterations < 1:
            raise ValueError(f"max_iterations must be >= 1, got {self.max_iterations}")
        if self.empty_cluster_policy != RESPAWN_FARTHEST:
            raise ValueError(
                f"unknown empty-cluster policy {self.empty_cluster_policy!r}"
            )


@dataclass
class LloydResult:
    centers: CenterSet
    assignment: Assignment
    iterations: int
    converged: bool
    potential_trace: list[float] = field(default_factory=list)


@dataclass
class ClusteringState:
    """Snapshot of a clustering: the points, one center per cluster, and the
    owner vector. Used by the per-step improvement check."""

    points: np.ndarray
    centers: np.ndarray
    owner: np.ndarray

    def state_potential(self) -> float:
        """Sum of squared distances from each point to its cluster's center."""
        diffs = self.points - self.centers[self.owner]
        return float((diffs ** 2).sum())


def assign_step(X: Dataset, C: CenterSet) -> Assignment:
    """Assign every point to its nearest center (lowest index on ties)."""
    return potential(X, C)


def update_step(X: Dataset, assignment: Assignment, k: int) -> CenterSet:
    """Move each nonempty cluster's center to its centroid.

    Empty clusters are respawned, in ascending cluster index, at the point
    with the largest squared distance to the already-updated live centers
    (lowest point index on ties).
    """
    owner = assignment.owner
    centers: list[np.ndarray | None] = [None] * k
    for j in range(k):
        members = X.points[owner == j]
        if members.shape[0] > 0:
            centers[j] = members.mean(axis=0)
    for j in range(k):
        if centers[j] is None:
            live = np.vstack([c for c in centers if c is not None])
            d2 = sq_dist_columns(X.points, live).min(axis=1)
            centers[j] = X.points[int(np.argmax(d2))].copy()
    return CenterSet(np.vstack(centers), capacity=k)


def run_lloyd(X: Dataset, C0: CenterSet, cfg: LloydConfig = LloydConfig()) -> LloydResult:
    """Iterate assign/update from the seeded centers until the owner vector
    stops changing or ``cfg.max_iterations`` passes have run.

    The potential trace starts with the seeded assignment's potential and
    records one value after every update pass; it is monotonically
    non-increasing.
    """
    k = C0.capacity
    asg = assign_step(X, C0)
    trace = [asg.potential]
    centers = C0
    converged = False
    iterations = 0
    for it in range(1, cfg.max_iterations + 1):
        centers = update_step(X, asg, k)
        new_asg = assign_step(X, centers)
        trace.append(new_asg.potential)
        iterations = it
        if np.array_equal(new_asg.owner, asg.owner):
            asg = new_asg
            converged = True
            break
        asg = new_asg
    return LloydResult(
        centers=centers,
        assignment=asg,
        iterations=iterations,
        converged=converged,
        potential_trace=trace,
    )


def lloyd_partition_trace(X: Dataset, C0: CenterSet,
                          cfg: LloydConfig = LloydConfig()) -> list[ClusteringState]:
    """Clustering states of a Lloyd run, one per assign+update pass.

    The first state pairs the seeded centers with their nearest-center
    assignment; every following state holds the owners assigned under the
    previous state's centers together with the centers updated from those
    owners. Each consecutive pair is therefore exactly one assign+update
    pass, the shape ``step_improvement_bound`` expects.
    """
    k = C0.capacity
    asg = assign_step(X, C0)
    states = [ClusteringState(X.points, C0.coords, asg.owner)]
    for _ in range(cfg.max_iterations):
        centers = update_step(X, asg, k)
        states.append(ClusteringState(X.points, centers.coords, asg.owner))
        new_asg = assign_step(X, centers)
        if np.array_equal(new_asg.owner, asg.owner):
            break
        asg = new_asg
    return states


def centroid_offset_identity(S, z) -> tuple[float, float]:
    """Both sides of the mass-center identity for a point set S and probe z:

        sum ||x - z||^2  -  sum ||x - c(S)||^2   =   |S| * ||c(S) - z||^2

    Returns (lhs, rhs); they agree to roundoff.
    """
    arr = np.asarray(S, dtype=np.float64)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    if arr.shape[0] == 0:
        raise ValueError("the point set must be nonempty")
    zv = np.asarray(z, dtype=np.float64).ravel()
    if zv.shape[0] != arr.shape[1]:
        raise ValueError(f"dimension mismatch: {arr.shape[1]} vs {zv.shape[0]}")
    c = centroid(arr)
    lhs = float(((arr - zv) ** 2).sum()) - float(((arr - c) ** 2).sum())
    rhs = arr.shape[0] * float(((c - zv) ** 2).sum())
    return lhs, rhs


def step_improvement_bound(before: ClusteringState,
                           after: ClusteringState) -> tuple[float, float]:
    """Actual potential drop of one assign+update pass and its lower bound.

    ``after`` must be the result of one pass on ``before``: its owners are
    the nearest-center assignment under ``before.centers`` and its centers
    are the centroids of its own nonempty clusters. Then

        drop  = potential(before) - potential(after)
        bound = sum_j |cluster_j(after)| * ||after.centers[j] - before.centers[j]||^2

    and drop >= bound, with equality when the pass reassigned nothing.
    """
    if before.centers.shape != after.centers.shape:
        raise ValueError(
            f"cluster-count mismatch: {before.centers.shape[0]} vs "
            f"{after.centers.shape[0]}"
        )
    drop = before.state_potential() - after.state_potential()
    k = after.centers.shape[0]
    counts = np.bincount(after.owner, minlength=k)
    bound = 0.0
    for j in range(k):
        if counts[j] == 0:
            continue
        shift = after.centers[j] - before.centers[j]
        bound += float(counts[j]) * float((shift ** 2).sum())
    return drop, bound
