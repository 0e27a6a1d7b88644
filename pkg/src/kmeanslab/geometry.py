"""Numeric substrate: datasets, center sets, squared distances and potentials.

All arithmetic is double precision. The clustering potential accumulates
left to right within each cluster (in point order) and then across clusters
in index order; that order is fixed so exact-equality tests against an
independently computed sum are meaningful.

Datasets and center sets are immutable after construction (their arrays are
marked read-only), and every operation here is a pure function of its
inputs, so values can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

__all__ = [
    "Dataset",
    "CenterSet",
    "Assignment",
    "sq_dist",
    "sq_dist_columns",
    "nearest_center",
    "potential",
    "centroid",
]


def as_point_matrix(values, what: str = "points") -> np.ndarray:
    """Coerce to a read-only (n, dim) float64 matrix of finite coordinates.

    A flat sequence is treated as n one-dimensional points.
    """
    arr = np.array(values, dtype=np.float64)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    if arr.ndim != 2:
        raise ValueError(f"{what} must form a 2-d array, got shape {arr.shape}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError(f"{what} needs at least one row and one coordinate")
    if not np.isfinite(arr).all():
        raise ValueError(f"{what} contains NaN or infinite coordinates")
    arr.setflags(write=False)
    return arr


@dataclass
class Dataset:
    """Ordered collection of d-dimensional points with optional class labels."""

    points: np.ndarray
    labels: list[str] | None = None
    name: str = ""

    def __post_init__(self) -> None:
        self.points = as_point_matrix(self.points, "points")
        if self.labels is not None:
            self.labels = [str(v) for v in self.labels]
            if len(self.labels) != self.n:
                raise ValueError(
                    f"got {len(self.labels)} labels for {self.n} points"
                )

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    @cached_property
    def distinct_points(self) -> int:
        """Number of distinct coordinate rows (computed once, cached)."""
        return int(np.unique(self.points, axis=0).shape[0])


@dataclass
class CenterSet:
    """Ordered list of centers with a fixed capacity k.

    During seeding a CenterSet may hold fewer than ``capacity`` centers;
    it is never empty.
    """

    coords: np.ndarray
    capacity: int = 0

    def __post_init__(self) -> None:
        self.coords = as_point_matrix(self.coords, "centers")
        if self.capacity == 0:
            self.capacity = self.size
        if not 1 <= self.size <= self.capacity:
            raise ValueError(
                f"center count {self.size} outside [1, capacity={self.capacity}]"
            )

    @property
    def size(self) -> int:
        return self.coords.shape[0]

    @property
    def dim(self) -> int:
        return self.coords.shape[1]


@dataclass
class Assignment:
    """Nearest-center ownership for every point plus the resulting potential.

    ``potential`` equals the sum of ``per_cluster_potential`` by construction;
    each per-cluster value accumulates its owned points left to right.
    """

    owner: np.ndarray
    potential: float
    per_cluster_potential: list[float]


def sq_dist(a, b) -> float:
    """Squared Euclidean distance between two points."""
    a = np.asarray(a, dtype=np.float64).ravel()
    b = np.asarray(b, dtype=np.float64).ravel()
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return float(((a - b) ** 2).sum())


def sq_dist_columns(points: np.ndarray, centers: np.ndarray) -> np.ndarray:
    """(n, m) squared distances; entry [i, j] is computed exactly like
    ``sq_dist(points[i], centers[j])`` so column-wise minima agree bitwise
    with per-point calls."""
    points = np.asarray(points, dtype=np.float64)
    centers = np.asarray(centers, dtype=np.float64)
    if points.shape[1] != centers.shape[1]:
        raise ValueError(
            f"dimension mismatch: points are {points.shape[1]}-d, "
            f"centers are {centers.shape[1]}-d"
        )
    cols = [((points - c) ** 2).sum(axis=1) for c in centers]
    return np.column_stack(cols)


def nearest_center(x, C: CenterSet) -> tuple[int, float]:
    """Index of the closest center (lowest index on ties) and its squared distance."""
    row = sq_dist_columns(np.asarray(x, dtype=np.float64).reshape(1, -1), C.coords)[0]
    idx = int(np.argmin(row))
    return idx, float(row[idx])


def potential(X: Dataset, C: CenterSet) -> Assignment:
    """Assign every point to its nearest center and total the squared distances.

    Ties in ownership resolve to the lowest center index. The returned
    potential is the documented left-to-right accumulation: per cluster in
    point order, then across clusters in index order.
    """
    mat = sq_dist_columns(X.points, C.coords)
    owner = np.argmin(mat, axis=1).astype(np.int64)
    d2 = mat[np.arange(X.n), owner]
    # bincount adds weights in input order, i.e. left to right per cluster
    per_cluster = np.bincount(owner, weights=d2, minlength=C.size)
    per_cluster_list = [float(v) for v in per_cluster]
    phi = 0.0
    for v in per_cluster_list:
        phi += v
    owner.setflags(write=False)
    return Assignment(owner=owner, potential=phi, per_cluster_potential=per_cluster_list)


def centroid(points) -> np.ndarray:
    """Coordinate-wise arithmetic mean of a nonempty point collection."""
    arr = np.asarray(points, dtype=np.float64)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    if arr.shape[0] == 0:
        raise ValueError("centroid of an empty point set is undefined")
    return arr.mean(axis=0)
