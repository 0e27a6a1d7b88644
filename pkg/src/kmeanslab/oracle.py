"""Exhaustive optimal clustering for tiny instances.

Enumerates every assignment of N points to k cluster ids (k^N of them,
guarded) and evaluates each with centers at cluster centroids. The winner's
potential is the exact optimum, usable as ground truth for dominance and
competitive-ratio checks elsewhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import Dataset, potential
from .seeding import SeedingStrategy, derive_rng, seed_centers

__all__ = [
    "ENUMERATION_GUARD",
    "OracleGuardError",
    "OptimalResult",
    "brute_force_optimal",
    "competitive_ratio",
    "dsquared_expectation_bound",
]

ENUMERATION_GUARD = 10_000_000

_CHUNK = 1 << 15


class OracleGuardError(ValueError):
    """The instance is too large to enumerate."""


@dataclass
class OptimalResult:
    phi_opt: float
    best_assignment: np.ndarray
    enumerated: int


def _partition_potential(points: np.ndarray, owner: np.ndarray, k: int) -> float:
    phi = 0.0
    for j in range(k):
        members = points[owner == j]
        if members.shape[0] == 0:
            continue
        c = members.mean(axis=0)
        phi += float(((members - c) ** 2).sum())
    return phi


def brute_force_optimal(X: Dataset, k: int) -> OptimalResult:
    """Minimum-potential clustering of (X, k) by full enumeration.

    Empty clusters contribute nothing, so non-surjective assignments are
    covered too. Requires k^N <= ENUMERATION_GUARD.
    """
    n = X.n
    if not 1 <= k <= n:
        raise ValueError(f"k={k} outside [1, {n}]")
    total = k ** n
    if total > ENUMERATION_GUARD:
        raise OracleGuardError(
            f"k^N = {k}^{n} = {total} exceeds the enumeration guard "
            f"of {ENUMERATION_GUARD}"
        )
    pts = X.points
    sq = (pts ** 2).sum(axis=1)
    powers = k ** np.arange(n, dtype=np.int64)

    best_phi = math.inf
    best_code = 0
    for start in range(0, total, _CHUNK):
        codes = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        assign = (codes[:, None] // powers[None, :]) % k
        # per cluster: sum ||x||^2 - ||sum x||^2 / count  equals the within-cluster
        # squared scatter around the centroid
        phi = np.zeros(codes.shape[0])
        for j in range(k):
            mask = (assign == j).astype(np.float64)
            cnt = mask.sum(axis=1)
            s1 = mask @ sq
            sums = mask @ pts
            safe = np.maximum(cnt, 1.0)
            phi += s1 - np.where(cnt > 0, (sums ** 2).sum(axis=1) / safe, 0.0)
        i = int(np.argmin(phi))
        if phi[i] < best_phi:
            best_phi = float(phi[i])
            best_code = int(codes[i])

    best_assignment = ((best_code // powers) % k).astype(np.int64)
    # recompute the winner directly at its centroids for a clean value
    phi_opt = _partition_potential(pts, best_assignment, k)
    return OptimalResult(phi_opt=phi_opt, best_assignment=best_assignment, enumerated=total)


def competitive_ratio(X: Dataset, k: int, strategy: SeedingStrategy,
                      trials: int) -> tuple[float, float]:
    """Mean seeded potential over ``trials`` independent seedings (no Lloyd
    refinement) and its ratio to the enumerated optimum.

    Trial t draws from a generator derived from (strategy.rng_seed,
    strategy.label, t).
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    opt = brute_force_optimal(X, k)
    if opt.phi_opt <= 0.0:
        raise ValueError("phi_opt is zero; the competitive ratio is undefined")
    total = 0.0
    for t in range(trials):
        rng = derive_rng(strategy.rng_seed, strategy.label, t)
        C = seed_centers(X, k, strategy, rng)
        total += potential(X, C).potential
    mean_phi = total / trials
    return mean_phi, mean_phi / opt.phi_opt


def dsquared_expectation_bound(k: int) -> float:
    """Upper bound 8(ln k + 2) on the expected seeded-potential ratio of
    distance-squared weighted seeding."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return 8.0 * (math.log(k) + 2.0)
