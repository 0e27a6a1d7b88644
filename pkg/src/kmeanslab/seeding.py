"""Center-initialization strategies.

Five ways to pick initial centers for Lloyd's algorithm:

* ``kmeans``      uniform draw of k distinct points,
* ``kmeans++``    distance-squared weighted sequential sampling,
* ``alpha:<a>``   the same weighted sampling restricted to the ceil(a*N)
                  points currently farthest from their nearest center,
* ``alpha:eps``   deterministic farthest point (the size-1 subset limit),
* ``norandom``    farthest point, with the first center itself chosen as the
                  point farthest from a uniformly drawn pivot.

Weighted draws invert the cumulative distribution with a single uniform
variate, so restricted sampling with a full subset is bit-identical to plain
distance-squared sampling under the same seed. Randomness always comes from
a numpy PCG64 generator, which pins the algorithm identity and makes every
run reproducible from its seed.
"""

from __future__ import annotations

import math
import zlib
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .geometry import CenterSet, Dataset, sq_dist_columns

__all__ = [
    "DegenerateDataError",
    "StrategyKind",
    "SeedingStrategy",
    "make_rng",
    "derive_rng",
    "weighted_index",
    "next_center_distribution",
    "seed_uniform",
    "seed_dsquared",
    "seed_alpha",
    "seed_farthest",
    "seed_norandom",
    "seed_centers",
]


class DegenerateDataError(ValueError):
    """Every candidate point coincides with an existing center."""


class StrategyKind(Enum):
    UNIFORM = "uniform"
    DSQUARED = "dsquared"
    ALPHA = "alpha"
    FARTHEST = "farthest"
    NORANDOM = "norandom"


@dataclass(frozen=True)
class SeedingStrategy:
    """A seeding method plus the seed of its private random stream."""

    kind: StrategyKind
    alpha: float | None = None
    rng_seed: int = 0

    def __post_init__(self) -> None:
        if self.kind is StrategyKind.ALPHA:
            if self.alpha is None or not 0.0 < self.alpha <= 1.0:
                raise ValueError(f"alpha must lie in (0, 1], got {self.alpha}")
        elif self.alpha is not None:
            raise ValueError(f"{self.kind.value} takes no alpha value")

    @property
    def label(self) -> str:
        """Canonical CLI spelling of this strategy."""
        if self.kind is StrategyKind.UNIFORM:
            return "kmeans"
        if self.kind is StrategyKind.DSQUARED:
            return "kmeans++"
        if self.kind is StrategyKind.ALPHA:
            return f"alpha:{self.alpha:g}"
        if self.kind is StrategyKind.FARTHEST:
            return "alpha:eps"
        return "norandom"

    @staticmethod
    def parse(text: str, rng_seed: int = 0) -> "SeedingStrategy":
        """Parse a CLI strategy string.

        Accepted forms: ``kmeans``, ``kmeans++``, ``alpha:<float>``,
        ``alpha:eps``, ``norandom``.
        """
        name = text.strip()
        fixed = {
            "kmeans": StrategyKind.UNIFORM,
            "kmeans++": StrategyKind.DSQUARED,
            "alpha:eps": StrategyKind.FARTHEST,
            "norandom": StrategyKind.NORANDOM,
        }
        if name in fixed:
            return SeedingStrategy(fixed[name], rng_seed=rng_seed)
        if name.startswith("alpha:"):
            raw = name[len("alpha:"):]
            try:
                value = float(raw)
            except ValueError:
                raise ValueError(f"invalid alpha value {raw!r} in {text!r}") from None
            if not math.isfinite(value) or not 0.0 < value <= 1.0:
                raise ValueError(
                    f"alpha must lie in (1/N, 1], got {value!r} "
                    "(use alpha:eps for the farthest-point limit)"
                )
            return SeedingStrategy(StrategyKind.ALPHA, alpha=value, rng_seed=rng_seed)
        raise ValueError(
            f"unknown strategy {text!r}; expected one of kmeans, kmeans++, "
            "alpha:<float>, alpha:eps, norandom"
        )


def make_rng(seed: int) -> np.random.Generator:
    """Seeded PCG64 generator; same seed and call sequence give identical outputs."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed & 0xFFFFFFFFFFFFFFFF)))


def derive_rng(master_seed: int, label: str, trial: int) -> np.random.Generator:
    """Private generator for one (strategy, trial) pair.

    The strategy label enters through crc32 so the derivation is stable
    across processes and platforms, unlike Python's salted hash().
    """
    tag = zlib.crc32(label.encode("utf-8"))
    entropy = [master_seed & 0xFFFFFFFFFFFFFFFF, tag, trial]
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy)))


def _min_d2(X: Dataset, centers: np.ndarray) -> np.ndarray:
    return sq_dist_columns(X.points, centers).min(axis=1)


def _point_d2(X: Dataset, index: int) -> np.ndarray:
    return ((X.points - X.points[index]) ** 2).sum(axis=1)


def _subset_size(alpha: float, n: int) -> int:
    """ceil(alpha*n) clamped to [1, n], snapping near-integer products first
    so float noise (e.g. 0.1*150) cannot push the ceiling up a slot."""
    v = alpha * n
    nearest = round(v)
    m = int(nearest) if abs(v - nearest) < 1e-9 else math.ceil(v)
    return min(n, max(1, m))


def _distribution_from_d2(d2: np.ndarray, strategy: SeedingStrategy) -> np.ndarray:
    if not np.any(d2 > 0.0):
        raise DegenerateDataError("every point coincides with an existing center")
    kind = strategy.kind
    if kind is StrategyKind.DSQUARED:
        return d2 / d2.sum()
    if kind is StrategyKind.ALPHA:
        m = _subset_size(strategy.alpha, d2.shape[0])
        order = np.argsort(-d2, kind="stable")  # ties keep the lower point index first
        w = np.zeros_like(d2)
        keep = order[:m]
        w[keep] = d2[keep]
        return w / w.sum()
    if kind in (StrategyKind.FARTHEST, StrategyKind.NORANDOM):
        p = np.zeros_like(d2)
        p[int(np.argmax(d2))] = 1.0
        return p
    raise ValueError("uniform seeding draws k indices at once; it has no next-center distribution")


def next_center_distribution(X: Dataset, C: CenterSet, strategy: SeedingStrategy) -> np.ndarray:
    """Probability over point indices for the next center draw.

    Distance-squared weighting normalizes min squared distances; the alpha
    variant zeroes everything outside the top ceil(alpha*N) subset before
    normalizing; farthest point is a point mass at the argmax. Points that
    coincide with an existing center always get probability exactly 0.
    """
    return _distribution_from_d2(_min_d2(X, C.coords), strategy)


def weighted_index(p: np.ndarray, rng: np.random.Generator) -> int:
    """Sample an index from probability vector ``p`` by cumulative-sum
    inversion with one uniform draw. Zero-mass indices are never returned."""
    cum = np.cumsum(p)
    u = rng.random() * cum[-1]
    idx = int(np.searchsorted(cum, u, side="right"))
    if idx >= p.shape[0]:  # u rounded up onto the final cumulative value
        idx = int(np.flatnonzero(p)[-1])
    return idx


def seed_uniform(X: Dataset, k: int, rng: np.random.Generator) -> CenterSet:
    """k distinct point indices drawn uniformly without replacement."""
    if not 1 <= k <= X.n:
        raise ValueError(f"k={k} outside [1, {X.n}] for uniform seeding")
    idx = rng.choice(X.n, size=k, replace=False)
    return CenterSet(X.points[idx].copy(), capacity=k)


def _require_k_distinct(X: Dataset, k: int) -> None:
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if k > X.distinct_points:
        raise ValueError(
            f"k={k} exceeds the {X.distinct_points} distinct points available"
        )


def _seed_weighted(X: Dataset, k: int, rng: np.random.Generator,
                   strategy: SeedingStrategy) -> CenterSet:
    # first center uniform over X, then one weighted draw per remaining center
    first = int(rng.integers(X.n))
    chosen = [first]
    d2 = _point_d2(X, first)
    for _ in range(k - 1):
        p = _distribution_from_d2(d2, strategy)
        nxt = weighted_index(p, rng)
        chosen.append(nxt)
        d2 = np.minimum(d2, _point_d2(X, nxt))
    return CenterSet(X.points[chosen].copy(), capacity=k)


def seed_dsquared(X: Dataset, k: int, rng: np.random.Generator) -> CenterSet:
    """First center uniform, each next center sampled with probability
    proportional to its squared distance from the nearest chosen center."""
    _require_k_distinct(X, k)
    return _seed_weighted(X, k, rng, SeedingStrategy(StrategyKind.DSQUARED))


def seed_alpha(X: Dataset, k: int, alpha: float, rng: np.random.Generator) -> CenterSet:
    """Distance-weighted seeding restricted to the currently farthest
    ceil(alpha*N) points.

    alpha must exceed 1/N for the target dataset (the size-1 subset limit is
    the farthest-point strategy) and may be at most 1, where the restriction
    disappears and the draw sequence is bit-identical to seed_dsquared.
    """
    eps = 1.0 / X.n
    if not eps < alpha <= 1.0:
        raise ValueError(
            f"alpha={alpha:g} outside (1/N, 1] = ({eps:g}, 1] for this dataset "
            "(use the farthest-point strategy for the alpha=1/N limit)"
        )
    _require_k_distinct(X, k)
    return _seed_weighted(X, k, rng, SeedingStrategy(StrategyKind.ALPHA, alpha=alpha))


def seed_farthest(X: Dataset, k: int, rng: np.random.Generator) -> CenterSet:
    """First center uniform; every later center is the point farthest from
    its nearest chosen center (lowest index on ties). Consumes exactly one
    uniform draw."""
    _require_k_distinct(X, k)
    first = int(rng.integers(X.n))
    chosen = [first]
    d2 = _point_d2(X, first)
    for _ in range(k - 1):
        if not np.any(d2 > 0.0):
            raise DegenerateDataError("every point coincides with an existing center")
        nxt = int(np.argmax(d2))
        chosen.append(nxt)
        d2 = np.minimum(d2, _point_d2(X, nxt))
    return CenterSet(X.points[chosen].copy(), capacity=k)


def seed_norandom(X: Dataset, k: int, rng: np.random.Generator) -> CenterSet:
    """Farthest-point seeding whose first center is itself deterministic: the
    point farthest from a uniformly drawn pivot. Consumes exactly one
    uniform draw."""
    _require_k_distinct(X, k)
    pivot = int(rng.integers(X.n))
    first = int(np.argmax(_point_d2(X, pivot)))
    chosen = [first]
    d2 = _point_d2(X, first)
    for _ in range(k - 1):
        if not np.any(d2 > 0.0):
            raise DegenerateDataError("every point coincides with an existing center")
        nxt = int(np.argmax(d2))
        chosen.append(nxt)
        d2 = np.minimum(d2, _point_d2(X, nxt))
    return CenterSet(X.points[chosen].copy(), capacity=k)


def seed_centers(X: Dataset, k: int, strategy: SeedingStrategy,
                 rng: np.random.Generator | None = None) -> CenterSet:
    """Dispatch to the seeding routine for ``strategy``.

    When ``rng`` is omitted a fresh generator is built from the strategy's
    own ``rng_seed``.
    """
    if rng is None:
        rng = make_rng(strategy.rng_seed)
    kind = strategy.kind
    if kind is StrategyKind.UNIFORM:
        return seed_uniform(X, k, rng)
    if kind is StrategyKind.DSQUARED:
        return seed_dsquared(X, k, rng)
    if kind is StrategyKind.ALPHA:
        return seed_alpha(X, k, strategy.alpha, rng)
    if kind is StrategyKind.FARTHEST:
        return seed_farthest(X, k, rng)
    return seed_norandom(X, k, rng)
