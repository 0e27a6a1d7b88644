"""Distance, potential and centroid contracts."""

import numpy as np
import pytest

from kmeanslab import (
    Assignment,
    CenterSet,
    Dataset,
    centroid,
    nearest_center,
    potential,
    sq_dist,
)


def test_sq_dist_values():
    assert sq_dist((0, 0), (0, 0)) == 0.0
    assert sq_dist((0, 0), (3, 4)) == 25.0
    assert sq_dist((1, 1), (2, 3)) == 5.0


def test_sq_dist_symmetric_and_zero_iff_equal():
    a, b = np.array([1.5, -2.0, 7.0]), np.array([0.5, 3.0, 7.0])
    assert sq_dist(a, b) == sq_dist(b, a)
    assert sq_dist(a, a) == 0.0
    assert sq_dist(a, b) > 0.0


def test_sq_dist_dimension_mismatch():
    with pytest.raises(ValueError, match="dimension mismatch"):
        sq_dist((1, 2), (1, 2, 3))


def test_nearest_center_tie_breaks_to_lowest_index():
    idx, d2 = nearest_center((0.0,), CenterSet([[1.0], [-1.0]]))
    assert (idx, d2) == (0, 1.0)


def test_nearest_center_values():
    assert nearest_center((5.0,), CenterSet([[0.0], [4.0]])) == (1, 1.0)
    assert nearest_center((0.0, 0.0), CenterSet([[3.0, 4.0], [1.0, 0.0]])) == (1, 1.0)


def test_potential_single_center():
    asg = potential(Dataset([0.0, 2.0]), CenterSet([[1.0]]))
    assert asg.potential == 2.0
    assert list(asg.owner) == [0, 0]


def test_potential_k_equals_n_is_zero():
    X = Dataset([0.0, 2.0])
    asg = potential(X, CenterSet([[0.0], [2.0]]))
    assert asg.potential == 0.0


def test_potential_per_cluster():
    asg = potential(Dataset([0.0, 1.0, 3.0]), CenterSet([[0.0]]))
    assert asg.potential == 10.0
    assert asg.per_cluster_potential == [10.0]


def _brute_force_phi(X: Dataset, C: CenterSet) -> tuple[float, list[int]]:
    # independent accumulation in the documented order: left to right within
    # each cluster (point order), then across clusters in index order
    owners = []
    per_cluster = [0.0] * C.size
    for x in X.points:
        d2s = [sq_dist(x, c) for c in C.coords]
        best = min(range(C.size), key=lambda j: (d2s[j], j))
        owners.append(best)
    for idx in range(C.size):
        for i, x in enumerate(X.points):
            if owners[i] == idx:
                per_cluster[idx] += sq_dist(x, C.coords[idx])
    phi = 0.0
    for v in per_cluster:
        phi += v
    return phi, owners


def test_potential_matches_brute_force_exactly():
    rng = np.random.default_rng(31)
    X = Dataset(rng.standard_normal((50, 7)) * 3.0)
    C = CenterSet(rng.standard_normal((5, 7)) * 3.0)
    asg = potential(X, C)
    phi, owners = _brute_force_phi(X, C)
    assert asg.potential == phi
    assert list(asg.owner) == owners


def test_potential_equals_sum_of_per_cluster():
    rng = np.random.default_rng(7)
    X = Dataset(rng.standard_normal((40, 3)))
    C = CenterSet(rng.standard_normal((4, 3)))
    asg = potential(X, C)
    total = 0.0
    for v in asg.per_cluster_potential:
        total += v
    assert asg.potential == total


def test_potential_invariant_under_center_reorder():
    rng = np.random.default_rng(11)
    X = Dataset(rng.standard_normal((60, 4)))
    coords = rng.standard_normal((6, 4))
    phi_fwd = potential(X, CenterSet(coords)).potential
    phi_rev = potential(X, CenterSet(coords[::-1].copy())).potential
    assert phi_fwd == pytest.approx(phi_rev, rel=1e-12)


def test_potential_translation_invariance():
    rng = np.random.default_rng(13)
    pts = rng.standard_normal((30, 5))
    coords = rng.standard_normal((3, 5))
    shift = rng.standard_normal(5) * 100.0
    phi = potential(Dataset(pts), CenterSet(coords)).potential
    phi_shifted = potential(Dataset(pts + shift), CenterSet(coords + shift)).potential
    assert phi_shifted == pytest.approx(phi, rel=1e-9)


def test_centroid_values():
    assert list(centroid([[0.0, 0.0], [2.0, 0.0]])) == [1.0, 0.0]
    assert list(centroid([[1.0, 1.0]])) == [1.0, 1.0]
    assert list(centroid([0.0, 1.0, 2.0])) == [1.0]


def test_centroid_empty_rejected():
    with pytest.raises(ValueError, match="empty"):
        centroid(np.empty((0, 2)))


def test_dataset_rejects_nonfinite():
    with pytest.raises(ValueError, match="NaN or infinite"):
        Dataset([[0.0, float("nan")]])
    with pytest.raises(ValueError, match="NaN or infinite"):
        Dataset([[float("inf")]])


def test_dataset_label_length_checked():
    with pytest.raises(ValueError, match="labels"):
        Dataset([[0.0], [1.0]], labels=["a"])


def test_dataset_is_read_only():
    X = Dataset([[0.0], [1.0]])
    with pytest.raises(ValueError):
        X.points[0, 0] = 5.0


def test_centerset_requires_at_least_one_center():
    with pytest.raises(ValueError):
        CenterSet(np.empty((0, 2)))


def test_centerset_capacity_bounds():
    C = CenterSet([[0.0], [1.0]], capacity=3)
    assert C.size == 2 and C.capacity == 3
    with pytest.raises(ValueError, match="capacity"):
        CenterSet([[0.0], [1.0]], capacity=1)


def test_assignment_nonnegative_potential():
    rng = np.random.default_rng(3)
    asg = potential(Dataset(rng.standard_normal((20, 2))),
                    CenterSet(rng.standard_normal((2, 2))))
    assert asg.potential >= 0.0
    assert isinstance(asg, Assignment)
