"""Exhaustive oracle and competitive-ratio checks."""

import numpy as np
import pytest

from kmeanslab import (
    Dataset,
    OracleGuardError,
    SeedingStrategy,
    StrategyKind,
    brute_force_optimal,
    competitive_ratio,
    dsquared_expectation_bound,
    run_lloyd,
    update_step,
)
from kmeanslab.geometry import CenterSet, potential
from kmeanslab.lloyd import assign_step


def test_optimal_two_pairs():
    X = Dataset([0.0, 1.0, 9.0, 10.0])
    opt = brute_force_optimal(X, 2)
    assert opt.phi_opt == 1.0
    assert opt.enumerated == 16
    # the winning partition separates {0,1} from {9,10}
    a = opt.best_assignment
    assert a[0] == a[1] and a[2] == a[3] and a[0] != a[2]


def test_optimal_k_equals_n():
    X = Dataset([3.0, 7.0, 11.0])
    assert brute_force_optimal(X, 3).phi_opt == 0.0


def test_guard_rejects_large_instances():
    X = Dataset(np.arange(13.0))
    with pytest.raises(OracleGuardError, match="10000000"):
        brute_force_optimal(X, 4)  # 4^13 = 67108864


def test_optimal_two_gaussian_sample():
    # two separated 1-d clumps of four points; optimum is the obvious split,
    # value computed by hand from the within-clump scatter
    pts = [-5.1, -4.9, -5.0, -4.6, 4.8, 5.2, 5.0, 4.7]
    opt = brute_force_optimal(Dataset(pts), 2)
    left = np.array(pts[:4])
    right = np.array(pts[4:])
    expected = float(((left - left.mean()) ** 2).sum()) + float(((right - right.mean()) ** 2).sum())
    assert opt.phi_opt == pytest.approx(expected, rel=1e-12)
    a = opt.best_assignment
    assert len(set(a[:4])) == 1 and len(set(a[4:])) == 1 and a[0] != a[4]


def test_optimal_dominates_every_seeding():
    X = Dataset([0.0, 1.0, 2.0, 50.0, 51.0, 52.0, 100.0, 101.0])
    opt = brute_force_optimal(X, 3)
    for name in ["kmeans", "kmeans++", "alpha:0.5", "alpha:eps", "norandom"]:
        strategy = SeedingStrategy.parse(name, rng_seed=5)
        mean_phi, ratio = competitive_ratio(X, 3, strategy, trials=200)
        assert ratio >= 1.0 - 1e-12
        assert mean_phi >= opt.phi_opt - 1e-9


def test_lloyd_from_oracle_assignment_is_a_fixpoint():
    X = Dataset([0.0, 1.0, 9.0, 10.0, 20.0, 21.0])
    opt = brute_force_optimal(X, 3)
    from kmeanslab.geometry import Assignment

    asg = Assignment(owner=opt.best_assignment, potential=opt.phi_opt,
                     per_cluster_potential=[])
    centers = update_step(X, asg, 3)
    res = run_lloyd(X, centers)
    assert res.converged and res.iterations == 1
    assert res.assignment.potential == pytest.approx(opt.phi_opt, rel=1e-12)
    assert res.assignment.potential >= opt.phi_opt - 1e-9


def test_competitive_ratio_k1_at_least_one():
    X = Dataset([0.0, 2.0, 7.0, 9.0])
    strategy = SeedingStrategy(StrategyKind.UNIFORM, rng_seed=2)
    mean_phi, ratio = competitive_ratio(X, 1, strategy, trials=100)
    assert ratio >= 1.0


def test_competitive_ratio_farthest_two_pairs():
    # every possible first center leads to a seeded potential of exactly 2.0:
    # first 0 -> {0,10}, first 1 -> {1,10}, first 9 -> {9,0}, first 10 -> {10,0}
    X = Dataset([0.0, 1.0, 9.0, 10.0])
    strategy = SeedingStrategy(StrategyKind.FARTHEST, rng_seed=3)
    mean_phi, ratio = competitive_ratio(X, 2, strategy, trials=64)
    assert mean_phi == 2.0
    assert ratio == 2.0


def test_competitive_ratio_undefined_on_zero_optimum():
    X = Dataset([0.0, 5.0])
    strategy = SeedingStrategy(StrategyKind.DSQUARED, rng_seed=0)
    with pytest.raises(ValueError, match="undefined"):
        competitive_ratio(X, 2, strategy, trials=10)


def test_dsquared_ratio_below_expectation_bound():
    X = Dataset([0.0, 1.0, 9.0, 10.0])
    strategy = SeedingStrategy(StrategyKind.DSQUARED, rng_seed=7)
    _, ratio = competitive_ratio(X, 2, strategy, trials=2000)
    assert ratio <= dsquared_expectation_bound(2)


def test_expectation_bound_value():
    assert dsquared_expectation_bound(1) == 16.0  # 8 * (0 + 2)
    with pytest.raises(ValueError):
        dsquared_expectation_bound(0)


def test_seeded_potential_matches_direct_evaluation():
    X = Dataset([0.0, 1.0, 9.0, 10.0])
    C = CenterSet([[0.0], [10.0]], capacity=2)
    assert potential(X, C).potential == assign_step(X, C).potential == 2.0
