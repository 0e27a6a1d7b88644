"""k-means clustering with pluggable center seeding and a benchmark harness.

The library half covers geometry (datasets, potentials), five seeding
strategies, the Lloyd iteration engine, and an exhaustive small-instance
oracle. The harness half runs repeated seeded trials, aggregates potential
and accuracy tables, and is exposed both as a CLI and as a FastAPI service.
"""

from .bench import (
    BenchmarkRow,
    BenchmarkTable,
    TrialReport,
    accuracy,
    aggregate,
    emit_table,
    run_trials,
)
from .data import (
    CsvFormatError,
    DatasetSpec,
    blob_dataset,
    builtin_fixture,
    fixture_names,
    load_csv,
    resolve_dataset,
    standardize,
    synth_mixture,
    write_csv,
)
from .geometry import (
    Assignment,
    CenterSet,
    Dataset,
    centroid,
    nearest_center,
    potential,
    sq_dist,
    sq_dist_columns,
)
from .lloyd import (
    ClusteringState,
    LloydConfig,
    LloydResult,
    assign_step,
    centroid_offset_identity,
    lloyd_partition_trace,
    run_lloyd,
    step_improvement_bound,
    update_step,
)
from .oracle import (
    OptimalResult,
    OracleGuardError,
    brute_force_optimal,
    competitive_ratio,
    dsquared_expectation_bound,
)
from .seeding import (
    DegenerateDataError,
    SeedingStrategy,
    StrategyKind,
    derive_rng,
    make_rng,
    next_center_distribution,
    seed_alpha,
    seed_centers,
    seed_dsquared,
    seed_farthest,
    seed_norandom,
    seed_uniform,
    weighted_index,
)

__version__ = "0.1.0"
