"""Monte Carlo estimation over random linear K6 / K3,3 embeddings."""
from stickgraph.montecarlo.estimator import (
    BLOCK_SIZE,
    EstimatorReport,
    EstimatorState,
    RunConfig,
    build_report,
    merge,
    run_estimation,
    run_state,
    sample_cube_points,
    wilson_interval,
)

__all__ = [
    "BLOCK_SIZE", "EstimatorReport", "EstimatorState", "RunConfig", "build_report",
    "merge", "run_estimation", "run_state", "sample_cube_points", "wilson_interval",
]
