"""Link scoring and prediction: local neighborhood scores, path-sum and
random-walk methods, Laplacian kernels, and an evaluation harness."""

from .local import LOCAL_METHODS, local_score
from .pathsum import katz_score, lhn_global_score
from .walks import flow_propagation, random_walk, random_walk_scores, random_walk_with_restart
from .kernels import (
    average_commute_time,
    laplacian_kernel_scores,
    pseudoinverse_laplacian,
    random_forest_kernel,
)
from .evaluate import evaluate_predictor

__all__ = [
    "LOCAL_METHODS",
    "average_commute_time",
    "evaluate_predictor",
    "flow_propagation",
    "katz_score",
    "laplacian_kernel_scores",
    "lhn_global_score",
    "local_score",
    "pseudoinverse_laplacian",
    "random_forest_kernel",
    "random_walk",
    "random_walk_scores",
    "random_walk_with_restart",
]
