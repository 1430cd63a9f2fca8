"""Feature vectors, the five regression models, GA feature selection and fit statistics."""

from .features import (
    FEATURE_NAMES,
    FeatureVector,
    LabeledExample,
    build_feature_vector,
    read_bench_csv,
    write_bench_csv,
)
from .fitstats import Coefficient, FitStatistics, fit_statistics
from .selection import FeatureSubset, GAConfig, SubsetFitness, ga_select
from .training import (
    EvalMetrics,
    ImpactPrediction,
    ModelKind,
    TrainConfig,
    TrainedModel,
    evaluate,
    evaluate_model,
    naive_baseline,
    naive_mse,
    predict,
    train,
)

__all__ = [
    "FEATURE_NAMES",
    "Coefficient",
    "EvalMetrics",
    "FeatureSubset",
    "FeatureVector",
    "FitStatistics",
    "GAConfig",
    "ImpactPrediction",
    "LabeledExample",
    "ModelKind",
    "SubsetFitness",
    "TrainConfig",
    "TrainedModel",
    "build_feature_vector",
    "evaluate",
    "evaluate_model",
    "fit_statistics",
    "ga_select",
    "naive_baseline",
    "naive_mse",
    "predict",
    "read_bench_csv",
    "train",
    "write_bench_csv",
]
