"""Training, prediction, evaluation and the leave-one-out baseline."""

from __future__ import annotations

import enum
import json
import math
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Mapping

import numpy as np

from ..errors import (
    EmptyEval,
    IoFailure,
    LengthMismatch,
    NonFiniteTarget,
    SingleExample,
    TooFewExamples,
    ValidationError,
)
from . import regressors
from .features import FEATURE_NAMES, FeatureVector, LabeledExample, design, feature_row, targets

TARGETS = ("cpu", "mem")


class ModelKind(str, enum.Enum):
    LINEAR = "LINEAR"
    POLYNOMIAL = "POLYNOMIAL"
    LASSO = "LASSO"
    RANDOM_FOREST = "RANDOM_FOREST"
    ANN = "ANN"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, text: str) -> "ModelKind":
        key = text.strip().upper().replace("-", "_")
        aliases = {"RF": "RANDOM_FOREST", "FOREST": "RANDOM_FOREST", "POLY": "POLYNOMIAL", "OLS": "LINEAR"}
        return cls(aliases.get(key, key))


@dataclass(frozen=True)
class TrainConfig:
    target: str = "both"  # cpu | mem | both
    features: tuple[str, ...] | None = None  # None = every feature
    lasso_alpha: float | None = None  # None = chosen by CV
    lasso_grid_size: int = 20
    cv_folds: int = 5
    rf_trees: int = 100
    rf_max_depth: int = 8
    rf_max_features: int | None = None  # None = floor(sqrt(p))
    rf_bootstrap: bool = True
    ann_hidden: int = 16
    ann_epochs: int = 2000
    ann_learning_rate: float = 0.01

    def __post_init__(self):
        if self.target not in ("cpu", "mem", "both"):
            raise ValidationError(f"target must be cpu, mem or both, got {self.target!r}")
        if self.features is not None:
            object.__setattr__(self, "features", tuple(self.features))

    @property
    def heads(self) -> tuple[str, ...]:
        return TARGETS if self.target == "both" else (self.target,)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["features"] = list(self.features) if self.features is not None else None
        return d

    @classmethod
    def from_dict(cls, d: Mapping) -> "TrainConfig":
        known = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in d.items() if k in known})


@dataclass(frozen=True)
class ImpactPrediction:
    dcpu_pct: float | None
    dmem_pct: float | None

    def to_dict(self) -> dict:
        return {"dcpu_pct": self.dcpu_pct, "dmem_pct": self.dmem_pct}


@dataclass
class TrainedModel:
    """One fitted model per target ("head"), sharing the feature selection."""

    kind: ModelKind
    selected_features: list[str]
    parameters: dict[str, dict]  # head -> regressor parameters
    seed: int
    training_config: TrainConfig = field(default_factory=TrainConfig)

    def to_json(self) -> str:
        return json.dumps({
            "kind": self.kind.value,
            "seed": self.seed,
            "config": self.training_config.to_dict(),
            "selected_features": self.selected_features,
            "parameters": self.parameters,
        }, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "TrainedModel":
        try:
            d = json.loads(text)
            return cls(ModelKind.parse(d["kind"]), list(d["selected_features"]), d["parameters"],
                       int(d["seed"]), TrainConfig.from_dict(d.get("config", {})))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"not a model file: {exc}") from exc

    def save(self, path) -> None:
        Path(path).write_text(self.to_json() + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path) -> "TrainedModel":
        try:
            return cls.from_json(Path(path).read_text(encoding="utf-8"))
        except OSError as exc:
            raise IoFailure(path, exc.strerror or str(exc)) from exc


def fit_head(kind: ModelKind, X: np.ndarray, y: np.ndarray, config: TrainConfig, seed: int) -> dict:
    if kind is ModelKind.LINEAR:
        return regressors.fit_linear(X, y)
    if kind is ModelKind.POLYNOMIAL:
        return regressors.fit_polynomial(X, y)
    if kind is ModelKind.LASSO:
        return regressors.fit_lasso(X, y, config.lasso_alpha, config.cv_folds, seed, config.lasso_grid_size)
    if kind is ModelKind.RANDOM_FOREST:
        return regressors.fit_forest(X, y, config.rf_trees, config.rf_max_depth, config.rf_max_features,
                                     config.rf_bootstrap, seed)
    return regressors.fit_ann(X, y, config.ann_hidden, config.ann_epochs, config.ann_learning_rate, seed)


def train(data: list[LabeledExample], kind: ModelKind | str, config: TrainConfig | None = None,
          seed: int = 0) -> TrainedModel:
    kind = ModelKind.parse(kind) if isinstance(kind, str) else kind
    config = config or TrainConfig()
    if len(data) < 2:
        raise TooFewExamples(f"need at least 2 examples, got {len(data)}")
    names = list(config.features) if config.features is not None else list(FEATURE_NAMES)
    if not names:
        raise ValidationError("no features selected")
    X = design(data, names)
    params = {}
    for head in config.heads:
        y = targets(data, head)
        if not np.all(np.isfinite(y)):
            raise NonFiniteTarget(head)
        params[head] = fit_head(kind, X, y, config, seed)
    return TrainedModel(kind, names, params, seed, config)


def predict_matrix(model: TrainedModel, X: np.ndarray) -> dict[str, np.ndarray]:
    return {h: regressors.predict_params(model.kind.value, p, X) for h, p in model.parameters.items()}


def predict(model: TrainedModel, fv: FeatureVector | Mapping) -> ImpactPrediction:
    x = feature_row(fv, model.selected_features).reshape(1, -1)
    out = {h: float(v[0]) for h, v in predict_matrix(model, x).items()}
    for h, v in out.items():
        if not math.isfinite(v):
            raise ValidationError(f"{h} prediction is not finite")
    return ImpactPrediction(out.get("cpu"), out.get("mem"))


@dataclass(frozen=True)
class EvalMetrics:
    mse: float
    rmse: float
    adjusted_r_squared: float | None = None

    def to_dict(self) -> dict:
        d = {"mse": self.mse, "rmse": self.rmse}
        if self.adjusted_r_squared is not None:
            d["adjusted_r_squared"] = self.adjusted_r_squared
        return d


def evaluate(predictions, truths) -> EvalMetrics:
    p = [float(v) for v in predictions]
    t = [float(v) for v in truths]
    if len(p) != len(t):
        raise LengthMismatch(f"{len(p)} predictions for {len(t)} truths")
    if not p:
        raise EmptyEval("nothing to evaluate")
    mse = math.fsum((a - b) ** 2 for a, b in zip(p, t)) / len(p)
    return EvalMetrics(mse, math.sqrt(mse))


def evaluate_model(model: TrainedModel, data: list[LabeledExample]) -> dict[str, EvalMetrics]:
    if not data:
        raise EmptyEval("empty evaluation set")
    preds = predict_matrix(model, design(data, model.selected_features))
    return {h: evaluate(preds[h], targets(data, h)) for h in preds}


def naive_baseline(data: list[LabeledExample], target_index: int) -> ImpactPrediction:
    """Mean of every other example's targets."""
    if len(data) < 2:
        raise SingleExample("leave-one-out needs at least 2 examples")
    if not 0 <= target_index < len(data):
        raise ValidationError(f"target_index {target_index} out of range")
    rest = [ex for i, ex in enumerate(data) if i != target_index]
    return ImpactPrediction(
        math.fsum(ex.target_dcpu_pct for ex in rest) / len(rest),
        math.fsum(ex.target_dmem_pct for ex in rest) / len(rest),
    )


def naive_mse(data: list[LabeledExample]) -> dict[str, float]:
    preds = [naive_baseline(data, i) for i in range(len(data))]
    return {
        "cpu": evaluate([p.dcpu_pct for p in preds], targets(data, "cpu")).mse,
        "mem": evaluate([p.dmem_pct for p in preds], targets(data, "mem")).mse,
    }
