"""Ordinary-least-squares coefficient table."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import RankDeficient, TooFewExamples
from .features import LabeledExample, design, targets


@dataclass(frozen=True)
class Coefficient:
    name: str
    estimate: float
    standard_error: float
    t_value: float | None  # None where the standard error is 0


@dataclass(frozen=True)
class FitStatistics:
    intercept: Coefficient
    coefficients: list[Coefficient]
    residual_variance: float
    r_squared: float
    adjusted_r_squared: float

    def by_name(self) -> dict[str, Coefficient]:
        return {c.name: c for c in self.coefficients}

    def to_dict(self) -> dict:
        row = lambda c: {"name": c.name, "estimate": c.estimate, "standard_error": c.standard_error, "t_value": c.t_value}  # noqa: E731
        return {
            "intercept": row(self.intercept),
            "coefficients": [row(c) for c in self.coefficients],
            "residual_variance": self.residual_variance,
            "r_squared": self.r_squared,
            "adjusted_r_squared": self.adjusted_r_squared,
        }


def ols_table(X: np.ndarray, y: np.ndarray, names: list[str]) -> FitStatistics:
    n, p = X.shape
    if n - p - 1 <= 0:
        raise TooFewExamples(f"{n} examples leave no residual degrees of freedom for {p} features")
    A = np.column_stack([np.ones(n), X])
    if np.linalg.matrix_rank(A) < p + 1:
        raise RankDeficient("design matrix is rank deficient")
    beta = np.linalg.lstsq(A, y, rcond=None)[0]
    resid = y - A @ beta
    rss = float(resid @ resid)
    tss = float(((y - y.mean()) ** 2).sum())
    # residuals at rounding level count as an exact fit
    if rss <= (1e-12 * max(1.0, float(np.abs(y).max()))) ** 2 * n:
        rss = 0.0
    sigma2 = rss / (n - p - 1)
    se = np.sqrt(np.maximum(sigma2 * np.diag(np.linalg.inv(A.T @ A)), 0.0))
    if p == 0:
        r2 = adj = 0.0
    elif tss == 0:
        r2 = adj = 1.0 if rss == 0 else 0.0
    else:
        r2 = 1.0 - rss / tss
        adj = 1.0 - (1.0 - r2) * (n - 1) / (n - p - 1)

    def coef(name, b, s):
        return Coefficient(name, float(b), float(s), float(b / s) if s > 0 else None)

    return FitStatistics(
        coef("(intercept)", beta[0], se[0]),
        [coef(nm, b, s) for nm, b, s in zip(names, beta[1:], se[1:])],
        sigma2, r2, adj,
    )


def fit_statistics(data: list[LabeledExample], selected_features: list[str], target: str = "cpu") -> FitStatistics:
    names = list(selected_features)
    return ols_table(design(data, names), targets(data, target), names)


def t_values_positive(stats: FitStatistics) -> bool:
    return all(c.t_value is not None and c.t_value > 0 for c in stats.coefficients)

