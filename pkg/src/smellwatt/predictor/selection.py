"""Wrapper feature selection with a genetic algorithm."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from ..errors import NoFeatures, RankDeficient, TooFewExamplesForCV, ValidationError
from .features import FEATURE_NAMES, LabeledExample, design, targets
from .regressors import kfold, predict_params
from .training import ModelKind, TrainConfig, fit_head


@dataclass(frozen=True)
class GAConfig:
    population: int = 30
    generations: int = 50
    mutation_rate: float = 0.05
    tournament: int = 3
    folds: int = 5
    target: str = "cpu"  # cpu | mem | both (mean of the two)
    candidates: tuple[str, ...] | None = None  # None = every feature
    polish: bool = True  # finish with a single-bit-flip hill climb

    def __post_init__(self):
        if self.population < 2 or self.generations < 1 or self.tournament < 1:
            raise ValidationError("population >= 2, generations >= 1 and tournament >= 1 required")
        if not 0 <= self.mutation_rate <= 1:
            raise ValidationError("mutation_rate must lie in [0, 1]")


@dataclass(frozen=True)
class FeatureSubset:
    features: tuple[str, ...]
    fitness: float  # mean CV MSE, lower is better
    evaluations: int = 0


class SubsetFitness:
    """Mean k-fold MSE of a model kind on a feature subset, cached per subset.

    Folds are fixed at construction so every subset sees the same split.
    A subset the model cannot fit on some fold scores ``inf``.
    """

    def __init__(self, data: list[LabeledExample], kind: ModelKind, candidates: list[str],
                 folds: int, seed: int, target: str = "cpu", config: TrainConfig | None = None):
        if len(data) < folds:
            raise TooFewExamplesForCV(f"{len(data)} examples for {folds} folds")
        self.kind = kind
        self.candidates = list(candidates)
        self.X = design(data, self.candidates)
        heads = ("cpu", "mem") if target == "both" else (target,)
        self.ys = [targets(data, h) for h in heads]
        self.folds = kfold(len(data), folds, seed)
        self.seed = seed
        self.config = replace(config or TrainConfig(), target="cpu")
        self.cache: dict[tuple[int, ...], float] = {}

    def __call__(self, bits: tuple[int, ...]) -> float:
        if bits not in self.cache:
            self.cache[bits] = self._score([i for i, b in enumerate(bits) if b])
        return self.cache[bits]

    def _score(self, cols: list[int]) -> float:
        n = len(self.X)
        total = 0.0
        X = self.X[:, cols]
        for y in self.ys:
            for test in self.folds:
                train = np.setdiff1d(np.arange(n), test)
                try:
                    params = fit_head(self.kind, X[train], y[train], self.config, self.seed)
                except RankDeficient:
                    return math.inf
                err = predict_params(self.kind.value, params, X[test]) - y[test]
                total += float(err @ err)
        return total / (n * len(self.ys))


def _repair(bits: list[int], rng: np.random.Generator) -> list[int]:
    if not any(bits):
        bits[int(rng.integers(len(bits)))] = 1
    return bits


def ga_select(data: list[LabeledExample], kind: ModelKind | str, seed: int = 0,
              ga_config: GAConfig | None = None, train_config: TrainConfig | None = None) -> FeatureSubset:
    """Search feature subsets for the lowest cross-validated MSE.

    Tournament selection, one-point crossover, per-bit mutation and one
    elite per generation; the best subset ever scored is returned.
    """
    kind = ModelKind.parse(kind) if isinstance(kind, str) else kind
    cfg = ga_config or GAConfig()
    names = list(cfg.candidates) if cfg.candidates is not None else list(FEATURE_NAMES)
    if not names:
        raise NoFeatures("no candidate features")
    fitness = SubsetFitness(data, kind, names, cfg.folds, seed, cfg.target, train_config)
    rng = np.random.default_rng(seed)
    p = len(names)

    pop = [_repair([int(b) for b in rng.integers(0, 2, size=p)], rng) for _ in range(cfg.population)]
    best: tuple[float, tuple[int, ...]] | None = None

    def note(ind):
        nonlocal best
        key = tuple(ind)
        f = fitness(key)
        if best is None or f < best[0] or (f == best[0] and key > best[1]):
            best = (f, key)
        return f

    for _ in range(cfg.generations):
        scores = [note(ind) for ind in pop]
        elite = pop[min(range(len(pop)), key=lambda i: scores[i])]

        def pick():
            idx = rng.integers(0, len(pop), size=cfg.tournament)
            return pop[min(idx, key=lambda i: scores[i])]

        nxt = [list(elite)]
        while len(nxt) < cfg.population:
            a, b = pick(), pick()
            if p > 1:
                cut = int(rng.integers(1, p))
                child = a[:cut] + b[cut:]
            else:
                child = list(a)
            flips = rng.random(p) < cfg.mutation_rate
            child = [1 - g if f else g for g, f in zip(child, flips)]
            nxt.append(_repair(child, rng))
        pop = nxt
    for ind in pop:
        note(ind)
    if cfg.polish:
        # hill climb from the best subset: flip one bit, or swap one feature for another
        while True:
            f0, cur = best
            moves = [(i,) for i in range(p)] + [(i, j) for i in range(p) for j in range(p) if cur[i] and not cur[j]]
            for mv in moves:
                nb = list(cur)
                for i in mv:
                    nb[i] = 1 - nb[i]
                if any(nb) and note(nb) < f0:
                    break
            else:
                break
    f, bits = best
    return FeatureSubset(tuple(n for n, b in zip(names, bits) if b), f, len(fitness.cache))
