"""
Which regressor predicts refactoring impact best?
=================================================

Select features with the genetic algorithm, then compare five model kinds
by leave-one-out error against the mean-of-the-rest baseline.
"""

import math

from smellwatt.errors import RankDeficient
from smellwatt.impact.fixtures import data_path
from smellwatt.predictor import GAConfig, ModelKind, TrainConfig, ga_select, naive_mse, predict, read_bench_csv, train

data = read_bench_csv(data_path("bench.csv"))
print(f"{len(data)} apps, naive LOO MSE {naive_mse(data)}")

# %%
# Feature subsets are scored by 5-fold CV MSE of a linear fit.
subset = ga_select(data, ModelKind.LINEAR, seed=0, ga_config=GAConfig(generations=20, target="both"))
print(f"selected {subset.features} (CV MSE {subset.fitness:.5f}, {subset.evaluations} subsets scored)")

# %%
# A degree-2 polynomial on many features can need more terms than there are apps.
cfg = TrainConfig(features=subset.features, rf_trees=30, ann_epochs=500)
for kind in ModelKind:
    sq = []
    try:
        for i, held in enumerate(data):
            model = train(data[:i] + data[i + 1:], kind, cfg, seed=0)
            p = predict(model, held.features)
            sq.append((p.dcpu_pct - held.target_dcpu_pct) ** 2)
    except RankDeficient as exc:
        print(f"{kind.value:14} skipped: {exc}")
        continue
    print(f"{kind.value:14} LOO CPU MSE {math.fsum(sq) / len(sq):.5f}")
